import json
import math
import pathlib

import fincat

DATA = pathlib.Path(__file__).resolve().parents[2] / "data"


def read(name):
    return (DATA / name).read_text()


def test_monotone_calculus():
    assert fincat.monotone_count(2, 2) == math.comb(5, 3)
    nf = fincat.normal_form(2, 1, [0, 0, 1])
    assert nf["sigmas"] == [0] and nf["deltas"] == []
    assert fincat.compose_monotone(0, 1, [1], 2, [0, 2]) == [2]


def test_nerve_and_segal_roundtrip():
    counts = fincat.nerve_counts(read("five_object_chain.json"), 3)
    assert counts["level_sizes"] == [5, 12, 23, 39]
    nerve = fincat.nerve_json(read("arrow_category.json"), 3)
    assert fincat.segal_check(nerve)["ok"]
    back = json.loads(fincat.categorify(nerve))
    assert len(back["objects"]) == 2 and len(back["arrows"]) == 3


def test_pasting_diagrams():
    got = fincat.pd_compose([2, 1, 0], [[[0, 0], [1, 2]], [[0, 2]], 2])
    assert got == [1, 2, 0, 2, 0, 0]


def test_factorization_and_density():
    fact = json.loads(fincat.factorize(read("forked_graph.json"),
                                       read("forked_graph_morphism.json")))
    assert fact["p"] == 3
    assert fincat.density_check(read("forked_graph.json"), 3) == "isomorphism"
    assert fincat.kleisli_hom_count(1, 1) == 3


def test_store_calculus():
    term = read("update_lookup_term.json")
    reduced = {
        "kind": "store-term", "locations": ["l"], "values": ["0", "1"], "vars": 2,
        "term": {"update": "l", "value": "1", "body": {"var": 1}},
    }
    assert fincat.store_equivalent(term, json.dumps(reduced))
    assert fincat.store_normalize(term) == fincat.store_normalize(json.dumps(reduced))
    canon = json.loads(fincat.store_canonical(term))
    assert canon["kind"] == "store-term"


def test_operads_and_theta():
    assert fincat.operad_validate(read("terminal_operad3.json")) == []
    assert fincat.operad_iso(read("terminal_operad3.json"), 2)
    assert fincat.strongly_regular(read("assoc_equation.json"))
    assert not fincat.strongly_regular(read("comm_equation.json"))
    homs = fincat.theta_hom_sizes(read("partiality_monad.json"), 2)
    assert homs["1->1"] == 2
    assert fincat.validate(read("forked_graph.json")) == []
