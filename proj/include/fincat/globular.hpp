#pragma once

#include "fincat/core.hpp"

// 2-globular sets, 2-pasting diagrams as height vectors, substitution
// composition, the free 2-category at desk scale, factorization through
// pasting-diagram arities, and the Segal-style reconstruction for a
// truncated site of shapes.

namespace fincat::glob {

struct GlobularSet2 {
  std::vector<std::string> cells0, cells1, cells2;
  std::map<std::string, std::string> s1, t1;  // cells1 -> cells0
  std::map<std::string, std::string> s2, t2;  // cells2 -> cells1

  Report validate() const;  // totality plus globularity
};

/// A 2-pasting diagram: column i carries heights[i] vertically stacked
/// 2-cells; both 1-dimensional boundaries are the path of length width().
struct Pd2 {
  std::vector<int> heights;

  int width() const { return static_cast<int>(heights.size()); }
  int total_cells() const {
    int t = 0;
    for (int h : heights) t += h;
    return t;
  }
  std::string encode() const;
  bool operator==(const Pd2& o) const { return heights == o.heights; }
  bool operator<(const Pd2& o) const { return heights < o.heights; }
};

/// Cells of pd_realize(p): 0-cells "v0".."vw"; in column i the parallel
/// 1-cells "a{i}_0".."a{i}_k" (a single "a{i}_0" when k = 0) and 2-cells
/// "c{i}_j" : a{i}_j => a{i}_j+1.
GlobularSet2 pd_realize(const Pd2& p);

struct GlobMorphism {
  std::map<std::string, std::string> map0, map1, map2;

  Report validate(const GlobularSet2& from, const GlobularSet2& to) const;
  std::string encode() const;
};

std::vector<GlobMorphism> enumerate_glob_morphisms(const GlobularSet2& from,
                                                   const GlobularSet2& to);

/// Shape-level substitution data: one entry per column of the outer diagram.
/// Columns with 2-cells take a stack of diagrams (bottom to top, all of one
/// width); bare columns take a path length.
struct ColumnFill {
  std::vector<Pd2> stack;
  int path_len = 1;
};

/// Substitution composition: stacks add heights componentwise, bare columns
/// contribute an all-zero block, blocks concatenate. Throws on a width
/// mismatch inside a column.
Pd2 pd_compose(const Pd2& outer, const std::vector<ColumnFill>& fills);

/// A free 2-cell over x: a shape together with a labeling of its realization.
struct PdLabeling {
  Pd2 shape;
  GlobMorphism into;  // realize(shape) -> x

  Report validate(const GlobularSet2& x) const;
  std::string encode() const;
};

/// All free 2-cells with width <= bound and at most bound 2-cells.
std::vector<PdLabeling> free2_cells(const GlobularSet2& x, int size_bound);

/// A labeled path (a 1-dimensional free cell) for bare columns.
struct LabeledPath {
  std::string start0;
  std::vector<std::string> cells1;
};

struct ColumnFillLabeled {
  std::vector<PdLabeling> stack;
  LabeledPath path;
};

/// Multiplication of the free 2-category monad: substitute free cells into a
/// diagram and flatten to one labeling. Throws on boundary mismatches.
/// `start0` labels the lone 0-cell when the outer shape has width 0.
PdLabeling mu2_substitute(const GlobularSet2& x, const Pd2& outer,
                          const std::vector<ColumnFillLabeled>& fills,
                          const std::string& start0 = "");

/// The single-cell labeling of a 2-cell of x (the monad unit at dimension 2).
PdLabeling eta2(const GlobularSet2& x, const std::string& cell2);

struct Factorization2 {
  Pd2 middle;
  std::vector<ColumnFillLabeled> e;  // over pd_realize(middle)
  GlobMorphism f;                    // pd_realize(middle) -> x
};

/// Glue the image diagrams into the middle shape and split the morphism as
/// P -> T(middle) -> T(x). Recomposition relabels e through f.
Factorization2 arity_factorize2(const GlobularSet2& x, const Pd2& outer,
                                const std::vector<ColumnFillLabeled>& fills);

/// Relabel a fill through a morphism of targets (used to recompose).
std::vector<ColumnFillLabeled> relabel_fills(const std::vector<ColumnFillLabeled>& fills,
                                             const GlobMorphism& through);

bool fills_equal(const std::vector<ColumnFillLabeled>& a, const std::vector<ColumnFillLabeled>& b);

/// The truncated underlying 2-globular set of the free 2-category on y:
/// 0-cells of y, paths of length <= bound, free cells within size bound.
GlobularSet2 free2_truncation(const GlobularSet2& y, int bound);

/// A finite site of pasting-diagram shapes: realizations as objects, plain
/// globular morphisms between them as arrows.
struct Pd2Site {
  CatPtr category;  // arrows named "u0","u1",...; objects are encoded shapes
  std::vector<Pd2> shapes;
  std::map<Id, GlobMorphism> arrow_morphism;
  std::map<Id, Pd2> shape_of;
};

Pd2Site pd2_site(const std::vector<Pd2>& shapes);

/// The shape-indexed nerve of a 2-globular set: at each shape, the morphisms
/// from its realization into g; arrows act by precomposition. The result is
/// a presheaf, i.e. a SetFunctor over the opposite of the site category.
SetFunctor glob_nerve2(const GlobularSet2& g, const Pd2Site& site);

struct Segal2Result {
  bool ok = false;
  GlobularSet2 candidate;
  std::string failing_shape;
  std::string detail;
};

/// Reads the candidate 2-globular set off the atomic shapes (), (0), (1) and
/// checks every site level against morphisms into it.
Segal2Result segal2_check(const SetFunctor& x, const Pd2Site& site);

}  // namespace fincat::glob
