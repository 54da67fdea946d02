#pragma once
#include <optional>
#include <string>
#include <vector>

#include "toruscl/fgab.hpp"

namespace toruscl {

// Finite group by multiplication table; elements are indices 0..n-1.
class FiniteGroup {
 public:
  FiniteGroup(std::vector<std::vector<int>> table, std::vector<std::string> labels = {});

  static FiniteGroup cyclic(int n);
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
  static FiniteGroup symmetric3();
  static FiniteGroup dihedral(int n);   // order 2n
  static FiniteGroup quaternion8();
  static FiniteGroup klein4() { return direct_product(cyclic(2), cyclic(2)); }

  int order() const { return n_; }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inv_[a]; }
  int identity() const { return e_; }
  const std::string& label(int a) const { return labels_[a]; }
  int elem_order(int a) const;
  bool is_cyclic() const;
  std::optional<int> generator() const;  // element of full order, if cyclic

  // all subgroups as sorted element-index sets; |G| <= 64
  std::vector<std::vector<int>> subgroups() const;
  bool is_subgroup(const std::vector<int>& elems) const;
  // subgroup set -> its own FiniteGroup plus index map (subgroup index -> parent index)
  FiniteGroup subgroup_group(const std::vector<int>& elems) const;

  bool is_metacyclic() const;  // every Sylow subgroup cyclic

  const std::vector<std::vector<int>>& table() const { return table_; }

 private:
  int n_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inv_;
  std::vector<std::string> labels_;
  int e_;
};

// Free Z-lattice with G-action by matrices in GL(rank, Z).
struct GLattice {
  FiniteGroup group;
  long rank;
  std::vector<IntMatrix> action;  // one per group element

  GLattice(FiniteGroup g, long rk, std::vector<IntMatrix> act, bool check = true);

  static GLattice trivial(const FiniteGroup& g, long rank = 1);
  static GLattice sign_c2();                // Z with C2 acting by -1
  static GLattice regular(const FiniteGroup& g);  // Z[G]
  // Z[G/H] with basis the left cosets gH, action by left translation
  static GLattice permutation(const FiniteGroup& g, const std::vector<int>& subgroup);

  GLattice dual() const;  // inverse transpose action
  GLattice direct_sum(const GLattice& o) const;
  GLattice conjugate(const IntMatrix& t) const;  // action -> t^-1 A t (basis change by unimodular t)
  GLattice restrict_to(const std::vector<int>& subgroup) const;  // lattice over the subgroup

  // fixed sublattice X^G (or X^H when restricted first), columns = HNF basis
  IntMatrix fixed_sublattice() const;
  IntMatrix norm_matrix() const;  // sum of all action matrices
};

// G-module: f.g. abelian group with compatible G-action on generators.
struct GModule {
  FiniteGroup group;
  FgAbGroup m;
  std::vector<IntMatrix> action;

  GModule(FiniteGroup g, FgAbGroup mm, std::vector<IntMatrix> act, bool check = true);
  static GModule from_lattice(const GLattice& x);

  GModule restrict_to(const std::vector<int>& subgroup) const;
  IntMatrix norm_matrix() const;
};

// Tate cohomology H^i(G, M).  Cyclic G: any i via 2-periodicity.
// Non-cyclic: i in {-1, 0, 1, 2} (bar resolution for 1, 2).
FgAbGroup tate_cohomology(const GModule& m, long i);

// representatives: generators of the cohomology group lifted to ambient coordinates of m
// (for i = -1,0: elements of M; for i = 1: inhomogeneous 1-cocycles as |G| blocks)
struct TateData {
  FgAbGroup h;
  IntMatrix reps;  // columns = lifts of the canonical generators of h
};
TateData tate_cohomology_with_reps(const GModule& m, long i);

bool is_flasque(const GLattice& x);
bool is_coflasque(const GLattice& x);
bool is_invertible_c2(const GLattice& x);

struct ResolutionC {
  // exact 0 -> first -> middle -> last -> 0 of G-lattices, middle a permutation lattice
  GLattice first, middle, last;
  IntMatrix inj;   // first -> middle
  IntMatrix surj;  // middle -> last
  std::vector<std::pair<std::vector<int>, std::vector<Int>>> blocks;  // (subgroup, generator of X^H) per Z[G/H] block
};

// 0 -> C -> P -> X -> 0, P permutation, C coflasque
ResolutionC coflasque_resolution(const GLattice& x);
// 0 -> X -> P -> F -> 0, P permutation, F flasque (by dualizing the coflasque resolution of X^dual)
ResolutionC flasque_resolution(const GLattice& x);

struct C2Decomposition {
  long a, b, c;  // X = Z^a + sign^b + Z[C2]^c
};
C2Decomposition decompose_c2(const GLattice& x);

// induced module of n along subgroup H <= G
GModule induce(const FiniteGroup& g, const std::vector<int>& subgroup, const GModule& n);
// Shapiro check: H^i(G, Ind n) == H^i(H, n) for i in {-1, 0, 1}
bool induced_check(const FiniteGroup& g, const std::vector<int>& subgroup, const GModule& n);

}  // namespace toruscl
