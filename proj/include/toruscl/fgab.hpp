#pragma once
#include <optional>
#include <string>
#include <vector>

#include "toruscl/int_matrix.hpp"

namespace toruscl {

// Finitely generated abelian group presented as Z^ngens / rowspan(rel).
// Canonical data (invariant factors, free rank) derived once via SNF.
class FgAbGroup {
 public:
  FgAbGroup() : FgAbGroup(0, IntMatrix(0, 0)) {}
  FgAbGroup(long ngens, IntMatrix rel);

  static FgAbGroup free_group(long rank) { return FgAbGroup(rank, IntMatrix(0, rank)); }
  static FgAbGroup cyclic(const Int& n);  // Z/n, n=0 means Z
  static FgAbGroup from_invariants(const std::vector<Int>& inv, long free_rank);
  static FgAbGroup trivial() { return FgAbGroup(0, IntMatrix(0, 0)); }

  long ngens() const { return ngens_; }
  const IntMatrix& rel() const { return rel_; }
  const std::vector<Int>& invariant_factors() const { return inv_; }
  long free_rank() const { return free_rank_; }
  bool is_finite() const { return free_rank_ == 0; }
  bool is_trivial() const { return inv_.empty() && free_rank_ == 0; }
  Int order() const;  // throws if infinite

  // canonical coordinates: one slot per invariant factor (value mod d_i) then free slots
  std::vector<Int> normal_form(const std::vector<Int>& x) const;
  bool is_zero_elem(const std::vector<Int>& x) const;
  bool same_elem(const std::vector<Int>& x, const std::vector<Int>& y) const;
  // order of an element, 0 = infinite
  Int elem_order(const std::vector<Int>& x) const;

  // element of the ambient Z^ngens realizing given canonical coordinates
  std::vector<Int> elem_from_normal_form(const std::vector<Int>& nf) const;

  // all elements (by canonical coords -> ambient), finite groups only, order capped
  std::vector<std::vector<Int>> enumerate_elements(const Int& cap) const;

  bool same_presentation(const FgAbGroup& o) const { return ngens_ == o.ngens_ && rel_.rows() == o.rel_.rows() && rel_ == o.rel_; }
  bool isomorphic(const FgAbGroup& o) const { return inv_ == o.inv_ && free_rank_ == o.free_rank_; }

  std::string str() const;  // "Z/2 + Z/4 + Z^2"

  // column lattice of relations (relators as columns in Z^ngens)
  const IntMatrix& rel_lattice() const { return relT_; }

 private:
  long ngens_;
  IntMatrix rel_;     // r x ngens, rows are relators
  IntMatrix relT_;    // canonical column basis of relator lattice
  std::vector<Int> inv_;
  long free_rank_;
  IntMatrix uc_;      // unimodular: z = uc_ * x puts relator lattice into diag(diag_)
  std::vector<Int> diag_;  // length ngens_: d_i (>=1) for torsion-ish slots, 0 for free
};

// Homomorphism f: src -> dst, matrix columns = images of src generators in dst ambient coords.
class AbHom {
 public:
  AbHom(const FgAbGroup& src, const FgAbGroup& dst, IntMatrix m, bool check = true);

  static AbHom zero(const FgAbGroup& src, const FgAbGroup& dst);
  static AbHom identity(const FgAbGroup& g);
  static AbHom scalar(const FgAbGroup& g, const Int& n);

  const FgAbGroup& src() const { return src_; }
  const FgAbGroup& dst() const { return dst_; }
  const IntMatrix& matrix() const { return m_; }

  std::vector<Int> apply(const std::vector<Int>& x) const { return m_.mul_vec(x); }
  AbHom compose_after(const AbHom& first) const;  // this ∘ first
  bool is_zero_hom() const;
  bool equals(const AbHom& o) const;

 private:
  FgAbGroup src_, dst_;
  IntMatrix m_;
};

// Subgroup of an ambient group: column generators in ambient coordinates.
struct SubgroupData {
  FgAbGroup ambient;
  IntMatrix gens;  // ngens x k columns

  bool contains(const std::vector<Int>& v) const;
  bool contains_subgroup(const SubgroupData& other) const;
  bool equals(const SubgroupData& other) const;
  // full lattice in Z^ngens including ambient relations
  IntMatrix full_lattice() const;
};

struct SubgroupAsGroup {
  FgAbGroup grp;
  AbHom inclusion;  // grp -> ambient
};

SubgroupData kernel(const AbHom& f);
SubgroupData image(const AbHom& f);
FgAbGroup coker(const AbHom& f);
// coker together with the projection dst -> coker
struct CokerData {
  FgAbGroup grp;
  AbHom proj;
};
CokerData coker_with_proj(const AbHom& f);

SubgroupAsGroup subgroup_as_group(const SubgroupData& s);
// quotient ambient/<gens> with projection
CokerData quotient_by_subgroup(const SubgroupData& s);

struct ExactnessResult {
  bool exact;
  // witness: ambient element of the middle group lying in exactly one of im(f), ker(g)
  std::optional<std::vector<Int>> witness;
  bool witness_in_image = false;  // true: witness in im(f) \ ker(g); false: in ker(g) \ im(f)
};

// exactness at target(f) = source(g): im(f) == ker(g)
ExactnessResult is_exact_at(const AbHom& f, const AbHom& g);

struct ComplexReport {
  std::vector<ExactnessResult> at;  // one per interior position
  bool all_exact;
  bool order_identity_checked;  // finite chain: prod |even| == prod |odd|
  bool order_identity_holds;
};

ComplexReport verify_complex(const std::vector<AbHom>& chain);

// kernel subgroup of f restricted to a subgroup of src (gens in src ambient coords)
SubgroupData kernel_in_subgroup(const AbHom& f, const SubgroupData& s);

// intersection of two subgroups of the same ambient
SubgroupData subgroup_intersection(const SubgroupData& a, const SubgroupData& b);

std::string json_of_group(const FgAbGroup& g);  // {"invariant_factors":[...],"free_rank":n}

}  // namespace toruscl
