#include "toruscl/fgab.hpp"

#include <map>
#include <sstream>

namespace toruscl {

FgAbGroup::FgAbGroup(long ngens, IntMatrix rel) : ngens_(ngens), rel_(std::move(rel)) {
  if (rel_.cols() != ngens_ && rel_.rows() != 0) throw std::invalid_argument("relation width mismatch");
  if (rel_.rows() == 0) rel_ = IntMatrix(0, ngens_);
  relT_ = lattice_basis(rel_.transpose());
  // SNF of relator columns: D = U * relT * V; new coords z = U x see relator lattice as diag(D)
  SnfResult s = snf(relT_.rows() ? relT_ : IntMatrix(ngens_, 0));
  uc_ = s.u;
  if (uc_.rows() == 0) uc_ = IntMatrix::identity(ngens_);
  diag_.assign(ngens_, Int(0));
  long n = std::min(s.d.rows(), s.d.cols());
  for (long i = 0; i < n; ++i) diag_[i] = s.d.at(i, i);
  free_rank_ = 0;
  for (long i = 0; i < ngens_; ++i) {
    if (diag_[i] == 0) ++free_rank_;
    else if (diag_[i] >= 2) inv_.push_back(diag_[i]);
  }
}

FgAbGroup FgAbGroup::cyclic(const Int& n) {
  IntMatrix rel(n == 0 ? 0 : 1, 1);
  if (n != 0) rel.at(0, 0) = n;
  return FgAbGroup(1, rel);
}

FgAbGroup FgAbGroup::from_invariants(const std::vector<Int>& inv, long free_rank) {
  long n = (long)inv.size() + free_rank;
  IntMatrix rel((long)inv.size(), n);
  for (long i = 0; i < (long)inv.size(); ++i) rel.at(i, i) = inv[i];
  return FgAbGroup(n, rel);
}

Int FgAbGroup::order() const {
  if (free_rank_ > 0) throw std::domain_error("infinite group order");
  Int o = 1;
  for (auto& d : inv_) o *= d;
  return o;
}

std::vector<Int> FgAbGroup::normal_form(const std::vector<Int>& x) const {
  if ((long)x.size() != ngens_) throw std::invalid_argument("element size");
  std::vector<Int> z = uc_.mul_vec(x);
  std::vector<Int> nf;
  for (long i = 0; i < ngens_; ++i) {
    if (diag_[i] == 1) continue;
    if (diag_[i] == 0) nf.push_back(z[i]);
    else nf.push_back(fdiv_r(z[i], diag_[i]));
  }
  return nf;
}

bool FgAbGroup::is_zero_elem(const std::vector<Int>& x) const {
  for (auto& v : normal_form(x))
    if (v != 0) return false;
  return true;
}

bool FgAbGroup::same_elem(const std::vector<Int>& x, const std::vector<Int>& y) const {
  std::vector<Int> d(ngens_);
  for (long i = 0; i < ngens_; ++i) d[i] = x[i] - y[i];
  return is_zero_elem(d);
}

Int FgAbGroup::elem_order(const std::vector<Int>& x) const {
  std::vector<Int> nf = normal_form(x);
  long k = (long)inv_.size();
  for (long i = k; i < (long)nf.size(); ++i)
    if (nf[i] != 0) return 0;
  Int o = 1;
  for (long i = 0; i < k; ++i) {
    if (nf[i] == 0) continue;
    Int d = inv_[i];
    o = lcm(o, exact_div(d, gcd(d, nf[i])));
  }
  return o;
}

std::vector<Int> FgAbGroup::elem_from_normal_form(const std::vector<Int>& nf) const {
  // z-coordinates: fill slots, then x = uc_^{-1} z; uc_ unimodular -> invert via hnf transform
  std::vector<Int> z(ngens_, Int(0));
  long k = 0;
  for (long i = 0; i < ngens_; ++i) {
    if (diag_[i] == 1) continue;
    z[i] = nf[k++];
  }
  auto x = solve_columns(uc_, z);
  if (!x) throw std::logic_error("unimodular solve failed");
  return *x;
}

std::vector<std::vector<Int>> FgAbGroup::enumerate_elements(const Int& cap) const {
  if (free_rank_ > 0) throw std::domain_error("enumerate infinite group");
  if (order() > cap) throw std::domain_error("enumeration cap exceeded");
  std::vector<std::vector<Int>> out;
  std::vector<Int> nf(inv_.size(), Int(0));
  for (;;) {
    out.push_back(elem_from_normal_form(nf));
    long i = 0;
    for (; i < (long)inv_.size(); ++i) {
      nf[i] += 1;
      if (nf[i] < inv_[i]) break;
      nf[i] = 0;
    }
    if (i == (long)inv_.size()) break;
  }
  if (out.empty()) out.push_back(std::vector<Int>(ngens_, Int(0)));
  return out;
}

std::string FgAbGroup::str() const {
  std::ostringstream o;
  bool first = true;
  for (auto& d : inv_) {
    o << (first ? "" : " + ") << "Z/" << d.get_str();
    first = false;
  }
  if (free_rank_ > 0) {
    o << (first ? "" : " + ") << "Z";
    if (free_rank_ > 1) o << "^" << free_rank_;
    first = false;
  }
  if (first) o << "0";
  return o.str();
}

AbHom::AbHom(const FgAbGroup& src, const FgAbGroup& dst, IntMatrix m, bool check)
    : src_(src), dst_(dst), m_(std::move(m)) {
  if (m_.rows() != dst_.ngens() || m_.cols() != src_.ngens()) throw std::invalid_argument("hom matrix shape");
  if (check) {
    // well-definedness: each relator of src maps into relator lattice of dst
    const IntMatrix& L = dst_.rel_lattice();
    for (long i = 0; i < src_.rel().rows(); ++i) {
      std::vector<Int> img = m_.mul_vec(src_.rel().row(i));
      if (!lattice_contains(L, img)) throw std::invalid_argument("hom not well-defined on relations");
    }
  }
}

AbHom AbHom::zero(const FgAbGroup& src, const FgAbGroup& dst) {
  return AbHom(src, dst, IntMatrix(dst.ngens(), src.ngens()), false);
}

AbHom AbHom::identity(const FgAbGroup& g) { return AbHom(g, g, IntMatrix::identity(g.ngens()), false); }

AbHom AbHom::scalar(const FgAbGroup& g, const Int& n) {
  IntMatrix m = IntMatrix::identity(g.ngens());
  for (long i = 0; i < m.rows(); ++i) m.at(i, i) = n;
  return AbHom(g, g, m, false);
}

AbHom AbHom::compose_after(const AbHom& first) const {
  if (!first.dst_.same_presentation(src_)) throw std::invalid_argument("composition mismatch");
  return AbHom(first.src_, dst_, m_ * first.m_, false);
}

bool AbHom::is_zero_hom() const {
  for (long j = 0; j < m_.cols(); ++j)
    if (!dst_.is_zero_elem(m_.column(j))) return false;
  return true;
}

bool AbHom::equals(const AbHom& o) const {
  if (m_.rows() != o.m_.rows() || m_.cols() != o.m_.cols()) return false;
  for (long j = 0; j < m_.cols(); ++j) {
    std::vector<Int> d(m_.rows());
    for (long i = 0; i < m_.rows(); ++i) d[i] = m_.at(i, j) - o.m_.at(i, j);
    if (!dst_.is_zero_elem(d)) return false;
  }
  return true;
}

IntMatrix SubgroupData::full_lattice() const {
  return lattice_basis(IntMatrix::hstack(gens, ambient.rel_lattice()));
}

bool SubgroupData::contains(const std::vector<Int>& v) const { return lattice_contains(full_lattice(), v); }

bool SubgroupData::contains_subgroup(const SubgroupData& other) const {
  IntMatrix L = full_lattice();
  for (long j = 0; j < other.gens.cols(); ++j)
    if (!lattice_contains(L, other.gens.column(j))) return false;
  return true;
}

bool SubgroupData::equals(const SubgroupData& other) const {
  return contains_subgroup(other) && other.contains_subgroup(*this);
}

SubgroupData kernel(const AbHom& f) {
  // {x : M x in rel-lattice of dst}
  IntMatrix K = preimage_lattice(f.matrix(), f.dst().rel_lattice());
  return SubgroupData{f.src(), K};
}

SubgroupData image(const AbHom& f) { return SubgroupData{f.dst(), lattice_basis(f.matrix())}; }

FgAbGroup coker(const AbHom& f) {
  IntMatrix rel = IntMatrix::vstack(f.dst().rel(), f.matrix().transpose());
  return FgAbGroup(f.dst().ngens(), rel);
}

CokerData coker_with_proj(const AbHom& f) {
  FgAbGroup q = coker(f);
  AbHom proj(f.dst(), q, IntMatrix::identity(f.dst().ngens()), false);
  return {q, proj};
}

SubgroupAsGroup subgroup_as_group(const SubgroupData& s) {
  long k = s.gens.cols();
  // relations among the chosen generators: {c : gens*c in ambient relator lattice}
  IntMatrix relc = preimage_lattice(s.gens, s.ambient.rel_lattice());
  FgAbGroup g(k, relc.transpose());
  AbHom inc(g, s.ambient, s.gens, false);
  return {g, inc};
}

CokerData quotient_by_subgroup(const SubgroupData& s) {
  AbHom inc(FgAbGroup::free_group(s.gens.cols()), s.ambient, s.gens, false);
  return coker_with_proj(inc);
}

SubgroupData subgroup_intersection(const SubgroupData& a, const SubgroupData& b) {
  // solutions of A x = B y (mod relations): kernel of [A | -B | -R]
  IntMatrix A = a.gens, B = b.gens, R = a.ambient.rel_lattice();
  IntMatrix K = kernel_columns(IntMatrix::hstack(IntMatrix::hstack(A, -B), -R));
  IntMatrix xpart = K.submatrix(0, 0, A.cols(), K.cols());
  IntMatrix gens = lattice_basis(A * xpart);
  return SubgroupData{a.ambient, gens};
}

ExactnessResult is_exact_at(const AbHom& f, const AbHom& g) {
  if (!f.dst().same_presentation(g.src())) throw std::invalid_argument("is_exact_at: target(f) != source(g)");
  SubgroupData im = image(f);
  SubgroupData ker = kernel(g);
  // im subset ker?
  IntMatrix kerL = ker.full_lattice();
  for (long j = 0; j < im.gens.cols(); ++j) {
    std::vector<Int> v = im.gens.column(j);
    if (!lattice_contains(kerL, v)) return {false, v, true};
  }
  IntMatrix imL = im.full_lattice();
  for (long j = 0; j < ker.gens.cols(); ++j) {
    std::vector<Int> v = ker.gens.column(j);
    if (!lattice_contains(imL, v)) return {false, v, false};
  }
  return {true, std::nullopt, false};
}

ComplexReport verify_complex(const std::vector<AbHom>& chain) {
  ComplexReport rep;
  rep.all_exact = true;
  for (size_t i = 0; i + 1 < chain.size(); ++i) {
    if (!chain[i].dst().same_presentation(chain[i + 1].src()))
      throw std::invalid_argument("verify_complex: consecutive maps not composable");
    ExactnessResult r = is_exact_at(chain[i], chain[i + 1]);
    rep.all_exact = rep.all_exact && r.exact;
    rep.at.push_back(std::move(r));
  }
  // order bookkeeping for finite chains: terms are src(0), src(1), ..., dst(last)
  std::vector<const FgAbGroup*> terms;
  for (auto& h : chain) terms.push_back(&h.src());
  if (!chain.empty()) terms.push_back(&chain.back().dst());
  bool fin = true;
  for (auto* t : terms)
    if (!t->is_finite()) fin = false;
  rep.order_identity_checked = fin;
  rep.order_identity_holds = true;
  if (fin) {
    Int even = 1, odd = 1;
    for (size_t i = 0; i < terms.size(); ++i) (i % 2 == 0 ? even : odd) *= terms[i]->order();
    rep.order_identity_holds = (even == odd);
  }
  return rep;
}

SubgroupData kernel_in_subgroup(const AbHom& f, const SubgroupData& s) {
  SubgroupData k = kernel(f);
  return subgroup_intersection(k, s);
}

std::string json_of_group(const FgAbGroup& g) {
  std::ostringstream o;
  o << "{\"invariant_factors\":[";
  for (size_t i = 0; i < g.invariant_factors().size(); ++i)
    o << (i ? "," : "") << g.invariant_factors()[i].get_str();
  o << "],\"free_rank\":" << g.free_rank() << "}";
  return o.str();
}

}  // namespace toruscl
