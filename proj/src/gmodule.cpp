#include "toruscl/gmodule.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace toruscl {

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table, std::vector<std::string> labels)
    : table_(std::move(table)), labels_(std::move(labels)) {
  n_ = (int)table_.size();
  for (auto& r : table_)
    if ((int)r.size() != n_) throw std::invalid_argument("table not square");
  e_ = -1;
  for (int a = 0; a < n_; ++a) {
    bool ident = true;
    for (int b = 0; b < n_; ++b)
      if (table_[a][b] != b || table_[b][a] != b) {
        ident = false;
        break;
      }
    if (ident) {
      e_ = a;
      break;
    }
  }
  if (e_ < 0) throw std::invalid_argument("no identity");
  inv_.assign(n_, -1);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (table_[a][b] == e_) inv_[a] = b;
  for (int a = 0; a < n_; ++a)
    if (inv_[a] < 0) throw std::invalid_argument("no inverse");
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      for (int c = 0; c < n_; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) throw std::invalid_argument("not associative");
  if (labels_.empty()) {
    labels_.resize(n_);
    for (int a = 0; a < n_; ++a) labels_[a] = "g" + std::to_string(a);
    labels_[e_] = "e";
  }
}

FiniteGroup FiniteGroup::cyclic(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  std::vector<std::string> lab(n);
  for (int a = 0; a < n; ++a) lab[a] = a == 0 ? "e" : (a == 1 ? "s" : "s" + std::to_string(a));
  return FiniteGroup(t, lab);
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  int n = a.n_ * b.n_;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  auto idx = [&](int x, int y) { return x * b.n_ + y; };
  for (int x1 = 0; x1 < a.n_; ++x1)
    for (int y1 = 0; y1 < b.n_; ++y1)
      for (int x2 = 0; x2 < a.n_; ++x2)
        for (int y2 = 0; y2 < b.n_; ++y2)
          t[idx(x1, y1)][idx(x2, y2)] = idx(a.table_[x1][x2], b.table_[y1][y2]);
  std::vector<std::string> lab(n);
  for (int x = 0; x < a.n_; ++x)
    for (int y = 0; y < b.n_; ++y) lab[idx(x, y)] = "(" + a.labels_[x] + "," + b.labels_[y] + ")";
  return FiniteGroup(t, lab);
}

FiniteGroup FiniteGroup::symmetric3() {
  // permutations of {0,1,2} in a fixed listing
  std::vector<std::vector<int>> perms = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
  int n = 6;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> c(3);
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      t[a][b] = (int)(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return FiniteGroup(t);
}

FiniteGroup FiniteGroup::dihedral(int n) {
  // elements r^i s^j, j in {0,1}
  int N = 2 * n;
  auto idx = [&](int i, int j) { return j * n + i; };
  std::vector<std::vector<int>> t(N, std::vector<int>(N));
  for (int i1 = 0; i1 < n; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < n; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) {
          // (r^i1 s^j1)(r^i2 s^j2) = r^(i1 + (-1)^j1 i2) s^(j1+j2)
          int i = ((i1 + (j1 ? n - i2 : i2)) % n + n) % n;
          t[idx(i1, j1)][idx(i2, j2)] = idx(i, (j1 + j2) % 2);
        }
  return FiniteGroup(t);
}

FiniteGroup FiniteGroup::quaternion8() {
  // 1, -1, i, -i, j, -j, k, -k
  auto neg = [](int x) { return x ^ 1; };
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  // base table on {1,i,j,k} with signs
  auto mul_base = [&](int a, int b, int& sign) -> int {
    // 0=1,1=i,2=j,3=k
    static const int tab[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sg[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    sign = sg[a][b];
    return tab[a][b];
  };
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int sa = a & 1 ? -1 : 1, sb = b & 1 ? -1 : 1;
      int s;
      int c = mul_base(a >> 1, b >> 1, s);
      int sc = sa * sb * s;
      t[a][b] = (c << 1) | (sc < 0 ? 1 : 0);
    }
  (void)neg;
  return FiniteGroup(t);
}

int FiniteGroup::elem_order(int a) const {
  int x = a, o = 1;
  while (x != e_) {
    x = table_[x][a];
    ++o;
  }
  return o;
}

bool FiniteGroup::is_cyclic() const { return generator().has_value(); }

std::optional<int> FiniteGroup::generator() const {
  for (int a = 0; a < n_; ++a)
    if (elem_order(a) == n_) return a;
  return std::nullopt;
}

bool FiniteGroup::is_subgroup(const std::vector<int>& elems) const {
  std::set<int> s(elems.begin(), elems.end());
  if (!s.count(e_)) return false;
  for (int a : elems)
    for (int b : elems)
      if (!s.count(table_[a][b])) return false;
  return true;
}

std::vector<std::vector<int>> FiniteGroup::subgroups() const {
  if (n_ > 64) throw std::domain_error("subgroup enumeration bound (|G| <= 64)");
  std::set<std::vector<int>> known;
  known.insert({e_});
  // closure of a generating set
  auto close = [&](std::set<int> gen) {
    std::vector<int> work(gen.begin(), gen.end());
    std::set<int> s = gen;
    while (!work.empty()) {
      int a = work.back();
      work.pop_back();
      for (int b : std::set<int>(s)) {
        for (int c : {table_[a][b], table_[b][a], inv_[a]})
          if (!s.count(c)) {
            s.insert(c);
            work.push_back(c);
          }
      }
    }
    return std::vector<int>(s.begin(), s.end());
  };
  // grow: repeatedly extend known subgroups by one element
  for (;;) {
    std::set<std::vector<int>> next = known;
    for (auto& h : known)
      for (int a = 0; a < n_; ++a) {
        if (std::binary_search(h.begin(), h.end(), a)) continue;
        std::set<int> gen(h.begin(), h.end());
        gen.insert(a);
        next.insert(close(gen));
      }
    if (next == known) break;
    known = next;
  }
  return std::vector<std::vector<int>>(known.begin(), known.end());
}

FiniteGroup FiniteGroup::subgroup_group(const std::vector<int>& elems) const {
  int k = (int)elems.size();
  std::map<int, int> pos;
  for (int i = 0; i < k; ++i) pos[elems[i]] = i;
  std::vector<std::vector<int>> t(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) t[i][j] = pos.at(table_[elems[i]][elems[j]]);
  std::vector<std::string> lab(k);
  for (int i = 0; i < k; ++i) lab[i] = labels_[elems[i]];
  return FiniteGroup(t, lab);
}

bool FiniteGroup::is_metacyclic() const {
  auto subs = subgroups();
  for (auto& [p, e] : factorize(Int(n_))) {
    Int pk = pow_int(p, e);
    // find a Sylow p-subgroup and check cyclicity
    bool found = false;
    for (auto& h : subs)
      if (Int((long)h.size()) == pk) {
        found = true;
        if (!subgroup_group(h).is_cyclic()) return false;
        break;
      }
    if (!found) throw std::logic_error("Sylow subgroup not found");
  }
  return true;
}

GLattice::GLattice(FiniteGroup g, long rk, std::vector<IntMatrix> act, bool check)
    : group(std::move(g)), rank(rk), action(std::move(act)) {
  if ((int)action.size() != group.order()) throw std::invalid_argument("action size");
  if (check) {
    for (auto& m : action) {
      if (m.rows() != rank || m.cols() != rank) throw std::invalid_argument("action shape");
      Int d = m.det();
      if (d != 1 && d != -1) throw std::invalid_argument("action not in GL(Z)");
    }
    if (!action[group.identity()].is_identity()) throw std::invalid_argument("identity acts nontrivially");
    for (int a = 0; a < group.order(); ++a)
      for (int b = 0; b < group.order(); ++b)
        if (action[a] * action[b] != action[group.mul(a, b)]) throw std::invalid_argument("action not a homomorphism");
  }
}

GLattice GLattice::trivial(const FiniteGroup& g, long rank) {
  std::vector<IntMatrix> act(g.order(), IntMatrix::identity(rank));
  return GLattice(g, rank, act, false);
}

GLattice GLattice::sign_c2() {
  FiniteGroup c2 = FiniteGroup::cyclic(2);
  IntMatrix mi(1, 1);
  mi.at(0, 0) = -1;
  return GLattice(c2, 1, {IntMatrix::identity(1), mi}, false);
}

GLattice GLattice::regular(const FiniteGroup& g) {
  std::vector<int> triv = {g.identity()};
  return permutation(g, triv);
}

GLattice GLattice::permutation(const FiniteGroup& g, const std::vector<int>& subgroup) {
  if (!g.is_subgroup(subgroup)) throw std::invalid_argument("not a subgroup");
  std::set<int> h(subgroup.begin(), subgroup.end());
  // left cosets
  std::vector<std::vector<int>> cosets;
  std::vector<int> coset_of(g.order(), -1);
  for (int a = 0; a < g.order(); ++a) {
    if (coset_of[a] >= 0) continue;
    std::vector<int> c;
    for (int x : subgroup) c.push_back(g.mul(a, x));
    std::sort(c.begin(), c.end());
    int id = (int)cosets.size();
    for (int y : c) coset_of[y] = id;
    cosets.push_back(c);
  }
  long n = (long)cosets.size();
  std::vector<IntMatrix> act;
  for (int s = 0; s < g.order(); ++s) {
    IntMatrix m(n, n);
    for (long j = 0; j < n; ++j) {
      int rep = cosets[j][0];
      int t = coset_of[g.mul(s, rep)];
      m.at(t, j) = 1;
    }
    act.push_back(m);
  }
  return GLattice(g, n, act, false);
}

GLattice GLattice::dual() const {
  std::vector<IntMatrix> act;
  for (int s = 0; s < group.order(); ++s) act.push_back(action[group.inv(s)].transpose());
  return GLattice(group, rank, act, false);
}

GLattice GLattice::direct_sum(const GLattice& o) const {
  std::vector<IntMatrix> act;
  for (int s = 0; s < group.order(); ++s) {
    IntMatrix m(rank + o.rank, rank + o.rank);
    for (long i = 0; i < rank; ++i)
      for (long j = 0; j < rank; ++j) m.at(i, j) = action[s].at(i, j);
    for (long i = 0; i < o.rank; ++i)
      for (long j = 0; j < o.rank; ++j) m.at(rank + i, rank + j) = o.action[s].at(i, j);
    act.push_back(m);
  }
  return GLattice(group, rank + o.rank, act, false);
}

GLattice GLattice::conjugate(const IntMatrix& t) const {
  Int d = t.det();
  if (d != 1 && d != -1) throw std::invalid_argument("conjugation needs unimodular matrix");
  // t columns = new basis; new action = t^{-1} A t
  std::vector<IntMatrix> act;
  for (auto& m : action) {
    IntMatrix mt = m * t;
    IntMatrix res(rank, rank);
    for (long j = 0; j < rank; ++j) {
      auto x = solve_columns(t, mt.column(j));
      if (!x) throw std::logic_error("conjugate solve");
      res.set_column(j, *x);
    }
    act.push_back(res);
  }
  return GLattice(group, rank, act, false);
}

GLattice GLattice::restrict_to(const std::vector<int>& subgroup) const {
  FiniteGroup h = group.subgroup_group(subgroup);
  std::vector<IntMatrix> act;
  for (int i = 0; i < (int)subgroup.size(); ++i) act.push_back(action[subgroup[i]]);
  return GLattice(h, rank, act, false);
}

IntMatrix GLattice::fixed_sublattice() const {
  IntMatrix stacked(0, rank);
  for (int s = 0; s < group.order(); ++s)
    stacked = IntMatrix::vstack(stacked, action[s] - IntMatrix::identity(rank));
  return kernel_columns(stacked);
}

IntMatrix GLattice::norm_matrix() const {
  IntMatrix n(rank, rank);
  for (auto& m : action) n = n + m;
  return n;
}

GModule::GModule(FiniteGroup g, FgAbGroup mm, std::vector<IntMatrix> act, bool check)
    : group(std::move(g)), m(std::move(mm)), action(std::move(act)) {
  if ((int)action.size() != group.order()) throw std::invalid_argument("action size");
  if (check) {
    for (auto& a : action) {
      AbHom h(m, m, a);  // well-definedness on relations
      (void)h;
    }
    for (int a = 0; a < group.order(); ++a)
      for (int b = 0; b < group.order(); ++b) {
        AbHom ab(m, m, action[a] * action[b], false), c(m, m, action[group.mul(a, b)], false);
        if (!ab.equals(c)) throw std::invalid_argument("module action not a homomorphism");
      }
  }
}

GModule GModule::from_lattice(const GLattice& x) {
  return GModule(x.group, FgAbGroup::free_group(x.rank), x.action, false);
}

GModule GModule::restrict_to(const std::vector<int>& subgroup) const {
  FiniteGroup h = group.subgroup_group(subgroup);
  std::vector<IntMatrix> act;
  for (int s : subgroup) act.push_back(action[s]);
  return GModule(h, m, act, false);
}

IntMatrix GModule::norm_matrix() const {
  IntMatrix n(m.ngens(), m.ngens());
  for (auto& a : action) n = n + a;
  return n;
}

namespace {

// subquotient (K-lattice gens) / (I-lattice gens + relations), with lifts
TateData subquotient(const FgAbGroup& amb, const IntMatrix& kgens, const IntMatrix& igens) {
  IntMatrix K = lattice_basis(kgens);
  IntMatrix I = lattice_basis(IntMatrix::hstack(igens, amb.rel_lattice()));
  // group on K's columns with relations {c : K c in I}
  IntMatrix relc = preimage_lattice(K, I);
  FgAbGroup g(K.cols(), relc.transpose());
  // canonical generators of g -> ambient: columns K * (ambient coords of g's canonical gens)
  std::vector<std::vector<Int>> reps;
  long k = (long)g.invariant_factors().size() + g.free_rank();
  for (long t = 0; t < k; ++t) {
    std::vector<Int> nf(k, Int(0));
    nf[t] = 1;
    std::vector<Int> c = g.elem_from_normal_form(nf);
    reps.push_back(K.mul_vec(c));
  }
  return {g, IntMatrix::from_columns(amb.ngens(), reps)};
}

// fixed subgroup {x : (a_s - 1) x in rel for all s}, as column lattice
IntMatrix fixed_lattice_mod(const GModule& mod) {
  long n = mod.m.ngens();
  IntMatrix stacked(0, n);
  IntMatrix rels(0, 0);
  int G = mod.group.order();
  for (int s = 0; s < G; ++s) stacked = IntMatrix::vstack(stacked, mod.action[s] - IntMatrix::identity(n));
  // target relations: block diagonal copies of rel lattice
  const IntMatrix& L = mod.m.rel_lattice();
  IntMatrix bigL(G * n, G * L.cols());
  for (int s = 0; s < G; ++s)
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < L.cols(); ++j) bigL.at(s * n + i, s * L.cols() + j) = L.at(i, j);
  return preimage_lattice(stacked, bigL);
}

IntMatrix augmentation_image(const GModule& mod) {
  long n = mod.m.ngens();
  IntMatrix gens(n, 0);
  for (int s = 0; s < mod.group.order(); ++s)
    gens = IntMatrix::hstack(gens, mod.action[s] - IntMatrix::identity(n));
  return gens;
}

// bar-resolution cochain modules: C^k = M^(|G|^k) with diagonal relations
struct Cochain {
  FgAbGroup grp;
  long copies;
};

Cochain cochain_group(const GModule& mod, long copies) {
  long n = mod.m.ngens();
  const IntMatrix& r = mod.m.rel();
  IntMatrix rel(copies * r.rows(), copies * n);
  for (long c = 0; c < copies; ++c)
    for (long i = 0; i < r.rows(); ++i)
      for (long j = 0; j < n; ++j) rel.at(c * r.rows() + i, c * n + j) = r.at(i, j);
  return {FgAbGroup(copies * n, rel), copies};
}

// d0: M -> C^1, (d0 m)(g) = g m - m
IntMatrix d0_matrix(const GModule& mod) {
  long n = mod.m.ngens();
  int G = mod.group.order();
  IntMatrix d(G * n, n);
  for (int g = 0; g < G; ++g) {
    IntMatrix blk = mod.action[g] - IntMatrix::identity(n);
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) d.at(g * n + i, j) = blk.at(i, j);
  }
  return d;
}

// d1: C^1 -> C^2, (d1 f)(g,h) = g f(h) - f(gh) + f(g)
IntMatrix d1_matrix(const GModule& mod) {
  long n = mod.m.ngens();
  int G = mod.group.order();
  IntMatrix d(G * G * n, G * n);
  for (int g = 0; g < G; ++g)
    for (int h = 0; h < G; ++h) {
      long row0 = ((long)g * G + h) * n;
      // + g * f(h)
      for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) d.at(row0 + i, h * n + j) += mod.action[g].at(i, j);
      // - f(gh)
      int gh = mod.group.mul(g, h);
      for (long i = 0; i < n; ++i) d.at(row0 + i, gh * n + i) -= 1;
      // + f(g)
      for (long i = 0; i < n; ++i) d.at(row0 + i, g * n + i) += 1;
    }
  return d;
}

// d2: C^2 -> C^3, (d2 f)(g,h,k) = g f(h,k) - f(gh,k) + f(g,hk) - f(g,h)
IntMatrix d2_matrix(const GModule& mod) {
  long n = mod.m.ngens();
  int G = mod.group.order();
  IntMatrix d((long)G * G * G * n, (long)G * G * n);
  auto col0 = [&](int x, int y) { return ((long)x * G + y) * n; };
  for (int g = 0; g < G; ++g)
    for (int h = 0; h < G; ++h)
      for (int k = 0; k < G; ++k) {
        long row0 = (((long)g * G + h) * G + k) * n;
        for (long i = 0; i < n; ++i)
          for (long j = 0; j < n; ++j) d.at(row0 + i, col0(h, k) + j) += mod.action[g].at(i, j);
        int gh = mod.group.mul(g, h), hk = mod.group.mul(h, k);
        for (long i = 0; i < n; ++i) {
          d.at(row0 + i, col0(gh, k) + i) -= 1;
          d.at(row0 + i, col0(g, hk) + i) += 1;
          d.at(row0 + i, col0(g, h) + i) -= 1;
        }
      }
  return d;
}

TateData tate_cyclic(const GModule& mod, long i) {
  auto gen = mod.group.generator();
  IntMatrix sigma = mod.action[*gen];
  long n = mod.m.ngens();
  IntMatrix nm = mod.norm_matrix();
  IntMatrix smin1 = sigma - IntMatrix::identity(n);
  const IntMatrix& L = mod.m.rel_lattice();
  bool even = ((i % 2) + 2) % 2 == 0;
  // even: ker(sigma-1)/im(N); odd: ker(N)/im(sigma-1)
  IntMatrix kmat = even ? smin1 : nm;
  IntMatrix imat = even ? nm : smin1;
  IntMatrix K = preimage_lattice(kmat, L);
  return subquotient(mod.m, K, imat);
}

}  // namespace

TateData tate_cohomology_with_reps(const GModule& mod, long i) {
  if (mod.group.is_cyclic() && mod.group.order() > 1) return tate_cyclic(mod, i);
  if (mod.group.order() == 1) {
    // trivial group: all Tate groups vanish
    return {FgAbGroup::trivial(), IntMatrix(mod.m.ngens(), 0)};
  }
  long n = mod.m.ngens();
  const IntMatrix& L = mod.m.rel_lattice();
  if (i == 0) {
    // M^G / N M
    IntMatrix K = fixed_lattice_mod(mod);
    return subquotient(mod.m, K, mod.norm_matrix());
  }
  if (i == -1) {
    // ker N / I_G M
    IntMatrix K = preimage_lattice(mod.norm_matrix(), L);
    return subquotient(mod.m, K, augmentation_image(mod));
  }
  if (i == 1 || i == 2) {
    // bar resolution
    int G = mod.group.order();
    if (G > 16) throw std::domain_error("bar resolution capped at |G| <= 16");
    Cochain c1 = cochain_group(mod, i == 1 ? G : (long)G * G);
    IntMatrix din = i == 1 ? d1_matrix(mod) : d2_matrix(mod);
    IntMatrix dout = i == 1 ? d0_matrix(mod) : d1_matrix(mod);
    Cochain c2 = cochain_group(mod, i == 1 ? (long)G * G : (long)G * G * G);
    IntMatrix K = preimage_lattice(din, c2.grp.rel_lattice());
    TateData t = subquotient(c1.grp, K, dout);
    (void)n;
    return t;
  }
  throw std::domain_error("tate_cohomology: unsupported degree for non-cyclic group");
}

FgAbGroup tate_cohomology(const GModule& m, long i) { return tate_cohomology_with_reps(m, i).h; }

bool is_flasque(const GLattice& x) {
  for (auto& h : x.group.subgroups()) {
    GModule r = GModule::from_lattice(x.restrict_to(h));
    if (!tate_cohomology(r, -1).is_trivial()) return false;
  }
  return true;
}

bool is_coflasque(const GLattice& x) {
  for (auto& h : x.group.subgroups()) {
    GModule r = GModule::from_lattice(x.restrict_to(h));
    if (!tate_cohomology(r, 1).is_trivial()) return false;
  }
  return true;
}

bool is_invertible_c2(const GLattice& x) {
  if (x.group.order() != 2) throw std::domain_error("is_invertible_c2: group must be C2");
  return decompose_c2(x).b == 0;
}

namespace {

// orbit of a vector under the action, as columns
IntMatrix orbit_columns(const GLattice& x, const std::vector<Int>& y) {
  std::vector<std::vector<Int>> cols;
  for (int s = 0; s < x.group.order(); ++s) cols.push_back(x.action[s].mul_vec(y));
  return IntMatrix::from_columns(x.rank, cols);
}

struct Block {
  std::vector<int> subgroup;
  std::vector<Int> gen;  // element of X^H
};

struct Cover {
  GLattice P;
  IntMatrix surj;  // x.rank x P.rank
};

// the permutation lattice and surjection determined by blocks
Cover build_cover(const GLattice& x, const std::vector<Block>& blocks) {
  GLattice acc(x.group, 0, std::vector<IntMatrix>(x.group.order(), IntMatrix(0, 0)), false);
  IntMatrix s(x.rank, 0);
  bool have = false;
  for (auto& b : blocks) {
    GLattice pb = GLattice::permutation(x.group, b.subgroup);
    // map: coset basis element gH -> g . gen; coset reps match permutation()'s ordering
    std::vector<int> reps;
    std::vector<char> seen(x.group.order(), 0);
    for (int a = 0; a < x.group.order(); ++a) {
      if (seen[a]) continue;
      std::vector<int> c;
      for (int t : b.subgroup) c.push_back(x.group.mul(a, t));
      std::sort(c.begin(), c.end());
      for (int y : c) seen[y] = 1;
      reps.push_back(c[0]);
    }
    std::vector<std::vector<Int>> cols;
    for (int r : reps) cols.push_back(x.action[r].mul_vec(b.gen));
    IntMatrix sb = IntMatrix::from_columns(x.rank, cols);
    if (!have) {
      acc = pb;
      s = sb;
      have = true;
    } else {
      acc = acc.direct_sum(pb);
      s = IntMatrix::hstack(s, sb);
    }
  }
  return {acc, s};
}

// check P^H -> X^H surjective for all subgroups H
bool cover_all_fixed(const GLattice& x, const GLattice& P, const IntMatrix& surj,
                     const std::vector<std::vector<int>>& subs) {
  for (auto& h : subs) {
    IntMatrix XH = x.restrict_to(h).fixed_sublattice();
    IntMatrix PH = P.rank ? P.restrict_to(h).fixed_sublattice() : IntMatrix(0, 0);
    IntMatrix img = P.rank ? lattice_basis(surj * PH) : IntMatrix(x.rank, 0);
    for (long j = 0; j < XH.cols(); ++j)
      if (!lattice_contains(img, XH.column(j))) return false;
  }
  return true;
}

}  // namespace

ResolutionC coflasque_resolution(const GLattice& x) {
  if (x.group.order() > 64) throw std::domain_error("resolution bound (|G| <= 64)");
  auto subs = x.group.subgroups();
  // largest subgroups first, deterministic tiebreak
  std::sort(subs.begin(), subs.end(), [](auto& a, auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  std::vector<Block> blocks;
  for (auto& h : subs) {
    GLattice rx = x.restrict_to(h);
    IntMatrix XH = rx.fixed_sublattice();
    for (long j = 0; j < XH.cols(); ++j) {
      Cover c = build_cover(x, blocks);
      // image of P^H in X^H so far; the new generator must land there, else add a block
      IntMatrix imgH(x.rank, 0);
      if (c.P.rank > 0) {
        IntMatrix PH = c.P.restrict_to(h).fixed_sublattice();
        imgH = lattice_basis(c.surj * PH);
      }
      if (!lattice_contains(imgH, XH.column(j))) blocks.push_back({h, XH.column(j)});
    }
  }
  // minimize: drop blocks whose removal keeps all fixed-point surjectivity
  for (size_t i = 0; i < blocks.size();) {
    std::vector<Block> tryb;
    for (size_t j = 0; j < blocks.size(); ++j)
      if (j != i) tryb.push_back(blocks[j]);
    Cover c = build_cover(x, tryb);
    if (cover_all_fixed(x, c.P, c.surj, subs)) blocks = tryb;
    else ++i;
  }
  Cover cov = build_cover(x, blocks);
  GLattice P = cov.P;
  IntMatrix surj = cov.surj;
  if (!cover_all_fixed(x, P, surj, subs)) throw std::logic_error("coflasque cover incomplete");
  // kernel lattice C with its induced action
  IntMatrix K = kernel_columns(surj);
  long ck = K.cols();
  std::vector<IntMatrix> cact;
  for (int s = 0; s < x.group.order(); ++s) {
    IntMatrix pk = P.action[s] * K;
    IntMatrix m(ck, ck);
    for (long j = 0; j < ck; ++j) {
      auto c = solve_columns(K, pk.column(j));
      if (!c) throw std::logic_error("kernel not stable");
      m.set_column(j, *c);
    }
    cact.push_back(m);
  }
  GLattice C(x.group, ck, cact, false);
  ResolutionC res{C, P, x, K, surj, {}};
  for (auto& b : blocks) res.blocks.emplace_back(b.subgroup, b.gen);
  if (!is_coflasque(C)) throw std::logic_error("kernel of cover not coflasque");
  return res;
}

ResolutionC flasque_resolution(const GLattice& x) {
  // dualize coflasque resolution of the dual: 0 -> C -> P -> X^v -> 0  ~>  0 -> X -> P^v -> C^v -> 0
  ResolutionC r = coflasque_resolution(x.dual());
  GLattice Pv = r.middle.dual(), Cv = r.first.dual();
  // maps: inj = surj^T : X -> P^v, surj' = inj^T : P^v -> C^v
  ResolutionC out{x, Pv, Cv, r.surj.transpose(), r.inj.transpose(), r.blocks};
  if (!is_flasque(Cv)) throw std::logic_error("flasque resolution cokernel not flasque");
  return out;
}

C2Decomposition decompose_c2(const GLattice& x) {
  if (x.group.order() != 2) throw std::domain_error("decompose_c2: group must be C2");
  GModule m = GModule::from_lattice(x);
  FgAbGroup h0 = tate_cohomology(m, 0), h1 = tate_cohomology(m, 1);
  auto log2_order = [](const FgAbGroup& g) {
    Int o = g.order();
    long k = 0;
    while (o > 1) {
      if (!divides(2, o)) throw std::logic_error("non-2-torsion in C2 cohomology");
      o = exact_div(o, 2);
      ++k;
    }
    return k;
  };
  long a = log2_order(h0), b = log2_order(h1);
  long c2 = x.rank - a - b;
  if (c2 < 0 || c2 % 2) throw std::logic_error("decompose_c2: inconsistent multiplicities");
  long c = c2 / 2;
  // consistency: rank(X^+) = a + c, rank(X^-) = b + c
  int sg = x.group.identity() == 0 ? 1 : 0;
  IntMatrix sigma = x.action[sg];
  long rp = kernel_columns(sigma - IntMatrix::identity(x.rank)).cols();
  long rm = kernel_columns(sigma + IntMatrix::identity(x.rank)).cols();
  if (rp != a + c || rm != b + c) throw std::logic_error("decompose_c2: eigenlattice rank check failed");
  return {a, b, c};
}

GModule induce(const FiniteGroup& g, const std::vector<int>& subgroup, const GModule& n) {
  if ((int)subgroup.size() != n.group.order()) throw std::invalid_argument("induce: subgroup size mismatch");
  std::map<int, int> hpos;
  for (int i = 0; i < (int)subgroup.size(); ++i) hpos[subgroup[i]] = i;
  // left coset reps
  std::set<int> seen;
  std::vector<int> reps;
  for (int a = 0; a < g.order(); ++a) {
    if (seen.count(a)) continue;
    reps.push_back(a);
    for (int t : subgroup) seen.insert(g.mul(a, t));
  }
  long k = (long)reps.size(), nn = n.m.ngens();
  // module = sum over cosets of copies of n; s sends block j to block j' with h-twist:
  // s * r_j = r_{j'} * h  =>  block j -> block j' via action of h
  const IntMatrix& r = n.m.rel();
  IntMatrix rel(k * r.rows(), k * nn);
  for (long c = 0; c < k; ++c)
    for (long i = 0; i < r.rows(); ++i)
      for (long j = 0; j < nn; ++j) rel.at(c * r.rows() + i, c * nn + j) = r.at(i, j);
  FgAbGroup big(k * nn, rel);
  std::vector<IntMatrix> act;
  for (int s = 0; s < g.order(); ++s) {
    IntMatrix m(k * nn, k * nn);
    for (long j = 0; j < k; ++j) {
      int sr = g.mul(s, reps[j]);
      // find coset of sr
      long jj = -1;
      int h = -1;
      for (long t = 0; t < k; ++t) {
        int cand = g.mul(g.inv(reps[t]), sr);
        if (hpos.count(cand)) {
          jj = t;
          h = hpos[cand];
          break;
        }
      }
      const IntMatrix& hb = n.action[h];
      for (long a2 = 0; a2 < nn; ++a2)
        for (long b2 = 0; b2 < nn; ++b2) m.at(jj * nn + a2, j * nn + b2) = hb.at(a2, b2);
    }
    act.push_back(m);
  }
  return GModule(g, big, act, false);
}

bool induced_check(const FiniteGroup& g, const std::vector<int>& subgroup, const GModule& n) {
  GModule ind = induce(g, subgroup, n);
  for (long i : {-1L, 0L, 1L}) {
    FgAbGroup a = tate_cohomology(ind, i), b = tate_cohomology(n, i);
    if (!a.isomorphic(b)) return false;
  }
  return true;
}

}  // namespace toruscl
