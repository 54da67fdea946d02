#pragma once
#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace toruscl {

using Int = mpz_class;
using Rat = mpq_class;

inline Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// g = a*x + b*y
inline Int gcdext(const Int& a, const Int& b, Int& x, Int& y) {
  Int g;
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int fdiv_q(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int fdiv_r(const Int& a, const Int& b) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline bool divides(const Int& d, const Int& a) {
  if (d == 0) return a == 0;
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline Int exact_div(const Int& a, const Int& d) {
  Int q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
  return q;
}

inline Int isqrt(const Int& a) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
  return r;
}

inline bool is_square(const Int& a, Int* root = nullptr) {
  if (a < 0) return false;
  Int r = isqrt(a);
  if (r * r == a) {
    if (root) *root = r;
    return true;
  }
  return false;
}

inline bool is_prime(const Int& p) { return mpz_probab_prime_p(p.get_mpz_t(), 40) != 0; }

inline Int pow_int(const Int& b, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

// trial division; fine at desk scale
inline std::vector<std::pair<Int, int>> factorize(Int n) {
  std::vector<std::pair<Int, int>> out;
  if (n < 0) n = -n;
  if (n <= 1) return out;
  for (Int p = 2; p * p <= n; p == 2 ? p = 3 : p += 2) {
    if (divides(p, n)) {
      int e = 0;
      while (divides(p, n)) {
        n = exact_div(n, p);
        ++e;
      }
      out.emplace_back(p, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline bool is_squarefree(const Int& n) {
  if (n == 0) return false;
  for (auto& [p, e] : factorize(n))
    if (e > 1) return false;
  return true;
}

inline Int squarefree_part(const Int& n) {
  Int r = n < 0 ? -1 : 1;
  for (auto& [p, e] : factorize(n))
    if (e % 2) r *= p;
  return r;
}

// sign of p + q*sqrt(m), m > 0 not a square, exact
inline int sign_plus_sqrt(const Rat& p, const Rat& q, const Int& m) {
  int sp = sgn(p), sq = sgn(q);
  if (sq == 0) return sp;
  if (sp == 0) return sq;
  if (sp == sq) return sp;
  // opposite signs: compare p^2 vs q^2 m
  Rat lhs = p * p, rhs = q * q * Rat(m);
  if (lhs == rhs) return 0;
  return (lhs > rhs) ? sp : sq;
}

// floor of sqrt of a nonnegative rational, as Int
inline Int floor_sqrt(const Rat& x) {
  if (x < 0) throw std::invalid_argument("floor_sqrt of negative");
  Int num = x.get_num(), den = x.get_den();
  Int r = isqrt(num * den) / den;  // r <= sqrt(x) guaranteed? adjust
  while ((r + 1) * (r + 1) * den <= num) ++r;
  while (r > 0 && r * r * den > num) --r;
  return r;
}

// ceil of sqrt of a nonnegative rational
inline Int ceil_sqrt(const Rat& x) {
  Int r = floor_sqrt(x);
  if (Rat(r * r) == x) return r;
  return r + 1;
}

}  // namespace toruscl
