#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "genus/bigint.hpp"
#include "genus/errors.hpp"

namespace genus {

// Dense univariate polynomial with exact integer coefficients, ascending
// powers. Zero polynomial = empty coefficient vector; otherwise the leading
// coefficient is nonzero.
struct Polynomial {
  std::vector<BigInt> coeffs;

  static Polynomial from_coeffs(std::vector<BigInt> c);
  static Polynomial from_ints(std::initializer_list<long long> c);

  bool is_zero() const { return coeffs.empty(); }
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  const BigInt& leading() const;
  // Coefficient of x^k; zero outside the stored range.
  BigInt coeff(int k) const;

  bool operator==(const Polynomial&) const = default;
};

Polynomial multiply(const Polynomial& a, const Polynomial& b);
Polynomial derivative(const Polynomial& p);

struct LogConcavity {
  bool log_concave = true;
  // Smallest k with c_k^2 < c_{k-1} * c_{k+1}, or -1 when log-concave.
  int witness = -1;
};

// Exact check of c_k^2 >= c_{k-1} c_{k+1} for all internal k. Requires all
// coefficients nonnegative (throws validation_error otherwise). Polynomials
// of degree <= 1 are trivially log-concave.
LogConcavity is_log_concave(const Polynomial& p);

// True iff some zero coefficient lies strictly between the lowest and highest
// nonzero coefficients.
bool has_internal_zeros(const Polynomial& p);

// Yun square-free decomposition: p = content * prod q_i^i with the q_i
// primitive, square-free, pairwise coprime, positive leading coefficient.
// Returns the (q_i, i) pairs with deg q_i >= 1. Exact. p must be nonzero.
std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p);

// p / gcd(p, p'): same distinct roots, all simple. Exact, primitive, positive
// leading coefficient. p must be nonzero.
Polynomial squarefree_part(const Polynomial& p);

// Number of distinct real roots, via a Sturm chain over exact rationals on
// the square-free part (content stripped after every remainder step). p must
// be nonzero.
int real_root_count(const Polynomial& p);

// True iff every root of p is real, i.e. every square-free factor q_i has
// exactly deg q_i distinct real roots. Exact.
bool is_real_rooted(const Polynomial& p);

}  // namespace genus
