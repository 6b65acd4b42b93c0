#include "genus/polynomial.hpp"

#include <algorithm>

namespace genus {

namespace {

// Rational-coefficient working polynomials for gcd / division steps. Exact
// throughout; results are renormalized to primitive integer polynomials.
struct QPoly {
  std::vector<BigRat> c;  // ascending

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }

  void normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
};

QPoly to_q(const Polynomial& p) {
  QPoly q;
  q.c.reserve(p.coeffs.size());
  for (const BigInt& a : p.coeffs) q.c.emplace_back(a);
  return q;
}

QPoly q_derivative(const QPoly& p) {
  QPoly d;
  for (std::size_t k = 1; k < p.c.size(); ++k) d.c.push_back(p.c[k] * BigInt(k));
  d.normalize();
  return d;
}

QPoly q_sub(const QPoly& a, const QPoly& b) {
  QPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (std::size_t i = 0; i < r.c.size(); ++i) {
    BigRat x = i < a.c.size() ? a.c[i] : BigRat(0);
    BigRat y = i < b.c.size() ? b.c[i] : BigRat(0);
    r.c[i] = x - y;
  }
  r.normalize();
  return r;
}

// Long division a = q*b + r over the rationals.
std::pair<QPoly, QPoly> q_divmod(QPoly a, const QPoly& b) {
  if (b.is_zero()) throw internal_error("polynomial division by zero");
  QPoly q;
  if (a.degree() >= b.degree()) q.c.resize(a.degree() - b.degree() + 1);
  while (!a.is_zero() && a.degree() >= b.degree()) {
    int shift = a.degree() - b.degree();
    BigRat factor = a.c.back() / b.c.back();
    q.c[static_cast<std::size_t>(shift)] = factor;
    for (int i = 0; i <= b.degree(); ++i) {
      a.c[static_cast<std::size_t>(i + shift)] -= factor * b.c[static_cast<std::size_t>(i)];
    }
    a.normalize();
  }
  q.normalize();
  return {std::move(q), std::move(a)};
}

QPoly q_div_exact(const QPoly& a, const QPoly& b) {
  auto [q, r] = q_divmod(a, b);
  if (!r.is_zero()) throw internal_error("inexact polynomial division");
  return q;
}

// Primitive integer polynomial proportional to q, scaled by a positive
// rational only (sign preserved). Used for Sturm chain entries where the
// sign pattern matters.
Polynomial primitive_keep_sign(const QPoly& q) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  using boost::multiprecision::gcd;
  using boost::multiprecision::lcm;
  if (q.is_zero()) return {};
  BigInt den_lcm = 1;
  for (const BigRat& x : q.c) den_lcm = lcm(den_lcm, denominator(x));
  std::vector<BigInt> ints;
  ints.reserve(q.c.size());
  BigInt content = 0;
  for (const BigRat& x : q.c) {
    BigInt v = numerator(x) * (den_lcm / denominator(x));
    ints.push_back(v);
    content = gcd(content, v);
  }
  if (content == 0) return {};
  for (BigInt& v : ints) v /= content;  // content > 0 by gcd convention
  return Polynomial::from_coeffs(std::move(ints));
}

// Primitive with positive leading coefficient (sign irrelevant to caller).
Polynomial primitive_positive(const QPoly& q) {
  Polynomial p = primitive_keep_sign(q);
  if (!p.is_zero() && p.leading() < 0) {
    for (BigInt& v : p.coeffs) v = -v;
  }
  return p;
}

QPoly q_gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = q_divmod(std::move(a), b).second;
    // Content stripping after every remainder keeps coefficient sizes sane.
    Polynomial prim = primitive_keep_sign(r);
    a = std::move(b);
    b = to_q(prim);
  }
  return a;
}

int sign_of(const BigInt& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

int variations(const std::vector<int>& signs) {
  int count = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

}  // namespace

Polynomial Polynomial::from_coeffs(std::vector<BigInt> c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  return Polynomial{std::move(c)};
}

Polynomial Polynomial::from_ints(std::initializer_list<long long> c) {
  std::vector<BigInt> v;
  v.reserve(c.size());
  for (long long x : c) v.emplace_back(x);
  return from_coeffs(std::move(v));
}

const BigInt& Polynomial::leading() const {
  if (coeffs.empty()) throw validation_error("zero polynomial has no leading coefficient");
  return coeffs.back();
}

BigInt Polynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs.size())) return 0;
  return coeffs[static_cast<std::size_t>(k)];
}

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.coeffs.size() + b.coeffs.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
      c[i + j] += a.coeffs[i] * b.coeffs[j];
    }
  }
  return Polynomial::from_coeffs(std::move(c));
}

Polynomial derivative(const Polynomial& p) {
  std::vector<BigInt> c;
  for (std::size_t k = 1; k < p.coeffs.size(); ++k) c.push_back(p.coeffs[k] * BigInt(k));
  return Polynomial::from_coeffs(std::move(c));
}

LogConcavity is_log_concave(const Polynomial& p) {
  for (const BigInt& c : p.coeffs) {
    if (c < 0) throw validation_error("log-concavity check expects nonnegative coefficients");
  }
  for (int k = 1; k + 1 < static_cast<int>(p.coeffs.size()); ++k) {
    const auto& c = p.coeffs;
    std::size_t u = static_cast<std::size_t>(k);
    if (c[u] * c[u] < c[u - 1] * c[u + 1]) return {false, k};
  }
  return {true, -1};
}

bool has_internal_zeros(const Polynomial& p) {
  int lo = -1, hi = -1;
  for (int k = 0; k < static_cast<int>(p.coeffs.size()); ++k) {
    if (p.coeffs[static_cast<std::size_t>(k)] != 0) {
      if (lo < 0) lo = k;
      hi = k;
    }
  }
  for (int k = lo + 1; k < hi; ++k) {
    if (p.coeffs[static_cast<std::size_t>(k)] == 0) return true;
  }
  return false;
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.is_zero()) throw validation_error("zero polynomial has no square-free part");
  if (p.degree() == 0) return Polynomial::from_ints({1});
  QPoly f = to_q(p);
  QPoly g = q_gcd(f, q_derivative(f));
  return primitive_positive(q_div_exact(f, g));
}

std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p) {
  if (p.is_zero()) throw validation_error("zero polynomial has no square-free decomposition");
  std::vector<std::pair<Polynomial, int>> out;
  if (p.degree() == 0) return out;

  // Yun's algorithm over the rationals.
  QPoly f = to_q(p);
  QPoly fp = q_derivative(f);
  QPoly a = q_gcd(f, fp);
  QPoly b = q_div_exact(f, a);
  QPoly c = q_div_exact(fp, a);
  QPoly d = q_sub(c, q_derivative(b));
  for (int i = 1; b.degree() > 0; ++i) {
    // Note gcd(b, 0) = b, which peels off the final factor.
    Polynomial factor = primitive_positive(q_gcd(b, d));
    if (factor.is_zero()) throw internal_error("square-free decomposition lost a factor");
    if (factor.degree() > 0) out.emplace_back(factor, i);
    QPoly fq = to_q(factor);
    b = q_div_exact(b, fq);
    c = q_div_exact(d, fq);
    d = q_sub(c, q_derivative(b));
  }
  return out;
}

int real_root_count(const Polynomial& p) {
  if (p.is_zero()) throw validation_error("zero polynomial has no root count");
  if (p.degree() == 0) return 0;

  // Sturm chain on the square-free part: s0, s1 = s0', then negated
  // remainders, each stripped to a primitive integer polynomial by a positive
  // scale so the sign sequence is untouched.
  Polynomial sf = squarefree_part(p);
  std::vector<Polynomial> chain;
  chain.push_back(sf);
  chain.push_back(derivative(sf));
  while (chain.back().degree() > 0) {
    QPoly rem = q_divmod(to_q(chain[chain.size() - 2]), to_q(chain.back())).second;
    if (rem.is_zero()) {
      throw internal_error("square-free Sturm chain hit a zero remainder");
    }
    for (BigRat& x : rem.c) x = -x;
    chain.push_back(primitive_keep_sign(rem));
  }

  std::vector<int> at_minus_inf, at_plus_inf;
  for (const Polynomial& s : chain) {
    if (s.is_zero()) continue;
    int lead = sign_of(s.leading());
    at_plus_inf.push_back(lead);
    at_minus_inf.push_back(s.degree() % 2 == 0 ? lead : -lead);
  }
  return variations(at_minus_inf) - variations(at_plus_inf);
}

bool is_real_rooted(const Polynomial& p) {
  if (p.is_zero()) throw validation_error("zero polynomial is not classified");
  for (const auto& [factor, mult] : squarefree_decomposition(p)) {
    (void)mult;
    if (real_root_count(factor) != factor.degree()) return false;
  }
  return true;
}

}  // namespace genus
