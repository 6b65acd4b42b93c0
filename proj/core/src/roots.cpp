#include "genus/roots.hpp"

#include <algorithm>
#include <cmath>

namespace genus {

namespace {

using CLD = std::complex<long double>;

// Horner evaluation of p and p' (monic ascending coefficients).
std::pair<CLD, CLD> eval_with_derivative(const std::vector<long double>& c, CLD z) {
  CLD p(0.0L, 0.0L), dp(0.0L, 0.0L);
  for (std::size_t i = c.size(); i-- > 0;) {
    dp = dp * z + p;
    p = p * z + c[i];
  }
  return {p, dp};
}

long double relative_residual(const std::vector<long double>& monic, CLD z) {
  CLD p(0.0L, 0.0L);
  for (std::size_t i = monic.size(); i-- > 0;) p = p * z + monic[i];
  long double scale = std::max(1.0L, std::abs(z));
  long double pow = 1.0L;
  for (std::size_t i = 1; i < monic.size(); ++i) pow *= scale;
  return std::abs(p) / pow;
}

// Aberth-Ehrlich simultaneous iteration on a square-free monic polynomial.
// Deterministic: fixed initial circle (Cauchy bound, 0.4 rad offset), fixed
// in-place sweep order.
std::vector<CLD> aberth(const std::vector<long double>& monic, int max_sweeps) {
  const int deg = static_cast<int>(monic.size()) - 1;
  long double bound = 0.0L;
  for (int i = 0; i < deg; ++i) bound = std::max(bound, std::abs(monic[static_cast<std::size_t>(i)]));
  const long double radius = 1.0L + bound;

  std::vector<CLD> z(static_cast<std::size_t>(deg));
  const long double tau = 6.283185307179586476925L;
  for (int j = 0; j < deg; ++j) {
    long double angle = 0.4L + tau * static_cast<long double>(j) / static_cast<long double>(deg);
    z[static_cast<std::size_t>(j)] = CLD(radius * std::cos(angle), radius * std::sin(angle));
  }

  const long double eps = 1.0842021724855044e-19L;  // long double machine epsilon
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    long double worst_step = 0.0L;
    for (int j = 0; j < deg; ++j) {
      CLD& zj = z[static_cast<std::size_t>(j)];
      auto [p, dp] = eval_with_derivative(monic, zj);
      if (std::abs(p) == 0.0L) continue;
      if (std::abs(dp) == 0.0L) {
        // Derivative vanished at the iterate (not at a root): deterministic
        // nudge off the stationary point.
        zj += CLD(radius * 1e-6L, radius * 1e-6L);
        worst_step = std::max(worst_step, 1.0L);
        continue;
      }
      CLD newton = p / dp;
      CLD repel(0.0L, 0.0L);
      for (int k = 0; k < deg; ++k) {
        if (k == j) continue;
        CLD diff = zj - z[static_cast<std::size_t>(k)];
        if (std::abs(diff) == 0.0L) {
          diff = CLD(radius * eps * static_cast<long double>(j + 1), 0.0L);
        }
        repel += CLD(1.0L, 0.0L) / diff;
      }
      CLD den = CLD(1.0L, 0.0L) - newton * repel;
      CLD step = std::abs(den) == 0.0L ? newton : newton / den;
      zj -= step;
      worst_step = std::max(worst_step, std::abs(step) / std::max(1.0L, std::abs(zj)));
    }
    if (worst_step <= 16.0L * eps) break;
  }
  return z;
}

struct FactorRoots {
  std::vector<ComplexRoot> roots;
};

// Roots of one square-free factor, classified into real roots and conjugate
// pairs (stored once, im > 0).
FactorRoots roots_of_squarefree(const Polynomial& q, int multiplicity, const RootOptions& opt) {
  const int deg = q.degree();
  std::vector<long double> monic(static_cast<std::size_t>(deg) + 1);
  const long double lead = q.leading().convert_to<long double>();
  for (int i = 0; i <= deg; ++i) {
    monic[static_cast<std::size_t>(i)] = q.coeff(i).convert_to<long double>() / lead;
  }

  std::vector<CLD> z = deg == 1 ? std::vector<CLD>{CLD(-monic[0], 0.0L)}
                                : aberth(monic, opt.max_sweeps);

  std::vector<double> residuals;
  residuals.reserve(z.size());
  bool converged = true;
  for (CLD r : z) {
    double res = static_cast<double>(relative_residual(monic, r));
    residuals.push_back(res);
    if (!(res <= opt.tol)) converged = false;
  }
  if (!converged) {
    throw convergence_error("root finding did not reach the requested residual", residuals);
  }

  // Split real-axis roots from the rest.
  std::vector<CLD> complex_side;
  FactorRoots out;
  for (CLD r : z) {
    double re = static_cast<double>(r.real());
    double im = static_cast<double>(r.imag());
    if (std::abs(im) <= real_axis_threshold(re, im)) {
      ComplexRoot root;
      root.re = re;
      root.im = 0.0;
      root.multiplicity = multiplicity;
      root.residual = static_cast<double>(relative_residual(monic, CLD(r.real(), 0.0L)));
      out.roots.push_back(root);
    } else {
      complex_side.push_back(r);
    }
  }

  // Pair conjugates: match each upper root with the nearest mirror of a lower
  // root, then average the pair into a single im > 0 entry.
  std::vector<CLD> upper, lower;
  for (CLD r : complex_side) (r.imag() > 0 ? upper : lower).push_back(r);
  auto by_re = [](CLD a, CLD b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  };
  std::sort(upper.begin(), upper.end(), by_re);
  std::sort(lower.begin(), lower.end(), by_re);
  if (upper.size() != lower.size()) {
    throw convergence_error("roots did not form conjugate pairs", residuals);
  }
  for (CLD u : upper) {
    std::size_t best = 0;
    long double best_dist = 0.0L;
    for (std::size_t i = 0; i < lower.size(); ++i) {
      long double dist = std::abs(u - std::conj(lower[i]));
      if (i == 0 || dist < best_dist) {
        best = i;
        best_dist = dist;
      }
    }
    if (lower.empty() || best_dist > 1e-6L * std::max(1.0L, std::abs(u))) {
      throw convergence_error("roots did not form conjugate pairs", residuals);
    }
    CLD partner = lower[best];
    lower.erase(lower.begin() + static_cast<std::ptrdiff_t>(best));
    CLD avg((u.real() + partner.real()) / 2.0L, (u.imag() - partner.imag()) / 2.0L);
    ComplexRoot root;
    root.re = static_cast<double>(avg.real());
    root.im = static_cast<double>(avg.imag());
    root.multiplicity = multiplicity;
    root.residual = static_cast<double>(relative_residual(monic, avg));
    out.roots.push_back(root);
  }
  return out;
}

}  // namespace

double real_axis_threshold(double re, double im) {
  return 1e-9 * std::max(1.0, std::hypot(re, im));
}

std::vector<ComplexRoot> find_roots(const Polynomial& p, const RootOptions& options) {
  if (p.is_zero() || p.degree() < 1) {
    throw validation_error("root finding needs a polynomial of degree >= 1");
  }
  if (!(options.tol > 0)) throw validation_error("root tolerance must be positive");

  // One Aberth run per square-free factor: every numerical problem has only
  // simple roots, and multiplicities come from the exact decomposition.
  std::vector<ComplexRoot> all;
  for (const auto& [factor, multiplicity] : squarefree_decomposition(p)) {
    FactorRoots fr = roots_of_squarefree(factor, multiplicity, options);
    all.insert(all.end(), fr.roots.begin(), fr.roots.end());
  }
  std::sort(all.begin(), all.end(), [](const ComplexRoot& a, const ComplexRoot& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  });
  return all;
}

}  // namespace genus
