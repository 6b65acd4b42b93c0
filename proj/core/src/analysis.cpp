#include "genus/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <sstream>

#include "genus/errors.hpp"

namespace genus {

namespace {

constexpr double kSqrt3 = 1.7320508075688772935;
constexpr double kBoundaryTol = 1e-9;

// Multiply an ascending long-double polynomial by (x - r) in place.
void mul_linear(std::vector<long double>& poly, long double r) {
  poly.push_back(0.0L);
  for (std::size_t i = poly.size(); i-- > 1;) {
    poly[i] = poly[i - 1] - r * poly[i];
  }
  poly[0] *= -r;
}

// Multiply by x^2 + bx + c in place.
void mul_quadratic(std::vector<long double>& poly, long double b, long double c) {
  std::size_t n = poly.size();
  poly.resize(n + 2, 0.0L);
  for (std::size_t i = n; i-- > 0;) {
    long double v = poly[i];
    poly[i] = 0.0L;
    poly[i] += c * v;
    poly[i + 1] += b * v;
    poly[i + 2] += v;
  }
}

}  // namespace

ConeResult cone_classify(const ComplexRoot& z) {
  ConeResult r;
  if (z.is_real()) {
    r.cls = ConeClass::kReal;
    return r;
  }
  if (z.re > 0) {
    r.cls = ConeClass::kPositiveRealPart;
    return r;
  }
  const double bound = std::abs(z.im) / kSqrt3;
  const double slack = std::abs(z.re) - bound;
  if (std::abs(slack) <= kBoundaryTol) {
    r.cls = ConeClass::kInCone;
    r.boundary = true;
  } else if (slack > 0) {
    r.cls = ConeClass::kInCone;
  } else {
    r.cls = ConeClass::kConeViolation;
  }
  return r;
}

std::string cone_class_name(ConeClass c) {
  switch (c) {
    case ConeClass::kReal:
      return "real";
    case ConeClass::kInCone:
      return "in-cone";
    case ConeClass::kConeViolation:
      return "cone-violation";
    case ConeClass::kPositiveRealPart:
      return "positive-real-part";
  }
  throw internal_error("unknown cone class");
}

RealFactorization real_factorization(const Polynomial& p, const std::vector<ComplexRoot>& roots) {
  if (p.is_zero()) throw validation_error("cannot factor the zero polynomial");
  RealFactorization f;
  f.leading = p.leading();

  int covered = 0;
  for (const ComplexRoot& z : roots) {
    if (z.multiplicity < 1) throw validation_error("root multiplicity must be positive");
    if (z.is_real()) {
      for (int m = 0; m < z.multiplicity; ++m) f.linear_roots.push_back(z.re);
      covered += z.multiplicity;
    } else {
      const double b = -2.0 * z.re;
      const double c = z.re * z.re + z.im * z.im;
      for (int m = 0; m < z.multiplicity; ++m) f.quadratics.emplace_back(b, c);
      covered += 2 * z.multiplicity;
    }
  }
  if (covered != p.degree()) {
    throw validation_error("roots do not account for the full degree");
  }

  // Expand and compare against p.
  std::vector<long double> expanded{1.0L};
  for (double r : f.linear_roots) mul_linear(expanded, static_cast<long double>(r));
  for (auto [b, c] : f.quadratics) {
    mul_quadratic(expanded, static_cast<long double>(b), static_cast<long double>(c));
  }
  const long double lead = f.leading.convert_to<long double>();
  long double max_coeff = 0.0L;
  for (int i = 0; i <= p.degree(); ++i) {
    max_coeff = std::max(max_coeff, std::abs(p.coeff(i).convert_to<long double>()));
  }
  for (int i = 0; i <= p.degree(); ++i) {
    long double want = p.coeff(i).convert_to<long double>();
    long double got = lead * expanded[static_cast<std::size_t>(i)];
    if (std::abs(got - want) > 1e-8L * max_coeff) {
      throw validation_error("factorization does not reproduce the polynomial");
    }
  }
  return f;
}

bool quadratic_is_log_concave(double b, double c) {
  if (!(b >= 0)) throw validation_error("quadratic coefficient b must be nonnegative");
  if (!(c > 0)) throw validation_error("quadratic coefficient c must be positive");
  if (!(b * b - 4.0 * c < 0)) {
    throw validation_error("quadratic must have a negative discriminant");
  }
  return b * b >= c;
}

AnalysisReport analyze(const Polynomial& p, const RootOptions& options) {
  if (p.is_zero()) throw validation_error("cannot analyze the zero polynomial");
  for (int i = 0; i <= p.degree(); ++i) {
    if (p.coeff(i) < 0) {
      throw validation_error("analysis expects nonnegative coefficients");
    }
  }

  AnalysisReport report;
  report.polynomial = p;

  LogConcavity lc = is_log_concave(p);
  report.log_concave = lc.log_concave;
  report.lc_witness = lc.witness;
  report.internal_zeros = has_internal_zeros(p);
  report.real_rooted = is_real_rooted(p);
  report.real_root_count = real_root_count(p);

  if (p.degree() == 0) {
    report.factorization.leading = p.leading();
    return report;
  }

  std::vector<ComplexRoot> raw = find_roots(p, options);
  int numeric_real = 0;
  for (const ComplexRoot& z : raw) {
    ClassifiedRoot cr;
    cr.root = z;
    cr.cone = cone_classify(z);
    cr.im_over_sqrt3 = z.is_real() ? 0.0 : std::abs(z.im) / kSqrt3;
    if (z.is_real()) ++numeric_real;
    if (cr.cone.cls == ConeClass::kConeViolation ||
        cr.cone.cls == ConeClass::kPositiveRealPart) {
      report.cone_violations.push_back(cr);
    }
    report.roots.push_back(cr);
  }
  report.factorization = real_factorization(p, raw);
  for (auto [b, c] : report.factorization.quadratics) {
    if (b < 0 || b * b < c) report.non_lc_quadratics.emplace_back(b, c);
  }

  // Cross-check the exact and numerical sides.
  if (numeric_real != report.real_root_count) {
    throw internal_error("numeric and exact real-root counts disagree");
  }
  if (report.real_rooted) {
    if (!report.cone_violations.empty() || !report.factorization.quadratics.empty()) {
      throw internal_error("real-rooted polynomial produced complex roots");
    }
    if (!report.log_concave) {
      throw internal_error("real-rooted polynomial failed the log-concavity check");
    }
  }
  return report;
}

Polynomial genus_polynomial(const GenusDistribution& d) {
  return Polynomial::from_coeffs(d.counts);
}

std::string polynomial_display(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const BigInt& c = p.coeff(k);
    if (c == 0) continue;
    std::string coeff = c.str();
    if (!first && c > 0) out << '+';
    if (k == 0) {
      out << coeff;
    } else {
      if (c == 1) {
        // coefficient suppressed
      } else if (c == -1) {
        out << '-';
      } else {
        out << coeff;
      }
      out << 'x';
      if (k > 1) out << '^' << k;
    }
    first = false;
  }
  return out.str();
}

std::string coefficient_list(const Polynomial& p) {
  std::ostringstream out;
  for (int i = 0; i <= p.degree(); ++i) {
    if (i > 0) out << ',';
    out << p.coeff(i).str();
  }
  return out.str();
}

}  // namespace genus
