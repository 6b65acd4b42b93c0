#pragma once

#include <string>
#include <utility>
#include <vector>

#include "genus/embedding.hpp"
#include "genus/polynomial.hpp"
#include "genus/roots.hpp"

namespace genus {

// Where a root sits relative to the closed cone
//   { z : Re z <= 0 and |Re z| >= |Im z| / sqrt(3) }.
// Quadratics x^2 + bx + c whose roots lie in the cone have b^2 >= c, so a
// product of such quadratics (and nonpositive real roots) is log-concave;
// a kConeViolation root marks the quadratic factor that escapes that
// sufficient condition.
enum class ConeClass { kReal, kInCone, kConeViolation, kPositiveRealPart };

struct ConeResult {
  ConeClass cls = ConeClass::kReal;
  // Within 1e-9 of the cone boundary |re| = |im|/sqrt(3); reported kInCone.
  bool boundary = false;
};

ConeResult cone_classify(const ComplexRoot& z);
std::string cone_class_name(ConeClass c);

// Factorization of a real polynomial into its leading coefficient, linear
// factors (x - r), and monic irreducible quadratics x^2 + bx + c with
// b = -2 Re z, c = |z|^2 per conjugate pair. Multiplicities are expanded.
struct RealFactorization {
  BigInt leading;
  std::vector<double> linear_roots;
  std::vector<std::pair<double, double>> quadratics;
};

// Builds the factorization from find_roots output and verifies that expanding
// it reproduces p with relative coefficient error <= 1e-8 (measured against
// the largest |coefficient|); throws validation_error otherwise.
RealFactorization real_factorization(const Polynomial& p, const std::vector<ComplexRoot>& roots);

// For x^2 + bx + c with b >= 0, c > 0 and negative discriminant: true iff
// b^2 >= c, the exact condition for the quadratic itself to be log-concave.
// Precondition violations throw validation_error.
bool quadratic_is_log_concave(double b, double c);

struct ClassifiedRoot {
  ComplexRoot root;
  ConeResult cone;
  // |Im z| / sqrt(3): the bound Re z must clear for cone membership. 0 for
  // real roots.
  double im_over_sqrt3 = 0.0;
};

struct AnalysisReport {
  Polynomial polynomial;
  bool log_concave = false;
  int lc_witness = -1;
  bool internal_zeros = false;
  // Exact results (Sturm).
  bool real_rooted = false;
  int real_root_count = 0;
  // Numerical results.
  std::vector<ClassifiedRoot> roots;
  RealFactorization factorization;
  std::vector<ClassifiedRoot> cone_violations;
  // Quadratic factors with b^2 < c (not log-concave on their own).
  std::vector<std::pair<double, double>> non_lc_quadratics;
};

// Full analysis of a genus-polynomial candidate (nonnegative exact integer
// coefficients, not identically zero). Exact flags come from Sturm chains;
// roots, cone classes and the factorization are numerical. The exact and
// numerical sides are cross-checked (real-root counts must agree; a
// real-rooted polynomial must show no cone violations) and a disagreement
// throws internal_error.
AnalysisReport analyze(const Polynomial& p, const RootOptions& options = {});

// The genus polynomial of a distribution: coefficients = counts.
Polynomial genus_polynomial(const GenusDistribution& d);

// Display form, descending powers, no spaces: "39840x^4+23536x^3+2074x^2+84x+2".
std::string polynomial_display(const Polynomial& p);
// Ascending coefficient list: "2,84,2074,23536,39840".
std::string coefficient_list(const Polynomial& p);

}  // namespace genus
