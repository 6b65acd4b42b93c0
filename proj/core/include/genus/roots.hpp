#pragma once

#include <complex>

#include "genus/polynomial.hpp"

namespace genus {

// One root of a real polynomial. Conjugate pairs are stored once with im > 0;
// roots classified as real carry im == 0 exactly. multiplicity comes from the
// exact square-free decomposition, so a pair entry with multiplicity m stands
// for 2m roots. residual is |p(z)| / (|leading(p)| * max(1,|z|)^deg p) for
// the square-free factor the root belongs to.
struct ComplexRoot {
  double re = 0.0;
  double im = 0.0;
  double residual = 0.0;
  int multiplicity = 1;

  bool is_real() const { return im == 0.0; }
  std::complex<double> value() const { return {re, im}; }
};

struct RootOptions {
  // Maximum accepted relative residual.
  double tol = 1e-12;
  int max_sweeps = 1000;
};

// A root z with |im| within this of the real axis is treated as real.
double real_axis_threshold(double re, double im);

// All roots of p (degree >= 1) by Aberth-Ehrlich simultaneous iteration, run
// per square-free factor so every numerical root is simple. Deterministic:
// initial points sit on the Cauchy-bound circle with a fixed 0.4 rad angular
// offset and the sweep order is fixed, so results are bit-reproducible on a
// platform. Throws convergence_error (carrying achieved residuals) instead of
// returning unverified roots. Output is sorted by (re, im).
std::vector<ComplexRoot> find_roots(const Polynomial& p, const RootOptions& options = {});

}  // namespace genus
