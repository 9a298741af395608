#pragma once

#include <complex>
#include <ostream>
#include <vector>

#include "dedekind/conjectures.hpp"
#include "dedekind/invpoly.hpp"

namespace dedekind::numroots {

using Complex = std::complex<double>;

struct ComplexRootSet {
  Int b = 0;
  std::vector<Complex> roots;     ///< sorted by argument, then modulus
  std::vector<double> residuals;  ///< |f_b(root)|, compensated evaluation
  std::vector<bool> converged;
  bool best_effort = false;  ///< degree large enough that accuracy is not promised
  int iterations = 0;
  /// degree * max |coefficient|, the scale residuals are judged against.
  double residual_scale = 1.0;
};

/// Roots of f_b by Aberth-Ehrlich iteration on the dense coefficients.
/// Roots that fail to converge within max_iter sweeps are flagged, not thrown.
ComplexRootSet find_roots(const InvPoly& p, double tol = 1e-12, int max_iter = 1000);

/// p(z) with an error-free-transformation correction term.
Complex eval_compensated(const std::vector<Int>& coeffs, Complex z);

struct Annulus {
  double inner;
  double outer;
};

/// exp(-8 log phi(b) / (b^2 - 1)) < |x| < exp(8 log phi(b) / (b^2 - 1)).
Annulus annulus_bounds(Int b);

/// Every converged root must lie strictly inside the annulus, up to `slack`.
/// Unconverged roots are left out and listed in the notes.
conjectures::Verdict annulus_check(const ComplexRootSet& r, double slack = 1e-9);

struct RootCluster {
  Complex center;
  int count;
};

/// Groups roots closer than tol to a cluster's first member.
std::vector<RootCluster> cluster_roots(const ComplexRootSet& r, double tol = 1e-6);

enum class PlotFormat { csv, json };

/// CSV header "re,im,converged,residual", 17 significant digits per number.
void emit_plot_data(const ComplexRootSet& r, PlotFormat format, std::ostream& out);

}  // namespace dedekind::numroots
