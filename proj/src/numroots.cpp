#include "dedekind/numroots.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "dedekind/arith.hpp"

namespace dedekind::numroots {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr Int kBestEffortAbove = 60;

struct Split {
  double value;
  double error;
};

Split two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

Split two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

// p(z) and p'(z) by plain Horner, plus the running bound sum |a_j| |z|^j.
struct HornerResult {
  Complex value;
  Complex derivative;
  double magnitude;
};

HornerResult horner(const std::vector<double>& c, Complex z) {
  Complex v = c.back();
  Complex d = 0.0;
  double mag = std::abs(c.back());
  const double r = std::abs(z);
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    d = d * z + v;
    v = v * z + c[i];
    mag = mag * r + std::abs(c[i]);
  }
  return {v, d, mag};
}

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%#.17g", x);
  return buf;
}

}  // namespace

Complex eval_compensated(const std::vector<Int>& coeffs, Complex z) {
  if (coeffs.empty()) {
    return 0.0;
  }
  const double xr = z.real();
  const double xi = z.imag();
  double sr = static_cast<double>(coeffs.back());
  double si = 0.0;
  Complex corr = 0.0;
  for (std::size_t i = coeffs.size() - 1; i-- > 0;) {
    const auto p1 = two_prod(sr, xr);
    const auto p2 = two_prod(si, xi);
    const auto p3 = two_prod(sr, xi);
    const auto p4 = two_prod(si, xr);
    const auto re = two_sum(p1.value, -p2.value);
    const auto im = two_sum(p3.value, p4.value);
    const auto re2 = two_sum(re.value, static_cast<double>(coeffs[i]));
    const Complex err{p1.error - p2.error + re.error + re2.error,
                      p3.error + p4.error + im.error};
    corr = corr * z + err;
    sr = re2.value;
    si = im.value;
  }
  return Complex{sr, si} + corr;
}

ComplexRootSet find_roots(const InvPoly& p, double tol, int max_iter) {
  ComplexRootSet out;
  out.b = p.b();
  const auto dense = p.dense();
  const std::size_t n = dense.size() - 1;
  out.best_effort = p.b() > kBestEffortAbove;
  Int max_coeff = 0;
  for (const Int c : dense) {
    max_coeff = std::max(max_coeff, std::abs(c));
  }
  out.residual_scale = static_cast<double>(std::max<std::size_t>(n, 1)) * static_cast<double>(max_coeff);
  if (n == 0) {
    return out;
  }

  std::vector<double> c(dense.begin(), dense.end());
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  std::vector<Complex> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    z[k] = std::polar(1.0, 0.25 + golden * static_cast<double>(k));
  }
  std::vector<bool> done(n, false);
  std::vector<Complex> next(n);

  int iter = 0;
  for (; iter < max_iter; ++iter) {
    bool all_done = true;
    for (std::size_t i = 0; i < n; ++i) {
      next[i] = z[i];
      if (done[i]) {
        continue;
      }
      const auto h = horner(c, z[i]);
      // Backward-error stop: value already at rounding level.
      if (std::abs(h.value) <= 4.0 * static_cast<double>(n) * kEps * h.magnitude) {
        done[i] = true;
        continue;
      }
      const Complex w = h.value / h.derivative;
      Complex repulsion = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) {
          repulsion += 1.0 / (z[i] - z[j]);
        }
      }
      const Complex step = w / (1.0 - w * repulsion);
      next[i] = z[i] - step;
      if (std::abs(step) <= tol * std::max(1.0, std::abs(next[i]))) {
        done[i] = true;
      } else {
        all_done = false;
      }
    }
    z.swap(next);
    if (all_done) {
      ++iter;
      break;
    }
  }
  out.iterations = iter;

  // One Newton step with the compensated value; kept only if it helps.
  for (std::size_t i = 0; i < n; ++i) {
    const Complex value = eval_compensated(dense, z[i]);
    const Complex slope = horner(c, z[i]).derivative;
    if (slope == 0.0) {
      continue;
    }
    const Complex polished = z[i] - value / slope;
    if (std::abs(eval_compensated(dense, polished)) < std::abs(value)) {
      z[i] = polished;
    }
  }

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) {
    order[i] = i;
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const double aa = std::arg(z[a]);
    const double ab = std::arg(z[b]);
    if (aa != ab) {
      return aa < ab;
    }
    return std::abs(z[a]) < std::abs(z[b]);
  });
  for (const std::size_t i : order) {
    out.roots.push_back(z[i]);
    out.converged.push_back(done[i]);
    out.residuals.push_back(std::abs(eval_compensated(dense, z[i])));
  }
  return out;
}

Annulus annulus_bounds(Int b) {
  if (b < 2) {
    throw std::invalid_argument("annulus_bounds: b must be at least 2");
  }
  const double phi = static_cast<double>(arith::euler_phi(b));
  const double width = 8.0 * std::log(phi) / static_cast<double>(b * b - 1);
  return {std::exp(-width), std::exp(width)};
}

conjectures::Verdict annulus_check(const ComplexRootSet& r, double slack) {
  conjectures::Verdict v;
  v.statement = "annulus";
  v.b_min = v.b_max = r.b;
  const auto [inner, outer] = annulus_bounds(r.b);
  Int unconverged = 0;
  Int near_boundary = 0;
  for (std::size_t i = 0; i < r.roots.size(); ++i) {
    if (!r.converged[i]) {
      ++unconverged;
      continue;
    }
    ++v.cases_checked;
    const double mod = std::abs(r.roots[i]);
    if (!(mod > inner - slack && mod < outer + slack)) {
      v.counterexamples.push_back({r.b,
                                   {{"re", fmt17(r.roots[i].real())},
                                    {"im", fmt17(r.roots[i].imag())},
                                    {"modulus", fmt17(mod)},
                                    {"inner", fmt17(inner)},
                                    {"outer", fmt17(outer)}}});
    } else if (mod <= inner + slack || mod >= outer - slack) {
      ++near_boundary;
    }
  }
  v.notes.push_back("annulus: (" + fmt17(inner) + ", " + fmt17(outer) + ")");
  if (unconverged > 0) {
    v.notes.push_back("unconverged roots excluded: " + std::to_string(unconverged));
  }
  if (near_boundary > 0) {
    v.notes.push_back("roots within slack of the boundary: " + std::to_string(near_boundary));
  }
  return v;
}

std::vector<RootCluster> cluster_roots(const ComplexRootSet& r, double tol) {
  std::vector<RootCluster> out;
  std::vector<Complex> sums;
  for (const auto& z : r.roots) {
    bool placed = false;
    for (std::size_t k = 0; k < out.size(); ++k) {
      if (std::abs(z - out[k].center) <= tol) {
        sums[k] += z;
        ++out[k].count;
        placed = true;
        break;
      }
    }
    if (!placed) {
      out.push_back({z, 1});
      sums.push_back(z);
    }
  }
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k].center = sums[k] / static_cast<double>(out[k].count);
  }
  return out;
}

void emit_plot_data(const ComplexRootSet& r, PlotFormat format, std::ostream& out) {
  if (format == PlotFormat::csv) {
    out << "re,im,converged,residual\n";
    for (std::size_t i = 0; i < r.roots.size(); ++i) {
      out << fmt17(r.roots[i].real()) << ',' << fmt17(r.roots[i].imag()) << ','
          << (r.converged[i] ? "true" : "false") << ',' << fmt17(r.residuals[i]) << '\n';
    }
  } else {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < r.roots.size(); ++i) {
      rows.push_back({{"re", r.roots[i].real()},
                      {"im", r.roots[i].imag()},
                      {"converged", static_cast<bool>(r.converged[i])},
                      {"residual", r.residuals[i]}});
    }
    out << nlohmann::json{{"b", r.b}, {"best_effort", r.best_effort}, {"roots", rows}}.dump(2)
        << '\n';
  }
  if (!out) {
    throw std::runtime_error("emit_plot_data: write failed");
  }
}

}  // namespace dedekind::numroots
