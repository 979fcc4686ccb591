#pragma once

// Gauss-Legendre panels, endpoint-substituted rules and barycentric
// interpolation on Gauss nodes.

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <vector>

#include "hyp/errors.hpp"

namespace hyp {

struct GaussRule {
  std::vector<double> x;   // nodes on [-1, 1], ascending
  std::vector<double> w;   // weights
  std::vector<double> bw;  // barycentric weights for interpolation
};

namespace detail {

inline GaussRule make_gauss_rule(int q) {
  GaussRule r;
  r.x.resize(q);
  r.w.resize(q);
  r.bw.resize(q);
  for (int i = 0; i < q; ++i) {
    // Tricomi initial guess, then Newton on P_q.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (q + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= q; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (q == 1) { p1 = x; p0 = 1.0; }
      dp = q * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) {
        // one more pass for the derivative at the converged node
        p0 = 1.0; p1 = x;
        for (int k = 2; k <= q; ++k) {
          double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        if (q == 1) { p1 = x; p0 = 1.0; }
        dp = q * (x * p1 - p0) / (x * x - 1.0);
        break;
      }
    }
    int j = q - 1 - i;
    r.x[j] = x;
    r.w[j] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  for (int j = 0; j < q; ++j) {
    double s = (j % 2 == 0) ? 1.0 : -1.0;
    r.bw[j] = s * std::sqrt((1.0 - r.x[j] * r.x[j]) * r.w[j]);
  }
  return r;
}

}  // namespace detail

// Cached q-point rule; references stay valid for the program lifetime.
inline const GaussRule& gauss_legendre(int q) {
  require(q >= 1 && q <= 512, "gauss_legendre: order out of range");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<GaussRule>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(q);
  if (it == cache.end())
    it = cache.emplace(q, std::make_unique<GaussRule>(detail::make_gauss_rule(q))).first;
  return *it->second;
}

// A node together with its exact offsets from the interval ends.
struct QNode {
  double x;
  double w;
  double from_lo;  // x - lo, exact where it matters
  double from_hi;  // hi - x
};

// Plain Gauss rule mapped to [a, b].
inline void append_gauss(std::vector<QNode>& out, double a, double b, int q) {
  const auto& g = gauss_legendre(q);
  double h = 0.5 * (b - a), c = 0.5 * (a + b);
  for (int i = 0; i < q; ++i) {
    double off = h * (1.0 + g.x[i]);
    out.push_back({c + h * g.x[i], h * g.w[i], off, h * (1.0 - g.x[i])});
  }
}

// Rule on [a, b] with x = a + L t^2; removes a (x - a)^mu weak singularity
// with mu = k/2 - 1, k >= 1 integer.
inline void append_left_sqrt(std::vector<QNode>& out, double a, double b, int q) {
  const auto& g = gauss_legendre(q);
  double L = b - a;
  for (int i = 0; i < q; ++i) {
    double t = 0.5 * (1.0 + g.x[i]);
    double off = L * t * t;
    out.push_back({a + off, 0.5 * g.w[i] * 2.0 * L * t, off, L * (1.0 - t * t)});
  }
}

// Mirror image: x = b - L t^2.
inline void append_right_sqrt(std::vector<QNode>& out, double a, double b, int q) {
  const auto& g = gauss_legendre(q);
  double L = b - a;
  for (int i = 0; i < q; ++i) {
    double t = 0.5 * (1.0 + g.x[i]);
    double off = L * t * t;
    out.push_back({b - off, 0.5 * g.w[i] * 2.0 * L * t, L * (1.0 - t * t), off});
  }
}

// Uniform split of [a, b] into panels no wider than hmax.  Offsets in the
// appended nodes refer to the whole interval [a, b].
inline void append_panels(std::vector<QNode>& out, double a, double b, double hmax, int q) {
  if (!(b > a)) return;
  int np = std::max(1, static_cast<int>(std::ceil((b - a) / hmax - 1e-12)));
  double h = (b - a) / np;
  for (int p = 0; p < np; ++p) {
    double lo = a + p * h, hi = (p + 1 == np) ? b : a + (p + 1) * h;
    std::size_t start = out.size();
    append_gauss(out, lo, hi, q);
    for (std::size_t i = start; i < out.size(); ++i) {
      if (p > 0) out[i].from_lo = out[i].x - a;
      if (p + 1 < np) out[i].from_hi = b - out[i].x;
    }
  }
}

// Panel breaks over [a, b] that include the given interior points and
// respect a maximum width.
inline std::vector<double> merge_breaks(double a, double b, std::vector<double> pts, double hmax) {
  pts.push_back(a);
  pts.push_back(b);
  std::vector<double> in;
  for (double p : pts)
    if (p >= a && p <= b) in.push_back(p);
  std::sort(in.begin(), in.end());
  std::vector<double> out;
  for (double p : in)
    if (out.empty() || p - out.back() > 1e-14 * std::max(1.0, std::abs(p))) out.push_back(p);
  if (out.back() < b) out.back() = b;
  std::vector<double> res;
  for (std::size_t i = 0; i + 1 < out.size(); ++i) {
    double lo = out[i], hi = out[i + 1];
    int np = std::max(1, static_cast<int>(std::ceil((hi - lo) / hmax - 1e-12)));
    for (int p = 0; p < np; ++p) res.push_back(lo + (hi - lo) * p / np);
  }
  res.push_back(out.back());
  return res;
}

// Barycentric interpolation on the Gauss nodes of a panel [a, b].
inline double bary_eval(const GaussRule& g, double a, double b, const double* vals, double x) {
  double t = (2.0 * x - a - b) / (b - a);
  double num = 0.0, den = 0.0;
  int q = static_cast<int>(g.x.size());
  for (int j = 0; j < q; ++j) {
    double d = t - g.x[j];
    if (d == 0.0) return vals[j];
    double c = g.bw[j] / d;
    num += c * vals[j];
    den += c;
  }
  return num / den;
}

// Lagrange weights for interpolation at x (row of the interpolation matrix).
inline void bary_row(const GaussRule& g, double a, double b, double x, double* row) {
  double t = (2.0 * x - a - b) / (b - a);
  int q = static_cast<int>(g.x.size());
  double den = 0.0;
  for (int j = 0; j < q; ++j) {
    double d = t - g.x[j];
    if (d == 0.0) {
      for (int k = 0; k < q; ++k) row[k] = (k == j) ? 1.0 : 0.0;
      return;
    }
    row[j] = g.bw[j] / d;
    den += row[j];
  }
  for (int j = 0; j < q; ++j) row[j] /= den;
}

// Spectral differentiation matrix on the reference nodes (row-major q x q).
inline std::vector<double> diff_matrix(const GaussRule& g) {
  int q = static_cast<int>(g.x.size());
  std::vector<double> D(q * q, 0.0);
  for (int i = 0; i < q; ++i) {
    double s = 0.0;
    for (int j = 0; j < q; ++j) {
      if (i == j) continue;
      double v = (g.bw[j] / g.bw[i]) / (g.x[i] - g.x[j]);
      D[i * q + j] = v;
      s += v;
    }
    D[i * q + i] = -s;
  }
  return D;
}

}  // namespace hyp
