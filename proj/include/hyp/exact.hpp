#pragma once

// Exact checks of the sinh-derivative recursion and the conjugation
// identities, plus the finite-difference check of the ball-model identity.

#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hyp/errors.hpp"
#include "hyp/laurent.hpp"
#include "hyp/report.hpp"

namespace hyp {

// a_0..a_k with D^{2k}(1/sinh) = sum_i a_i sinh^{-(2i+2k+1)}, built from
//   a'_0 = (2l+2)!,
//   a'_i = (2i+2l+1)(2i+2l+2) a_i + (2i+2l-1)(2i+2l+1) a_{i-1},
//   a'_{l+1} = (4l+1)(4l+3) a_l.
inline std::vector<BigInt> sinh_recursion_coeffs(int k) {
  require(k >= 0, "sinh_recursion_coeffs: k must be >= 0");
  require(k <= 8, "sinh_recursion_coeffs: k > 8 is outside the supported range");
  std::vector<BigInt> a{1};
  for (int l = 0; l < k; ++l) {
    std::vector<BigInt> b(l + 2);
    BigInt f = 1;
    for (int j = 2; j <= 2 * l + 2; ++j) f *= j;
    b[0] = f;
    for (int i = 1; i <= l; ++i)
      b[i] = BigInt((2 * i + 2 * l + 1) * (2 * i + 2 * l + 2)) * a[i] + BigInt((2 * i + 2 * l - 1) * (2 * i + 2 * l + 1)) * a[i - 1];
    b[l + 1] = BigInt((4 * l + 1) * (4 * l + 3)) * a[l];
    a = std::move(b);
  }
  return a;
}

inline BigInt factorial(int m) {
  BigInt f = 1;
  for (int j = 2; j <= m; ++j) f *= j;
  return f;
}

// Expands D^{2k}(1/sinh) exactly and compares with the recursion.
inline Report verify_sinh_recursion(int k_max) {
  require(k_max >= 0 && k_max <= 8, "verify_sinh_recursion: k_max must lie in [0, 8]");
  Report rep;
  LaurentElement e = LaurentElement::monomial(-1);
  for (int k = 0; k <= k_max; ++k) {
    if (k > 0) e = laurent_derivative_op(e, 2);
    auto a = sinh_recursion_coeffs(k);
    LaurentElement expect;
    for (std::size_t i = 0; i < a.size(); ++i)
      expect += LaurentElement::monomial(-(2 * static_cast<int>(i) + 2 * k + 1), 0, Rational(a[i]));
    bool same = (e == expect);
    bool positive = true;
    for (const auto& c : a) positive = positive && c > 0;
    bool a0 = a[0] == factorial(2 * k);
    std::ostringstream id;
    id << "sinh_recursion.k" << k;
    std::ostringstream note;
    note << "a =";
    for (const auto& c : a) note << ' ' << c;
    if (!same) note << " expansion " << e.str();
    rep.add(flag_row(id.str() + ".expansion", "sinh-derivative-recursion", same, 0, 0, note.str()));
    rep.add(flag_row(id.str() + ".a0", "sinh-derivative-recursion", a0 && positive, static_cast<double>(a[0]),
                     static_cast<double>(factorial(2 * k))));
  }
  return rep;
}

struct ExactResult {
  Rational lhs, rhs;
  bool equal() const { return lhs == rhs; }
};

// x1^{n/2+k} Delta^k (x1^{k-n/2} x1^m)  vs  prod_i [Delta_H + (n-2i)(n+2i-2)/4] x1^m
inline ExactResult monomial_conjugation_check(const Rational& n, int k, int m) {
  require(k >= 1 && m >= 0, "monomial_conjugation_check: need k >= 1, m >= 0");
  Rational s = Rational(k) - n / 2 + m;
  Rational lhs = 1;
  for (int j = 0; j < k; ++j) lhs *= (s - 2 * j) * (s - 2 * j - 1);
  Rational dh = Rational(m) * (Rational(m) - n + 1);
  Rational rhs = 1;
  for (int i = 1; i <= k; ++i) rhs *= dh + (n - 2 * i) * (n + 2 * i - 2) / 4;
  return {lhs, rhs};
}

// x1^{alpha+2} Delta(x1^{-alpha} x1^m)  vs  [Delta_H + alpha(alpha+1)] x1^m + (n-2-2 alpha) x1 d/dx1 x1^m
inline ExactResult single_power_conjugation_check(const Rational& alpha, int m, const Rational& n) {
  require(m >= 0, "single_power_conjugation_check: m must be >= 0");
  Rational e = Rational(m) - alpha;
  Rational lhs = e * (e - 1);
  Rational rhs = Rational(m) * (Rational(m) - n + 1) + alpha * (alpha + 1) + (n - 2 - 2 * alpha) * m;
  return {lhs, rhs};
}

// Middle form of the same identity: x1^2 Delta f - 2 alpha x1 f' + alpha(alpha+1) f.
inline Rational single_power_conjugation_middle(const Rational& alpha, int m) {
  return Rational(m) * (m - 1) - 2 * alpha * m + alpha * (alpha + 1);
}

inline std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

inline Report exact_sweep(int n_lo = 3, int n_hi = 12, int m_max = 6) {
  Report rep;
  int checked = 0, failed = 0;
  std::string first_fail;
  for (int n = n_lo; n <= n_hi; ++n)
    for (int k = 1; 2 * k < n; ++k)
      for (int m = 0; m <= m_max; ++m) {
        auto r = monomial_conjugation_check(Rational(n), k, m);
        ++checked;
        if (!r.equal()) {
          ++failed;
          if (first_fail.empty())
            first_fail = "n=" + std::to_string(n) + " k=" + std::to_string(k) + " m=" + std::to_string(m) + " lhs=" +
                         rational_str(r.lhs) + " rhs=" + rational_str(r.rhs);
        }
      }
  rep.add(flag_row("conjugation.monomial_sweep", "half-space-gjms-conjugation", failed == 0, checked, checked - failed,
                   failed ? first_fail : std::to_string(checked) + " triples equal"));
  return rep;
}

// ---------------------------------------------------------------------
// Ball-model identity, checked pointwise.

// Sparse multivariate polynomial with double coefficients.
class Poly {
 public:
  using Mono = std::vector<int>;
  explicit Poly(int n) : n_(n) {}
  static Poly constant(int n, double c) {
    Poly p(n);
    p.add(Mono(n, 0), c);
    return p;
  }
  static Poly var(int n, int i) {
    Poly p(n);
    Mono m(n, 0);
    m[i] = 1;
    p.add(m, 1.0);
    return p;
  }
  int dim() const { return n_; }
  void add(const Mono& m, double c) {
    if (c == 0.0) return;
    t_[m] += c;
  }
  Poly& operator+=(const Poly& o) {
    for (const auto& [m, c] : o.t_) add(m, c);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator*(double s, const Poly& a) {
    Poly r(a.n_);
    for (const auto& [m, c] : a.t_) r.add(m, s * c);
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r(a.n_);
    for (const auto& [ma, ca] : a.t_)
      for (const auto& [mb, cb] : b.t_) {
        Mono m(a.n_);
        for (int i = 0; i < a.n_; ++i) m[i] = ma[i] + mb[i];
        r.add(m, ca * cb);
      }
    return r;
  }
  Poly d(int i) const {
    Poly r(n_);
    for (const auto& [m, c] : t_)
      if (m[i] > 0) {
        Mono mm = m;
        --mm[i];
        r.add(mm, c * m[i]);
      }
    return r;
  }
  Poly laplacian() const {
    Poly r(n_);
    for (int i = 0; i < n_; ++i) r += d(i).d(i);
    return r;
  }
  // x . grad
  Poly euler() const {
    Poly r(n_);
    for (const auto& [m, c] : t_) {
      int deg = 0;
      for (int e : m) deg += e;
      r.add(m, c * deg);
    }
    return r;
  }
  double operator()(const std::vector<double>& x) const {
    double s = 0.0;
    for (const auto& [m, c] : t_) {
      double v = c;
      for (int i = 0; i < n_; ++i)
        for (int e = 0; e < m[i]; ++e) v *= x[i];
      s += v;
    }
    return s;
  }

 private:
  int n_;
  std::map<Mono, double> t_;
};

// Delta_H f = ((1-|x|^2)/2)^2 Delta f + (n-2) ((1-|x|^2)/2) x.grad f
inline Poly hyperbolic_laplacian(const Poly& f) {
  int n = f.dim();
  Poly w = Poly::constant(n, 0.5);
  for (int i = 0; i < n; ++i) w += (-0.5) * (Poly::var(n, i) * Poly::var(n, i));
  return (w * w) * f.laplacian() + double(n - 2) * (w * f.euler());
}

// P_k f = prod_{i=1}^k (P_1 + i(i-1)) f, P_1 = -Delta_H - n(n-2)/4.
inline Poly gjms_apply(const Poly& f, int k) {
  int n = f.dim();
  Poly g = f;
  for (int i = 1; i <= k; ++i) {
    Poly h = (-1.0) * hyperbolic_laplacian(g);
    h += (-(n * (n - 2.0)) / 4.0 + i * (i - 1.0)) * g;
    g = h;
  }
  return g;
}

namespace detail {

// 8th-order central second difference along each axis, summed.
inline double fd_laplacian(const std::function<double(const std::vector<double>&)>& f, std::vector<double> x,
                           double h) {
  static const double c[5] = {-205.0 / 72.0, 8.0 / 5.0, -1.0 / 5.0, 8.0 / 315.0, -1.0 / 560.0};
  double s = c[0] * x.size() * f(x);
  for (std::size_t i = 0; i < x.size(); ++i) {
    double xi = x[i];
    for (int j = 1; j <= 4; ++j) {
      x[i] = xi + j * h;
      double fp = f(x);
      x[i] = xi - j * h;
      double fm = f(x);
      s += c[j] * (fp + fm);
    }
    x[i] = xi;
  }
  return s / (h * h);
}

inline double fd_poly_laplacian_k(const std::function<double(const std::vector<double>&)>& f,
                                  const std::vector<double>& x, int k, double h) {
  if (k == 0) return f(x);
  std::function<double(const std::vector<double>&)> inner = [&](const std::vector<double>& y) {
    return fd_poly_laplacian_k(f, y, k - 1, h);
  };
  return fd_laplacian(inner, x, h);
}

}  // namespace detail

struct PointCheck {
  std::vector<double> x;
  double lhs, rhs;
};

// ((1-|x|^2)/2)^{k+n/2} (-Delta)^k [((1-|x|^2)/2)^{k-n/2} f] against P_k f at
// random interior points (and the origin first).
inline std::vector<PointCheck> ball_conjugation_numeric_check(int k, const Poly& f, int points, unsigned seed,
                                                              double h = 1e-2, double radius = 0.6) {
  int n = f.dim();
  require(k >= 1 && 2 * k < n, "ball_conjugation_numeric_check: need 1 <= k < n/2");
  require(n <= 5, "ball_conjugation_numeric_check: n <= 5");
  Poly pk = gjms_apply(f, k);
  auto weight = [](const std::vector<double>& x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return 0.5 * (1.0 - s);
  };
  std::function<double(const std::vector<double>&)> g = [&](const std::vector<double>& x) {
    return std::pow(weight(x), k - 0.5 * n) * f(x);
  };
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  std::uniform_real_distribution<double> ud;
  std::vector<PointCheck> out;
  for (int p = 0; p < points; ++p) {
    std::vector<double> x(n, 0.0);
    if (p > 0) {
      double s = 0.0;
      for (double& v : x) {
        v = nd(rng);
        s += v * v;
      }
      double r = radius * std::pow(ud(rng), 1.0 / n);
      for (double& v : x) v *= r / std::sqrt(s);
    }
    double lap = detail::fd_poly_laplacian_k(g, x, k, h);
    double lhs = std::pow(weight(x), k + 0.5 * n) * ((k % 2) ? -lap : lap);
    out.push_back({x, lhs, pk(x)});
  }
  return out;
}

}  // namespace hyp
