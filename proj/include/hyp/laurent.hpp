#pragma once

// Exact arithmetic in Q[cosh, sinh^{+-1}] / (cosh^2 - sinh^2 - 1) and the
// operator D = -(1/sinh) d/drho acting on it.  A second engine carries
// terms r^a tau^b sinh^p cosh^e exp(-r^2/(4t)), tau = 1/(2t), for the odd-n
// heat kernel.

#include <array>
#include <cmath>
#include <map>
#include <sstream>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace hyp {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

class LaurentElement {
 public:
  using Key = std::pair<int, int>;  // (power of sinh, cosh parity)

  LaurentElement() = default;
  static LaurentElement constant(const Rational& c) {
    LaurentElement e;
    e.add(0, 0, c);
    return e;
  }
  static LaurentElement monomial(int sinh_pow, int cosh_pow = 0, const Rational& c = 1) {
    LaurentElement e;
    e.add_reduced(sinh_pow, cosh_pow, c);
    return e;
  }

  const std::map<Key, Rational>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  Rational coeff(int p, int e) const {
    auto it = t_.find({p, e});
    return it == t_.end() ? Rational(0) : it->second;
  }

  LaurentElement& operator+=(const LaurentElement& o) {
    for (const auto& [k, c] : o.t_) add(k.first, k.second, c);
    return *this;
  }
  LaurentElement& operator-=(const LaurentElement& o) {
    for (const auto& [k, c] : o.t_) add(k.first, k.second, -c);
    return *this;
  }
  friend LaurentElement operator+(LaurentElement a, const LaurentElement& b) { return a += b; }
  friend LaurentElement operator-(LaurentElement a, const LaurentElement& b) { return a -= b; }
  friend LaurentElement operator*(const LaurentElement& a, const LaurentElement& b) {
    LaurentElement r;
    for (const auto& [ka, ca] : a.t_)
      for (const auto& [kb, cb] : b.t_) r.add_reduced(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
  }
  friend LaurentElement operator*(const Rational& s, const LaurentElement& a) {
    LaurentElement r;
    if (s == 0) return r;
    for (const auto& [k, c] : a.t_) r.t_[k] = s * c;
    return r;
  }
  friend bool operator==(const LaurentElement& a, const LaurentElement& b) { return a.t_ == b.t_; }

  template <class Real>
  Real eval(const Real& rho) const {
    using std::cosh;
    using std::pow;
    using std::sinh;
    Real s = sinh(rho), ch = cosh(rho), acc = 0;
    for (const auto& [k, c] : t_) {
      Real term = static_cast<Real>(c) * pow(s, k.first);
      if (k.second) term *= ch;
      acc += term;
    }
    return acc;
  }
  double operator()(double rho) const { return eval<double>(rho); }

  std::string str() const {
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
      if (!first) os << " + ";
      first = false;
      os << it->second;
      if (it->first.second) os << "*cosh";
      if (it->first.first) os << "*sinh^" << it->first.first;
    }
    if (first) os << "0";
    return os.str();
  }

 private:
  void add(int p, int e, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = t_.try_emplace({p, e}, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) t_.erase(it);
    }
  }
  // cosh^e with e >= 2 folded through cosh^2 = 1 + sinh^2
  void add_reduced(int p, int e, const Rational& c) {
    if (e < 2) {
      add(p, e, c);
      return;
    }
    add_reduced(p, e - 2, c);
    add_reduced(p + 2, e - 2, c);
  }
  std::map<Key, Rational> t_;
};

// D = -(1/sinh) d/drho:
//   D sinh^p = -p sinh^{p-2} cosh,
//   D (sinh^p cosh) = -p sinh^{p-2} - (p+1) sinh^p.
inline LaurentElement laurent_derivative_op(const LaurentElement& e) {
  LaurentElement r;
  for (const auto& [k, c] : e.terms()) {
    int p = k.first;
    if (k.second == 0) {
      if (p != 0) r += LaurentElement::monomial(p - 2, 1, -p * c);
    } else {
      r += LaurentElement::monomial(p - 2, 0, -p * c);
      r += LaurentElement::monomial(p, 0, -(p + 1) * c);
    }
  }
  return r;
}

inline LaurentElement laurent_derivative_op(const LaurentElement& e, int times) {
  LaurentElement r = e;
  for (int i = 0; i < times; ++i) r = laurent_derivative_op(r);
  return r;
}

// Terms c r^a tau^b sinh^p cosh^e E with E = exp(-tau r^2 / 2).
class GaussLaurent {
 public:
  using Key = std::array<int, 4>;  // a, b, p, e

  static GaussLaurent gaussian() {
    GaussLaurent g;
    g.t_[{0, 0, 0, 0}] = 1;
    return g;
  }
  const std::map<Key, Rational>& terms() const { return t_; }

  // D applied once, using dE/dr = -tau r E.
  GaussLaurent derivative_op() const {
    GaussLaurent r;
    for (const auto& [k, c] : t_) {
      auto [a, b, p, e] = k;
      if (a != 0) r.add({a - 1, b, p, e}, a * c);
      if (e == 0) {
        if (p != 0) r.add({a, b, p - 1, 1}, p * c);
      } else {
        if (p != 0) r.add({a, b, p - 1, 0}, p * c);
        r.add({a, b, p + 1, 0}, (p + 1) * c);
      }
      r.add({a + 1, b + 1, p, e}, -c);
    }
    // every term above still lacks the factor -1/sinh
    GaussLaurent out;
    for (const auto& [k, c] : r.t_) out.add({k[0], k[1], k[2] - 1, k[3]}, -c);
    return out;
  }

  template <class Real>
  Real eval(const Real& r, const Real& tau) const {
    using std::cosh;
    using std::exp;
    using std::pow;
    using std::sinh;
    Real s = sinh(r), ch = cosh(r), acc = 0;
    for (const auto& [k, c] : t_) {
      Real term = static_cast<Real>(c) * pow(r, k[0]) * pow(tau, k[1]) * pow(s, k[2]);
      if (k[3]) term *= ch;
      acc += term;
    }
    return acc * exp(-tau * r * r / 2);
  }

 private:
  void add(const Key& k, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = t_.try_emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) t_.erase(it);
    }
  }
  std::map<Key, Rational> t_;
};

}  // namespace hyp
