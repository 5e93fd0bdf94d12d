#ifndef AHE_SERIES_HPP
#define AHE_SERIES_HPP

#include <cmath>
#include <cstddef>
#include <vector>

#include "ahe/errors.hpp"

namespace ahe {

// Dense truncated power series sum c[k] x^k, used for the boundary (u = 1/r)
// expansions that feed the Fefferman-Graham coefficient extraction and the
// quadrature tail bounds.  Length fixes the truncation order.
class PowerSeries {
 public:
  PowerSeries() = default;
  explicit PowerSeries(std::size_t n) : c_(n, 0.0) {}
  explicit PowerSeries(std::vector<double> c) : c_(std::move(c)) {}

  static PowerSeries constant(double v, std::size_t n) {
    PowerSeries s(n);
    if (n > 0) s.c_[0] = v;
    return s;
  }
  static PowerSeries identity(std::size_t n) {
    PowerSeries s(n);
    if (n > 1) s.c_[1] = 1.0;
    return s;
  }

  std::size_t size() const { return c_.size(); }
  double operator[](std::size_t k) const { return k < c_.size() ? c_[k] : 0.0; }
  double& at(std::size_t k) { return c_[k]; }
  const std::vector<double>& coeffs() const { return c_; }

  double eval(double x) const {
    double r = 0.0;
    for (std::size_t k = c_.size(); k-- > 0;) r = r * x + c_[k];
    return r;
  }

  PowerSeries truncated(std::size_t n) const {
    PowerSeries r(n);
    for (std::size_t k = 0; k < n && k < c_.size(); ++k) r.c_[k] = c_[k];
    return r;
  }

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries r(std::max(a.size(), b.size()));
    for (std::size_t k = 0; k < r.size(); ++k) r.c_[k] = a[k] + b[k];
    return r;
  }
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries r(std::max(a.size(), b.size()));
    for (std::size_t k = 0; k < r.size(); ++k) r.c_[k] = a[k] - b[k];
    return r;
  }
  friend PowerSeries operator*(const PowerSeries& a, double s) {
    PowerSeries r = a;
    for (auto& v : r.c_) v *= s;
    return r;
  }
  friend PowerSeries operator*(double s, const PowerSeries& a) { return a * s; }
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    std::size_t n = std::max(a.size(), b.size());
    PowerSeries r(n);
    for (std::size_t i = 0; i < n && i < a.size(); ++i) {
      if (a.c_[i] == 0.0) continue;
      for (std::size_t j = 0; i + j < n && j < b.size(); ++j)
        r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
  }

  // 1/this; requires nonzero constant term.
  PowerSeries inverse() const {
    if (c_.empty() || c_[0] == 0.0)
      throw numerical_error("series inverse needs nonzero constant term");
    PowerSeries r(size());
    r.c_[0] = 1.0 / c_[0];
    for (std::size_t k = 1; k < size(); ++k) {
      double s = 0.0;
      for (std::size_t j = 1; j <= k; ++j) s += (*this)[j] * r.c_[k - j];
      r.c_[k] = -s / c_[0];
    }
    return r;
  }

  // (this)^(-1/2); requires positive constant term.
  PowerSeries inv_sqrt() const {
    if (c_.empty() || c_[0] <= 0.0)
      throw numerical_error("series inv_sqrt needs positive constant term");
    // w with w^2 * this = 1, coefficient recurrence from (w^2 f)_k = delta_k0.
    PowerSeries w(size());
    w.c_[0] = 1.0 / std::sqrt(c_[0]);
    for (std::size_t k = 1; k < size(); ++k) {
      // sum_{i+j+l=k} w_i w_j f_l = 0, isolate the two terms with w_k.
      double s = 0.0;
      for (std::size_t i = 0; i <= k; ++i)
        for (std::size_t j = 0; i + j <= k; ++j) {
          std::size_t l = k - i - j;
          if ((i == k && j == 0 && l == 0) || (j == k && i == 0 && l == 0)) continue;
          s += w[i] * w[j] * (*this)[l];
        }
      w.c_[k] = -s / (2.0 * w.c_[0] * c_[0]);
    }
    return w;
  }

  PowerSeries exp_series() const {
    // requires zero constant term
    if (!c_.empty() && c_[0] != 0.0)
      throw numerical_error("series exp needs zero constant term");
    PowerSeries e(size());
    if (size() == 0) return e;
    e.c_[0] = 1.0;
    // e' = f' e  =>  (k+1) e_{k+1} = sum_{j} (j+1) f_{j+1} e_{k-j}
    for (std::size_t k = 0; k + 1 < size(); ++k) {
      double s = 0.0;
      for (std::size_t j = 0; j <= k; ++j) s += (j + 1) * (*this)[j + 1] * e[k - j];
      e.c_[k + 1] = s / (k + 1);
    }
    return e;
  }

  // Term-by-term antiderivative with zero constant term.
  PowerSeries integrate() const {
    PowerSeries r(size() + 1);
    for (std::size_t k = 0; k < size(); ++k) r.c_[k + 1] = c_[k] / (k + 1);
    return r;
  }

  PowerSeries derivative() const {
    if (size() <= 1) return PowerSeries(1);
    PowerSeries r(size() - 1);
    for (std::size_t k = 1; k < size(); ++k) r.c_[k - 1] = c_[k] * k;
    return r;
  }

  // Composition this(g(x)) for g with zero constant term.
  PowerSeries compose(const PowerSeries& g) const {
    if (g.size() > 0 && g[0] != 0.0)
      throw numerical_error("series composition needs zero constant inner term");
    std::size_t n = std::max(size(), g.size());
    PowerSeries r = PowerSeries::constant(0.0, n);
    PowerSeries gp = PowerSeries::constant(1.0, n);
    for (std::size_t k = 0; k < size(); ++k) {
      r = r + gp * c_[k];
      gp = gp * g;
    }
    return r;
  }

  // Reversion: given y = f(x) with f(0)=0, f'(0) != 0, return x as series in y.
  PowerSeries revert() const {
    if (size() < 2 || c_[0] != 0.0 || c_[1] == 0.0)
      throw numerical_error("series reversion needs f(0)=0, f'(0)!=0");
    std::size_t n = size();
    PowerSeries x(n);
    x.c_[1] = 1.0 / c_[1];
    // Newton-style iteration on coefficients: match f(x(y)) = y order by order.
    for (std::size_t order = 2; order < n; ++order) {
      PowerSeries fx = this->compose(x);
      double err = fx[order];
      x.c_[order] -= err / c_[1];
    }
    return x;
  }

 private:
  std::vector<double> c_;
};

}  // namespace ahe

#endif
