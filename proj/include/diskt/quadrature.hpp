#pragma once

// Globally adaptive Gauss-Kronrod (7/15) quadrature in one and two dimensions.
// Integrands may return double or std::complex<double>. Panels are kept in a
// max-heap keyed by error; the final value is summed in panel-creation order so
// a given integrand and tolerance always produce the same bits.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <queue>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace diskt {

namespace gk15 {
// QUADPACK qk15 abscissae (positive half, descending) and weights.
inline constexpr std::array<double, 8> xk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> wk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for xk[1], xk[3], xk[5], xk[7].
inline constexpr std::array<double, 4> wg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

/// The 15 nodes on [-1, 1] in ascending order with Kronrod and Gauss weights
/// (Gauss weight 0 for Kronrod-only nodes).
struct Rule {
  std::array<double, 15> x;
  std::array<double, 15> k;
  std::array<double, 15> g;
};

inline const Rule& rule() {
  static const Rule r = [] {
    Rule out{};
    for (int i = 0; i < 7; ++i) {
      out.x[i] = -xk[i];
      out.x[14 - i] = xk[i];
      out.k[i] = out.k[14 - i] = wk[i];
      double g = (i % 2 == 1) ? wg[i / 2] : 0.0;
      out.g[i] = out.g[14 - i] = g;
    }
    out.x[7] = 0.0;
    out.k[7] = wk[7];
    out.g[7] = wg[3];
    return out;
  }();
  return r;
}
}  // namespace gk15

struct QuadOptions {
  double abs_tol = 1e-10;
  double rel_tol = 0.0;
  long max_evals = 2'000'000;
};

template <class T>
struct Integral {
  T value{};
  double error = 0.0;
  long evaluations = 0;
};

namespace detail {

template <class T>
double magnitude(const T& v) {
  return std::abs(v);
}

inline void check_options(const QuadOptions& opt) {
  if (!(opt.abs_tol > 0.0) && !(opt.rel_tol > 0.0))
    throw DomainError("quadrature: a positive tolerance is required");
  if (opt.max_evals <= 0) throw DomainError("quadrature: evaluation budget must be positive");
}

template <class T>
struct Panel1 {
  double a, b;
  T value;
  double error;
  std::size_t order;
};

template <class F, class T>
Panel1<T> gk_panel(F& f, double a, double b, std::size_t order) {
  const auto& r = gk15::rule();
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  T kron{}, gauss{};
  std::array<T, 15> fv{};
  for (int i = 0; i < 15; ++i) {
    fv[i] = f(c + h * r.x[i]);
    kron += r.k[i] * fv[i];
    gauss += r.g[i] * fv[i];
  }
  // QUADPACK error scaling: |K - G| is sharpened against the mean deviation.
  T mean = 0.5 * kron;
  double resasc = 0.0;
  for (int i = 0; i < 15; ++i) resasc += r.k[i] * magnitude(T(fv[i] - mean));
  resasc *= std::abs(h);
  double err = magnitude(T((kron - gauss) * h));
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  return {a, b, T(kron * h), err, order};
}

template <class P>
struct ByError {
  bool operator()(const P& x, const P& y) const {
    if (x.error != y.error) return x.error < y.error;
    return x.order > y.order;
  }
};

}  // namespace detail

/// Adaptive integral of f over [a, b]. Endpoints are never evaluated, so
/// integrable endpoint singularities are tolerated.
template <class F>
auto integrate(F f, double a, double b, const QuadOptions& opt = {}) {
  using T = std::decay_t<decltype(f(a))>;
  using Panel = detail::Panel1<T>;
  detail::check_options(opt);
  if (a == b) return Integral<T>{T{}, 0.0, 0};

  std::priority_queue<Panel, std::vector<Panel>, detail::ByError<Panel>> heap;
  std::vector<Panel> done;
  std::size_t order = 0;
  long evals = 15;
  Panel first = detail::gk_panel<F, T>(f, a, b, order++);
  T total = first.value;
  double err = first.error;
  heap.push(first);

  auto target = [&] { return std::max(opt.abs_tol, opt.rel_tol * detail::magnitude(total)); };
  while (err > target()) {
    if (evals + 30 > opt.max_evals)
      throw BudgetExceeded("integrate: evaluation budget exhausted", err, evals);
    Panel p = heap.top();
    heap.pop();
    double mid = 0.5 * (p.a + p.b);
    if (!(mid > std::min(p.a, p.b) && mid < std::max(p.a, p.b))) {
      // Interval too small to split; accept it as is.
      done.push_back(p);
      if (heap.empty()) break;
      continue;
    }
    Panel l = detail::gk_panel<F, T>(f, p.a, mid, order++);
    Panel r = detail::gk_panel<F, T>(f, mid, p.b, order++);
    evals += 30;
    total += (l.value + r.value) - p.value;
    err += (l.error + r.error) - p.error;
    heap.push(l);
    heap.push(r);
  }
  while (!heap.empty()) {
    done.push_back(heap.top());
    heap.pop();
  }
  std::sort(done.begin(), done.end(), [](const Panel& x, const Panel& y) { return x.order < y.order; });
  T sum{};
  double esum = 0.0;
  for (const auto& p : done) {
    sum += p.value;
    esum += p.error;
  }
  return Integral<T>{sum, esum, evals};
}

namespace detail {

template <class T>
struct Panel2 {
  double x0, x1, y0, y1;
  T value;
  double error;
  double err_x, err_y;
  std::size_t order;
};

template <class F, class T>
Panel2<T> gk_panel2(F& f, double x0, double x1, double y0, double y1, std::size_t order) {
  const auto& r = gk15::rule();
  const double cx = 0.5 * (x0 + x1), hx = 0.5 * (x1 - x0);
  const double cy = 0.5 * (y0 + y1), hy = 0.5 * (y1 - y0);
  T kk{}, gk{}, kg{};
  for (int i = 0; i < 15; ++i) {
    const double x = cx + hx * r.x[i];
    T row_k{}, row_g{};
    for (int j = 0; j < 15; ++j) {
      T v = f(x, cy + hy * r.x[j]);
      row_k += r.k[j] * v;
      row_g += r.g[j] * v;
    }
    kk += r.k[i] * row_k;
    gk += r.g[i] * row_k;
    kg += r.k[i] * row_g;
  }
  const double jac = hx * hy;
  double ex = magnitude(T((kk - gk) * jac));
  double ey = magnitude(T((kk - kg) * jac));
  return {x0, x1, y0, y1, T(kk * jac), ex + ey, ex, ey, order};
}

}  // namespace detail

/// Adaptive integral of f(x, y) over the rectangle [x0, x1] x [y0, y1].
/// Panels are bisected along the direction with the larger error indicator.
template <class F>
auto integrate2d(F f, double x0, double x1, double y0, double y1, const QuadOptions& opt = {}) {
  using T = std::decay_t<decltype(f(x0, y0))>;
  using Panel = detail::Panel2<T>;
  detail::check_options(opt);
  if (x0 == x1 || y0 == y1) return Integral<T>{T{}, 0.0, 0};

  std::priority_queue<Panel, std::vector<Panel>, detail::ByError<Panel>> heap;
  std::vector<Panel> done;
  std::size_t order = 0;
  long evals = 225;
  Panel first = detail::gk_panel2<F, T>(f, x0, x1, y0, y1, order++);
  T total = first.value;
  double err = first.error;
  heap.push(first);

  auto target = [&] { return std::max(opt.abs_tol, opt.rel_tol * detail::magnitude(total)); };
  while (err > target()) {
    if (evals + 450 > opt.max_evals)
      throw BudgetExceeded("integrate2d: evaluation budget exhausted", err, evals);
    Panel p = heap.top();
    heap.pop();
    Panel l, r;
    if (p.err_x >= p.err_y) {
      double m = 0.5 * (p.x0 + p.x1);
      l = detail::gk_panel2<F, T>(f, p.x0, m, p.y0, p.y1, order++);
      r = detail::gk_panel2<F, T>(f, m, p.x1, p.y0, p.y1, order++);
    } else {
      double m = 0.5 * (p.y0 + p.y1);
      l = detail::gk_panel2<F, T>(f, p.x0, p.x1, p.y0, m, order++);
      r = detail::gk_panel2<F, T>(f, p.x0, p.x1, m, p.y1, order++);
    }
    evals += 450;
    total += (l.value + r.value) - p.value;
    err += (l.error + r.error) - p.error;
    heap.push(l);
    heap.push(r);
  }
  while (!heap.empty()) {
    done.push_back(heap.top());
    heap.pop();
  }
  std::sort(done.begin(), done.end(), [](const Panel& x, const Panel& y) { return x.order < y.order; });
  T sum{};
  double esum = 0.0;
  for (const auto& p : done) {
    sum += p.value;
    esum += p.error;
  }
  return Integral<T>{sum, esum, evals};
}

}  // namespace diskt
