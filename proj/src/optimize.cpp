#include "fluxtri/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace fluxtri {

namespace {

using Point = std::vector<double>;

double distance(const Point& a, const Point& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

// Point along the line through the centroid: c + t (p - c).
Point along(const Point& c, const Point& p, double t) {
  Point out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out[i] = c[i] + t * (p[i] - c[i]);
  return out;
}

struct Simplex {
  std::vector<Point> vertices;
  std::vector<double> values;

  void sort() {
    std::vector<std::size_t> order(vertices.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<Point> v;
    std::vector<double> f;
    for (auto k : order) {
      v.push_back(vertices[k]);
      f.push_back(values[k]);
    }
    vertices = std::move(v);
    values = std::move(f);
  }

  double diameter() const {
    double d = 0.0;
    for (std::size_t k = 1; k < vertices.size(); ++k) d = std::max(d, distance(vertices[0], vertices[k]));
    return d;
  }
};

}  // namespace

MinimizeResult nelder_mead(const std::function<double(const Point&)>& f, Point x0,
                           const NelderMeadOptions& options) {
  const std::size_t n = x0.size();
  MinimizeResult result;
  result.x = std::move(x0);
  int evals = 0;
  auto eval = [&](const Point& p) {
    ++evals;
    return f(p);
  };
  result.value = eval(result.x);

  for (int round = 0; round <= options.restarts; ++round) {
    Simplex s;
    s.vertices.push_back(result.x);
    s.values.push_back(result.value);
    for (std::size_t i = 0; i < n; ++i) {
      Point p = result.x;
      p[i] += options.initial_step;
      s.vertices.push_back(p);
      s.values.push_back(eval(p));
    }
    bool converged = false;
    while (evals < options.max_evaluations) {
      s.sort();
      if (s.diameter() < options.diameter_tol) {
        converged = true;
        break;
      }
      Point centroid(n, 0.0);
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) centroid[i] += s.vertices[k][i] / static_cast<double>(n);
      }
      const Point& worst = s.vertices[n];
      const Point reflected = along(centroid, worst, -1.0);
      const double fr = eval(reflected);
      if (fr < s.values[0]) {
        const Point expanded = along(centroid, worst, -2.0);
        const double fe = eval(expanded);
        if (fe < fr) {
          s.vertices[n] = expanded;
          s.values[n] = fe;
        } else {
          s.vertices[n] = reflected;
          s.values[n] = fr;
        }
        continue;
      }
      if (fr < s.values[n - 1]) {
        s.vertices[n] = reflected;
        s.values[n] = fr;
        continue;
      }
      // Contraction: outside if the reflection improved on the worst vertex, inside otherwise.
      const bool outside = fr < s.values[n];
      const Point contracted = along(centroid, worst, outside ? -0.5 : 0.5);
      const double fc = eval(contracted);
      if (fc < (outside ? fr : s.values[n])) {
        s.vertices[n] = contracted;
        s.values[n] = fc;
        continue;
      }
      for (std::size_t k = 1; k <= n; ++k) {
        s.vertices[k] = along(s.vertices[0], s.vertices[k], 0.5);
        s.values[k] = eval(s.vertices[k]);
      }
    }
    s.sort();
    if (s.values[0] <= result.value) {
      result.x = s.vertices[0];
      result.value = s.values[0];
    }
    result.converged = converged;
    if (!converged) break;
  }
  result.evaluations = evals;
  return result;
}

ScalarMinimum golden_section(const std::function<double(double)>& f, double lo, double hi,
                             double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  const double x = 0.5 * (a + b);
  return {x, f(x)};
}

ScalarMinimum bracket_and_refine(const std::function<double(double)>& f, double lo, double hi,
                                 int grid_points, double tol) {
  if (grid_points < 3 || !(lo < hi)) {
    throw std::invalid_argument("bracket_and_refine: need lo < hi and at least 3 grid points");
  }
  const double step = (hi - lo) / (grid_points - 1);
  int best = 0;
  double best_value = f(lo);
  for (int k = 1; k < grid_points; ++k) {
    const double v = f(lo + k * step);
    if (v < best_value) {
      best_value = v;
      best = k;
    }
  }
  if (best == 0 || best == grid_points - 1) {
    throw NotFoundError("bracket_and_refine: no interior minimum in the window");
  }
  return golden_section(f, lo + (best - 1) * step, lo + (best + 1) * step, tol);
}

double bisect(const std::function<double(double)>& f, double lo, double hi, double tol) {
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo < 0.0) == (fhi < 0.0)) throw NotFoundError("bisect: no sign change in the interval");
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace fluxtri
