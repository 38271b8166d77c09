#include "rectsaw/conformal/quadrature.hpp"

#include "rectsaw/common/error.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace rectsaw {

namespace {

constexpr int kOrder = 20;

struct Rule {
  std::array<double, kOrder> x{};
  std::array<double, kOrder> w{};
};

// Nodes and weights on [-1, 1] by Newton iteration on P_n.
Rule make_rule() {
  Rule r;
  for (int i = 0; i < kOrder; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (kOrder + 0.5));
    double dp = 0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1, p1 = x;
      for (int k = 2; k <= kOrder; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = kOrder * (x * p1 - p0) / (x * x - 1);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16)
        break;
    }
    r.x[i] = x;
    r.w[i] = 2 / ((1 - x * x) * dp * dp);
  }
  return r;
}

const Rule& rule() {
  static const Rule r = make_rule();
  return r;
}

double panel(const std::function<double(double)>& f, double a, double b) {
  const Rule& r = rule();
  const double h = 0.5 * (b - a), m = 0.5 * (a + b);
  double s = 0;
  for (int i = 0; i < kOrder; ++i)
    s += r.w[i] * f(m + h * r.x[i]);
  return s * h;
}

struct Adaptive {
  const std::function<double(double)>& f;
  double tol;
  int max_depth;
  QuadratureResult result;
  bool failed = false;

  void run(double a, double b, double whole, int depth) {
    const double m = 0.5 * (a + b);
    const double left = panel(f, a, m), right = panel(f, m, b);
    const double diff = std::abs(whole - (left + right));
    if (diff <= tol || depth >= max_depth || !(m > a && m < b)) {
      if (diff > tol)
        failed = true;
      result.value += left + right;
      result.error += diff;
      result.panels += 2;
      return;
    }
    run(a, m, left, depth + 1);
    run(m, b, right, depth + 1);
  }
};

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double rel_tol, int max_depth) {
  constexpr int kStart = 8;
  double estimate = 0;
  std::array<double, kStart> pieces{};
  for (int k = 0; k < kStart; ++k) {
    pieces[k] = panel(f, a + (b - a) * k / kStart, a + (b - a) * (k + 1) / kStart);
    estimate += pieces[k];
  }
  const double scale = std::abs(estimate) > 0 ? std::abs(estimate) : 1.0;
  Adaptive ad{f, rel_tol * scale, max_depth, {}, false};
  for (int k = 0; k < kStart; ++k)
    ad.run(a + (b - a) * k / kStart, a + (b - a) * (k + 1) / kStart, pieces[k], 0);
  if (ad.failed || !std::isfinite(ad.result.value))
    throw NumericalFailure("quadrature did not converge; achieved error estimate " +
                           std::to_string(ad.result.error / scale) + " relative");
  return ad.result;
}

}  // namespace rectsaw
