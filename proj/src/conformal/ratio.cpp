#include "rectsaw/conformal/ratio.hpp"

#include "rectsaw/common/error.hpp"
#include "rectsaw/conformal/alpha.hpp"
#include "rectsaw/conformal/params.hpp"
#include "rectsaw/conformal/quadrature.hpp"

#include <boost/math/tools/roots.hpp>

#include <cmath>
#include <numbers>

namespace rectsaw {

namespace {

constexpr double kPi = std::numbers::pi;

void check_b(double b) {
  if (!(b > 0 && b <= 1))
    throw InvalidArgument("b must lie in (0, 1]");
}

double solve(const std::function<double(double)>& f, double lo, double hi) {
  const double flo = f(lo), fhi = f(hi);
  if (flo == 0)
    return lo;
  if (fhi == 0)
    return hi;
  if ((flo > 0) == (fhi > 0))
    throw NumericalFailure("no root in (0, 1): observed ratio outside the model's range");
  boost::uintmax_t iterations = 200;
  auto [a, b] = boost::math::tools::toms748_solve(
      f, lo, hi, flo, fhi, boost::math::tools::eps_tolerance<double>(48), iterations);
  return 0.5 * (a + b);
}

}  // namespace

HittingIntegrals hitting_integrals(double c, double b) {
  if (!(c > 0))
    throw InvalidArgument("alpha must exceed 1");
  check_b(b);
  const double alpha = 1 + c;
  const double e = 0.5 * (b - 1);

  // Short side, u = 1 + c sin^2 t; the factor 2 c^b is applied afterwards.
  auto short_side = [&](double t) {
    const double s = std::sin(t), co = std::cos(t);
    const double u = 1 + c * s * s;
    return std::pow(s * co, b) * std::pow((u + 1) * (alpha + u), e) *
           std::pow(u * u + alpha, -b);
  };
  // Long side, u = sin t, folded onto [0, pi/2].
  auto long_side = [&](double t) {
    const double s = std::sin(t), co = std::cos(t);
    return std::pow(s * s + alpha, -b) * std::pow(co, b) * std::pow(c * (2 + c) + co * co, e);
  };
  HittingIntegrals out;
  out.short_side = 2 * std::pow(c, b) * integrate(short_side, 0, kPi / 2).value;
  out.long_side = 2 * integrate(long_side, 0, kPi / 2).value;
  return out;
}

ShortOverLong ratio_exact_excess(double alpha_minus_one, double b) {
  const HittingIntegrals h = hitting_integrals(alpha_minus_one, b);
  return {h.short_side / h.long_side};
}

ShortOverLong ratio_exact(double alpha, double b) {
  if (!(alpha > 1))
    throw InvalidArgument("alpha must exceed 1");
  return ratio_exact_excess(alpha - 1, b);
}

const char* to_string(AsymptoticVariant v) {
  switch (v) {
    case AsymptoticVariant::Printed: return "printed";
    case AsymptoticVariant::Intro: return "intro";
    case AsymptoticVariant::Chain: return "chain";
  }
  return "?";
}

ShortOverLong ratio_asymptotic(double r, double b, AsymptoticVariant variant, bool leading_only) {
  if (!(b > 0 && b < 1))
    throw InvalidArgument("the asymptotic form needs 0 < b < 1");
  const double lambda = asymptotic_coeffs(b).Lambda;
  const double e = std::exp(-b * kPi * r / 2);
  const double lead = std::pow(2.0, 2 * b + 1) * lambda / b * e;
  if (leading_only)
    return {lead};
  double prefactor = std::pow(2.0, 2 * b + 1);
  if (variant == AsymptoticVariant::Intro)
    prefactor = std::pow(2.0, b + 1);
  else if (variant == AsymptoticVariant::Chain)
    prefactor = std::pow(2.0, 2 * b);
  const double correction = 1 + lambda * prefactor * e / (b * std::sin(kPi * b / 2)) +
                            4 * (b - 1 + 2 * lambda) * std::exp(-kPi * r / 2);
  return {lead * correction};
}

std::vector<VariantScore> audit_asymptotic_variants(double r, double b) {
  const double exact = ratio_exact_excess(alpha_minus_one(r), b).value;
  auto score = [&](AsymptoticVariant v, bool leading) {
    VariantScore s;
    s.variant = v;
    s.value = ratio_asymptotic(r, b, v, leading).value;
    s.relative_error = (s.value - exact) / exact;
    s.significant_digits =
        s.relative_error == 0 ? 16 : static_cast<int>(std::floor(-std::log10(std::abs(s.relative_error))));
    return s;
  };
  return {score(AsymptoticVariant::Printed, false), score(AsymptoticVariant::Intro, false),
          score(AsymptoticVariant::Chain, false), score(AsymptoticVariant::Printed, true)};
}

FitMethod parse_fit_method(const std::string& text) {
  if (text == "exact" || text == "exact-integral")
    return FitMethod::ExactIntegral;
  if (text == "asymptotic")
    return FitMethod::Asymptotic;
  throw InvalidArgument("unknown fit method '" + text + "' (expected exact or asymptotic)");
}

const char* to_string(FitMethod m) {
  return m == FitMethod::ExactIntegral ? "exact-integral" : "asymptotic";
}

FitResult fit_b(double r, LongOverShort observed, FitMethod method) {
  if (!(observed.value > 1))
    throw InvalidArgument("observed long/short ratio must exceed 1");
  if (!(r >= 1))
    throw InvalidArgument("aspect ratio must be at least 1");
  const double target = observed.inverted().value;
  double b = 0;
  if (method == FitMethod::ExactIntegral) {
    const double c = alpha_minus_one(r);
    b = solve([&](double x) { return ratio_exact_excess(c, x).value - target; }, 1e-3, 1.0);
  } else {
    // Bracket from the maximum of the truncated series upwards.
    double best = 0.01, peak = 0;
    for (int k = 1; k < 100; ++k) {
      const double x = k / 100.0;
      const double v = ratio_asymptotic(r, x).value;
      if (v > peak) {
        peak = v;
        best = x;
      }
    }
    b = solve([&](double x) { return ratio_asymptotic(r, x).value - target; }, best, 1 - 1e-9);
  }
  return {b, kappa_from_b(b)};
}

}  // namespace rectsaw
