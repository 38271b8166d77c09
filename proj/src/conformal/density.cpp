#include "rectsaw/conformal/density.hpp"

#include "rectsaw/common/error.hpp"
#include "rectsaw/conformal/alpha.hpp"
#include "rectsaw/conformal/elliptic.hpp"
#include "rectsaw/conformal/ratio.hpp"

#include <boost/math/tools/roots.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>

namespace rectsaw {

double density_at(double z, double alpha, double b) {
  const double z2 = z * z;
  if (z2 >= 1)
    return 0;
  return std::pow(z2 + alpha, -b) * std::pow((1 - z2) * (alpha * alpha - z2), b / 2);
}

double position_of(double z, double alpha) {
  const double az = std::min(std::abs(z), 1.0);
  const double p = elliptic_F(az, 1 / alpha) / alpha;
  return z < 0 ? -p : p;
}

double half_long_side(double alpha) {
  return elliptic_K_complement(std::sqrt((alpha - 1) * (alpha + 1)) / alpha) / alpha;
}

double preimage_of(double t, double alpha) {
  if (!(t >= 0 && t <= 1))
    throw InvalidArgument("position fraction must lie in [0, 1]");
  if (t == 0 || t == 1)
    return t;
  const double half = half_long_side(alpha);
  auto g = [&](double z) { return position_of(z, alpha) / half - t; };
  boost::uintmax_t iterations = 200;
  auto [lo, hi] = boost::math::tools::toms748_solve(
      g, 0.0, 1.0, -t, 1.0 - t, boost::math::tools::eps_tolerance<double>(50), iterations);
  return 0.5 * (lo + hi);
}

const char* to_string(Normalization n) {
  return n == Normalization::UnitIntegral ? "unit-integral" : "endpoint-matched";
}

Normalization parse_normalization(const std::string& text) {
  if (text == "unit-integral")
    return Normalization::UnitIntegral;
  if (text == "endpoint-matched")
    return Normalization::EndpointMatched;
  throw InvalidArgument("unknown normalization '" + text + "'");
}

DensityCurve predicted_density_curve(double r, double b, int m, Normalization normalization) {
  if (m < 2)
    throw InvalidArgument("need at least two samples");
  DensityCurve curve;
  curve.r = r;
  curve.b = b;
  curve.alpha = alpha_from_aspect(r);
  curve.normalization = normalization;
  double scale = 1;
  if (normalization == Normalization::UnitIntegral)
    scale = 1 / hitting_integrals(alpha_minus_one(r), b).long_side;
  else
    scale = 1 / density_at(0, curve.alpha, b);
  for (int i = 0; i < m; ++i) {
    const double z = static_cast<double>(i) / m;
    curve.samples.emplace_back(position_of(z, curve.alpha), scale * density_at(z, curve.alpha, b));
  }
  return curve;
}

void write_density_csv(const DensityCurve& curve, const std::string& path) {
  std::ofstream out(path);
  if (!out)
    throw Error("cannot write " + path);
  out << "position,density\n";
  char line[96];
  for (const auto& [x, y] : curve.samples) {
    std::snprintf(line, sizeof line, "%.15g,%.15g\n", x, y);
    out << line;
  }
}

void write_density_sidecar(const DensityCurve& curve, const std::string& path) {
  nlohmann::ordered_json j;
  j["r"] = curve.r;
  j["alpha"] = curve.alpha;
  j["b"] = curve.b;
  j["normalization"] = to_string(curve.normalization);
  j["samples"] = curve.samples.size();
  std::ofstream out(path);
  if (!out)
    throw Error("cannot write " + path);
  out << j.dump(2) << "\n";
}

DensityComparison compare_density(int L, int W, const std::vector<double>& measured, double b) {
  if (measured.size() != static_cast<std::size_t>(W / 2) || measured.empty() || measured[0] <= 0)
    throw InvalidArgument("need W/2 positive measured values along the long side");
  DensityComparison cmp;
  cmp.r = static_cast<double>(W) / L;
  cmp.alpha = alpha_from_aspect(cmp.r);
  cmp.b = b;
  const double scale = measured[0] / density_at(0, cmp.alpha, b);
  for (std::size_t cy = 0; cy < measured.size(); ++cy) {
    DensityRow row;
    row.cy = static_cast<int>(cy);
    row.lattice_position = static_cast<double>(cy) / (W / 2);
    row.preimage = preimage_of(row.lattice_position, cmp.alpha);
    row.measured = measured[cy];
    row.predicted = scale * density_at(row.preimage, cmp.alpha, b);
    row.relative_gap = std::abs(row.predicted - row.measured) / row.measured;
    cmp.max_relative_gap = std::max(cmp.max_relative_gap, row.relative_gap);
    cmp.rows.push_back(row);
  }
  return cmp;
}

}  // namespace rectsaw
