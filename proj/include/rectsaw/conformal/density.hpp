#pragma once

#include <string>
#include <utility>
#include <vector>

namespace rectsaw {

/// (z^2 + alpha)^{-b} (1 - z^2)^{b/2} (alpha^2 - z^2)^{b/2}: hitting density
/// on the long side at the image of the real point z, up to a constant.
double density_at(double z, double alpha, double b);

/// (1/alpha) F(z, 1/alpha): distance along the long side from its midpoint.
double position_of(double z, double alpha);

/// Half the long side, K(1/alpha) / alpha.
double half_long_side(double alpha);

/// Inverse of position_of, for a position given as a fraction t in [0, 1]
/// of the half side.
double preimage_of(double t, double alpha);

enum class Normalization { UnitIntegral, EndpointMatched };

const char* to_string(Normalization n);
Normalization parse_normalization(const std::string& text);

struct DensityCurve {
  double r = 0;
  double alpha = 0;
  double b = 0;
  Normalization normalization = Normalization::EndpointMatched;
  std::vector<std::pair<double, double>> samples;  // (position, density)
};

/// Samples z_i = i/m, i = 0..m-1.  UnitIntegral scales the density to
/// integrate to 1 along the whole long side; EndpointMatched sets the value
/// at the midpoint to 1.
DensityCurve predicted_density_curve(double r, double b, int m,
                                     Normalization normalization = Normalization::EndpointMatched);

void write_density_csv(const DensityCurve& curve, const std::string& path);
void write_density_sidecar(const DensityCurve& curve, const std::string& path);

struct DensityRow {
  int cy = 0;
  double lattice_position = 0;  // c_y / (W/2)
  double preimage = 0;          // z with position_of(z) at that fraction
  double measured = 0;
  double predicted = 0;  // scaled to the measurement at c_y = 0
  double relative_gap = 0;
};

struct DensityComparison {
  double r = 0;
  double alpha = 0;
  double b = 0;
  std::vector<DensityRow> rows;
  double max_relative_gap = 0;
};

/// `measured[c_y]` for c_y = 0..W/2-1 along the long side of an L x W
/// rectangle, compared with the prediction for aspect W/L.
DensityComparison compare_density(int L, int W, const std::vector<double>& measured, double b);

}  // namespace rectsaw
