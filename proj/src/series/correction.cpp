#include "rectsaw/series/correction.hpp"

#include "rectsaw/common/error.hpp"

#include <cmath>

namespace rectsaw {

CorrectionExponent correction_exponent(const RatioSequence& seq) {
  seq.validate();
  if (seq.size() < 4)
    throw InvalidArgument("correction exponent needs at least four entries");
  std::vector<double> xs, ys;
  int sign = 0;
  for (std::size_t k = 1; k < seq.size(); ++k) {
    const BigFloat d = seq.entries[k].value - seq.entries[k - 1].value;
    const int s = d > 0 ? 1 : d < 0 ? -1 : 0;
    if (s == 0 || (sign != 0 && s != sign))
      throw InvalidArgument("first differences change sign; data are not monotone");
    sign = s;
    xs.push_back(std::log(static_cast<double>(seq.entries[k].n)));
    ys.push_back(log(abs(d)).convert_to<double>());
  }
  const double n = static_cast<double>(xs.size());
  double mx = 0, my = 0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    mx += xs[k];
    my += ys[k];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    sxx += (xs[k] - mx) * (xs[k] - mx);
    sxy += (xs[k] - mx) * (ys[k] - my);
  }
  CorrectionExponent out;
  out.points = static_cast<int>(xs.size());
  out.slope = sxy / sxx;
  double rss = 0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const double e = ys[k] - (my + out.slope * (xs[k] - mx));
    rss += e * e;
  }
  out.slope_error = std::sqrt(rss / (n - 2) / sxx);
  out.theta = -out.slope - 1;
  out.theta_error = out.slope_error;
  return out;
}

}  // namespace rectsaw
