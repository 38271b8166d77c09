#include "rectsaw/series/extrapolate.hpp"

#include "rectsaw/common/error.hpp"

#include <limits>
#include <optional>

namespace rectsaw {

namespace {

using Column = std::vector<BigFloat>;

struct Breakdown {};

// Denominators this small relative to the data are treated as zero.
BigFloat tiny(const Column& s) {
  BigFloat scale = 0;
  for (const auto& v : s)
    scale = std::max(scale, BigFloat(abs(v)));
  return scale * std::numeric_limits<BigFloat>::epsilon() * 1000;
}

void check(const BigFloat& den, const BigFloat& floor) {
  if (abs(den) <= floor)
    throw Breakdown{};
}

std::vector<Column> bulirsch_stoer(const std::vector<int>& n, const Column& s, double omega,
                                   bool& truncated) {
  const std::size_t N = s.size();
  const BigFloat eps = tiny(s);
  std::vector<Column> cols{s};
  Column prev(N + 1, BigFloat(0));  // T_{-1}
  for (std::size_t m = 1; m < N; ++m) {
    const Column& cur = cols.back();
    Column next(N - m);
    try {
      for (std::size_t i = 0; i + m < N; ++i) {
        const BigFloat delta = cur[i + 1] - cur[i];
        const BigFloat back = cur[i + 1] - prev[i + 1];
        if (delta == 0) {
          next[i] = cur[i + 1];
          continue;
        }
        check(back, eps);
        const BigFloat ratio = pow(BigFloat(n[i + m]) / n[i], omega);  // (h_i / h_{i+m})^omega
        const BigFloat den = ratio * (1 - delta / back) - 1;
        check(den, eps);
        next[i] = cur[i + 1] + delta / den;
      }
    } catch (const Breakdown&) {
      truncated = true;
      break;
    }
    prev = cur;
    cols.push_back(std::move(next));
  }
  return cols;
}

std::vector<Column> neville(const std::vector<int>& n, const Column& s, double theta) {
  const std::size_t N = s.size();
  Column h(N);
  for (std::size_t i = 0; i < N; ++i)
    h[i] = pow(BigFloat(1) / n[i], theta);
  std::vector<Column> cols{s};
  for (std::size_t m = 1; m < N; ++m) {
    const Column& cur = cols.back();
    Column next(N - m);
    for (std::size_t i = 0; i + m < N; ++i)
      next[i] = cur[i + 1] + (cur[i + 1] - cur[i]) * h[i + m] / (h[i] - h[i + m]);
    cols.push_back(std::move(next));
  }
  return cols;
}

// Levin u with beta = 1 and omega_j = (beta + j)(s_j - s_{j-1}).  Positions
// count from the first entry, which only enters through s_1 - s_0, so
// column k holds estimates for n = 1 .. N-1-k.
std::vector<Column> levin_u(const Column& s, bool& truncated) {
  const std::size_t N = s.size();
  const double beta = 1;
  Column omega(N);
  for (std::size_t j = 1; j < N; ++j)
    omega[j] = (beta + j) * (s[j] - s[j - 1]);
  std::vector<Column> cols{s};
  for (std::size_t k = 1; k + 1 < N; ++k) {
    Column next(N - 1 - k);
    try {
      for (std::size_t n = 1; n + k < N; ++n) {
        bool flat = true;
        for (std::size_t j = 0; j <= k; ++j)
          flat = flat && omega[n + j] == 0;
        if (flat) {
          next[n - 1] = s[n + k];
          continue;
        }
        BigFloat num = 0, den = 0;
        BigFloat binom = 1;
        for (std::size_t j = 0; j <= k; ++j) {
          check(omega[n + j], BigFloat(0));
          const BigFloat w = binom *
                             pow(BigFloat(beta + n + j) / BigFloat(beta + n + k),
                                 static_cast<double>(k) - 1) /
                             omega[n + j];
          if (j % 2 == 0) {
            num += w * s[n + j];
            den += w;
          } else {
            num -= w * s[n + j];
            den -= w;
          }
          binom = binom * static_cast<double>(k - j) / static_cast<double>(j + 1);
        }
        check(den, BigFloat(0));
        next[n - 1] = num / den;
      }
    } catch (const Breakdown&) {
      truncated = true;
      break;
    }
    cols.push_back(std::move(next));
  }
  return cols;
}

// Iterated theta_2 transform:
// T_n = s_{n+1} - ds_n ds_{n+1} d2s_{n+1} / (ds_{n+2} d2s_n - ds_n d2s_{n+1}).
std::vector<Column> brezinski(const Column& s, bool& truncated) {
  const BigFloat eps = tiny(s);
  std::vector<Column> cols{s};
  while (cols.back().size() >= 4) {
    const Column& c = cols.back();
    Column next(c.size() - 3);
    try {
      for (std::size_t n = 0; n + 3 < c.size(); ++n) {
        const BigFloat d0 = c[n + 1] - c[n];
        const BigFloat d1 = c[n + 2] - c[n + 1];
        const BigFloat d2 = c[n + 3] - c[n + 2];
        const BigFloat dd0 = d1 - d0;
        const BigFloat dd1 = d2 - d1;
        const BigFloat den = d2 * dd0 - d0 * dd1;
        if (d0 == 0 && d1 == 0 && d2 == 0) {
          next[n] = c[n + 1];
          continue;
        }
        check(den, eps * eps);
        next[n] = c[n + 1] - d0 * d1 * dd1 / den;
      }
    } catch (const Breakdown&) {
      truncated = true;
      break;
    }
    cols.push_back(std::move(next));
  }
  return cols;
}

Direction direction_of(const Column& c) {
  if (c.size() < 2)
    return Direction::None;
  bool up = true, down = true;
  for (std::size_t i = 1; i < c.size(); ++i) {
    if (!(c[i] > c[i - 1]))
      up = false;
    if (!(c[i] < c[i - 1]))
      down = false;
  }
  return up ? Direction::Increasing : down ? Direction::Decreasing : Direction::None;
}

}  // namespace

Method parse_method(const std::string& text) {
  if (text == "bulirsch-stoer" || text == "bst")
    return Method::BulirschStoer;
  if (text == "levin-u" || text == "levin")
    return Method::LevinU;
  if (text == "brezinski-theta" || text == "brezinski")
    return Method::BrezinskiTheta;
  if (text == "neville")
    return Method::Neville;
  throw InvalidArgument("unknown extrapolation method '" + text + "'");
}

const char* to_string(Method m) {
  switch (m) {
    case Method::BulirschStoer: return "bulirsch-stoer";
    case Method::LevinU: return "levin-u";
    case Method::BrezinskiTheta: return "brezinski-theta";
    case Method::Neville: return "neville";
  }
  return "?";
}

const char* to_string(Direction d) {
  switch (d) {
    case Direction::Increasing: return "increasing";
    case Direction::Decreasing: return "decreasing";
    case Direction::None: return "none";
  }
  return "?";
}

const std::vector<BigFloat>& top_column(const ExtrapolationTable& table) {
  for (auto it = table.columns.rbegin(); it != table.columns.rend(); ++it)
    if (it->size() >= 2)
      return *it;
  return table.columns.front();
}

Extrapolation extrapolate(const RatioSequence& seq, Method method, double theta,
                          std::size_t min_entries) {
  seq.validate();
  if (seq.size() < std::max<std::size_t>(min_entries, 2))
    throw InvalidArgument("extrapolation needs at least " + std::to_string(min_entries) +
                          " entries, got " + std::to_string(seq.size()));
  if ((method == Method::BulirschStoer || method == Method::Neville) && !(theta > 0))
    throw InvalidArgument("theta must be positive");

  ScopedPrecision guard(std::max(seq.entries[0].value.precision(), BigFloat::default_precision()));
  std::vector<int> n;
  Column s;
  for (const auto& e : seq.entries) {
    n.push_back(e.n);
    s.push_back(e.value);
  }

  Extrapolation out;
  out.table.method = method;
  out.table.parameter = theta;
  switch (method) {
    case Method::BulirschStoer:
      out.table.columns = bulirsch_stoer(n, s, theta, out.truncated);
      break;
    case Method::Neville:
      out.table.columns = neville(n, s, theta);
      break;
    case Method::LevinU:
      out.table.columns = levin_u(s, out.truncated);
      break;
    case Method::BrezinskiTheta:
      out.table.columns = brezinski(s, out.truncated);
      break;
  }
  if (out.truncated)
    out.note = "table truncated after column " + std::to_string(out.table.columns.size() - 1) +
               ": vanishing denominator";

  const auto& cols = out.table.columns;
  out.estimate.method = method;
  out.estimate.value = cols.back().back();
  if (cols.size() >= 2) {
    out.estimate.uncertainty = abs(cols.back().back() - cols[cols.size() - 2].back()) / 2;
  } else {
    const Column& c = cols[0];
    out.estimate.uncertainty = abs(c[c.size() - 1] - c[c.size() - 2]) / 2;
    if (out.note.empty())
      out.note = "too few entries for any accelerated column; estimate is the last input";
  }
  out.estimate.direction = direction_of(top_column(out.table));
  return out;
}

}  // namespace rectsaw
