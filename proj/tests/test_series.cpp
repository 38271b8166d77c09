#include "reference_values.hpp"

#include "rectsaw/arith/critical.hpp"
#include "rectsaw/common/error.hpp"
#include "rectsaw/series/correction.hpp"
#include "rectsaw/series/export.hpp"
#include "rectsaw/series/extrapolate.hpp"
#include "rectsaw/series/ratio_sequence.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <functional>

#include <unistd.h>

using namespace rectsaw;

namespace {

constexpr Method kMethods[] = {Method::BulirschStoer, Method::LevinU, Method::BrezinskiTheta,
                               Method::Neville};

RatioSequence aspect2_data(int n_max = 18) {
  RatioSequence s;
  s.aspect = 2;
  for (const auto& [n, text] : ref::kAspect2)
    if (n <= n_max)
      s.entries.push_back({n, BigFloat(text)});
  return s;
}

RatioSequence synthetic(const std::vector<int>& ns, const std::function<BigFloat(int)>& f) {
  RatioSequence s;
  s.aspect = 2;
  for (int n : ns)
    s.entries.push_back({n, f(n)});
  return s;
}

std::vector<int> range(int lo, int hi, int step = 1) {
  std::vector<int> out;
  for (int n = lo; n <= hi; n += step)
    out.push_back(n);
  return out;
}

bool monotone(const std::vector<BigFloat>& v, bool increasing) {
  for (std::size_t k = 1; k < v.size(); ++k)
    if (increasing ? !(v[k] > v[k - 1]) : !(v[k] < v[k - 1]))
      return false;
  return true;
}

}  // namespace

TEST_CASE("sequence validation and slicing") {
  ScopedPrecision guard(80);
  auto s = aspect2_data();
  CHECK_NOTHROW(s.validate());
  const auto mid = s.slice(6, 12);
  REQUIRE(mid.size() == 4);
  CHECK(mid.entries.front().n == 6);
  CHECK(mid.entries.back().n == 12);
  CHECK(s.values().size() == 9);

  auto bad = s;
  std::swap(bad.entries[1], bad.entries[2]);
  CHECK_THROWS_AS(bad.validate(), InvalidArgument);
  bad = s;
  bad.entries[3].value = -1;
  CHECK_THROWS_AS(bad.validate(), InvalidArgument);

  CHECK(parse_engine("exact") == Engine::Exact);
  CHECK(parse_engine("numeric") == Engine::Numeric);
  CHECK_THROWS_AS(parse_engine("gpu"), InvalidArgument);
  const auto fam = aspect_family(10, 4, 9);
  REQUIRE(fam.size() == 3);
  CHECK(fam[2] == Rectangle(8, 80));
}

TEST_CASE("ratio sequences at x_c") {
  ScopedPrecision guard(80);
  const BigFloat xc = critical_point(80).x;

  const auto seq = build_ratio_sequence(aspect_family(2, 2, 8), xc);
  REQUIRE(seq.size() == 4);
  for (std::size_t k = 0; k < seq.size(); ++k) {
    CAPTURE(seq.entries[k].n);
    CHECK(agreeing_digits(seq.entries[k].value, BigFloat(ref::kAspect2[k].second)) >= 50);
  }

  const auto ten = build_ratio_sequence(aspect_family(10, 4, 4), xc);
  CHECK(to_string(ten.entries[0].value, 20).rfind("14006.18549331435655", 0) == 0);

  const auto squares = build_ratio_sequence({Rectangle(2, 2), Rectangle(4, 4), Rectangle(6, 6)}, xc);
  for (const auto& e : squares.entries)
    CHECK(e.value == 1);

  RatioOptions numeric;
  numeric.engine = Engine::Numeric;
  const auto a = build_ratio_sequence({Rectangle(6, 12)}, xc, numeric);
  RatioOptions exact;
  exact.engine = Engine::Exact;
  exact.threads = 2;
  const auto b = build_ratio_sequence({Rectangle(6, 12)}, xc, exact);
  CHECK(agreeing_digits(a.entries[0].value, b.entries[0].value) >= 70);

  CHECK_THROWS_AS(build_ratio_sequence({Rectangle(2, 4), Rectangle(4, 12)}, xc), InvalidArgument);
  CHECK_THROWS_AS(build_ratio_sequence({Rectangle(4, 6)}, xc), InvalidArgument);
  RatioOptions tiny;
  tiny.state_cap = 5;
  CHECK_THROWS_AS(build_ratio_sequence({Rectangle(8, 16)}, xc, tiny), ResourceLimitExceeded);
}

TEST_CASE("correction exponent") {
  ScopedPrecision guard(60);
  const auto ns = range(10'000'000, 10'000'005);
  const auto c1 = correction_exponent(synthetic(ns, [](int n) -> BigFloat { return 5 + BigFloat(3) / n; }));
  CHECK(std::abs(c1.theta - 1) < 1e-6);
  CHECK(std::abs(c1.slope + 2) < 1e-6);
  const auto c2 = correction_exponent(
      synthetic(ns, [](int n) -> BigFloat { return 5 + BigFloat(3) / (BigFloat(n) * n); }));
  CHECK(std::abs(c2.theta - 2) < 1e-4);

  const auto late = correction_exponent(aspect2_data().slice(6, 18));
  CHECK(std::abs(late.slope + 2.0) < 0.08);
  CHECK(std::abs(late.theta - 1.0) < 0.08);
  CHECK(late.slope_error > 0);

  // From n = 4 the fit is pulled up by the pre-asymptotic first difference but
  // its one-sigma band still reaches -2 +- 0.08.
  const auto all = correction_exponent(aspect2_data().slice(4, 18));
  CHECK(all.slope + all.slope_error > -2.08);
  CHECK(all.slope - all.slope_error < -1.92);

  CHECK_THROWS_AS(correction_exponent(aspect2_data().slice(2, 18)), InvalidArgument);
  CHECK_THROWS_AS(correction_exponent(aspect2_data().slice(4, 8)), InvalidArgument);
}

TEST_CASE("constant sequences") {
  ScopedPrecision guard(80);
  const auto c = synthetic(range(2, 16, 2), [](int) -> BigFloat { return BigFloat("1.25"); });
  for (Method m : kMethods) {
    CAPTURE(to_string(m));
    const auto ex = extrapolate(c, m);
    CHECK(ex.estimate.value == BigFloat("1.25"));
    CHECK(ex.estimate.uncertainty < BigFloat("1e-70"));
  }
}

TEST_CASE("exactness classes") {
  ScopedPrecision guard(80);
  SUBCASE("Neville annihilates polynomial corrections in 1/n") {
    const auto s = synthetic(range(2, 9), [](int n) -> BigFloat { return 5 + BigFloat(3) / n; });
    CHECK(abs(extrapolate(s, Method::Neville).estimate.value - 5) < BigFloat("1e-8"));
    const auto p = synthetic(range(2, 9), [](int n) -> BigFloat {
      const BigFloat h = BigFloat(1) / n;
      return 5 + 3 * h - 7 * h * h + h * h * h;
    });
    CHECK(abs(extrapolate(p, Method::Neville).estimate.value - 5) < BigFloat("1e-60"));
    const auto q = synthetic(range(2, 9), [](int n) -> BigFloat { return 5 + 3 / sqrt(BigFloat(n)); });
    CHECK(abs(extrapolate(q, Method::Neville, 0.5).estimate.value - 5) < BigFloat("1e-60"));
  }
  SUBCASE("Levin u is exact on geometric-plus-constant sequences") {
    const auto s = synthetic(range(1, 8), [](int n) -> BigFloat { return 2 + 3 * pow(BigFloat("0.6"), n); });
    CHECK(abs(extrapolate(s, Method::LevinU).estimate.value - 2) < BigFloat("1e-60"));
    const auto alt = synthetic(range(1, 8), [](int n) -> BigFloat { return 2 - pow(BigFloat("-0.5"), n); });
    CHECK(abs(extrapolate(alt, Method::LevinU).estimate.value - 2) < BigFloat("1e-60"));
  }
  SUBCASE("Brezinski theta is exact on geometric-plus-constant sequences") {
    const auto s = synthetic(range(1, 8), [](int n) -> BigFloat { return 2 + 3 * pow(BigFloat("0.6"), n); });
    CHECK(abs(extrapolate(s, Method::BrezinskiTheta).estimate.value - 2) < BigFloat("1e-60"));
  }
  SUBCASE("Bulirsch-Stoer is exact on rational functions of 1/n") {
    const auto s = synthetic(range(2, 12), [](int n) -> BigFloat { return 5 + BigFloat(3) / (n + 1); });
    CHECK(abs(extrapolate(s, Method::BulirschStoer).estimate.value - 5) < BigFloat("1e-50"));
  }
}

TEST_CASE("shift and scale equivariance") {
  ScopedPrecision guard(80);
  const auto base = aspect2_data();
  const BigFloat shift("1.5"), scale("3.25");
  for (Method m : kMethods) {
    CAPTURE(to_string(m));
    auto shifted = base, scaled = base;
    for (auto& e : shifted.entries)
      e.value += shift;
    for (auto& e : scaled.entries)
      e.value *= scale;
    const auto e0 = extrapolate(base, m);
    const auto e1 = extrapolate(shifted, m);
    const auto e2 = extrapolate(scaled, m);
    CHECK(abs(e1.estimate.value - (e0.estimate.value + shift)) < BigFloat("1e-50"));
    CHECK(abs(e2.estimate.value - e0.estimate.value * scale) < BigFloat("1e-50"));
    CHECK(abs(e2.estimate.uncertainty - e0.estimate.uncertainty * scale) < BigFloat("1e-50"));
    CHECK(e1.estimate.direction == e0.estimate.direction);
  }
}

TEST_CASE("extrapolation of the aspect-2 table") {
  ScopedPrecision guard(80);
  const auto s = aspect2_data();
  for (Method m : kMethods) {
    const auto ex = extrapolate(s, m);
    REQUIRE(ex.table.columns.size() >= 2);
    CHECK(ex.table.columns[0] == s.values());
    CHECK_FALSE(ex.truncated);
  }

  const auto bst = extrapolate(s, Method::BulirschStoer);
  CHECK(abs(bst.estimate.value - BigFloat("4.6096")) < BigFloat("0.001"));
  for (std::size_t k = 1; k < bst.table.columns.size(); ++k)
    CHECK(bst.table.columns[k].size() + 1 == bst.table.columns[k - 1].size());

  const auto levin = extrapolate(s, Method::LevinU);
  CHECK(monotone(top_column(levin.table), false));
  CHECK(top_column(levin.table).back() <= BigFloat("4.6097"));
  CHECK(levin.estimate.direction == Direction::Decreasing);

  const auto brez = extrapolate(s, Method::BrezinskiTheta);
  CHECK(monotone(top_column(brez.table), true));
  CHECK(top_column(brez.table).back() >= BigFloat("4.6094"));
  CHECK(brez.estimate.direction == Direction::Increasing);

  const auto nev = extrapolate(s, Method::Neville);
  CHECK(monotone(top_column(nev.table), true));
  CHECK(top_column(nev.table).back() >= BigFloat("4.6090"));
  CHECK(nev.estimate.direction == Direction::Increasing);
}

TEST_CASE("extrapolation input checks and breakdown") {
  ScopedPrecision guard(60);
  const auto two = aspect2_data(4);
  CHECK_THROWS_AS(extrapolate(two, Method::BulirschStoer), InvalidArgument);
  CHECK_NOTHROW(extrapolate(two, Method::BulirschStoer, 1.0, 2));
  CHECK_THROWS_AS(extrapolate(aspect2_data(), Method::Neville, 0.0), InvalidArgument);
  CHECK_THROWS_AS(extrapolate(aspect2_data(), Method::BulirschStoer, -1.0), InvalidArgument);
  CHECK_NOTHROW(extrapolate(aspect2_data(), Method::LevinU, -1.0));

  const auto short_run = extrapolate(aspect2_data(6), Method::BrezinskiTheta);
  REQUIRE(short_run.table.columns.size() == 1);
  CHECK(short_run.estimate.value == aspect2_data(6).entries.back().value);
  CHECK(short_run.estimate.uncertainty > 0);
  CHECK_FALSE(short_run.note.empty());

  const auto line = synthetic(range(1, 7), [](int n) -> BigFloat { return BigFloat(n); });
  const auto ex = extrapolate(line, Method::BrezinskiTheta);
  CHECK(ex.truncated);
  CHECK_FALSE(ex.note.empty());

  CHECK(parse_method("bst") == Method::BulirschStoer);
  CHECK(parse_method("levin") == Method::LevinU);
  CHECK(parse_method("brezinski-theta") == Method::BrezinskiTheta);
  CHECK_THROWS_AS(parse_method("richardson"), InvalidArgument);
}

TEST_CASE("export formats") {
  ScopedPrecision guard(80);
  const auto dir =
      std::filesystem::temp_directory_path() / ("rectsaw-series-" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const auto s = aspect2_data(10);

  const std::string json_path = (dir / "s.json").string();
  std::ofstream(json_path) << sequence_json(s, 70).dump(2);
  const auto from_json = read_sequence(json_path);
  CHECK(from_json.aspect == 2);
  REQUIRE(from_json.size() == s.size());
  for (std::size_t k = 0; k < s.size(); ++k)
    CHECK(agreeing_digits(from_json.entries[k].value, s.entries[k].value) >= 65);

  const std::string csv_path = (dir / "s.csv").string();
  std::ofstream(csv_path) << sequence_csv(s, 70);
  const auto from_csv = read_sequence(csv_path, 2);
  REQUIRE(from_csv.size() == s.size());
  CHECK(from_csv.entries[4].n == 10);

  const auto ex = extrapolate(s, Method::Neville);
  const std::string csv = table_csv(ex.table, 10);
  CHECK(csv.rfind("col0,col1,col2,col3,col4\n4.63815853,", 0) == 0);
  CHECK(csv.find("\n4.586835598,,,,\n") != std::string::npos);
  const auto j = extrapolation_json(ex);
  CHECK(j["method"] == "neville");
  CHECK(j["direction"] == "increasing");
  CHECK(j["columns"] == 5);

  std::ofstream(dir / "bad.csv") << "n,value\n2,abc\n";
  CHECK_THROWS_AS(read_sequence((dir / "bad.csv").string(), 2), InvalidArgument);
  CHECK_THROWS_AS(read_sequence((dir / "missing.csv").string(), 2), InvalidArgument);
  std::filesystem::remove_all(dir);
}
