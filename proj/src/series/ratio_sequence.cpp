#include "rectsaw/series/ratio_sequence.hpp"

#include "rectsaw/arith/eval.hpp"
#include "rectsaw/arith/exact.hpp"
#include "rectsaw/common/error.hpp"

#include <algorithm>

namespace rectsaw {

std::vector<BigFloat> RatioSequence::values() const {
  std::vector<BigFloat> v;
  for (const auto& e : entries)
    v.push_back(e.value);
  return v;
}

void RatioSequence::validate() const {
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (entries[k].value <= 0)
      throw InvalidArgument("ratio at n = " + std::to_string(entries[k].n) + " is not positive");
    if (k > 0 && entries[k].n <= entries[k - 1].n)
      throw InvalidArgument("sizes must be strictly increasing");
  }
}

RatioSequence RatioSequence::slice(int lo, int hi) const {
  RatioSequence out;
  out.aspect = aspect;
  for (const auto& e : entries)
    if (e.n >= lo && e.n <= hi)
      out.entries.push_back(e);
  return out;
}

Engine parse_engine(const std::string& text) {
  if (text == "exact")
    return Engine::Exact;
  if (text == "numeric")
    return Engine::Numeric;
  if (text == "auto")
    return Engine::Auto;
  throw InvalidArgument("unknown engine '" + text + "' (expected exact, numeric or auto)");
}

const char* to_string(Engine e) {
  switch (e) {
    case Engine::Exact: return "exact";
    case Engine::Numeric: return "numeric";
    case Engine::Auto: return "auto";
  }
  return "?";
}

std::vector<Rectangle> aspect_family(int aspect, int n_min, int n_max) {
  if (aspect < 1)
    throw InvalidArgument("aspect must be a positive integer");
  std::vector<Rectangle> out;
  for (int n = std::max(2, n_min + n_min % 2); n <= n_max; n += 2)
    out.emplace_back(n, aspect * n);
  return out;
}

RatioSequence build_ratio_sequence(const std::vector<Rectangle>& rects, const BigFloat& x,
                                   const RatioOptions& options) {
  RatioSequence seq;
  if (rects.empty())
    return seq;
  seq.aspect = rects[0].aspect();
  for (const auto& r : rects)
    if (r.aspect() == 0 || r.aspect() != seq.aspect)
      throw InvalidArgument("rectangles do not share one integer aspect ratio");

  ScopedPrecision guard(std::max(x.precision(), BigFloat::default_precision()));
  for (const auto& r : rects) {
    bool exact = options.engine == Engine::Exact;
    if (options.engine == Engine::Auto)
      exact = r.width() <= 10 && r.max_degree() <= 300;
    BigFloat value;
    if (exact) {
      ExactOptions eo;
      eo.threads = options.threads;
      eo.state_cap = options.state_cap;
      const BoundarySplit s = exact_boundary_split(r, eo);
      value = eval_ratio(s.lr, s.bt, x);
    } else {
      const auto p = evaluate_boundary_split<BigFloat>(r, x, options.state_cap);
      if (p.bt == 0)
        throw NumericalFailure("short-side weight vanishes for " + r.label());
      value = p.lr / p.bt;
    }
    seq.entries.push_back({r.width(), value});
  }
  return seq;
}

}  // namespace rectsaw
