#include "rectsaw/arith/exact.hpp"

#include "rectsaw/arith/checkpoint.hpp"
#include "rectsaw/enumerator/rings.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace rectsaw {

ModularResult modular_pass(const Rectangle& rect, Mode mode, std::uint32_t prime,
                           std::size_t state_cap) {
  ModularRing ring(prime, rect.max_degree());
  TransferMatrix<ModularRing> tm(rect, mode, Symmetry::Reduced, ring, state_cap);
  const auto cells = tm.run();
  ModularResult out;
  out.prime = prime;
  out.degree = rect.max_degree();
  const int width = ring.width();
  for (int e = 0; e < tm.rules().layout().size(); ++e)
    out.series.emplace_back(cells.begin() + e * width, cells.begin() + (e + 1) * width);
  return out;
}

ModularSplit modular_boundary_split(const Rectangle& rect, std::uint32_t prime,
                                    std::size_t state_cap) {
  ModularResult r = modular_pass(rect, Mode::Split, prime, state_cap);
  auto twice = [prime](std::vector<std::uint32_t> v) {
    for (auto& c : v)
      c = static_cast<std::uint32_t>(2ull * c % prime);
    while (!v.empty() && v.back() == 0)
      v.pop_back();
    return v;
  };
  return {twice(r.series[0]), twice(r.series[1])};
}

namespace {

ModularResult pass_with_checkpoint(const Rectangle& rect, Mode mode, std::uint32_t prime,
                                   const ExactOptions& options) {
  if (options.checkpoint_dir.empty())
    return modular_pass(rect, mode, prime, options.state_cap);
  const std::string path = checkpoint_path(options.checkpoint_dir, rect, mode, prime);
  if (auto cached = load_checkpoint(path, rect, mode, prime))
    return *cached;
  ModularResult r = modular_pass(rect, mode, prime, options.state_cap);
  save_checkpoint(path, rect, mode, r);
  return r;
}

}  // namespace

std::vector<GenFun> exact_exit_series(const Rectangle& rect, Mode mode,
                                      const ExactOptions& options) {
  const PrimeSet primes =
      options.primes.size() ? options.primes : PrimeSet::for_degree(rect.max_degree());
  if (primes.size() < 2)
    throw InvalidArgument("exact reconstruction needs at least two primes");

  std::vector<ModularResult> results(primes.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_lock;
  auto worker = [&] {
    for (std::size_t k = next++; k < primes.size(); k = next++) {
      try {
        results[k] = pass_with_checkpoint(rect, mode, primes[k], options);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_lock);
        if (!failure)
          failure = std::current_exception();
        next = primes.size();
      }
    }
  };
  const int threads = std::max(1, std::min<int>(options.threads, static_cast<int>(primes.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back(worker);
    for (auto& t : pool)
      t.join();
  }
  if (failure)
    std::rethrow_exception(failure);

  const std::size_t count = results[0].series.size();
  const std::size_t width = rect.max_degree() + 1;
  std::vector<ResidueTable> tables;
  for (const auto& r : results) {
    ResidueTable t;
    t.prime = r.prime;
    t.cells.reserve(count * width);
    for (const auto& s : r.series)
      t.cells.insert(t.cells.end(), s.begin(), s.end());
    tables.push_back(std::move(t));
  }
  const std::vector<BigInt> values = crt_reconstruct(tables, true);
  std::vector<std::uint32_t> used(primes.primes().begin(), primes.primes().end() - 1);
  const BigInt largest = values.empty() ? BigInt(0) : *std::max_element(values.begin(), values.end());
  if (modulus_product(used) <= 2 * largest)
    throw InconsistentResidues("prime product does not exceed twice the largest coefficient; "
                               "use more primes");
  std::vector<GenFun> out;
  for (std::size_t e = 0; e < count; ++e)
    out.emplace_back(std::vector<BigInt>(values.begin() + e * width,
                                         values.begin() + (e + 1) * width));
  return out;
}

BoundarySplit exact_boundary_split(const Rectangle& rect, const ExactOptions& options) {
  return split_from_exits(exact_exit_series(rect, Mode::Split, options), Symmetry::Reduced);
}

HittingTable exact_full_hitting(const Rectangle& rect, const ExactOptions& options) {
  return table_from_exits(rect, exact_exit_series(rect, Mode::FullHitting, options));
}

}  // namespace rectsaw
