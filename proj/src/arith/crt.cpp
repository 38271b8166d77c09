#include "rectsaw/arith/crt.hpp"

#include "rectsaw/common/error.hpp"

namespace rectsaw {

namespace {

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(m), nr = static_cast<std::int64_t>(a % m);
  while (nr != 0) {
    const std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1)
    throw InvalidArgument("moduli are not coprime");
  return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(m) : t);
}

std::uint32_t mod_small(const BigInt& v, std::uint32_t p) {
  return static_cast<std::uint32_t>(mpz_fdiv_ui(v.backend().data(), p));
}

}  // namespace

BigInt modulus_product(const std::vector<std::uint32_t>& primes) {
  BigInt m = 1;
  for (std::uint32_t p : primes)
    m *= p;
  return m;
}

BigInt crt_combine(const std::vector<std::uint32_t>& residues,
                   const std::vector<std::uint32_t>& moduli) {
  if (residues.size() != moduli.size() || moduli.empty())
    throw InvalidArgument("residue and modulus lists differ in length");
  BigInt x = residues[0] % moduli[0];
  BigInt m = moduli[0];
  for (std::size_t k = 1; k < moduli.size(); ++k) {
    const std::uint64_t p = moduli[k];
    const std::uint64_t inv = inverse_mod(mod_small(m, moduli[k]), p);
    const std::uint64_t have = mod_small(x, moduli[k]);
    const std::uint64_t want = residues[k] % p;
    const std::uint64_t t = (want + p - have) % p * inv % p;
    x += m * t;
    m *= p;
  }
  return x;
}

std::vector<BigInt> crt_reconstruct(const std::vector<ResidueTable>& tables, bool verify) {
  const std::size_t used = verify ? tables.size() - 1 : tables.size();
  if (tables.empty() || used == 0)
    throw InvalidArgument("crt_reconstruct needs at least " +
                          std::string(verify ? "two tables" : "one table"));
  const std::size_t n = tables[0].cells.size();
  std::vector<std::uint32_t> moduli;
  for (const auto& t : tables) {
    if (t.cells.size() != n)
      throw InvalidArgument("residue tables differ in layout");
    moduli.push_back(t.prime);
  }
  PrimeSet check(moduli);  // distinct, prime, in range
  moduli.resize(used);

  std::vector<BigInt> out(n);
  std::vector<std::uint32_t> residues(used);
  BigInt largest = 0;
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t k = 0; k < used; ++k)
      residues[k] = tables[k].cells[c];
    out[c] = crt_combine(residues, moduli);
    if (verify) {
      const auto& extra = tables.back();
      if (mod_small(out[c], extra.prime) != extra.cells[c] % extra.prime)
        throw InconsistentResidues("cell " + std::to_string(c) +
                                   " disagrees with the verification prime " +
                                   std::to_string(extra.prime));
      if (out[c] > largest)
        largest = out[c];
    }
  }
  if (verify && 2 * largest >= modulus_product(moduli))
    throw InconsistentResidues("prime product is not above twice the largest coefficient");
  return out;
}

}  // namespace rectsaw
