#include "rectsaw/enumerator/genfun.hpp"

#include "rectsaw/common/error.hpp"

#include <cstdlib>

namespace rectsaw {

GenFun::GenFun(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

GenFun GenFun::of(std::initializer_list<long long> coeffs) {
  std::vector<BigInt> c;
  c.reserve(coeffs.size());
  for (long long v : coeffs)
    c.emplace_back(v);
  return GenFun(std::move(c));
}

void GenFun::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero())
    coeffs_.pop_back();
}

BigInt GenFun::operator[](int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size()))
    return BigInt(0);
  return coeffs_[k];
}

GenFun& GenFun::operator+=(const GenFun& other) {
  if (other.coeffs_.size() > coeffs_.size())
    coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k)
    coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

GenFun GenFun::scaled(long factor) const {
  std::vector<BigInt> c = coeffs_;
  for (auto& v : c)
    v *= factor;
  return GenFun(std::move(c));
}

std::string GenFun::to_string() const {
  if (coeffs_.empty())
    return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero())
      continue;
    if (!out.empty())
      out += " + ";
    const bool unit = coeffs_[k] == 1 && k > 0;
    if (!unit)
      out += coeffs_[k].str();
    if (k >= 1)
      out += "x";
    if (k >= 2)
      out += "^" + std::to_string(k);
  }
  return out;
}

const GenFun& HittingTable::at_top(int cx) const {
  const auto k = static_cast<std::size_t>(std::abs(cx));
  if (k >= top.size())
    throw InvalidArgument("no top exit at c_x = " + std::to_string(cx));
  return top[k];
}

const GenFun& HittingTable::at_right(int cy) const {
  const auto k = static_cast<std::size_t>(std::abs(cy));
  if (k >= right.size())
    throw InvalidArgument("no right exit at c_y = " + std::to_string(cy));
  return right[k];
}

BoundarySplit HittingTable::boundary_split() const {
  BoundarySplit s;
  for (std::size_t k = 0; k < right.size(); ++k)
    s.lr += right[k].scaled(k == 0 ? 2 : 4);
  for (std::size_t k = 0; k < top.size(); ++k)
    s.bt += top[k].scaled(k == 0 ? 2 : 4);
  return s;
}

}  // namespace rectsaw
