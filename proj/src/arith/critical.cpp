#include "rectsaw/arith/critical.hpp"

#include "rectsaw/common/error.hpp"

#include <cctype>

namespace rectsaw {

CriticalPoint critical_point(unsigned digits) {
  if (digits < 16)
    throw InvalidArgument("critical point needs at least 16 digits");
  ScopedPrecision guard(digits);
  BigFloat disc = sqrt(BigFloat(30261));
  BigFloat x = sqrt((disc - 7) / 1162);
  return {x, CriticalSource::MnemonicRoot};
}

CriticalPoint parse_critical_point(const std::string& choice, unsigned digits) {
  if (choice == "mnemonic")
    return critical_point(digits);
  ScopedPrecision guard(digits);
  const std::string text = choice == "literature" ? kLiteratureXc : choice;
  bool ok = !text.empty();
  for (char ch : text)
    ok = ok && (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.' || ch == 'e' ||
                ch == 'E' || ch == '-' || ch == '+');
  if (!ok)
    throw InvalidArgument("--xc expects mnemonic, literature or a decimal number, got '" +
                          choice + "'");
  BigFloat x(text);
  if (x <= 0 || x >= 1)
    throw InvalidArgument("x_c must lie in (0, 1)");
  return {x, choice == "literature" ? CriticalSource::Literature : CriticalSource::Given};
}

BigFloat mnemonic_residual(const BigFloat& x) {
  BigFloat x2 = x * x;
  return (581 * x2 + 7) * x2 - 13;
}

}  // namespace rectsaw
