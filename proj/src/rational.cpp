#include "rational.hpp"

#include <cctype>

namespace nswopt {

Rational Rational::parse(const std::string& text) {
  if (text.empty()) throw InputError("empty rational literal");
  std::string num = text;
  std::string den = "1";
  if (auto slash = text.find('/'); slash != std::string::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  auto check = [&](const std::string& part) {
    if (part.empty()) throw InputError("malformed rational '" + text + "'");
    size_t start = (part[0] == '-') ? 1 : 0;
    if (start == part.size()) throw InputError("malformed rational '" + text + "'");
    for (size_t i = start; i < part.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) {
        throw InputError("malformed rational '" + text + "'");
      }
    }
  };
  check(num);
  check(den);
  BigInt p(num);
  BigInt q(den);
  if (q == 0) throw InputError("zero denominator in '" + text + "'");
  return Rational(BigRat(p, q));
}

std::string Rational::str() const {
  if (denominator() == 1) return numerator().str();
  return numerator().str() + "/" + denominator().str();
}

double ln_big(const BigInt& x) {
  if (x <= 0) throw InputError("ln of non-positive integer");
  unsigned bits = boost::multiprecision::msb(x);
  if (bits <= 900) return std::log(x.convert_to<double>());
  unsigned shift = bits - 52;
  BigInt mant = x >> shift;
  return std::log(mant.convert_to<double>()) + shift * std::log(2.0);
}

double Rational::ln() const {
  if (v_ <= 0) throw InputError("ln of non-positive rational");
  return ln_big(numerator()) - ln_big(denominator());
}

}  // namespace nswopt
