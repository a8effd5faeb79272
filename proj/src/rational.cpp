#include "medianlab/rational.hpp"

#include <cctype>

#include "medianlab/errors.hpp"

namespace medianlab {

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                          : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den.front() == '-' ||
      den.front() == '+') {
    throw MedianError(ErrorCode::InvalidInput,
                      "malformed fraction '" + std::string(text) + "'");
  }
  mpz_class p{std::string(num[0] == '+' ? num.substr(1) : num)};
  mpz_class q{std::string(den)};
  if (q == 0) {
    throw MedianError(ErrorCode::InvalidInput,
                      "zero denominator in '" + std::string(text) + "'");
  }
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

bool is_dyadic_mass(const Rational& r, unsigned max_exponent) {
  if (r == 0) return true;
  if (r.get_num() != 1) return false;
  for (unsigned s = 0; s <= max_exponent; ++s) {
    mpz_class pow2;
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2, s);
    if (r.get_den() == pow2) return true;
  }
  return false;
}

}  // namespace medianlab
