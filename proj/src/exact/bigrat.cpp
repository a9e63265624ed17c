#include "qdeform/exact/bigrat.hpp"

#include <cctype>
#include <stdexcept>

namespace qdeform::exact {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

BigRat parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw std::invalid_argument("not an exact rational: '" + std::string(text) + "'");
  }
  if (num.front() == '+') num.remove_prefix(1);
  BigRat r{BigInt{std::string(num)}, BigInt{std::string(den)}};
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const BigRat& value) { return value.get_str(); }

}  // namespace qdeform::exact
