#include "cw/exact/bigrational.hpp"

#include <cctype>

#include "cw/error.hpp"

namespace cw::exact {

namespace {

bool valid_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

BigRational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!valid_integer_text(num) || !valid_integer_text(den) || den.front() == '-' || den.front() == '+') {
    throw Error(ErrorKind::Parse, "malformed rational '" + std::string(text) + "'");
  }
  BigInteger n(std::string(num.front() == '+' ? num.substr(1) : num), 10);
  BigInteger d(std::string(den), 10);
  if (d == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
  BigRational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const BigRational& value) { return value.get_str(10); }

std::optional<std::int64_t> to_int64(const BigRational& value) {
  if (!is_integer(value) || !value.get_num().fits_slong_p()) return std::nullopt;
  return static_cast<std::int64_t>(value.get_num().get_si());
}

}  // namespace cw::exact
