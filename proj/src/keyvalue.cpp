#include "segcalc/keyvalue.hpp"

#include <cctype>
#include <charconv>

#include "segcalc/errors.hpp"

namespace segcalc {

Int parse_int(std::string_view text) {
  Int value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw ParseError("not an integer: '" + std::string(text) + "'");
  }
  return value;
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  Int num = parse_int(text.substr(0, slash));
  Int den = parse_int(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string format_rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

KeyValues KeyValues::parse(std::string_view text) {
  KeyValues out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != '#') ++i;
    std::string_view token = text.substr(start, i - start);
    auto eq = token.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw ParseError("expected key=value, got '" + std::string(token) + "'");
    }
    out.values_[std::string(token.substr(0, eq))] = std::string(token.substr(eq + 1));
  }
  return out;
}

const std::string& KeyValues::at(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) throw ParseError("missing key '" + key + "'");
  return it->second;
}

std::optional<std::string> KeyValues::get(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

Int KeyValues::get_int(const std::string& key) const { return parse_int(at(key)); }

std::optional<Int> KeyValues::get_optional_int(const std::string& key) const {
  auto v = get(key);
  if (!v) return std::nullopt;
  return parse_int(*v);
}

}  // namespace segcalc
