#pragma once

#include <boost/rational.hpp>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "segcalc/arith.hpp"

namespace segcalc {

using Rational = boost::rational<Int>;

/// "3/2", "0", "5" -> Rational. Throws ParseError.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& r);

/// Flat key=value records. Pairs are separated by whitespace or newlines;
/// '#' starts a comment that runs to end of line. Later keys override earlier.
class KeyValues {
 public:
  static KeyValues parse(std::string_view text);

  bool contains(const std::string& key) const { return values_.count(key) != 0; }
  const std::string& at(const std::string& key) const;
  std::optional<std::string> get(const std::string& key) const;

  Int get_int(const std::string& key) const;
  std::optional<Int> get_optional_int(const std::string& key) const;

  void set(const std::string& key, std::string value) { values_[key] = std::move(value); }
  const std::map<std::string, std::string>& values() const { return values_; }

 private:
  std::map<std::string, std::string> values_;
};

Int parse_int(std::string_view text);

}  // namespace segcalc
