#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace coxdef {

// All arithmetic in the library is exact. Integers and rationals are
// arbitrary precision; exponents in Laurent monomials are plain machine
// integers (they stay tiny), but coefficients are not.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class invalid_input : public std::runtime_error {
 public:
  explicit invalid_input(const std::string& what) : std::runtime_error(what) {}
};

class budget_exceeded : public std::runtime_error {
 public:
  explicit budget_exceeded(const std::string& what) : std::runtime_error(what) {}
};

struct Budget {
  // Cap on braid-orbit nodes, enumerated group elements and memo entries.
  std::size_t limit = 1'000'000;

  void charge(std::size_t n, const char* what) const {
    if (n > limit) throw budget_exceeded(std::string("budget exceeded: ") + what);
  }
};

// "p/q" with q omitted when 1.  Parsing accepts both forms.
inline std::string rational_str(const Rational& r) {
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline Rational parse_rational(std::string_view s) {
  try {
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(Integer(std::string(s)));
    const Integer num(std::string(s.substr(0, slash)));
    const Integer den(std::string(s.substr(slash + 1)));
    if (den == 0) throw invalid_input("rational with zero denominator");
    return Rational(num, den);
  } catch (const invalid_input&) {
    throw;
  } catch (const std::exception&) {
    throw invalid_input("malformed rational: " + std::string(s));
  }
}

}  // namespace coxdef
