#ifndef DEGBURGERS_RATIONALS_HPP
#define DEGBURGERS_RATIONALS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace dgb {

using Rational = boost::multiprecision::cpp_rational;

/// Parses "p", "-p", or "p/q" with optional surrounding whitespace.
inline Rational parse_rational(const std::string& s) {
  auto first = s.find_first_not_of(" \t");
  auto last = s.find_last_not_of(" \t");
  if (first == std::string::npos) throw std::invalid_argument("empty rational: '" + s + "'");
  std::string body = s.substr(first, last - first + 1);
  auto slash = body.find('/');
  try {
    if (slash == std::string::npos)
      return Rational(boost::multiprecision::cpp_int(body));
    boost::multiprecision::cpp_int num(body.substr(0, slash));
    boost::multiprecision::cpp_int den(body.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("bad rational: '" + s + "'");
  }
}

inline std::string rational_to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace dgb

#endif
