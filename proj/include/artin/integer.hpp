#ifndef ARTIN_INTEGER_HPP
#define ARTIN_INTEGER_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace artin {

/// Exponents are unbounded: type-I merges add user supplied values.
using Integer = boost::multiprecision::cpp_int;

inline std::string to_string(Integer const& value) { return value.str(); }

inline Integer abs(Integer const& value) { return value < 0 ? Integer(-value) : value; }

}  // namespace artin

#endif
