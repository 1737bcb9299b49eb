#ifndef ALEXSPAN_BIGINT_HPP_
#define ALEXSPAN_BIGINT_HPP_

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "alexspan/errors.hpp"

namespace alexspan
{

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt & x) { return x.str(); }

inline std::string to_string(const Rational & q)
{
  if (boost::multiprecision::denominator(q) == 1) {
    return boost::multiprecision::numerator(q).str();
  }
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

/// Narrow to int64, throwing instead of wrapping.
inline std::int64_t to_int64(const BigInt & x, const char * what = "value")
{
  if (x > BigInt(INT64_MAX) || x < BigInt(INT64_MIN)) {
    throw Error(std::string(what) + " " + x.str() + " does not fit in 64 bits");
  }
  return x.convert_to<std::int64_t>();
}

}  // namespace alexspan

#endif  // ALEXSPAN_BIGINT_HPP_
