#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace polytrope {

// All arithmetic in the library is exact.  Scalars are arbitrary-precision
// rationals; +inf lives in TropScalar (trop_core.hpp), never here.
// Expression templates are off so arithmetic composes with std::min/max.
using Integer =
    boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::backends::rational_adaptor<
                                      boost::multiprecision::cpp_int_backend<>>,
                                  boost::multiprecision::et_off>;

bool is_integer(const Rational& r);

// "p/q" in lowest terms with q > 0; integers print without the slash.
std::string rational_to_string(const Rational& r);

// Accepts "123", "-7" and "p/q".  Throws std::invalid_argument otherwise.
Rational parse_rational(const std::string& s);

}  // namespace polytrope
