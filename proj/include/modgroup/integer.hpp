#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace modgroup {

// Arbitrary precision, but values below two machine words live inline
// without allocation, which covers every product the enumerators build.
using Integer = boost::multiprecision::cpp_int;

inline Integer abs(const Integer& x) { return x < 0 ? Integer(-x) : x; }

// Exact square root of a perfect square, nullopt otherwise (negatives included).
inline std::optional<Integer> exact_sqrt(const Integer& n) {
    if (n < 0) return std::nullopt;
    Integer r = boost::multiprecision::sqrt(n);
    if (r * r != n) return std::nullopt;
    return r;
}

inline bool is_perfect_square(const Integer& n) { return exact_sqrt(n).has_value(); }

inline std::string to_string(const Integer& n) { return n.str(); }

}  // namespace modgroup
