#ifndef PRGFL_RATIONAL_HPP
#define PRGFL_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace prgfl {

// All counts and statistics are exact; no floating point enters any
// verdict. Doubles appear only in display helpers and Hoeffding radii.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// 2^e for any integer e, including negative exponents.
inline Rational pow2(int e) {
    BigInt p = BigInt(1) << static_cast<unsigned>(e < 0 ? -e : e);
    return e < 0 ? Rational(1, p) : Rational(p);
}

inline std::string to_string(const BigInt& v) { return v.str(); }

inline std::string num_string(const Rational& r) { return boost::multiprecision::numerator(r).str(); }
inline std::string den_string(const Rational& r) { return boost::multiprecision::denominator(r).str(); }

inline double to_double(const Rational& r) { return static_cast<double>(r); }

} // namespace prgfl

#endif
