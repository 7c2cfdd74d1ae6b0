#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace dp1 {

// Exact arithmetic everywhere: arbitrary-precision integers and rationals.
// No floating point is used anywhere in the library.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Bad input / violated precondition. CLI maps this to exit code 1.
struct domain_error : std::runtime_error {
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// An internal cross-check failed (the library caught itself being
// inconsistent). CLI maps this to exit code 2.
struct verification_error : std::runtime_error {
  explicit verification_error(const std::string& what) : std::runtime_error(what) {}
};

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }
inline bool is_integral(const Rat& r) { return den(r) == 1; }

inline int sign_of(const Int& v) { return v.sign(); }
inline int sign_of(const Rat& v) { return v.sign(); }

} // namespace dp1
