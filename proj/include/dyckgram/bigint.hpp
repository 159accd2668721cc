#pragma once

#include <gmpxx.h>

#include <string>

namespace dyckgram {

using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const BigInt& v) { return v.get_str(); }
inline std::string to_string(const Rational& v) { return v.get_str(); }

}  // namespace dyckgram
