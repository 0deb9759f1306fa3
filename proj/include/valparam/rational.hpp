#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace valparam {

// Arbitrary-precision integers and rationals. mpq_class keeps its value in
// canonical form (coprime, positive denominator) after every arithmetic
// operation; the constructors below canonicalize explicitly.
using Int = mpz_class;
using Rat = mpq_class;

Rat make_rat(const Int& num, const Int& den);
Rat parse_rat(std::string_view text);
std::string to_string(const Rat& r);
std::string to_string(const Int& z);

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

}  // namespace valparam
