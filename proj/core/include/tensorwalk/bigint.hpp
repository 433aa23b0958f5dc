#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace tensorwalk {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// A finite prefix of an integer sequence, index 0..n.
using Sequence = std::vector<BigInt>;

std::string to_decimal(const BigInt& x);
BigInt parse_decimal(std::string_view s);

/// "p/q" with q > 0 and gcd(p,q) = 1; plain "p" when q = 1.
std::string to_fraction_string(const BigRational& x);
BigRational parse_fraction(std::string_view s);

BigInt binomial(long n, long k);

/// Natural log of a positive big integer, good to double precision.
double log_bigint(const BigInt& x);

/// Enumeration guard: max(def, $TENSORWALK_MAX_N). Oracles refuse larger inputs.
int max_n_guard(int def);

}  // namespace tensorwalk
