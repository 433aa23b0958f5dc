#include "tensorwalk/bigint.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace tensorwalk {

std::string to_decimal(const BigInt& x) { return x.str(); }

BigInt parse_decimal(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    return BigInt(std::string(s));
}

std::string to_fraction_string(const BigRational& x) {
    const BigInt num = boost::multiprecision::numerator(x);
    const BigInt den = boost::multiprecision::denominator(x);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

BigRational parse_fraction(std::string_view s) {
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) return BigRational(parse_decimal(s));
    const BigInt num = parse_decimal(s.substr(0, slash));
    const BigInt den = parse_decimal(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return BigRational(num, den);
}

BigInt binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;  // exact at each step
    }
    return r;
}

double log_bigint(const BigInt& x) {
    if (x <= 0) throw std::domain_error("log_bigint requires a positive argument");
    const auto bits = boost::multiprecision::msb(x);  // floor(log2 x)
    if (bits <= 52) return std::log(x.convert_to<double>());
    const unsigned shift = static_cast<unsigned>(bits) - 52;
    const double top = (x >> shift).convert_to<double>();
    return std::log(top) + shift * std::log(2.0);
}

int max_n_guard(int def) {
    if (const char* env = std::getenv("TENSORWALK_MAX_N")) {
        const int v = std::atoi(env);
        if (v > def) return v;
    }
    return def;
}

}  // namespace tensorwalk
