#include "tensorwalk/intpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace tensorwalk {

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    c_.assign(coeffs.begin(), coeffs.end());
    normalize();
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { normalize(); }

IntPoly IntPoly::constant(BigInt c) {
    IntPoly p;
    if (c != 0) p.c_.push_back(std::move(c));
    return p;
}

IntPoly IntPoly::monomial(BigInt c, int degree) {
    IntPoly p;
    if (c != 0) {
        p.c_.assign(degree + 1, BigInt(0));
        p.c_[degree] = std::move(c);
    }
    return p;
}

void IntPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt IntPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[i];
}

const BigInt& IntPoly::leading() const {
    if (is_zero()) throw std::domain_error("zero polynomial has no leading coefficient");
    return c_.back();
}

BigInt IntPoly::eval(const BigInt& x) const {
    BigInt r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

BigRational IntPoly::eval_rational(const BigRational& x) const {
    BigRational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + BigRational(*it);
    return r;
}

IntPoly IntPoly::derivative() const {
    std::vector<BigInt> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
    return IntPoly(std::move(d));
}

IntPoly IntPoly::shifted(long k) const {
    // Horner on p(x) with x := (n + k)
    IntPoly r;
    IntPoly x_plus_k({k, 1});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        r = r * x_plus_k + IntPoly::constant(*it);
    return r;
}

BigInt IntPoly::content() const {
    BigInt g = 0;
    for (const auto& c : c_) g = boost::multiprecision::gcd(g, c);
    if (!is_zero() && leading() < 0) g = -g;
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return {};
    return divided_by(content());
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> r(std::max(a.c_.size(), b.c_.size()), BigInt(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly IntPoly::operator-() const {
    std::vector<BigInt> r(c_);
    for (auto& x : r) x = -x;
    return IntPoly(std::move(r));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPoly(std::move(r));
}

IntPoly IntPoly::multiplied_by(const BigInt& c) const {
    std::vector<BigInt> r(c_);
    for (auto& x : r) x *= c;
    return IntPoly(std::move(r));
}

IntPoly IntPoly::divided_by(const BigInt& c) const {
    if (c == 0) throw std::domain_error("division by zero");
    std::vector<BigInt> r(c_);
    for (auto& x : r) {
        if (x % c != 0) throw std::domain_error("inexact scalar division of polynomial");
        x /= c;
    }
    return IntPoly(std::move(r));
}

std::string IntPoly::str(std::string_view var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const BigInt& c = c_[i];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        const BigInt a = boost::multiprecision::abs(c);
        if (a != 1 || i == 0) os << a.str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

namespace {

// Pseudo-division: on return scale * a = q * b + r with deg r < deg b. The
// scale is the product of leading-coefficient multiplications actually
// applied (degree can drop by more than one per round).
BigInt pseudo_divmod(const IntPoly& a, const IntPoly& b, IntPoly& q, IntPoly& r) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    q = {};
    r = a;
    BigInt scale = 1;
    const int db = b.degree();
    const BigInt& lb = b.leading();
    while (!r.is_zero() && r.degree() >= db) {
        const int k = r.degree() - db;
        IntPoly term = IntPoly::monomial(r.leading(), k);
        q = q.multiplied_by(lb) + term;
        r = r.multiplied_by(lb) - term * b;
        scale *= lb;
    }
    return scale;
}

}  // namespace

IntPoly poly_div_exact(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.is_zero()) return {};
    IntPoly q, r;
    const BigInt scale = pseudo_divmod(a, b, q, r);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    // scale * a == q * b, so q must be divisible by scale when b | a
    return q.divided_by(scale);
}

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
    IntPoly u = a.primitive_part(), v = b.primitive_part();
    if (u.is_zero()) return v.is_zero() ? IntPoly{} : v;
    if (v.is_zero()) return u;
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        IntPoly q, r;
        pseudo_divmod(u, v, q, r);
        u = v;
        v = r.is_zero() ? IntPoly{} : r.primitive_part();
    }
    return u.leading() < 0 ? -u : u;
}

RationalFunction::RationalFunction(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    reduce();
}

void RationalFunction::reduce() {
    if (num_.is_zero()) {
        den_ = IntPoly::constant(1);
        return;
    }
    const IntPoly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = poly_div_exact(num_, g);
        den_ = poly_div_exact(den_, g);
    }
    BigInt cn = num_.content(), cd = den_.content();
    const BigInt cg = boost::multiprecision::gcd(boost::multiprecision::abs(cn), boost::multiprecision::abs(cd));
    if (cg > 1) {
        num_ = num_.divided_by(cg);
        den_ = den_.divided_by(cg);
    }
    if (den_.leading() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RationalFunction RationalFunction::derivative() const {
    // (n/d)' = (n'd - nd') / d^2
    return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw std::domain_error("division by zero rational function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RationalFunction::str(std::string_view var) const {
    if (is_polynomial()) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

}  // namespace tensorwalk
