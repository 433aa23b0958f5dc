#pragma once

#include "tensorwalk/bigint.hpp"

#include <map>
#include <vector>

namespace tensorwalk::laurent {

/// Exponent vector of a Laurent monomial; length = variable count of the
/// owning polynomial (1 or 2 for everything shipped here).
using Exponents = std::vector<int>;

/// Sparse multivariate Laurent polynomial with exact big-integer
/// coefficients. Stored coefficients are never zero.
class LaurentPoly {
public:
    explicit LaurentPoly(int vars) : vars_(vars) {}

    int vars() const { return vars_; }
    const std::map<Exponents, BigInt>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    /// Adds c * x^e, erasing the term if the sum cancels.
    void add_term(const Exponents& e, const BigInt& c);

    bool operator==(const LaurentPoly&) const = default;

private:
    int vars_;
    std::map<Exponents, BigInt> terms_;
};

LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b);

/// Stored coefficient at e, or 0.
BigInt coefficient(const LaurentPoly& a, const Exponents& e);
BigInt constant_term(const LaurentPoly& a);

/// The pair whose constant-term sequence n |-> [x^0] delta * kernel^n is
/// extracted by ct_sequence.
struct CTSpec {
    LaurentPoly delta;
    LaurentPoly kernel;

    CTSpec(LaurentPoly d, LaurentPoly k);
    int vars() const { return delta.vars(); }
};

/// Terms 0..n_max of the constant-term sequence. Incremental: the running
/// product delta * kernel^n is kept and multiplied by kernel once per term.
Sequence ct_sequence(const CTSpec& spec, int n_max);

/// Shipped specs: "g2" (octant), "quadrant" (k zero-weight copies folded into
/// the kernel's constant term), "sl2" (half-line; kernel x + 1/x, see README).
CTSpec builtin_ct_spec(const std::string& name, int k = 0);

}  // namespace tensorwalk::laurent
