#include "tensorwalk/laurent.hpp"

#include <stdexcept>

namespace tensorwalk::laurent {

void LaurentPoly::add_term(const Exponents& e, const BigInt& c) {
    if (static_cast<int>(e.size()) != vars_)
        throw std::invalid_argument("exponent vector length does not match variable count");
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.vars() != b.vars()) throw std::invalid_argument("variable count mismatch");
    LaurentPoly r = a;
    for (const auto& [e, c] : b.terms()) r.add_term(e, c);
    return r;
}

LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.vars() != b.vars()) throw std::invalid_argument("variable count mismatch");
    LaurentPoly r(a.vars());
    Exponents e(a.vars());
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            for (int i = 0; i < a.vars(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

BigInt coefficient(const LaurentPoly& a, const Exponents& e) {
    if (static_cast<int>(e.size()) != a.vars())
        throw std::invalid_argument("exponent vector length does not match variable count");
    const auto it = a.terms().find(e);
    return it == a.terms().end() ? BigInt(0) : it->second;
}

BigInt constant_term(const LaurentPoly& a) {
    return coefficient(a, Exponents(a.vars(), 0));
}

CTSpec::CTSpec(LaurentPoly d, LaurentPoly k) : delta(std::move(d)), kernel(std::move(k)) {
    if (delta.vars() != kernel.vars())
        throw std::invalid_argument("delta and kernel have different variable counts");
}

Sequence ct_sequence(const CTSpec& spec, int n_max) {
    if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
    Sequence out;
    out.reserve(n_max + 1);
    LaurentPoly cur = spec.delta;
    out.push_back(constant_term(cur));
    for (int n = 1; n <= n_max; ++n) {
        cur = lp_mul(cur, spec.kernel);
        out.push_back(constant_term(cur));
    }
    return out;
}

namespace {

LaurentPoly from_terms(int vars, std::initializer_list<std::pair<Exponents, long>> ts) {
    LaurentPoly p(vars);
    for (const auto& [e, c] : ts) p.add_term(e, c);
    return p;
}

// Kernel for the 7-step octant model: the seven hexagonal-lattice weights.
LaurentPoly g2_kernel() {
    return from_terms(2, {{{0, 0}, 1},
                          {{1, 0}, 1},
                          {{0, 1}, 1},
                          {{1, 1}, 1},
                          {{-1, 0}, 1},
                          {{0, -1}, 1},
                          {{-1, -1}, 1}});
}

// Alternating boundary factor for the octant model.
LaurentPoly g2_delta() {
    LaurentPoly inner = from_terms(2, {{{2, 3}, 1},
                                       {{1, 3}, -1},
                                       {{-1, 2}, 1},
                                       {{-2, 1}, -1},
                                       {{-3, -1}, 1},
                                       {{-3, -2}, -1},
                                       {{-2, -3}, 1},
                                       {{-1, -3}, -1},
                                       {{1, -2}, 1},
                                       {{2, -1}, -1},
                                       {{3, 1}, 1},
                                       {{3, 2}, -1}});
    return lp_mul(from_terms(2, {{{-2, -3}, 1}}), inner);
}

LaurentPoly quadrant_kernel(int k) {
    LaurentPoly p = from_terms(2, {{{1, 0}, 1},
                                   {{0, 1}, 1},
                                   {{-1, 0}, 1},
                                   {{0, -1}, 1},
                                   {{1, -1}, 1},
                                   {{-1, 1}, 1}});
    p.add_term({0, 0}, k);
    return p;
}

LaurentPoly quadrant_delta() {
    return from_terms(2, {{{0, 0}, 1},
                          {{2, -1}, -1},
                          {{3, 0}, 1},
                          {{2, 2}, -1},
                          {{0, 3}, 1},
                          {{-1, 2}, -1}});
}

}  // namespace

CTSpec builtin_ct_spec(const std::string& name, int k) {
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    if (name == "g2") {
        if (k != 0) throw std::invalid_argument("g2 spec takes no k");
        return CTSpec(g2_delta(), g2_kernel());
    }
    if (name == "quadrant") return CTSpec(quadrant_delta(), quadrant_kernel(k));
    if (name == "sl2") {
        if (k != 0) throw std::invalid_argument("sl2 spec takes no k");
        return CTSpec(from_terms(1, {{{0}, 1}, {{-2}, -1}}), from_terms(1, {{{1}, 1}, {{-1}, 1}}));
    }
    throw std::invalid_argument("unknown CT spec: " + name);
}

}  // namespace tensorwalk::laurent
