#include "tensorwalk/fixtures.hpp"

#include <stdexcept>

namespace tensorwalk::fixtures {

using holonomic::DiffOp;
using holonomic::PRecurrence;

namespace {

// (coefficients ascending in n)
PRecurrence t3_rec() {
    PRecurrence r;
    r.coeff = {
        IntPoly({28, 42, 14}),    // 14(n+1)(n+2)
        IntPoly({150, 113, 19}),  // (n+2)(19n+75)
        IntPoly({44, 30, 4}),     // 2(n+2)(2n+11)
        IntPoly({-72, -17, -1}),  // -(n+8)(n+9)
    };
    return r;
}

PRecurrence e3_rec() {
    PRecurrence r;
    r.coeff = {
        IntPoly({24, 32, 8}),    // 8(n+3)(n+1)
        IntPoly({88, 53, 7}),    // 7n^2+53n+88
        IntPoly({-56, -15, -1}), // -(n+8)(n+7)
    };
    return r;
}

PRecurrence s3_rec() {
    PRecurrence r;
    r.coeff = {
        IntPoly({36, 45, 9}),     // 9(n+1)(n+4)
        IntPoly({-122, -72, -10}),// -2(5n^2+36n+61)
        IntPoly({30, 11, 1}),     // (n+5)(n+6)
    };
    return r;
}

PRecurrence quadrant_rec(long k) {
    PRecurrence r;
    const long k2 = k * k;
    // (k-3)^2 (k-2) (k+6) (n+1)(n+2)
    const long c0 = (k - 3) * (k - 3) * (k - 2) * (k + 6);
    r.coeff.push_back(IntPoly({2 * c0, 3 * c0, c0}));
    // -2(k-3)(n+2)(-60 + 8k + 8k^2 + n(-18 + 3k + 2k^2))
    {
        const long a = -60 + 8 * k + 8 * k2;  // constant in n
        const long b = -18 + 3 * k + 2 * k2;  // linear in n
        // -2(k-3) * (n+2)(a + b n) = -2(k-3) * (2a + (a+2b) n + b n^2)
        const long f = -2 * (k - 3);
        r.coeff.push_back(IntPoly({f * 2 * a, f * (a + 2 * b), f * b}));
    }
    // -342 - 174k + 114k^2 + n(-195 - 70k + 54k^2) + n^2(-27 - 6k + 6k^2)
    r.coeff.push_back(IntPoly({-342 - 174 * k + 114 * k2, -195 - 70 * k + 54 * k2, -27 - 6 * k + 6 * k2}));
    // 2(57 - 70k + n(16 - 24k) + n^2(1 - 2k))
    r.coeff.push_back(IntPoly({2 * (57 - 70 * k), 2 * (16 - 24 * k), 2 * (1 - 2 * k)}));
    // (n+7)(n+8)
    r.coeff.push_back(IntPoly({56, 15, 1}));
    return r;
}

IntPoly poly_P() { return IntPoly({1, 15, 46, 66, 28}); }
IntPoly poly_P1() { return IntPoly({-9, -131, -90, 1592, 5744, 7560, 3136}); }
IntPoly poly_P2() {
    return IntPoly({-7, -244, -2663, -11138, -4560, 146508, 665620, 1498264, 2014088, 1626800,
                    719712, 131712});
}

DiffOp op_L6() {
    return holonomic::diffop_from_polys({
        IntPoly({0, 8064, 25200, 20160}),
        IntPoly({-35, 16, 1646, 4540, 3360}).multiplied_by(36),
        IntPoly({0, -77, 54, 2442, 6100, 4200}).multiplied_by(36),
        IntPoly({0, 0, -273, 268, 7556, 17400, 11200}).multiplied_by(6),
        IntPoly({0, 0, 0, -61, 79, 1616, 3475, 2100}).multiplied_by(6),
        // 3 t^4 (2t+1)(168 t^3 + 211 t^2 + 40 t - 11)
        (IntPoly({1, 2}) * IntPoly({-11, 40, 211, 168}) * IntPoly::monomial(3, 4)),
        // t^5 (t+1)(7t-1)(2t+1)^2
        (IntPoly({1, 1}) * IntPoly({-1, 7}) * IntPoly({1, 2}) * IntPoly({1, 2}) *
         IntPoly::monomial(1, 5)),
    });
}

DiffOp op_Q() {
    return holonomic::diffop_from_polys({
        IntPoly({30, 48}),
        IntPoly({0, 42, 72}),    // 6(12t+7)t
        IntPoly({0, 0, 13, 24}), // (24t+13)t^2
        IntPoly({0, 0, 0, 1, 2}),// (2t+1)t^3
    });
}

DiffOp op_L3() {
    return holonomic::diffop_from_polys({
        IntPoly({0, 112, 84}),               // 28t(3t+4)
        IntPoly({-42, 36, 338, 252}),
        IntPoly({1, 1}) * IntPoly({-7, 22, 63}) * IntPoly::monomial(2, 1),  // 2t(t+1)(63t^2+22t-7)
        IntPoly({1, 2}) * IntPoly({-1, 7}) * IntPoly({1, 1}) * IntPoly::monomial(1, 2),
    });
}

DiffOp op_L2() {
    const IntPoly p = poly_P();
    DiffOp op;
    op.coeff = {
        RationalFunction(poly_P2(), p * p),
        RationalFunction(IntPoly({0, 1, 1}) * poly_P1(), p),  // t(t+1) P1 / P
        RationalFunction(IntPoly({1, 2}) * IntPoly({-1, 7}) * IntPoly({1, 1}) * IntPoly::monomial(1, 2)),
    };
    return op;
}

DiffOp op_L1() {
    // d - (d/dt (P/t^5)) / (P/t^5) = d - (t P' - 5P)/(t P)
    const IntPoly p = poly_P();
    const IntPoly num = IntPoly({0, 1}) * p.derivative() - p.multiplied_by(5);
    DiffOp op;
    op.coeff = {-RationalFunction(num, IntPoly({0, 1}) * p), RationalFunction(IntPoly::constant(1))};
    return op;
}

DiffOp e3_ode() {
    return holonomic::diffop_from_polys({
        IntPoly({30, -42, -24}),        // 6(5 - 7t - 4t^2)
        IntPoly({0, 12, -46, -40}),     // 2t(6 - 23t - 20t^2)
        IntPoly({1, 1}) * IntPoly({1, -8}) * IntPoly::monomial(1, 2),  // t^2 (1+t)(1-8t)
    });
}

DiffOp s3_ode() {
    return holonomic::diffop_from_polys({
        IntPoly::constant(72),
        IntPoly({-61, 117}).multiplied_by(4),
        IntPoly({15, -184, 234}).multiplied_by(2),
        IntPoly({-6, 7}) * IntPoly({-1, 9}) * IntPoly::monomial(2, 1),  // 2t(-6+7t)(-1+9t)
        IntPoly({-1, 1}) * IntPoly({-1, 9}) * IntPoly::monomial(1, 2), // (t-1) t^2 (9t-1)
    });
}

}  // namespace

PRecurrence paper_recurrence(const std::string& name, int k) {
    if (name == "t3_rec") return t3_rec();
    if (name == "e3_rec") return e3_rec();
    if (name == "s3_rec") return s3_rec();
    if (name == "quadrant_rec") {
        if (k < 0) throw std::invalid_argument("quadrant_rec needs k >= 0");
        return quadrant_rec(k);
    }
    throw std::invalid_argument("unknown recurrence: " + name);
}

DiffOp paper_diffop(const std::string& name) {
    if (name == "L6") return op_L6();
    if (name == "Q") return op_Q();
    if (name == "L3") return op_L3();
    if (name == "L2") return op_L2();
    if (name == "L1") return op_L1();
    if (name == "P") return holonomic::diffop_from_polys({poly_P()});
    if (name == "P1") return holonomic::diffop_from_polys({poly_P1()});
    if (name == "P2") return holonomic::diffop_from_polys({poly_P2()});
    if (name == "e3_ode") return e3_ode();
    if (name == "s3_ode") return s3_ode();
    throw std::invalid_argument("unknown differential operator: " + name);
}

std::variant<PRecurrence, DiffOp> paper_operator(const std::string& name, int k) {
    if (name == "t3_rec" || name == "e3_rec" || name == "s3_rec" || name == "quadrant_rec")
        return paper_recurrence(name, k);
    return paper_diffop(name);
}

std::vector<std::string> paper_operator_names() {
    return {"t3_rec", "e3_rec", "s3_rec", "quadrant_rec", "L6",     "Q",
            "L3",     "L2",     "L1",     "P",            "P1",     "P2",
            "e3_ode", "s3_ode"};
}

namespace {
Sequence seq_of(std::initializer_list<long> v) { return Sequence(v.begin(), v.end()); }
}  // namespace

const Sequence& fig1_row(int i) {
    static const Sequence rows[3] = {
        seq_of({1, 0, 1, 1, 4, 10, 35, 120, 455, 1792}),
        seq_of({1, 1, 2, 5, 15, 51, 191, 772, 3320, 15032}),
        seq_of({1, 2, 5, 15, 52, 202, 859, 3930, 19095, 97566}),
    };
    if (i < 0 || i > 2) throw std::invalid_argument("fig1_row index out of range");
    return rows[i];
}

const Sequence& fig2_row(int k) {
    static const Sequence rows[4] = {
        seq_of({1, 0, 2, 2, 12, 30, 130, 462, 1946}),
        seq_of({1, 1, 3, 9, 33, 131, 561, 2535, 11971}),
        seq_of({1, 2, 6, 22, 92, 422, 2074, 10754, 58202}),
        seq_of({1, 3, 11, 47, 225, 1173, 6529, 38265, 233795}),
    };
    if (k < 0 || k > 3) throw std::invalid_argument("fig2_row index out of range");
    return rows[k];
}

const Sequence& a108304_prefix() {
    // counts for [0], [1], ..., [10]; the third octant row shifted by one
    static const Sequence s = seq_of({1, 1, 2, 5, 15, 52, 202, 859, 3930, 19095, 97566});
    return s;
}

Sequence catalan_prefix(int n_max) {
    Sequence out;
    for (int n = 0; n <= n_max; ++n) out.push_back(binomial(2 * n, n) / (n + 1));
    return out;
}

Sequence catalan3d_prefix(int n_max) {
    Sequence out;
    BigInt f = 1, fn = 1, fn1 = 1, fn2 = 2;  // (3n)!, n!, (n+1)!, (n+2)!
    for (int n = 0; n <= n_max; ++n) {
        if (n > 0) {
            for (int i = 3 * n - 2; i <= 3 * n; ++i) f *= i;
            fn *= n;
            fn1 *= n + 1;
            fn2 *= n + 2;
        }
        out.push_back(2 * f / (fn * fn1 * fn2));
    }
    return out;
}

Sequence c2_spin_prefix(int n_max) {
    const Sequence c = catalan_prefix(n_max + 2);
    Sequence out;
    for (int n = 0; n <= n_max; ++n) out.push_back(c[n] * c[n + 2] - c[n + 1] * c[n + 1]);
    return out;
}

}  // namespace tensorwalk::fixtures
