#include "tensorwalk/transforms.hpp"

namespace tensorwalk::transforms {

Sequence bt_power(const Sequence& a, long k) {
    const int n_max = static_cast<int>(a.size()) - 1;
    Sequence out(a.size());
    // Pascal row maintained across n; powers of k computed incrementally.
    std::vector<BigInt> row{1};
    for (int n = 0; n <= n_max; ++n) {
        if (n > 0) {
            row.push_back(1);
            for (int i = n - 1; i >= 1; --i) row[i] += row[i - 1];
        }
        BigInt kpow = 1;  // k^(n-i) for i = n down to 0
        BigInt s = 0;
        for (int i = n; i >= 0; --i) {
            s += kpow * row[i] * a[i];
            kpow *= k;
        }
        out[n] = s;
    }
    return out;
}

series::PowerSeries bt_series(const series::PowerSeries& g, long k) {
    using namespace series;
    const int n = g.order();
    // 1/(1-kt) and the substitution t/(1-kt), both exact to order n
    PowerSeries geom(n);
    BigInt kpow = 1;
    for (int i = 0; i <= n; ++i) {
        geom[i] = BigRational(kpow);
        kpow *= k;
    }
    PowerSeries inner(n);
    for (int i = 1; i <= n; ++i) inner[i] = geom[i - 1];
    return ps_mul(geom, ps_compose(g, inner));
}

}  // namespace tensorwalk::transforms
