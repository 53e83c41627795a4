#include "higgs/series.hpp"

namespace higgs {

namespace {

// mpq_class(n, d) does not reduce to lowest terms; every fraction built
// here must be canonical or exact comparisons downstream break.
Rational frac(long n, long d) {
    Rational r(n, d);
    r.canonicalize();
    return r;
}

}  // namespace

TSeries::TSeries(VarSet vs, int order) : vs_(std::move(vs)), order_(order) {
    if (order < 0) throw Error("TSeries: order must be >= 0");
    coeffs_.assign(static_cast<size_t>(order + 1), FactoredRat::zero(vs_));
}

const FactoredRat& TSeries::coeff(int r) const {
    if (r < 0 || r > order_) throw Error("TSeries: coefficient index out of range");
    return coeffs_[static_cast<size_t>(r)];
}

void TSeries::set_coeff(int r, FactoredRat c) {
    if (r < 0 || r > order_) throw Error("TSeries: coefficient index out of range");
    require_same_varset(vs_, c.varset());
    coeffs_[static_cast<size_t>(r)] = std::move(c);
}

TSeries TSeries::one(const VarSet& vs, int order) {
    TSeries s(vs, order);
    s.set_coeff(0, FactoredRat::one(vs));
    return s;
}

TSeries series_mul(const TSeries& a, const TSeries& b) {
    require_same_varset(a.varset(), b.varset());
    if (a.order() != b.order()) throw Error("series_mul: order mismatch");
    TSeries r(a.varset(), a.order());
    for (int n = 0; n <= a.order(); ++n) {
        std::vector<FactoredRat> parts;
        for (int k = 0; k <= n; ++k) {
            if (a.coeff(k).is_zero() || b.coeff(n - k).is_zero()) continue;
            parts.push_back(a.coeff(k) * b.coeff(n - k));
        }
        r.set_coeff(n, FactoredRat::sum(parts, a.varset()));
    }
    return r;
}

TSeries TSeries::scale(const LaurentPoly& p) const {
    TSeries r(vs_, order_);
    for (int n = 0; n <= order_; ++n) r.set_coeff(n, coeffs_[static_cast<size_t>(n)] * p);
    return r;
}

bool TSeries::equals(const TSeries& o) const {
    if (vs_ != o.vs_ || order_ != o.order_) return false;
    for (int n = 0; n <= order_; ++n)
        if (!rf_equal(coeff(n), o.coeff(n))) return false;
    return true;
}

TSeries series_log(const TSeries& f) {
    if (!(f.coeff(0).is_polynomial() && f.coeff(0).num().is_one()))
        throw Error("series_log: constant term must be 1");
    const int R = f.order();
    TSeries L(f.varset(), R);
    // L_r = F_r - (1/r) sum_{k=1}^{r-1} k L_k F_{r-k}
    for (int r = 1; r <= R; ++r) {
        std::vector<FactoredRat> parts;
        parts.push_back(f.coeff(r));
        for (int k = 1; k < r; ++k) {
            if (L.coeff(k).is_zero() || f.coeff(r - k).is_zero()) continue;
            parts.push_back(L.coeff(k) * f.coeff(r - k) * frac(-k, r));
        }
        L.set_coeff(r, FactoredRat::sum(parts, f.varset()));
    }
    return L;
}

TSeries series_exp(const TSeries& g) {
    if (!g.coeff(0).is_zero()) throw Error("series_exp: constant term must be 0");
    const int R = g.order();
    TSeries E(g.varset(), R);
    E.set_coeff(0, FactoredRat::one(g.varset()));
    // E_r = (1/r) sum_{k=1}^{r} k G_k E_{r-k}
    for (int r = 1; r <= R; ++r) {
        std::vector<FactoredRat> parts;
        for (int k = 1; k <= r; ++k) {
            if (g.coeff(k).is_zero() || E.coeff(r - k).is_zero()) continue;
            parts.push_back(g.coeff(k) * E.coeff(r - k) * frac(k, r));
        }
        E.set_coeff(r, FactoredRat::sum(parts, g.varset()));
    }
    return E;
}

TSeries series_frobenius(const TSeries& f, int k) {
    if (k < 1) throw Error("series_frobenius: k must be >= 1");
    TSeries r(f.varset(), f.order());
    for (int n = 0; k * n <= f.order(); ++n)
        r.set_coeff(k * n, rf_frobenius(f.coeff(n), k));
    return r;
}

int mobius(int n) {
    if (n < 1) throw Error("mobius: n must be >= 1");
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            result = -result;
        }
    }
    if (n > 1) result = -result;
    return result;
}

TSeries plog(const TSeries& f) {
    TSeries L = series_log(f);
    const int R = f.order();
    TSeries out(f.varset(), R);
    // (pLog f)_r = sum_{k | r} (mobius(k)/k) psi_k(L_{r/k})
    for (int r = 1; r <= R; ++r) {
        std::vector<FactoredRat> parts;
        for (int k = 1; k <= r; ++k) {
            if (r % k != 0) continue;
            const int mu = mobius(k);
            if (mu == 0) continue;
            const FactoredRat& c = L.coeff(r / k);
            if (c.is_zero()) continue;
            parts.push_back(rf_frobenius(c, k) * frac(mu, k));
        }
        out.set_coeff(r, FactoredRat::sum(parts, f.varset()));
    }
    return out;
}

TSeries pexp(const TSeries& g) {
    if (!g.coeff(0).is_zero()) throw Error("pexp: constant term must be 0");
    const int R = g.order();
    TSeries acc(g.varset(), R);
    // sum_k psi_k(g)/k, truncated at R
    for (int r = 1; r <= R; ++r) {
        std::vector<FactoredRat> parts;
        for (int k = 1; k <= r; ++k) {
            if (r % k != 0) continue;
            const FactoredRat& c = g.coeff(r / k);
            if (c.is_zero()) continue;
            parts.push_back(rf_frobenius(c, k) * frac(1, k));
        }
        acc.set_coeff(r, FactoredRat::sum(parts, g.varset()));
    }
    return series_exp(acc);
}

}  // namespace higgs
