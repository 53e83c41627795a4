#include "higgs/mozgovoy.hpp"

#include "higgs/parallel.hpp"

namespace higgs {

namespace {

// z^e1 - c * q^e2 * alpha_k^e3 (e3 = 0 when k = 0)
LaurentPoly cell_binomial(const VarSet& vs, std::int64_t ez, std::int64_t eq,
                          int k = 0, std::int64_t ea = 0) {
    LaurentPoly f = LaurentPoly::zero(vs);
    Monomial m1 = mono_one(vs.arity());
    m1[static_cast<size_t>(vs.z_index())] = ez;
    f.add_term(m1, 1);
    Monomial m2 = mono_one(vs.arity());
    m2[static_cast<size_t>(vs.q_index())] = eq;
    if (k != 0) m2[static_cast<size_t>(vs.alpha_index(k))] = ea;
    f.add_term(m2, -1);
    return f;
}

}  // namespace

FactoredRat omega_g_term(const Partition& mu, const HiggsContext& ctx) {
    const VarSet& vs = ctx.vs;
    LaurentPoly num = LaurentPoly::one(vs);
    FactoredRat term(num);
    for (const Cell& c : cells(mu)) {
        const int a = arm(mu, c), l = leg(mu, c);
        for (int k = 1; k <= ctx.genus; ++k) {
            num *= cell_binomial(vs, a + 1, l, k, 1);    // z^(a+1) - alpha_k q^l
            num *= cell_binomial(vs, a, l + 1, k, -1);   // z^a - alpha_k^-1 q^(l+1)
        }
    }
    term = FactoredRat(num);
    for (const Cell& c : cells(mu)) {
        const int a = arm(mu, c), l = leg(mu, c);
        term.push_den(cell_binomial(vs, a + 1, l));  // z^(a+1) - q^l
        term.push_den(cell_binomial(vs, a, l + 1));  // z^a - q^(l+1)
    }
    term.reduce();
    return term;
}

TSeries omega_g_series(const HiggsContext& ctx) {
    TSeries omega = TSeries::one(ctx.vs, ctx.order);
    for (int n = 1; n <= ctx.order; ++n) {
        std::vector<Partition> mus = gen_partitions(n);
        auto terms = parallel_map<FactoredRat>(
            static_cast<int>(mus.size()), ctx.threads,
            [&](int i) { return omega_g_term(mus[static_cast<size_t>(i)], ctx); });
        omega.set_coeff(n, FactoredRat::sum(terms, ctx.vs));
    }
    return omega;
}

LaurentPoly plog_scalar(const VarSet& vs) {
    LaurentPoly one = LaurentPoly::one(vs);
    LaurentPoly q = LaurentPoly::variable(vs, vs.q_index());
    LaurentPoly z = LaurentPoly::variable(vs, vs.z_index());
    return -((one - q) * (one - z));
}

TSeries h_series(const HiggsContext& ctx) {
    return plog(omega_g_series(ctx)).scale(plog_scalar(ctx.vs));
}

LaurentPoly h_poly(const TSeries& h, int r) {
    return h.coeff(r).to_poly_or_throw("H coefficient at T^" + std::to_string(r));
}

LaurentPoly a_poly(const TSeries& h, int r) {
    const VarSet& vs = h.varset();
    std::map<int, Binding> at_z1{{vs.z_index(), Binding::to_constant(1)}};
    return specialize(h_poly(h, r), at_z1);
}

namespace {

std::int64_t e_exponent_offset(const HiggsContext& ctx, int r) {
    return 1 + static_cast<std::int64_t>(ctx.genus - 1) * r * r;
}

}  // namespace

LaurentPoly e_poly(const TSeries& h, const HiggsContext& ctx, int r) {
    LaurentPoly a = a_poly(h, r);
    const VarSet& vs = ctx.vs;
    VarSet xy(std::vector<std::string>{"x", "y"});
    const std::int64_t off = e_exponent_offset(ctx, r);
    LaurentPoly out(xy);
    for (const auto& [m, c] : a.terms()) {
        std::int64_t eq = m[static_cast<size_t>(vs.q_index())];
        std::int64_t ealpha = 0;
        for (int k = 1; k <= ctx.genus; ++k)
            ealpha += m[static_cast<size_t>(vs.alpha_index(k))];
        // q -> xy, alpha_k -> x, then multiply by (xy)^off
        out.add_term(Monomial{eq + ealpha + off, eq + off}, c);
    }
    return out;
}

LaurentPoly poincare_poly(const TSeries& h, const HiggsContext& ctx, int r) {
    LaurentPoly a = a_poly(h, r);
    const VarSet& vs = ctx.vs;
    VarSet sv(std::vector<std::string>{"s"});
    const std::int64_t off = 2 * e_exponent_offset(ctx, r);
    LaurentPoly out(sv);
    for (const auto& [m, c] : a.terms()) {
        std::int64_t eq = m[static_cast<size_t>(vs.q_index())];
        std::int64_t ealpha = 0;
        for (int k = 1; k <= ctx.genus; ++k)
            ealpha += m[static_cast<size_t>(vs.alpha_index(k))];
        out.add_term(Monomial{2 * eq + ealpha + off}, c);
    }
    return out;
}

}  // namespace higgs
