#include "higgs/ratfunc.hpp"

#include <algorithm>

namespace higgs {

namespace {

bool poly_less(const LaurentPoly& a, const LaurentPoly& b) {
    auto ia = a.terms().begin(), ea = a.terms().end();
    auto ib = b.terms().begin(), eb = b.terms().end();
    for (; ia != ea && ib != eb; ++ia, ++ib) {
        if (ia->first != ib->first) return ia->first < ib->first;
        int c = cmp(ia->second, ib->second);
        if (c != 0) return c < 0;
    }
    return ia == ea && ib != eb;
}

}  // namespace

LaurentPoly canonical_factor(const LaurentPoly& f, Monomial& unit_mono, Rational& unit_coef) {
    const int arity = f.varset().arity();
    Monomial lo = mono_one(arity);
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        if (first) {
            lo = m;
            first = false;
        } else {
            for (int i = 0; i < arity; ++i)
                lo[static_cast<size_t>(i)] = std::min(lo[static_cast<size_t>(i)], m[static_cast<size_t>(i)]);
        }
    }
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& [m, c] : f.terms()) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        num_gcd = g;
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
        den_lcm = l;
    }
    Rational content(num_gcd, den_lcm);
    content.canonicalize();
    // sign of the canonically-first (lex-smallest) term
    if (f.terms().begin()->second < 0) content = -content;

    unit_mono = lo;
    unit_coef = content;
    LaurentPoly canon(f.varset());
    Rational inv = 1 / content;
    for (const auto& [m, c] : f.terms()) canon.add_term(mono_div(m, lo), c * inv);
    return canon;
}

LaurentPoly poly_pow(const LaurentPoly& p, int k) {
    LaurentPoly r = LaurentPoly::one(p.varset());
    for (int i = 0; i < k; ++i) r *= p;
    return r;
}

FactoredRat::FactoredRat(LaurentPoly num, const std::vector<LaurentPoly>& den_factors)
    : num_(std::move(num)) {
    for (const auto& f : den_factors) push_den(f);
    reduce();
}

void FactoredRat::push_den(const LaurentPoly& factor, int mult) {
    if (mult <= 0) throw Error("push_den: multiplicity must be positive");
    require_same_varset(num_.varset(), factor.varset());
    if (factor.is_zero()) throw DenominatorVanishes("zero denominator factor");
    Monomial um;
    Rational uc;
    LaurentPoly canon = canonical_factor(factor, um, uc);
    // absorb the unit part: 1/(u*g)^mult = u^-mult / g^mult
    bool unit_trivial = uc == 1 && um == mono_one(num_.varset().arity());
    if (!unit_trivial) {
        Rational ic = 1;
        for (int i = 0; i < mult; ++i) ic /= uc;
        num_ = num_.mul_monomial(mono_pow(um, -mult), ic);
    }
    if (canon.is_one()) return;  // factor was a pure unit
    auto it = std::find_if(den_.begin(), den_.end(),
                           [&](const DenFactor& d) { return d.poly == canon; });
    if (it != den_.end()) {
        it->mult += mult;
    } else {
        den_.push_back({std::move(canon), mult});
        std::sort(den_.begin(), den_.end(),
                  [](const DenFactor& a, const DenFactor& b) { return poly_less(a.poly, b.poly); });
    }
}

FactoredRat FactoredRat::operator*(const FactoredRat& o) const {
    require_same_varset(varset(), o.varset());
    FactoredRat r(num_ * o.num_);
    r.den_ = den_;
    for (const auto& d : o.den_) {
        auto it = std::find_if(r.den_.begin(), r.den_.end(),
                               [&](const DenFactor& e) { return e.poly == d.poly; });
        if (it != r.den_.end())
            it->mult += d.mult;
        else
            r.den_.push_back(d);
    }
    std::sort(r.den_.begin(), r.den_.end(),
              [](const DenFactor& a, const DenFactor& b) { return poly_less(a.poly, b.poly); });
    r.reduce();
    return r;
}

FactoredRat FactoredRat::operator*(const LaurentPoly& p) const {
    FactoredRat r(num_ * p);
    r.den_ = den_;
    r.reduce();
    return r;
}

FactoredRat FactoredRat::operator*(const Rational& c) const {
    FactoredRat r(num_ * c);
    r.den_ = c == 0 ? std::vector<DenFactor>{} : den_;
    return r;
}

FactoredRat FactoredRat::operator-() const {
    FactoredRat r(-num_);
    r.den_ = den_;
    return r;
}

FactoredRat FactoredRat::add_impl(const FactoredRat& o) const {
    require_same_varset(varset(), o.varset());
    // common denominator: max multiplicity per canonical factor
    std::vector<DenFactor> common = den_;
    for (const auto& d : o.den_) {
        auto it = std::find_if(common.begin(), common.end(),
                               [&](const DenFactor& e) { return e.poly == d.poly; });
        if (it != common.end())
            it->mult = std::max(it->mult, d.mult);
        else
            common.push_back(d);
    }
    auto cofactor = [&](const std::vector<DenFactor>& den) {
        LaurentPoly cof = LaurentPoly::one(varset());
        for (const auto& c : common) {
            int have = 0;
            auto it = std::find_if(den.begin(), den.end(),
                                   [&](const DenFactor& e) { return e.poly == c.poly; });
            if (it != den.end()) have = it->mult;
            cof *= poly_pow(c.poly, c.mult - have);
        }
        return cof;
    };
    FactoredRat r(num_ * cofactor(den_) + o.num_ * cofactor(o.den_));
    r.den_ = std::move(common);
    std::sort(r.den_.begin(), r.den_.end(),
              [](const DenFactor& a, const DenFactor& b) { return poly_less(a.poly, b.poly); });
    return r;
}

FactoredRat FactoredRat::operator+(const FactoredRat& o) const {
    FactoredRat r = add_impl(o);
    r.reduce();
    return r;
}

FactoredRat FactoredRat::sum(const std::vector<FactoredRat>& parts, const VarSet& vs) {
    FactoredRat acc = FactoredRat::zero(vs);
    for (const auto& p : parts) acc = acc.add_impl(p);
    acc.reduce();
    return acc;
}

void FactoredRat::reduce() {
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    bool progress = true;
    while (progress) {
        progress = false;
        for (auto& d : den_) {
            while (d.mult > 0) {
                auto q = exact_div(num_, d.poly);
                if (!q) break;
                num_ = std::move(*q);
                --d.mult;
                progress = true;
            }
        }
        den_.erase(std::remove_if(den_.begin(), den_.end(),
                                  [](const DenFactor& d) { return d.mult == 0; }),
                   den_.end());
    }
}

std::variant<LaurentPoly, NotPolynomial> FactoredRat::to_poly() const {
    FactoredRat r = *this;
    r.reduce();
    if (r.den_.empty()) return std::move(r.num_);
    return NotPolynomial{std::move(r.den_)};
}

LaurentPoly FactoredRat::to_poly_or_throw(const std::string& what) const {
    auto v = to_poly();
    if (auto* p = std::get_if<LaurentPoly>(&v)) return std::move(*p);
    const auto& res = std::get<NotPolynomial>(v).residual;
    std::string msg = what + ": not a Laurent polynomial; surviving factors:";
    for (const auto& d : res)
        msg += "\n  (" + d.poly.to_text() + ")^" + std::to_string(d.mult);
    throw Error(msg);
}

LaurentPoly FactoredRat::den_product() const {
    LaurentPoly r = LaurentPoly::one(varset());
    for (const auto& d : den_) r *= poly_pow(d.poly, d.mult);
    return r;
}

FactoredRat rf_frobenius(const FactoredRat& a, std::int64_t k) {
    FactoredRat r(frobenius(a.num_, k));
    for (const auto& d : a.den_) r.push_den(frobenius(d.poly, k), d.mult);
    r.reduce();
    return r;
}

FactoredRat rf_specialize(const FactoredRat& a, const std::map<int, Binding>& bindings) {
    FactoredRat r(specialize(a.num_, bindings));
    for (const auto& d : a.den_) {
        LaurentPoly f = specialize(d.poly, bindings);
        if (f.is_zero())
            throw DenominatorVanishes("specialization kills denominator factor (" +
                                      d.poly.to_text() + ")");
        r.push_den(f, d.mult);
    }
    r.reduce();
    return r;
}

bool rf_equal(const FactoredRat& a, const FactoredRat& b) {
    require_same_varset(a.varset(), b.varset());
    // cancel shared factors before cross-multiplying
    LaurentPoly lhs = a.num_, rhs = b.num_;
    for (const auto& d : a.den_) {
        int shared = 0;
        auto it = std::find_if(b.den_.begin(), b.den_.end(),
                               [&](const DenFactor& e) { return e.poly == d.poly; });
        if (it != b.den_.end()) shared = std::min(d.mult, it->mult);
        rhs *= poly_pow(d.poly, d.mult - shared);
    }
    for (const auto& d : b.den_) {
        int shared = 0;
        auto it = std::find_if(a.den_.begin(), a.den_.end(),
                               [&](const DenFactor& e) { return e.poly == d.poly; });
        if (it != a.den_.end()) shared = std::min(d.mult, it->mult);
        lhs *= poly_pow(d.poly, d.mult - shared);
    }
    return lhs == rhs;
}

}  // namespace higgs
