#include "higgs/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace higgs {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("exponent overflow in addition");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("exponent overflow in multiplication");
    return r;
}

Rational rational_pow(const Rational& base, std::int64_t e) {
    if (e == 0) return Rational(1);
    if (base == 0) {
        if (e < 0) throw Error("negative power of zero in specialize");
        return Rational(0);
    }
    mpz_class num = base.get_num(), den = base.get_den();
    if (e < 0) {
        std::swap(num, den);
        e = -e;
        if (num < 0) {  // keep denominator positive
            num = -num;
            den = -den;
        }
    }
    mpz_class pn, pd;
    mpz_pow_ui(pn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(pd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(e));
    Rational r(pn, pd);
    r.canonicalize();
    return r;
}

}  // namespace

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
    return r;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], -b[i]);
    return r;
}

Monomial mono_pow(const Monomial& a, std::int64_t k) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = checked_mul(a[i], k);
    return r;
}

Monomial mono_one(int arity) { return Monomial(static_cast<size_t>(arity), 0); }

LaurentPoly::LaurentPoly(VarSet vs, const Rational& c) : vs_(std::move(vs)) {
    if (c != 0) terms_.emplace(mono_one(vs_.arity()), c);
}

LaurentPoly LaurentPoly::term(const VarSet& vs, Monomial m, const Rational& c) {
    if (static_cast<int>(m.size()) != vs.arity())
        throw Error("monomial arity mismatch");
    LaurentPoly p(vs);
    if (c != 0) p.terms_.emplace(std::move(m), c);
    return p;
}

LaurentPoly LaurentPoly::variable(const VarSet& vs, int var, std::int64_t e) {
    Monomial m = mono_one(vs.arity());
    m[static_cast<size_t>(var)] = e;
    return term(vs, std::move(m), 1);
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->second == 1 &&
           terms_.begin()->first == mono_one(vs_.arity());
}

void LaurentPoly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(vs_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    require_same_varset(vs_, o.vs_);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    require_same_varset(vs_, o.vs_);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    require_same_varset(a.vs_, b.vs_);
    LaurentPoly r(a.vs_);
    // iterate the smaller factor outside
    const LaurentPoly& x = a.terms_.size() <= b.terms_.size() ? a : b;
    const LaurentPoly& y = a.terms_.size() <= b.terms_.size() ? b : a;
    for (const auto& [mx, cx] : x.terms_)
        for (const auto& [my, cy] : y.terms_)
            r.add_term(mono_mul(mx, my), cx * cy);
    return r;
}

LaurentPoly LaurentPoly::operator*(const Rational& c) const {
    LaurentPoly r(vs_);
    if (c == 0) return r;
    for (const auto& [m, co] : terms_) r.terms_.emplace(m, co * c);
    return r;
}

LaurentPoly LaurentPoly::mul_monomial(const Monomial& m, const Rational& c) const {
    LaurentPoly r(vs_);
    if (c == 0) return r;
    for (const auto& [mo, co] : terms_) r.terms_.emplace(mono_mul(mo, m), co * c);
    return r;
}

std::string LaurentPoly::to_text() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first_line = true;
    for (const auto& [m, c] : terms_) {
        if (!first_line) os << '\n';
        first_line = false;
        os << rational_to_string(c);
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            os << " * " << vs_.name(static_cast<int>(i));
            if (m[i] != 1) os << '^' << m[i];
        }
    }
    return os.str();
}

namespace {

// componentwise minimum exponent over all terms
Monomial min_exponents(const LaurentPoly::TermMap& terms, int arity) {
    Monomial lo = mono_one(arity);
    bool first = true;
    for (const auto& [m, c] : terms) {
        if (first) {
            lo = m;
            first = false;
        } else {
            for (size_t i = 0; i < lo.size(); ++i) lo[i] = std::min(lo[i], m[i]);
        }
    }
    return lo;
}

}  // namespace

std::optional<LaurentPoly> exact_div(const LaurentPoly& n, const LaurentPoly& d) {
    require_same_varset(n.varset(), d.varset());
    if (d.is_zero()) throw Error("division by zero polynomial");
    const VarSet& vs = n.varset();
    if (n.is_zero()) return LaurentPoly::zero(vs);

    // Shift to ordinary polynomials; in the Laurent ring monomials are units,
    // so divisibility is unchanged and the quotient shift is the difference
    // of the two content monomials.
    Monomial shift_n = min_exponents(n.terms(), vs.arity());
    Monomial shift_d = min_exponents(d.terms(), vs.arity());

    LaurentPoly::TermMap rem;
    for (const auto& [m, c] : n.terms()) rem.emplace(mono_div(m, shift_n), c);
    LaurentPoly::TermMap div;
    for (const auto& [m, c] : d.terms()) div.emplace(mono_div(m, shift_d), c);

    const auto& dlead = *div.rbegin();
    LaurentPoly q(vs);
    Monomial qshift = mono_div(shift_n, shift_d);
    while (!rem.empty()) {
        const auto& rlead = *rem.rbegin();
        Monomial t(rlead.first.size());
        for (size_t i = 0; i < t.size(); ++i) {
            t[i] = rlead.first[i] - dlead.first[i];
            if (t[i] < 0) return std::nullopt;
        }
        Rational tc = rlead.second / dlead.second;
        q.add_term(mono_mul(t, qshift), tc);
        for (const auto& [m, c] : div) {
            Monomial mm = mono_mul(t, m);
            Rational cc = -tc * c;
            auto [it, inserted] = rem.emplace(std::move(mm), cc);
            if (!inserted) {
                it->second += cc;
                if (it->second == 0) rem.erase(it);
            }
        }
    }
    return q;
}

LaurentPoly frobenius(const LaurentPoly& p, std::int64_t k) {
    if (k < 1) throw Error("frobenius: k must be >= 1");
    if (k == 1) return p;
    LaurentPoly r(p.varset());
    for (const auto& [m, c] : p.terms()) r.add_term(mono_pow(m, k), c);
    return r;
}

LaurentPoly specialize(const LaurentPoly& p, const std::map<int, Binding>& bindings) {
    const VarSet& vs = p.varset();
    for (const auto& [var, b] : bindings) {
        if (var < 0 || var >= vs.arity()) throw Error("specialize: bad variable index");
        if (b.is_monomial) {
            if (static_cast<int>(b.mono.size()) != vs.arity())
                throw Error("specialize: binding arity mismatch");
            if (b.mono[static_cast<size_t>(var)] != 0)
                throw Error("specialize: self-referential binding for " + vs.name(var));
        }
    }
    LaurentPoly r(vs);
    for (const auto& [m, c] : p.terms()) {
        Monomial out = mono_one(vs.arity());
        Rational coef = c;
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            auto it = bindings.find(static_cast<int>(i));
            if (it == bindings.end()) {
                out[i] = checked_add(out[i], m[i]);
            } else if (it->second.is_monomial) {
                out = mono_mul(out, mono_pow(it->second.mono, m[i]));
            } else {
                coef *= rational_pow(it->second.value, m[i]);
            }
        }
        r.add_term(out, coef);
    }
    return r;
}

}  // namespace higgs
