#ifndef HIGGS_TESTS_HELPERS_HPP
#define HIGGS_TESTS_HELPERS_HPP

#include <initializer_list>
#include <random>
#include <utility>

#include "higgs/ratfunc.hpp"

namespace higgs::test {

inline Monomial mono(const VarSet& vs,
                     std::initializer_list<std::pair<const char*, std::int64_t>> exps) {
    Monomial m = mono_one(vs.arity());
    for (const auto& [name, e] : exps) {
        int i = vs.index_of(name);
        if (i < 0) throw Error(std::string("unknown variable ") + name);
        m[static_cast<size_t>(i)] = e;
    }
    return m;
}

inline LaurentPoly term(const VarSet& vs, const Rational& c,
                        std::initializer_list<std::pair<const char*, std::int64_t>> exps) {
    return LaurentPoly::term(vs, mono(vs, exps), c);
}

// 1 - m
inline LaurentPoly one_minus(const VarSet& vs, const Monomial& m) {
    LaurentPoly f = LaurentPoly::one(vs);
    f.add_term(m, -1);
    return f;
}

inline LaurentPoly random_poly(const VarSet& vs, std::mt19937& rng, int max_terms = 4,
                               int emax = 2) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<std::int64_t> exp(-emax, emax);
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    LaurentPoly p = LaurentPoly::zero(vs);
    const int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        Monomial m = mono_one(vs.arity());
        for (auto& e : m) e = exp(rng);
        Rational c(num(rng), den(rng));
        c.canonicalize();  // the two-argument mpq_class ctor does not reduce
        p.add_term(m, c);
    }
    return p;
}

inline LaurentPoly random_nonzero_poly(const VarSet& vs, std::mt19937& rng,
                                       int max_terms = 4, int emax = 2) {
    for (;;) {
        LaurentPoly p = random_poly(vs, rng, max_terms, emax);
        if (!p.is_zero()) return p;
    }
}

}  // namespace higgs::test

#endif
