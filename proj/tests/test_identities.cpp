#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "higgs/identities.hpp"
#include "higgs/schiffmann.hpp"

using namespace higgs;
using namespace higgs::test;

namespace {

// J_mu with the a = l = 0 factors omitted and a prefactor q^(e <mu,mu>).
// The engine uses e = g - 1; keeping e free lets the tests pin down the
// exact discrepancy of the e = 1 variant.
FactoredRat j_side(const Partition& mu, int genus, std::int64_t e, const VarSet& vs) {
    FactoredRat lhs(term(vs, 1, {{"q", e * mu.bracket()}}));
    for (const Cell& c : cells(mu)) {
        const std::int64_t a = arm(mu, c), l = leg(mu, c);
        LaurentPoly cellnum = LaurentPoly::one(vs);
        for (int k = 1; k <= genus; ++k) {
            Monomial m1 = mono(vs, {{"q", -1 - l}, {"z", a}});
            m1[static_cast<size_t>(vs.alpha_index(k))] = 1;
            cellnum *= one_minus(vs, m1);
            Monomial m2 = mono(vs, {{"q", -l}, {"z", a}});
            m2[static_cast<size_t>(vs.alpha_index(k))] = -1;
            cellnum *= one_minus(vs, m2);
        }
        lhs = lhs * cellnum;
        lhs.push_den(one_minus(vs, mono(vs, {{"q", -1 - l}, {"z", a}})));
        if (!(a == 0 && l == 0))
            lhs.push_den(one_minus(vs, mono(vs, {{"q", -l}, {"z", a}})));
    }
    return lhs;
}

// prod_k N_mu(alpha_k^-1) / N_mu(1) * A B C D at z_i = z_i(mu)
FactoredRat factored_side(const Partition& mu, int genus, const VarSet& vs) {
    const size_t qi = static_cast<size_t>(vs.q_index());
    std::vector<Monomial> zs = z_seq(mu, vs);
    const int l = mu.length();
    LaurentPoly rnum = LaurentPoly::one(vs);
    for (int k = 1; k <= genus; ++k) rnum *= n_mu(mu, NmuArg::alpha_inverse(k), vs);
    FactoredRat rhs(rnum);
    for (const LaurentPoly& f : n_mu_factors(mu, NmuArg::one(), vs)) rhs.push_den(f);
    LaurentPoly num = LaurentPoly::one(vs);
    for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j) {
            Monomial r = mono_div(zs[static_cast<size_t>(i)], zs[static_cast<size_t>(j)]);
            for (int k = 1; k <= genus; ++k) {
                Monomial ra = r;
                ra[static_cast<size_t>(vs.alpha_index(k))] = -1;
                num *= one_minus(vs, ra);
                Monomial qra = ra;
                qra[qi] += 1;
                rhs.push_den(one_minus(vs, qra));
            }
            if (!(j == i + 1 && mu.part(i + 1) == mu.part(j + 1))) {
                Monomial qr = r;
                qr[qi] += 1;
                num *= one_minus(vs, qr);
            }
            rhs.push_den(one_minus(vs, r));
        }
    for (int i = 0; i < l; ++i) {
        num *= one_minus(vs, zs[static_cast<size_t>(i)]);
        for (int k = 1; k <= genus; ++k) {
            Monomial a1 = mono_one(vs.arity());
            a1[static_cast<size_t>(vs.alpha_index(k))] = -1;
            num *= one_minus(vs, a1);
            Monomial az = mono_mul(a1, zs[static_cast<size_t>(i)]);
            rhs.push_den(one_minus(vs, az));
        }
    }
    return rhs * num;
}

}  // namespace

TEST_CASE("e_direct and e_closed examples") {
    VarSet vs = VarSet::standard(0);
    CHECK(e_direct(Partition(), Partition(), vs).is_zero());
    CHECK(e_closed(Partition(), Partition(), vs).is_zero());

    // E_{emptyset,nu} = B_nu^*
    for (int n = 1; n <= 4; ++n)
        for (const Partition& nu : gen_partitions(n))
            CHECK(e_direct(Partition(), nu, vs) == b_star(nu, vs));

    LaurentPoly qz = term(vs, 1, {{"q", 1}}) + term(vs, 1, {{"z", 1}});
    CHECK(e_direct(Partition({1}), Partition({1}), vs) == qz);
    CHECK(e_closed(Partition({1}), Partition({1}), vs) == qz);
}

TEST_CASE("arm-leg sum identity") {
    for (int m = 0; m <= 4; ++m)
        for (const Partition& mu : gen_partitions(m))
            for (int n = 0; n <= 4; ++n)
                for (const Partition& nu : gen_partitions(n))
                    CHECK(check_arm_leg_sum(mu, nu).pass);
}

TEST_CASE("corrupted cell weight breaks the arm-leg sum") {
    // negative control: a sign flip on one exponent must be detected
    VarSet vs = VarSet::standard(0);
    Partition mu({2, 1}), nu({3});
    LaurentPoly bad = e_direct(mu, nu, vs);
    bad.add_term(mono(vs, {{"q", 1}}), -1);
    bad.add_term(mono(vs, {{"q", -1}}), 1);
    CHECK(bad != e_closed(mu, nu, vs));
}

TEST_CASE("sum of the z sequence") {
    for (int n = 0; n <= 8; ++n)
        for (const Partition& mu : gen_partitions(n)) CHECK(check_sumz(mu).pass);
}

TEST_CASE("ratio sum identity") {
    CHECK(check_ratio_sum(Partition({1})).pass);
    CHECK(check_ratio_sum(Partition({1, 1})).pass);
    for (int n = 0; n <= 6; ++n)
        for (const Partition& mu : gen_partitions(n)) CHECK(check_ratio_sum(mu).pass);
}

TEST_CASE("arm-leg product identity") {
    for (int n = 0; n <= 4; ++n)
        for (const Partition& mu : gen_partitions(n))
            CHECK(check_armleg_product(mu).pass);
}

TEST_CASE("j factorization at small sizes") {
    for (int g = 0; g <= 2; ++g)
        for (int n = 0; n <= 3; ++n)
            for (const Partition& mu : gen_partitions(n))
                CHECK(check_j_factorization(mu, g).pass);
}

TEST_CASE("prefactor exponent g-1 is forced") {
    // With prefactor q^(1 <mu,mu>) instead of q^((g-1) <mu,mu>) the two
    // sides differ by exactly q^((2-g) <mu,mu>). Frozen so the discrepancy
    // of the naive variant stays documented.
    for (int g = 0; g <= 3; ++g) {
        VarSet vs = VarSet::standard(g);
        for (const Partition& mu : {Partition({1}), Partition({2}), Partition({2, 1})}) {
            FactoredRat rhs = factored_side(mu, g, vs);
            CHECK(rf_equal(j_side(mu, g, g - 1, vs), rhs));
            FactoredRat shifted =
                rhs * FactoredRat(term(vs, 1, {{"q", (2 - g) * mu.bracket()}}));
            CHECK(rf_equal(j_side(mu, g, 1, vs), shifted));
            if (g != 2) CHECK(!rf_equal(j_side(mu, g, 1, vs), rhs));
        }
    }
}
