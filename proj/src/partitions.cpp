#include "higgs/partitions.hpp"

#include <numeric>
#include <sstream>

namespace higgs {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw Error("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw Error("Partition: parts must be weakly decreasing");
    }
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
    if (i < 1) throw Error("Partition: part index is 1-based");
    return i <= length() ? parts_[static_cast<size_t>(i - 1)] : 0;
}

Partition Partition::conjugate() const {
    std::vector<int> conj;
    if (parts_.empty()) return Partition();
    conj.resize(static_cast<size_t>(parts_[0]));
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++conj[static_cast<size_t>(j)];
    return Partition(std::move(conj));
}

std::int64_t Partition::bracket() const {
    std::int64_t s = 0;
    const Partition conj = conjugate();
    for (int p : conj.parts()) s += static_cast<std::int64_t>(p) * p;
    return s;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ']';
    return os.str();
}

std::vector<Partition> gen_partitions(int n) {
    if (n < 0) throw Error("gen_partitions: n must be >= 0");
    std::vector<Partition> out;
    std::vector<int> cur;
    // descending lexicographic enumeration
    auto rec = [&](auto&& self, int rem, int maxpart) -> void {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rem, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

std::vector<Cell> cells(const Partition& mu) {
    std::vector<Cell> out;
    for (int i = 1; i <= mu.length(); ++i)
        for (int j = 1; j <= mu.part(i); ++j) out.push_back({i, j});
    return out;
}

int arm(const Partition& lambda, const Cell& c) {
    return lambda.part(c.row) - c.col;
}

int leg(const Partition& lambda, const Cell& c) {
    return lambda.conjugate().part(c.col) - c.row;
}

LaurentPoly b_poly(const Partition& mu, const VarSet& vs) {
    LaurentPoly b = LaurentPoly::zero(vs);
    for (const Cell& c : cells(mu)) {
        Monomial m = mono_one(vs.arity());
        m[static_cast<size_t>(vs.z_index())] = c.c();
        m[static_cast<size_t>(vs.q_index())] = c.r();
        b.add_term(m, 1);
    }
    return b;
}

LaurentPoly b_star(const Partition& mu, const VarSet& vs) {
    LaurentPoly b = LaurentPoly::zero(vs);
    for (const Cell& c : cells(mu)) {
        Monomial m = mono_one(vs.arity());
        m[static_cast<size_t>(vs.z_index())] = -c.c();
        m[static_cast<size_t>(vs.q_index())] = -c.r();
        b.add_term(m, 1);
    }
    return b;
}

std::vector<Monomial> z_seq(const Partition& mu, const VarSet& vs) {
    std::vector<Monomial> out;
    const int l = mu.length();
    for (int i = 1; i <= l; ++i) {
        Monomial m = mono_one(vs.arity());
        m[static_cast<size_t>(vs.q_index())] = i - l;
        m[static_cast<size_t>(vs.z_index())] = mu.part(i);
        out.push_back(std::move(m));
    }
    return out;
}

LaurentPoly n_mu(const Partition& mu, const NmuArg& arg, const VarSet& vs) {
    // u replaced by 1, alpha_k^-1 (so u^-1 = alpha_k), or the symbol u
    Monomial u = mono_one(vs.arity());
    switch (arg.kind) {
        case NmuArg::One:
            break;
        case NmuArg::AlphaInverse:
            u[static_cast<size_t>(vs.alpha_index(arg.alpha))] = -1;
            break;
        case NmuArg::U:
            u[static_cast<size_t>(vs.u_index())] = 1;
            break;
    }
    LaurentPoly prod = LaurentPoly::one(vs);
    const size_t qi = static_cast<size_t>(vs.q_index());
    const size_t zi = static_cast<size_t>(vs.z_index());
    for (const Cell& c : cells(mu)) {
        const int a = arm(mu, c), l = leg(mu, c);
        // z^a - u q^(1+l)
        LaurentPoly f1 = LaurentPoly::zero(vs);
        Monomial m1 = mono_one(vs.arity());
        m1[zi] = a;
        f1.add_term(m1, 1);
        Monomial m2 = u;
        m2[qi] += 1 + l;
        f1.add_term(m2, -1);
        // z^(a+1) - u^-1 q^l
        LaurentPoly f2 = LaurentPoly::zero(vs);
        Monomial m3 = mono_one(vs.arity());
        m3[zi] = a + 1;
        f2.add_term(m3, 1);
        Monomial m4 = mono_pow(u, -1);
        m4[qi] += l;
        f2.add_term(m4, -1);
        prod *= f1 * f2;
    }
    return prod;
}

}  // namespace higgs
