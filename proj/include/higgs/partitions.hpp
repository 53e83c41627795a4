#ifndef HIGGS_PARTITIONS_HPP
#define HIGGS_PARTITIONS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "higgs/laurent.hpp"

namespace higgs {

// Weakly decreasing positive parts; the empty partition is allowed.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;        // |mu|
    int length() const { return static_cast<int>(parts_.size()); }  // l(mu)
    int part(int i) const;   // mu_i with mu_i = 0 beyond the length (i is 1-based)

    Partition conjugate() const;
    // <mu,mu> = sum of squared conjugate parts
    std::int64_t bracket() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    std::vector<int> parts_;
};

struct Cell {
    int row = 1;  // 1-based
    int col = 1;
    int c() const { return col - 1; }
    int r() const { return row - 1; }
};

// All partitions of n, reverse-lex order (starts with (n), ends with (1^n)).
std::vector<Partition> gen_partitions(int n);

std::vector<Cell> cells(const Partition& mu);

// arm/leg for any cell in the positive quadrant; negative outside the diagram
int arm(const Partition& lambda, const Cell& c);
int leg(const Partition& lambda, const Cell& c);

// B_mu = sum over cells of z^c q^r, in the given varset
LaurentPoly b_poly(const Partition& mu, const VarSet& vs);
// B_mu with q -> 1/q, z -> 1/z
LaurentPoly b_star(const Partition& mu, const VarSet& vs);

// z_i(mu) = q^(i - l(mu)) z^(mu_i) for i = 1..l(mu)
std::vector<Monomial> z_seq(const Partition& mu, const VarSet& vs);

// The argument of N_mu: a symbol or the constant 1.
struct NmuArg {
    enum Kind { One, AlphaInverse, U } kind = One;
    int alpha = 0;  // for AlphaInverse: which alpha_k

    static NmuArg one() { return {}; }
    static NmuArg alpha_inverse(int k) { return {AlphaInverse, k}; }
    static NmuArg u() { return {U, 0}; }
};

// N_mu(u) = prod over cells (z^a - u q^(1+l)) (z^(a+1) - u^-1 q^l),
// with u replaced by the given argument.
LaurentPoly n_mu(const Partition& mu, const NmuArg& arg, const VarSet& vs);

}  // namespace higgs

#endif
