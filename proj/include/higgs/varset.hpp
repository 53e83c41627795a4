#ifndef HIGGS_VARSET_HPP
#define HIGGS_VARSET_HPP

#include <memory>
#include <string>
#include <vector>

#include "higgs/rational.hpp"

namespace higgs {

// Ordered, immutable list of variable names. The standard layout is
// q, z, [u], alpha_1..alpha_g, [z_1..z_n]; u and the formal z_i are only
// allocated when a computation needs them.
class VarSet {
public:
    static VarSet standard(int genus, bool with_u = false, int formals = 0);
    explicit VarSet(std::vector<std::string> names, int genus = 0);

    int arity() const { return static_cast<int>(names_->size()); }
    int genus() const { return genus_; }
    bool has_u() const { return has_u_; }
    int formals() const { return formals_; }

    const std::string& name(int i) const { return (*names_)[i]; }
    const std::vector<std::string>& names() const { return *names_; }

    int q_index() const { return 0; }
    int z_index() const { return 1; }
    int u_index() const;
    int alpha_index(int k) const;   // k = 1..genus
    int formal_index(int i) const;  // i = 1..formals

    int index_of(const std::string& name) const;  // -1 if absent

    bool operator==(const VarSet& o) const { return *names_ == *o.names_; }
    bool operator!=(const VarSet& o) const { return !(*this == o); }

private:
    std::shared_ptr<const std::vector<std::string>> names_;
    int genus_ = 0;
    bool has_u_ = false;
    int formals_ = 0;
};

inline void require_same_varset(const VarSet& a, const VarSet& b) {
    if (a != b) throw VarSetMismatch("varset mismatch");
}

}  // namespace higgs

#endif
