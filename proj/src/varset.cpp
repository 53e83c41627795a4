#include "higgs/varset.hpp"

#include <algorithm>

namespace higgs {

VarSet VarSet::standard(int genus, bool with_u, int formals) {
    if (genus < 0 || formals < 0) throw Error("VarSet: negative genus/formals");
    std::vector<std::string> names;
    names.reserve(2 + (with_u ? 1 : 0) + genus + formals);
    names.emplace_back("q");
    names.emplace_back("z");
    if (with_u) names.emplace_back("u");
    for (int k = 1; k <= genus; ++k) names.push_back("a" + std::to_string(k));
    for (int i = 1; i <= formals; ++i) names.push_back("z" + std::to_string(i));
    VarSet vs(std::move(names), genus);
    vs.has_u_ = with_u;
    vs.formals_ = formals;
    return vs;
}

VarSet::VarSet(std::vector<std::string> names, int genus)
    : names_(std::make_shared<const std::vector<std::string>>(std::move(names))),
      genus_(genus) {
    for (size_t i = 0; i < names_->size(); ++i)
        for (size_t j = i + 1; j < names_->size(); ++j)
            if ((*names_)[i] == (*names_)[j])
                throw Error("VarSet: duplicate variable " + (*names_)[i]);
}

int VarSet::u_index() const {
    if (!has_u_) throw Error("VarSet: u not allocated");
    return 2;
}

int VarSet::alpha_index(int k) const {
    if (k < 1 || k > genus_) throw Error("VarSet: alpha index out of range");
    return 2 + (has_u_ ? 1 : 0) + (k - 1);
}

int VarSet::formal_index(int i) const {
    if (i < 1 || i > formals_) throw Error("VarSet: formal index out of range");
    return 2 + (has_u_ ? 1 : 0) + genus_ + (i - 1);
}

int VarSet::index_of(const std::string& name) const {
    auto it = std::find(names_->begin(), names_->end(), name);
    if (it == names_->end()) return -1;
    return static_cast<int>(it - names_->begin());
}

}  // namespace higgs
