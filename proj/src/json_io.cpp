#include "higgs/json_io.hpp"

namespace higgs {

using nlohmann::json;

json poly_to_json(const LaurentPoly& p) {
    json out = json::array();
    for (const auto& [m, c] : p.terms()) {
        json exp = json::object();
        for (size_t i = 0; i < m.size(); ++i)
            if (m[i] != 0) exp[p.varset().name(static_cast<int>(i))] = m[i];
        out.push_back({{"exp", exp}, {"coef", rational_to_string(c)}});
    }
    return out;
}

LaurentPoly poly_from_json(const json& j, const VarSet& vs) {
    if (!j.is_array()) throw Error("poly_from_json: expected array");
    LaurentPoly p(vs);
    for (const auto& t : j) {
        Monomial m = mono_one(vs.arity());
        for (const auto& [name, e] : t.at("exp").items()) {
            int idx = vs.index_of(name);
            if (idx < 0) throw Error("poly_from_json: unknown variable " + name);
            m[static_cast<size_t>(idx)] = e.get<std::int64_t>();
        }
        p.add_term(m, rational_from_string(t.at("coef").get<std::string>()));
    }
    return p;
}

json rf_to_json(const FactoredRat& a) {
    json den = json::array();
    for (const auto& d : a.den())
        den.push_back({{"factor", poly_to_json(d.poly)}, {"mult", d.mult}});
    return {{"num", poly_to_json(a.num())}, {"den", den}};
}

FactoredRat rf_from_json(const json& j, const VarSet& vs) {
    FactoredRat r(poly_from_json(j.at("num"), vs));
    for (const auto& d : j.at("den"))
        r.push_den(poly_from_json(d.at("factor"), vs), d.at("mult").get<int>());
    return r;
}

json series_to_json(const TSeries& s) {
    json coeffs = json::array();
    for (int r = 0; r <= s.order(); ++r) coeffs.push_back(rf_to_json(s.coeff(r)));
    return {{"order", s.order()}, {"coeffs", coeffs}};
}

TSeries series_from_json(const json& j, const VarSet& vs) {
    TSeries s(vs, j.at("order").get<int>());
    const auto& coeffs = j.at("coeffs");
    for (int r = 0; r <= s.order(); ++r)
        s.set_coeff(r, rf_from_json(coeffs.at(static_cast<size_t>(r)), vs));
    return s;
}

json varset_to_json(const VarSet& vs) {
    return json(vs.names());
}

}  // namespace higgs
