#ifndef HIGGS_JSON_IO_HPP
#define HIGGS_JSON_IO_HPP

#include <json.hpp>

#include "higgs/ratfunc.hpp"
#include "higgs/series.hpp"

namespace higgs {

// Polynomial: array of {"exp": {var: int, ...}, "coef": "p/q"} in canonical
// term order; only nonzero exponents are listed.
nlohmann::json poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const nlohmann::json& j, const VarSet& vs);

// {"num": <poly>, "den": [{"factor": <poly>, "mult": n}]}
nlohmann::json rf_to_json(const FactoredRat& a);
FactoredRat rf_from_json(const nlohmann::json& j, const VarSet& vs);

nlohmann::json series_to_json(const TSeries& s);
TSeries series_from_json(const nlohmann::json& j, const VarSet& vs);

nlohmann::json varset_to_json(const VarSet& vs);

}  // namespace higgs

#endif
