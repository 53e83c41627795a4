#ifndef HIGGS_VERIFICATION_HPP
#define HIGGS_VERIFICATION_HPP

#include <string>

#include <json.hpp>

namespace higgs {

// One pass/fail result for one identity at one instance.
struct VerificationRecord {
    std::string check;
    nlohmann::json instance;
    bool pass = false;
    std::string detail;

    nlohmann::json to_json() const {
        return {{"check", check}, {"instance", instance}, {"pass", pass}, {"detail", detail}};
    }
};

}  // namespace higgs

#endif
