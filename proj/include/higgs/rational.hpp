#ifndef HIGGS_RATIONAL_HPP
#define HIGGS_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace higgs {

// Coefficient field Q. mpq_class keeps values in lowest terms with a
// positive denominator, which is exactly the canonical form we need.
using Rational = mpq_class;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct VarSetMismatch : Error {
    using Error::Error;
};

struct OverflowError : Error {
    using Error::Error;
};

struct DenominatorVanishes : Error {
    using Error::Error;
};

inline std::string rational_to_string(const Rational& r) {
    return r.get_str();  // "p" or "p/q"
}

inline Rational rational_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw Error("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

}  // namespace higgs

#endif
