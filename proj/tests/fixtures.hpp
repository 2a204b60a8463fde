// Shared lazily-built tables so the unit binary does not re-sieve per case.
#pragma once
#include "hypsum/hypersum.hpp"
#include "hypsum/sieves.hpp"

namespace fixtures {

inline const hypsum::SpfTable& spf_2k() {
    static const hypsum::SpfTable t = hypsum::build_spf(2000);
    return t;
}

inline const hypsum::SpfTable& spf_100k() {
    static const hypsum::SpfTable t = hypsum::build_spf(100000);
    return t;
}

inline const hypsum::SpfTable& spf_1m() {
    static const hypsum::SpfTable t = hypsum::build_spf(1000000);
    return t;
}

inline const hypsum::FunctionTable& omega_1m() {
    static const hypsum::FunctionTable t = hypsum::catalog("omega", spf_1m());
    return t;
}

inline const hypsum::FunctionTable& tau2_1m() {
    static const hypsum::FunctionTable t = hypsum::sieve_tau_r(spf_1m(), 2);
    return t;
}

}  // namespace fixtures
