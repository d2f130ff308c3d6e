#pragma once

#include <cmath>
#include <map>
#include <string>

#include "pfz/legacy.hpp"

namespace frozen {

// Expected outputs of the bundled counterexamples, evaluated by hand as
// rationals and radicals.
inline const std::map<std::string, pfz::LegacyTriple>& counterexamples() {
    static const double r3 = 2.0 / (std::sqrt(3.0) + 1.0);
    static const double rs = std::sqrt(0.5);
    static const std::map<std::string, pfz::LegacyTriple> m{
        {"garg-add", {13.0 / 16, 1.0 / 8, 1.0 / 8}},
        {"garg-mul", {3.0 / 16, 1.0 / 2, 1.0 / 2}},
        {"garg-scalar", {1.0 / 4, 2.0 / 3, 2.0 / 3}},
        {"garg-power", {2.0 / 3, 1.0 / 4, 1.0 / 8}},
        {"ashraf-mul", {1.0 / 8, 1.0 / 8, 13.0 / 16}},
        {"ashraf-power", {2.0 / 3, 2.0 / 3, 1.0 / 4}},
        {"jspy-dombi-mul", {1.0 / 7, 3.0 / 4, 3.0 / 4}},
        {"kaa-einstein-mul", {1.0 / 25, 3.0 / 4, 3.0 / 4}},
        {"kaa-einstein-scalar", {0.0, r3, r3}},
        {"wei-meet", {0.0, 1.0, 1.0}},
        {"wei-scalar", {0.0, rs, rs}},
        {"wei-power", {0.0, 3.0 / 4, 3.0 / 4}},
        {"wei-pfwg", {0.0, 0.7, 0.7}},
        {"lin-iol-add", {0.0, 3.0 / 4, 3.0 / 4}},
        {"lin-iol-mul", {0.0, 3.0 / 4, 3.0 / 4}},
        {"lin-iol-scalar", {0.0, 3.0 / 4, 3.0 / 4}},
        {"lin-iol-power", {0.0, 3.0 / 4, 3.0 / 4}},
        {"pfmm", {0.0, 0.7, 0.7}},
        {"pfwmm", {0.0, 0.7, 0.7}},
        {"pfbm", {0.0, 0.7, 0.7}},
        {"pfnwbm", {0.0, 0.7, 0.7}},
    };
    return m;
}

}  // namespace frozen
