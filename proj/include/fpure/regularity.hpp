#ifndef FPURE_REGULARITY_HPP
#define FPURE_REGULARITY_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "groebner.hpp"

namespace fpure {

/// reg(S/I) for an m-primary ideal: the top degree of a standard monomial,
/// equivalently the unique a with m^a ⊄ I and m^{a+1} ⊆ I.
inline std::int64_t regularity_artinian(const Ideal& ideal) {
    if (is_unit_ideal(ideal)) throw DomainError("regularity of S/S is undefined");
    if (!is_zero_dimensional(ideal)) throw DomainError("regularity requires an m-primary ideal");
    auto basis = standard_monomials(ideal);
    std::int64_t top = 0;
    for (const auto& m : basis) top = std::max(top, m.degree());
    return top;
}

/// m^ell ⊆ I, tested on the monomials of degree ell.
inline bool power_containment(const Ideal& ideal, std::int64_t ell) {
    if (ell < 0) throw DomainError("power_containment: negative exponent");
    const auto& basis = ideal.groebner();
    for (const auto& m : monomials_of_degree(*ideal.ring(), ell)) {
        if (!normal_form(Polynomial::monomial(ideal.ring(), m), basis).is_zero()) return false;
    }
    return true;
}

/// Coefficients 0..upto of prod_j (1 - t^{d_j}) / (1 - t)^{nvars}.
inline std::vector<std::int64_t> complete_intersection_series(const std::vector<std::int64_t>& degrees,
                                                              std::size_t nvars, std::int64_t upto) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(upto + 1), 0);
    c[0] = 1;
    for (auto d : degrees) {
        for (std::int64_t s = upto; s >= d; --s) c[s] -= c[s - d];
    }
    for (std::size_t k = 0; k < nvars; ++k) {
        for (std::int64_t s = 1; s <= upto; ++s) c[s] += c[s - 1];
    }
    return c;
}

}  // namespace fpure

#endif
