#ifndef FPURE_FROBENIUS_HPP
#define FPURE_FROBENIUS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "regularity.hpp"

namespace fpure {

/// True when q = p^e for some e >= 0.
inline bool is_power_of(std::int64_t q, std::int64_t p) {
    if (q < 1) return false;
    while (q % p == 0) q /= p;
    return q == 1;
}

inline void require_power_of_p(std::int64_t q, const Ring& ring) {
    if (!is_power_of(q, ring.characteristic())) {
        throw DomainError(std::to_string(q) + " is not a power of p = " + std::to_string(ring.characteristic()));
    }
    if (q > kMaxExponent) throw OverflowError("q exceeds 2^31 - 1");
}

/// I^[q] = (g^q | g a generator of I).
inline Ideal bracket_power(const Ideal& ideal, std::int64_t q) {
    require_power_of_p(q, *ideal.ring());
    std::vector<Polynomial> gens;
    for (const auto& g : ideal.generators()) gens.push_back(frobenius_power(g, q));
    return Ideal(ideal.ring(), std::move(gens));
}

/// m^[q] = (x_0^q, ..., x_n^q).
inline Ideal bracket_power_of_maximal(const RingPtr& ring, std::int64_t q) {
    require_power_of_p(q, *ring);
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < ring->nvars(); ++i) {
        Monomial m(ring->nvars());
        m.set(i, static_cast<Exponent>(q));
        gens.push_back(Polynomial::monomial(ring, m));
    }
    return Ideal(ring, std::move(gens));
}

/// Membership in the monomial ideal m^[q] is decided term by term.
inline bool in_bracket_power_of_maximal(const Polynomial& g, std::int64_t q) {
    for (const auto& t : g.terms()) {
        if (!t.mono.in_bracket_power(q)) return false;
    }
    return true;
}

/// Smallest ideal K with h ∈ K^[p]. Writes h = Σ_ε g_ε^p x^ε over residue
/// vectors ε ∈ {0..p-1}^{n+1} and returns (g_ε).
inline Ideal frobenius_root_principal(const Polynomial& h) {
    const auto& ring = h.ring();
    const Exponent p = static_cast<Exponent>(ring->characteristic());
    std::map<std::vector<Exponent>, std::vector<Term>> parts;
    for (const auto& t : h.terms()) {
        std::vector<Exponent> residue(ring->nvars());
        Monomial quotient(ring->nvars());
        for (std::size_t i = 0; i < ring->nvars(); ++i) {
            residue[i] = t.mono[i] % p;
            quotient.set(i, t.mono[i] / p);
        }
        parts[residue].push_back({quotient, t.coeff});
    }
    std::vector<Polynomial> gens;
    for (auto& [residue, terms] : parts) gens.push_back(Polynomial::from_terms(ring, std::move(terms)));
    return Ideal(ring, std::move(gens));
}

/// Root of a general ideal as the sum of the roots of its generators.
/// Auxiliary: only principal roots enter the computation of tau.
inline Ideal frobenius_root(const Ideal& ideal) {
    Ideal acc = Ideal::zero(ideal.ring());
    for (const auto& g : ideal.generators()) acc = ideal_sum(acc, frobenius_root_principal(g));
    return acc;
}

/// Graded complete intersection S/(f_1, ..., f_c) over F_p.
class CompleteIntersection {
public:
    CompleteIntersection(RingPtr ring, std::vector<Polynomial> forms)
        : ring_(std::move(ring)), forms_(std::move(forms)), product_(Polynomial::constant(ring_, 1)) {
        const auto nvars = ring_->nvars();
        if (forms_.empty() || forms_.size() > nvars) {
            throw DomainError("a complete intersection needs between 1 and n+1 forms");
        }
        for (const auto& f : forms_) {
            if (!same_ring(f.ring(), ring_)) throw RingMismatch();
            if (f.is_zero() || !f.is_homogeneous() || f.degree() < 1) {
                throw DomainError("form is not homogeneous of positive degree: " + to_string(f));
            }
            degrees_.push_back(f.degree());
            total_degree_ += f.degree();
            product_ *= f;
        }
        ideal_ = Ideal(ring_, forms_);
        check_regular_sequence();
    }

    const RingPtr& ring() const noexcept { return ring_; }
    std::uint32_t characteristic() const noexcept { return ring_->characteristic(); }
    /// n, so that S = k[x_0..x_n].
    std::int64_t n() const noexcept { return static_cast<std::int64_t>(ring_->nvars()) - 1; }
    std::int64_t codimension() const noexcept { return static_cast<std::int64_t>(forms_.size()); }
    const std::vector<Polynomial>& forms() const noexcept { return forms_; }
    const std::vector<std::int64_t>& degrees() const noexcept { return degrees_; }
    /// d = Σ deg f_j.
    std::int64_t total_degree() const noexcept { return total_degree_; }
    /// f = Π f_j.
    const Polynomial& product() const noexcept { return product_; }
    const Ideal& ideal() const noexcept { return ideal_; }

private:
    // A sequence of forms is regular iff the Hilbert series of the quotient is
    // Π(1 - t^{d_j}) / (1 - t)^{n+1}; compared through degree d.
    void check_regular_sequence() const {
        auto expected = complete_intersection_series(degrees_, ring_->nvars(), total_degree_);
        for (std::int64_t s = 0; s <= total_degree_; ++s) {
            auto actual = hilbert_function(ideal_, s);
            if (actual != expected[static_cast<std::size_t>(s)]) {
                throw NotRegularSequence("forms are not a regular sequence: dim (S/J)_" + std::to_string(s) + " = " +
                                         std::to_string(actual) + ", expected " +
                                         std::to_string(expected[static_cast<std::size_t>(s)]));
            }
        }
    }

    RingPtr ring_;
    std::vector<Polynomial> forms_;
    std::vector<std::int64_t> degrees_;
    std::int64_t total_degree_ = 0;
    Polynomial product_;
    Ideal ideal_{ring_};
};

struct TauResult {
    Ideal tau;
    bool is_unit = false;
    bool is_m_primary = false;
    /// max{s : m^s ⊄ tau} = reg(S/tau), present when tau is m-primary and proper.
    std::optional<std::int64_t> ell;
};

/// tau = J + root(f^{p-1}), the smallest ideal containing J with f^{p-1} ∈ tau^[p].
inline TauResult compute_tau(const CompleteIntersection& ci) {
    const auto p = ci.characteristic();
    auto fp1 = pow(ci.product(), p - 1);
    Ideal tau = canonical(ideal_sum(ci.ideal(), frobenius_root_principal(fp1)));

    if (!contains(tau, ci.ideal()) || !ideal_membership(fp1, bracket_power(tau, p))) {
        throw Error("internal error: tau fails its defining conditions");
    }

    TauResult result{tau, false, false, std::nullopt};
    result.is_unit = is_unit_ideal(tau);
    if (!result.is_unit) {
        result.is_m_primary = is_zero_dimensional(tau);
        if (result.is_m_primary) result.ell = regularity_artinian(tau);
    }
    return result;
}

/// Fedder's criterion at the homogeneous maximal ideal: F-pure iff f^{p-1} ∉ m^[p].
inline bool fedder_test_at_m(const CompleteIntersection& ci) {
    const auto p = ci.characteristic();
    return !in_bracket_power_of_maximal(pow(ci.product(), p - 1), p);
}

enum class TauClass {
    everywhere_f_pure,
    isolated_non_f_pure_point,
    non_f_pure_locus_positive_dimensional,
};

inline const char* to_string(TauClass c) {
    switch (c) {
        case TauClass::everywhere_f_pure: return "everywhere_f_pure";
        case TauClass::isolated_non_f_pure_point: return "isolated_non_f_pure_point";
        case TauClass::non_f_pure_locus_positive_dimensional: return "non_f_pure_locus_positive_dimensional";
    }
    return "unknown";
}

inline TauClass classify(const TauResult& tau) {
    if (tau.is_unit) return TauClass::everywhere_f_pure;
    if (tau.is_m_primary) return TauClass::isolated_non_f_pure_point;
    return TauClass::non_f_pure_locus_positive_dimensional;
}

/// The non-F-pure locus is V(tau).
inline TauClass isolated_non_f_pure_test(const CompleteIntersection& ci) { return classify(compute_tau(ci)); }

}  // namespace fpure

#endif
