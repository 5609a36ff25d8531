#ifndef FPURE_INVARIANTS_HPP
#define FPURE_INVARIANTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frobenius.hpp"
#include "limits.hpp"

namespace fpure {

namespace detail {

struct ColonDegree {
    Ideal colon;
    std::int64_t m_q;
};

inline ColonDegree colon_and_m_q(const Ideal& ideal, std::int64_t q) {
    if (ideal.is_zero()) throw DomainError("M_q is defined for nonzero ideals only");
    if (is_unit_ideal(ideal)) throw DomainError("M_q is defined for proper ideals only");
    require_power_of_p(q, *ideal.ring());
    auto K = colon(bracket_power_of_maximal(ideal.ring(), q), ideal);
    if (is_unit_ideal(K)) return {K, 0};
    std::optional<std::int64_t> best;
    for (const auto& g : K.groebner().elements()) {
        if (in_bracket_power_of_maximal(g, q)) continue;
        auto d = g.degree();
        if (!best || d < *best) best = d;
    }
    if (!best) throw Error("internal error: (m^[q] : I) equals m^[q]");
    return {K, *best};
}

}  // namespace detail

/// M_q(I) = max{ℓ : (m^[q] : I) ⊆ m^[q] + m^ℓ}, read off the reduced basis
/// of the colon: the least degree of a basis element not inside m^[q].
inline std::int64_t m_q(const Ideal& ideal, std::int64_t q) { return detail::colon_and_m_q(ideal, q).m_q; }

/// (n+1)q - M_q(I) = reg(S/I) + (n+1), the certificate that q is large enough.
inline bool stabilization_check(const Ideal& ideal, std::int64_t q) {
    const auto nv = static_cast<std::int64_t>(ideal.ring()->nvars());
    return nv * q - m_q(ideal, q) == regularity_artinian(ideal) + nv;
}

/// Smallest q = p^e, e >= 1, passing stabilization_check, up to the cap.
inline std::int64_t stable_q(const Ideal& ideal, const Limits& limits = {}) {
    const std::int64_t p = ideal.ring()->characteristic();
    const auto cap = limits.q_cap(p);
    for (std::int64_t q = p; q <= cap; q *= p) {
        if (stabilization_check(ideal, q)) return q;
        if (q > kMaxExponent / p) break;
    }
    throw ResourceLimit("M_q did not stabilize for q <= " + std::to_string(cap));
}

/// a(R) = d - (n+1).
inline std::int64_t a_invariant(const CompleteIntersection& ci) { return ci.total_degree() - (ci.n() + 1); }

/// a(R) - reg(S/tau): injectivity holds strictly below this degree.
inline std::int64_t thmA_bound(const CompleteIntersection& ci, const TauResult& tau) {
    if (tau.is_unit || !tau.is_m_primary || !tau.ell) {
        throw DomainError("the injectivity bound needs tau m-primary and proper");
    }
    return a_invariant(ci) - *tau.ell;
}

namespace detail {
inline void check_ci_shape(std::int64_t n, std::int64_t c, std::int64_t d) {
    if (c < 1 || c > n + 1) throw DomainError("codimension must satisfy 1 <= c <= n+1");
    if (d < c) throw DomainError("total degree must be at least the codimension");
}
}  // namespace detail

/// -(n+1-c)·d.
inline std::int64_t cor_bound(std::int64_t n, std::int64_t c, std::int64_t d) {
    detail::check_ci_shape(n, c, d);
    return -(n + 1 - c) * d;
}

/// (n+1-c)(d-c).
inline std::int64_t thmB_threshold(std::int64_t n, std::int64_t c, std::int64_t d) {
    detail::check_ci_shape(n, c, d);
    return (n + 1 - c) * (d - c);
}

/// Coefficients of Π(1-t^{e_i}) Π(1-t^{d_j}) / (1-t)^{n+1} when the total
/// number of factors is n+1, which makes the series a polynomial.
inline std::vector<std::int64_t> hilbert_series_ci(const std::vector<std::int64_t>& degrees,
                                                   const std::vector<std::int64_t>& aux_degrees, std::int64_t n) {
    if (static_cast<std::int64_t>(degrees.size() + aux_degrees.size()) != n + 1) {
        throw DomainError("hilbert_series_ci needs exactly n+1 degrees");
    }
    std::vector<std::int64_t> all = degrees;
    all.insert(all.end(), aux_degrees.begin(), aux_degrees.end());
    std::int64_t top = -(n + 1);
    for (auto e : all) {
        if (e < 1) throw DomainError("degrees must be positive");
        top += e;
    }
    return complete_intersection_series(all, static_cast<std::size_t>(n + 1), top);
}

namespace detail {

inline Polynomial determinant(const std::vector<std::vector<Polynomial>>& m) {
    const std::size_t k = m.size();
    if (k == 1) return m[0][0];
    auto ring = m[0][0].ring();
    Polynomial det(ring);
    for (std::size_t col = 0; col < k; ++col) {
        if (m[0][col].is_zero()) continue;
        std::vector<std::vector<Polynomial>> minor;
        for (std::size_t r = 1; r < k; ++r) {
            std::vector<Polynomial> row;
            for (std::size_t c = 0; c < k; ++c) {
                if (c != col) row.push_back(m[r][c]);
            }
            minor.push_back(std::move(row));
        }
        auto term = m[0][col] * determinant(minor);
        det = (col % 2 == 0) ? det + term : det - term;
    }
    return det;
}

}  // namespace detail

/// All c×c minors of the Jacobian matrix (∂f_j/∂x_i), by cofactor expansion.
inline std::vector<Polynomial> jacobian_minors(const CompleteIntersection& ci) {
    const auto c = static_cast<std::size_t>(ci.codimension());
    if (c > 4) throw DomainError("Jacobian minors are limited to codimension <= 4");
    const auto nvars = ci.ring()->nvars();
    std::vector<std::vector<Polynomial>> jac(nvars);
    for (std::size_t i = 0; i < nvars; ++i) {
        for (const auto& f : ci.forms()) jac[i].push_back(partial_derivative(f, i));
    }
    std::vector<Polynomial> minors;
    std::vector<std::size_t> rows(c);
    auto rec = [&](auto&& self, std::size_t depth, std::size_t start) -> void {
        if (depth == c) {
            std::vector<std::vector<Polynomial>> sub;
            for (auto r : rows) sub.push_back(jac[r]);
            minors.push_back(detail::determinant(sub));
            return;
        }
        for (std::size_t r = start; r < nvars; ++r) {
            rows[depth] = r;
            self(self, depth + 1, r + 1);
        }
    };
    rec(rec, 0, 0);
    return minors;
}

inline Ideal jacobian_ideal(const CompleteIntersection& ci) { return Ideal(ci.ring(), jacobian_minors(ci)); }

/// √(Jac(R) + J) = m (or Jac(R) + J = S).
inline bool isolated_singularity_test(const CompleteIntersection& ci) {
    auto sum = ideal_sum(jacobian_ideal(ci), ci.ideal());
    return is_unit_ideal(sum) || is_zero_dimensional(sum);
}

struct AnalysisReport {
    std::int64_t a_invariant = 0;
    std::optional<std::int64_t> reg_s_mod_tau;
    std::optional<std::int64_t> ell;
    std::optional<std::int64_t> thmA_bound;
    std::int64_t cor_bound = 0;
    std::int64_t thmB_threshold = 0;
    bool fpure_at_m = false;
    TauClass tau_class = TauClass::everywhere_f_pure;
    bool isolated_singularity = false;

    friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

/// All invariants of one complete intersection, given its tau.
inline AnalysisReport analyze(const CompleteIntersection& ci, const TauResult& tau) {
    AnalysisReport r;
    r.a_invariant = a_invariant(ci);
    r.fpure_at_m = fedder_test_at_m(ci);
    if (r.fpure_at_m != tau.is_unit) throw Error("internal error: Fedder test disagrees with tau");
    r.tau_class = classify(tau);
    if (tau.is_m_primary && !tau.is_unit) {
        r.reg_s_mod_tau = regularity_artinian(tau.tau);
        r.ell = tau.ell;
        r.thmA_bound = thmA_bound(ci, tau);
    }
    r.cor_bound = cor_bound(ci.n(), ci.codimension(), ci.total_degree());
    r.thmB_threshold = thmB_threshold(ci.n(), ci.codimension(), ci.total_degree());
    r.isolated_singularity = isolated_singularity_test(ci);
    return r;
}

inline AnalysisReport analyze(const CompleteIntersection& ci) { return analyze(ci, compute_tau(ci)); }

}  // namespace fpure

#endif
