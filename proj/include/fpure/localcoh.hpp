#ifndef FPURE_LOCALCOH_HPP
#define FPURE_LOCALCOH_HPP

#include <algorithm>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "invariants.hpp"
#include "limits.hpp"
#include "linalg.hpp"

// Classes of the top local cohomology H^{n+1-c}_m(R) are handled through
// H^{n+1-c}_m(R) = Ann_{H^{n+1}_m(S)[-d]}(J): a class is a Čech fraction
// [g / (x_0...x_n)^q] with g ∈ (m^[q] : J), zero iff g ∈ m^[q], and of degree
// deg g - (n+1)q + d.

namespace fpure {

namespace detail {
inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    if (b != 0 && a > kMaxExponent / b) throw OverflowError("q exceeds 2^31 - 1");
    return a * b;
}
}  // namespace detail

class CohClass {
public:
    CohClass(Polynomial numerator, std::int64_t q, std::shared_ptr<const CompleteIntersection> ci)
        : numerator_(std::move(numerator)), q_(q), ci_(std::move(ci)) {
        if (!same_ring(numerator_.ring(), ci_->ring())) throw RingMismatch();
        require_power_of_p(q_, *ci_->ring());
        if (numerator_.is_zero() || !numerator_.is_homogeneous()) {
            throw DomainError("class numerator must be a nonzero form");
        }
        for (const auto& f : ci_->forms()) {
            if (!in_bracket_power_of_maximal(f * numerator_, q_)) {
                throw DomainError("numerator does not lie in (m^[q] : J): " + to_string(f) + " * g ∉ m^[q]");
            }
        }
        degree_ = numerator_.degree() - static_cast<std::int64_t>(ci_->ring()->nvars()) * q_ + ci_->total_degree();
    }

    const Polynomial& numerator() const noexcept { return numerator_; }
    std::int64_t q() const noexcept { return q_; }
    std::int64_t degree() const noexcept { return degree_; }
    const CompleteIntersection& ci() const noexcept { return *ci_; }
    const std::shared_ptr<const CompleteIntersection>& ci_ptr() const noexcept { return ci_; }

private:
    Polynomial numerator_;
    std::int64_t q_;
    std::shared_ptr<const CompleteIntersection> ci_;
    std::int64_t degree_ = 0;
};

inline CohClass make_class(const Polynomial& g, std::int64_t q, const CompleteIntersection& ci) {
    return CohClass(g, q, std::make_shared<const CompleteIntersection>(ci));
}

inline bool is_zero(const CohClass& a) { return in_bracket_power_of_maximal(a.numerator(), a.q()); }

/// Same class with denominator x^{q'}: the numerator picks up (x_0...x_n)^{q'-q}.
inline CohClass rescale(const CohClass& a, std::int64_t q_new) {
    const auto& ring = a.ci().ring();
    require_power_of_p(q_new, *ring);
    if (q_new < a.q()) throw DomainError("rescale target q' must be at least q");
    Monomial shift(ring->nvars());
    for (std::size_t i = 0; i < ring->nvars(); ++i) shift.set(i, static_cast<Exponent>(q_new - a.q()));
    return CohClass(a.numerator().times_term(shift, 1), q_new, a.ci_ptr());
}

inline bool classes_equal(const CohClass& a, const CohClass& b) {
    if (!same_ring(a.ci().ring(), b.ci().ring())) throw RingMismatch();
    if (a.degree() != b.degree()) return is_zero(a) && is_zero(b);
    const auto q = std::max(a.q(), b.q());
    auto diff = rescale(a, q).numerator() - rescale(b, q).numerator();
    return in_bracket_power_of_maximal(diff, q);
}

/// [g / x^q] ↦ [f^{p-1} g^p / x^{pq}].
inline CohClass frobenius_action(const CohClass& a) {
    const auto& ci = a.ci();
    const std::int64_t p = ci.characteristic();
    const auto q_new = detail::checked_mul(a.q(), p);
    auto numerator = pow(ci.product(), static_cast<std::uint64_t>(p - 1)) * frobenius_power(a.numerator(), p);
    CohClass image(std::move(numerator), q_new, a.ci_ptr());
    if (image.degree() != p * a.degree()) throw Error("internal error: Frobenius image has the wrong degree");
    return image;
}

/// Nonzero class in degree a(R) - ℓ killed by Frobenius: a basis element of
/// (m^[q] : tau) of degree M_q(tau) with its m^[q] part removed, at the first
/// q where M_q(tau) has stabilized.
inline CohClass kernel_witness(const CompleteIntersection& ci, const TauResult& tau, const Limits& limits = {}) {
    if (tau.is_unit || !tau.is_m_primary) throw DomainError("kernel witness needs tau m-primary and proper");
    const auto q = stable_q(tau.tau, limits);
    auto [K, mq] = detail::colon_and_m_q(tau.tau, q);
    const Polynomial* chosen = nullptr;
    for (const auto& g : K.groebner().elements()) {
        if (g.degree() == mq && !in_bracket_power_of_maximal(g, q)) {
            chosen = &g;
            break;
        }
    }
    if (chosen == nullptr) throw Error("internal error: no colon generator of degree M_q");
    auto g = chosen->without_terms([q](const Monomial& m) { return m.in_bracket_power(q); });
    CohClass witness = make_class(g, q, ci);
    if (is_zero(witness) || witness.degree() != thmA_bound(ci, tau) || !is_zero(frobenius_action(witness))) {
        throw Error("internal error: kernel witness failed verification");
    }
    return witness;
}

/// Basis of T_t = (m^[q] : J)_s / (m^[q])_s with s = t - d + (n+1)q.
struct GradedPieceBasis {
    std::int64_t degree = 0;
    std::int64_t q = 1;
    std::int64_t numerator_degree = 0;
    /// Monomials of degree s outside m^[q].
    std::vector<Monomial> coordinates;
    /// Coefficient vectors over coordinates.
    std::vector<std::vector<Coeff>> vectors;

    std::size_t dimension() const noexcept { return vectors.size(); }

    Polynomial numerator(std::size_t i, const RingPtr& ring) const {
        std::vector<Term> terms;
        for (std::size_t k = 0; k < coordinates.size(); ++k) {
            if (vectors[i][k] != 0) terms.push_back({coordinates[k], vectors[i][k]});
        }
        return Polynomial::from_terms(ring, std::move(terms));
    }
};

/// Smallest q = p^e with (n+1)q + t - d >= 0 and q >= d - t - n, so every
/// class of degree t has a representative over x^q.
inline std::int64_t admissible_q(const CompleteIntersection& ci, std::int64_t t) {
    const std::int64_t p = ci.characteristic();
    const std::int64_t nv = ci.n() + 1;
    const std::int64_t d = ci.total_degree();
    std::int64_t q = 1;
    while (nv * q + t - d < 0 || q < d - t - ci.n()) q = detail::checked_mul(q, p);
    return q;
}

namespace detail {

inline std::vector<Monomial> monomials_outside_bracket(const Ring& ring, std::int64_t s, std::int64_t q) {
    std::vector<Monomial> out;
    for (auto& m : monomials_of_degree(ring, s)) {
        if (!m.in_bracket_power(q)) out.push_back(m);
    }
    return out;
}

}  // namespace detail

/// graded_piece_basis at an explicit q (any admissible power of p).
inline GradedPieceBasis graded_piece_basis(const CompleteIntersection& ci, std::int64_t t, std::int64_t q,
                                           const Limits& limits = {}) {
    const auto& ring = ci.ring();
    require_power_of_p(q, *ring);
    if (q < admissible_q(ci, t)) throw DomainError("q too small to represent every class of this degree");
    const auto& F = ring->field();
    GradedPieceBasis out;
    out.degree = t;
    out.q = q;
    out.numerator_degree = t - ci.total_degree() + (ci.n() + 1) * q;
    out.coordinates = detail::monomials_outside_bracket(*ring, out.numerator_degree, q);
    if (out.coordinates.size() > limits.max_cols) {
        throw ResourceLimit("graded piece needs " + std::to_string(out.coordinates.size()) + " columns (cap " +
                            std::to_string(limits.max_cols) + ")");
    }
    if (out.coordinates.empty()) return out;

    // One row per (j, monomial outside m^[q]) appearing in f_j * coordinate.
    std::unordered_map<Monomial, std::size_t, MonomialHash> row_of;
    std::vector<std::vector<std::pair<std::size_t, Coeff>>> rows;
    for (std::size_t j = 0; j < ci.forms().size(); ++j) {
        row_of.clear();
        const auto& f = ci.forms()[j];
        for (std::size_t col = 0; col < out.coordinates.size(); ++col) {
            for (const auto& term : f.terms()) {
                Monomial m = term.mono * out.coordinates[col];
                if (m.in_bracket_power(q)) continue;
                auto [it, fresh] = row_of.try_emplace(m, rows.size());
                if (fresh) rows.emplace_back();
                rows[it->second].emplace_back(col, term.coeff);
            }
        }
    }
    ModMatrix A(rows.size(), out.coordinates.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (auto [col, c] : rows[r]) A(r, col) = F.add(A(r, col), c);
    }
    out.vectors = kernel_basis(std::move(A), F);
    return out;
}

inline GradedPieceBasis graded_piece_basis(const CompleteIntersection& ci, std::int64_t t, const Limits& limits = {}) {
    return graded_piece_basis(ci, t, admissible_q(ci, t), limits);
}

struct InjectivityResult {
    std::int64_t degree = 0;
    std::int64_t q = 1;
    std::size_t dim_source = 0;
    std::size_t dim_kernel = 0;

    bool injective() const noexcept { return dim_kernel == 0; }
};

/// Kernel dimension of Frobenius on the degree-t piece, by rank of the images
/// f^{p-1} g^p in the coordinates of monomials outside m^[pq].
inline InjectivityResult verify_injectivity(const CompleteIntersection& ci, std::int64_t t, const Limits& limits = {}) {
    auto basis = graded_piece_basis(ci, t, limits);
    InjectivityResult result{t, basis.q, basis.dimension(), 0};
    if (basis.dimension() == 0) return result;

    const auto& ring = ci.ring();
    const std::int64_t p = ci.characteristic();
    const auto target_q = detail::checked_mul(basis.q, p);
    const auto fp1 = pow(ci.product(), static_cast<std::uint64_t>(p - 1));

    std::unordered_map<Monomial, std::size_t, MonomialHash> col_of;
    std::vector<std::vector<std::pair<std::size_t, Coeff>>> images;
    for (std::size_t i = 0; i < basis.dimension(); ++i) {
        auto image = fp1 * frobenius_power(basis.numerator(i, ring), p);
        std::vector<std::pair<std::size_t, Coeff>> row;
        for (const auto& term : image.terms()) {
            if (term.mono.in_bracket_power(target_q)) continue;
            auto [it, fresh] = col_of.try_emplace(term.mono, col_of.size());
            row.emplace_back(it->second, term.coeff);
        }
        images.push_back(std::move(row));
    }
    if (col_of.size() > limits.max_cols) {
        throw ResourceLimit("Frobenius image needs " + std::to_string(col_of.size()) + " columns (cap " +
                            std::to_string(limits.max_cols) + ")");
    }
    ModMatrix M(images.size(), col_of.size());
    for (std::size_t r = 0; r < images.size(); ++r) {
        for (auto [col, c] : images[r]) M(r, col) = c;
    }
    result.dim_kernel = basis.dimension() - rank(std::move(M), ring->field());
    return result;
}

/// Outcome of the search for exponent vectors t ∈ {0..p-1}^c with
/// f_1^{t_1} ... f_c^{t_c} g^p ∈ m^[Q].
struct MinimalExponents {
    /// Lexicographically least element of the minimal antichain.
    std::vector<std::int64_t> least;
    /// All componentwise-minimal feasible vectors, in lex order.
    std::vector<std::vector<std::int64_t>> antichain;
};

namespace detail {

inline std::vector<std::vector<std::int64_t>> exponent_box(std::size_t c, std::int64_t p) {
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> v(c, 0);
    while (true) {
        out.push_back(v);
        std::size_t i = c;
        while (i > 0) {
            --i;
            if (++v[i] < p) break;
            v[i] = 0;
            if (i == 0) return out;
        }
        if (c == 0) return out;
    }
}

inline bool dominated_by(const std::vector<std::int64_t>& small, const std::vector<std::int64_t>& big) {
    for (std::size_t i = 0; i < small.size(); ++i) {
        if (small[i] > big[i]) return false;
    }
    return true;
}

}  // namespace detail

/// Feasibility of one exponent vector.
inline bool exponent_vector_feasible(const Polynomial& g, std::int64_t Q, const CompleteIntersection& ci,
                                     const std::vector<std::int64_t>& t) {
    auto acc = frobenius_power(g, ci.characteristic());
    for (std::size_t j = 0; j < t.size(); ++j) acc *= pow(ci.forms()[j], static_cast<std::uint64_t>(t[j]));
    return in_bracket_power_of_maximal(acc, Q);
}

inline MinimalExponents minimal_t_vector(const Polynomial& g, std::int64_t Q, const CompleteIntersection& ci) {
    require_power_of_p(Q, *ci.ring());
    const std::int64_t p = ci.characteristic();
    const auto c = static_cast<std::size_t>(ci.codimension());
    auto box = detail::exponent_box(c, p);
    std::vector<std::vector<std::int64_t>> feasible;
    for (const auto& t : box) {
        if (exponent_vector_feasible(g, Q, ci, t)) feasible.push_back(t);
    }
    if (feasible.empty() || feasible.back() != std::vector<std::int64_t>(c, p - 1)) {
        throw DomainError("f^{p-1} g^p ∉ m^[Q]: no feasible exponent vector");
    }
    MinimalExponents out;
    for (const auto& t : feasible) {
        bool minimal = std::none_of(feasible.begin(), feasible.end(), [&](const auto& s) {
            return s != t && detail::dominated_by(s, t);
        });
        if (minimal) out.antichain.push_back(t);
    }
    out.least = out.antichain.front();
    return out;
}

struct JacobianClaim {
    bool holds = false;
    /// Least exponent vector, in the original order of the forms.
    std::vector<std::int64_t> t;
    /// Forms reordered so that the first exponent is positive.
    std::vector<std::size_t> permutation;
};

/// Checks f^{t'} g^p · Jac(R) ⊆ m^[Q] for t' = t - e_1 after moving a form
/// with positive exponent to the front.
inline JacobianClaim jacobian_annihilation_check(const Polynomial& g, std::int64_t Q, const CompleteIntersection& ci) {
    auto minimal = minimal_t_vector(g, Q, ci);
    JacobianClaim out;
    out.t = minimal.least;
    const auto c = out.t.size();
    out.permutation.resize(c);
    for (std::size_t i = 0; i < c; ++i) out.permutation[i] = i;
    auto lead = std::find_if(out.t.begin(), out.t.end(), [](std::int64_t v) { return v > 0; });
    if (lead == out.t.end()) throw DomainError("g^p already lies in m^[Q]; the exponent vector is zero");
    std::swap(out.permutation[0], out.permutation[static_cast<std::size_t>(lead - out.t.begin())]);

    auto t_prime = out.t;
    --t_prime[out.permutation[0]];
    auto base = frobenius_power(g, ci.characteristic());
    for (std::size_t j = 0; j < c; ++j) base *= pow(ci.forms()[j], static_cast<std::uint64_t>(t_prime[j]));
    out.holds = true;
    for (const auto& minor : jacobian_minors(ci)) {
        if (!in_bracket_power_of_maximal(base * minor, Q)) {
            out.holds = false;
            break;
        }
    }
    return out;
}

}  // namespace fpure

#endif
