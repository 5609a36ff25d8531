#ifndef FPURE_GROEBNER_HPP
#define FPURE_GROEBNER_HPP

#include <algorithm>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polynomial.hpp"

namespace fpure {

/// Reduced Groebner basis: monic, inter-reduced, sorted ascending by leading
/// monomial. Empty for the zero ideal and {1} for the unit ideal.
class GroebnerBasis {
public:
    GroebnerBasis(RingPtr ring, std::vector<Polynomial> elements)
        : ring_(std::move(ring)), elements_(std::move(elements)) {}

    const RingPtr& ring() const noexcept { return ring_; }
    std::span<const Polynomial> elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }
    MonomialOrder order() const noexcept { return ring_->order(); }

    bool is_unit() const noexcept { return elements_.size() == 1 && elements_[0].is_constant(); }

    std::vector<Monomial> leading_monomials() const {
        std::vector<Monomial> out;
        out.reserve(elements_.size());
        for (const auto& g : elements_) out.push_back(g.leading_monomial());
        return out;
    }

    friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
        return same_ring(a.ring_, b.ring_) && a.elements_ == b.elements_;
    }

private:
    RingPtr ring_;
    std::vector<Polynomial> elements_;
};

namespace detail {

inline const Polynomial* find_reducer(const Monomial& m, std::span<const Polynomial> basis) {
    for (const auto& g : basis) {
        if (g.leading_monomial().divides(m)) return &g;
    }
    return nullptr;
}

// Geometric buckets for long reductions: bucket i holds at most 4^(i+1)
// terms, kept ascending so the leading term sits at the back.
class Geobucket {
public:
    explicit Geobucket(RingPtr ring) : ring_(std::move(ring)) {}

    /// Adds c*m*b, skipping the first `skip` terms of b.
    void add(const Polynomial& b, Coeff c, const Monomial& m, std::size_t skip = 0) {
        const auto& F = ring_->field();
        auto src = b.terms();
        Terms t;
        t.reserve(src.size() - std::min(skip, src.size()));
        for (std::size_t k = src.size(); k > skip; --k) t.push_back({src[k - 1].mono * m, F.mul(src[k - 1].coeff, c)});
        std::size_t i = slot(t.size());
        while (true) {
            if (i >= buckets_.size()) buckets_.resize(i + 1);
            if (buckets_[i].empty()) break;
            t = merge(buckets_[i], t);
            buckets_[i].clear();
            i = std::max(i, slot(t.size()));
        }
        buckets_[i] = std::move(t);
    }

    std::optional<Term> pop_leading() {
        const auto& F = ring_->field();
        while (true) {
            const Monomial* best = nullptr;
            for (const auto& b : buckets_) {
                if (!b.empty() && (best == nullptr || ring_->compare(b.back().mono, *best) > 0)) best = &b.back().mono;
            }
            if (best == nullptr) return std::nullopt;
            Term lead{*best, 0};
            for (auto& b : buckets_) {
                if (!b.empty() && b.back().mono == lead.mono) {
                    lead.coeff = F.add(lead.coeff, b.back().coeff);
                    b.pop_back();
                }
            }
            if (lead.coeff != 0) return lead;
        }
    }

    /// Remaining terms, descending.
    std::vector<Term> drain() {
        Terms all;
        for (auto& b : buckets_) {
            if (!b.empty()) all = merge(all, b);
        }
        buckets_.clear();
        std::reverse(all.begin(), all.end());
        return all;
    }

private:
    using Terms = std::vector<Term>;

    static std::size_t slot(std::size_t n) {
        std::size_t i = 0;
        for (std::size_t cap = 4; cap < n; cap *= 4) ++i;
        return i;
    }

    Terms merge(const Terms& a, const Terms& b) const {
        const auto& F = ring_->field();
        Terms r;
        r.reserve(a.size() + b.size());
        auto i = a.begin();
        auto j = b.begin();
        while (i != a.end() && j != b.end()) {
            int cmp = ring_->compare(i->mono, j->mono);
            if (cmp < 0) {
                r.push_back(*i++);
            } else if (cmp > 0) {
                r.push_back(*j++);
            } else {
                Coeff v = F.add(i->coeff, j->coeff);
                if (v != 0) r.push_back({i->mono, v});
                ++i;
                ++j;
            }
        }
        r.insert(r.end(), i, a.end());
        r.insert(r.end(), j, b.end());
        return r;
    }

    RingPtr ring_;
    std::vector<Terms> buckets_;
};

/// Full reduction of h modulo basis; the remainder has no term divisible by
/// a leading monomial of the basis.
inline Polynomial reduce_full(const Polynomial& h, std::span<const Polynomial> basis) {
    const auto& F = h.ring()->field();
    Geobucket bucket(h.ring());
    bucket.add(h, 1, h.ring()->one());
    std::vector<Term> rem;
    while (auto lt = bucket.pop_leading()) {
        if (const auto* g = find_reducer(lt->mono, basis)) {
            Coeff c = F.neg(F.mul(lt->coeff, F.inv(g->leading_coefficient())));
            bucket.add(*g, c, lt->mono / g->leading_monomial(), 1);
        } else {
            rem.push_back(*lt);
        }
    }
    return Polynomial::from_terms(h.ring(), std::move(rem));
}

/// Reduces only while the leading term is reducible.
inline Polynomial reduce_top(const Polynomial& h, std::span<const Polynomial> basis) {
    const auto& F = h.ring()->field();
    Geobucket bucket(h.ring());
    bucket.add(h, 1, h.ring()->one());
    while (auto lt = bucket.pop_leading()) {
        const auto* g = find_reducer(lt->mono, basis);
        if (g == nullptr) {
            auto rest = bucket.drain();
            rest.insert(rest.begin(), *lt);
            return Polynomial::from_terms(h.ring(), std::move(rest));
        }
        Coeff c = F.neg(F.mul(lt->coeff, F.inv(g->leading_coefficient())));
        bucket.add(*g, c, lt->mono / g->leading_monomial(), 1);
    }
    return Polynomial(h.ring());
}

inline Polynomial s_polynomial(const Polynomial& a, const Polynomial& b) {
    const auto& F = a.ring()->field();
    Monomial l = lcm(a.leading_monomial(), b.leading_monomial());
    auto left = a.times_term(l / a.leading_monomial(), F.inv(a.leading_coefficient()));
    return left.merged(b, F.neg(F.inv(b.leading_coefficient())), l / b.leading_monomial());
}

struct CriticalPair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
    std::int64_t degree;
};

// Buchberger's algorithm with the normal selection strategy and the
// Gebauer-Moeller installation of both criteria.
class Buchberger {
public:
    explicit Buchberger(RingPtr ring) : ring_(std::move(ring)) {}

    std::vector<Polynomial> run(std::span<const Polynomial> generators) {
        std::vector<Polynomial> input(generators.begin(), generators.end());
        std::sort(input.begin(), input.end(), [this](const Polynomial& a, const Polynomial& b) {
            return ring_->compare(a.leading_monomial(), b.leading_monomial()) < 0;
        });
        for (auto& g : input) {
            auto h = reduce_top(g, basis_);
            if (!h.is_zero()) insert(h.monic());
        }
        while (!pairs_.empty()) {
            auto best = std::min_element(pairs_.begin(), pairs_.end(), [this](const auto& a, const auto& b) {
                if (a.degree != b.degree) return a.degree < b.degree;
                return ring_->compare(a.lcm, b.lcm) < 0;
            });
            CriticalPair pair = *best;
            pairs_.erase(best);
            auto h = reduce_top(s_polynomial(basis_[pair.i], basis_[pair.j]), basis_);
            if (!h.is_zero()) insert(h.monic());
        }
        return finalize();
    }

private:
    void insert(Polynomial h) {
        const std::size_t k = basis_.size();
        const Monomial& lh = h.leading_monomial();
        std::vector<CriticalPair> candidates;
        for (std::size_t i = 0; i < k; ++i) {
            if (!active_[i]) continue;
            Monomial l = lcm(basis_[i].leading_monomial(), lh);
            candidates.push_back({i, k, l, ring_->weighted_degree(l)});
        }
        // Chain criterion among the new pairs. Coprime pairs are kept at this
        // stage so that they still shadow pairs with a larger lcm.
        std::vector<CriticalPair> kept;
        for (std::size_t a = 0; a < candidates.size(); ++a) {
            const auto& pa = candidates[a];
            auto shadows = [&](const CriticalPair& pb) { return pb.lcm.divides(pa.lcm); };
            bool keep = coprime(basis_[pa.i].leading_monomial(), lh) ||
                        (std::none_of(candidates.begin() + static_cast<std::ptrdiff_t>(a) + 1, candidates.end(), shadows) &&
                         std::none_of(kept.begin(), kept.end(), shadows));
            if (keep) kept.push_back(pa);
        }
        // Product criterion.
        std::erase_if(kept, [&](const CriticalPair& p) { return coprime(basis_[p.i].leading_monomial(), lh); });
        // Old pairs whose lcm is strictly "covered" through h.
        std::erase_if(pairs_, [&](const CriticalPair& p) {
            if (!lh.divides(p.lcm)) return false;
            Monomial li = lcm(basis_[p.i].leading_monomial(), lh);
            Monomial lj = lcm(basis_[p.j].leading_monomial(), lh);
            return !(li == p.lcm) && !(lj == p.lcm);
        });
        pairs_.insert(pairs_.end(), kept.begin(), kept.end());
        for (std::size_t i = 0; i < k; ++i) {
            if (active_[i] && lh.divides(basis_[i].leading_monomial())) active_[i] = false;
        }
        basis_.push_back(std::move(h));
        active_.push_back(true);
    }

    std::vector<Polynomial> finalize() {
        std::vector<Polynomial> minimal;
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            if (active_[i]) minimal.push_back(basis_[i]);
        }
        std::vector<Polynomial> reduced;
        reduced.reserve(minimal.size());
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Polynomial> others;
            others.reserve(minimal.size() - 1);
            for (std::size_t j = 0; j < minimal.size(); ++j) {
                if (j != i) others.push_back(minimal[j]);
            }
            const auto& g = minimal[i];
            auto tail = g.without_terms([&](const Monomial& m) { return m == g.leading_monomial(); });
            auto lead = Polynomial::monomial(ring_, g.leading_monomial(), g.leading_coefficient());
            reduced.push_back((lead + reduce_full(tail, others)).monic());
        }
        std::sort(reduced.begin(), reduced.end(), [this](const Polynomial& a, const Polynomial& b) {
            return ring_->compare(a.leading_monomial(), b.leading_monomial()) < 0;
        });
        return reduced;
    }

    RingPtr ring_;
    std::vector<Polynomial> basis_;
    std::vector<bool> active_;
    std::vector<CriticalPair> pairs_;
};

}  // namespace detail

/// Homogeneous ideal given by generators, with a lazily computed reduced
/// Groebner basis. Copies share the cache.
class Ideal {
public:
    explicit Ideal(RingPtr ring) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {}

    Ideal(RingPtr ring, std::vector<Polynomial> generators) : Ideal(std::move(ring)) {
        for (auto& g : generators) {
            if (!same_ring(g.ring(), ring_)) throw RingMismatch();
            if (!g.is_homogeneous()) throw DomainError("ideal generator is not homogeneous: " + to_string(g));
            if (!g.is_zero()) gens_.push_back(std::move(g));
        }
    }

    static Ideal zero(RingPtr ring) { return Ideal(std::move(ring)); }
    static Ideal unit(RingPtr ring) {
        auto one = Polynomial::constant(ring, 1);
        return Ideal(std::move(ring), {one});
    }

    const RingPtr& ring() const noexcept { return ring_; }
    std::span<const Polynomial> generators() const noexcept { return gens_; }
    bool is_zero() const noexcept { return gens_.empty(); }

    const GroebnerBasis& groebner() const {
        {
            std::lock_guard lock(cache_->mutex);
            if (cache_->basis) return *cache_->basis;
        }
        // Computed outside the lock; the reduced basis is unique so a racing
        // writer stores an identical value.
        auto basis = std::make_shared<const GroebnerBasis>(ring_, detail::Buchberger(ring_).run(gens_));
        std::lock_guard lock(cache_->mutex);
        if (!cache_->basis) cache_->basis = std::move(basis);
        return *cache_->basis;
    }

    bool has_cached_groebner() const {
        std::lock_guard lock(cache_->mutex);
        return cache_->basis != nullptr;
    }

private:
    struct Cache {
        std::mutex mutex;
        std::shared_ptr<const GroebnerBasis> basis;
    };

    RingPtr ring_;
    std::vector<Polynomial> gens_;
    std::shared_ptr<Cache> cache_;
};

inline const GroebnerBasis& groebner(const Ideal& ideal) { return ideal.groebner(); }

inline Polynomial normal_form(const Polynomial& g, const GroebnerBasis& basis) {
    if (!same_ring(g.ring(), basis.ring())) throw RingMismatch();
    return detail::reduce_full(g, basis.elements());
}

inline bool ideal_membership(const Polynomial& g, const Ideal& ideal) {
    if (!same_ring(g.ring(), ideal.ring())) throw RingMismatch();
    return normal_form(g, ideal.groebner()).is_zero();
}

inline bool is_unit_ideal(const Ideal& ideal) { return ideal.groebner().is_unit(); }

/// J ⊆ I, checked generator by generator.
inline bool contains(const Ideal& big, const Ideal& small) {
    if (!same_ring(big.ring(), small.ring())) throw RingMismatch();
    const auto& basis = big.groebner();
    return std::all_of(small.generators().begin(), small.generators().end(),
                       [&](const Polynomial& g) { return normal_form(g, basis).is_zero(); });
}

inline Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    if (!same_ring(a.ring(), b.ring())) throw RingMismatch();
    std::vector<Polynomial> gens(a.generators().begin(), a.generators().end());
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return Ideal(a.ring(), std::move(gens));
}

inline Ideal ideal_product(const Ideal& a, const Ideal& b) {
    if (!same_ring(a.ring(), b.ring())) throw RingMismatch();
    std::vector<Polynomial> gens;
    for (const auto& g : a.generators()) {
        for (const auto& h : b.generators()) gens.push_back(g * h);
    }
    return Ideal(a.ring(), std::move(gens));
}

inline bool ideal_equal(const Ideal& a, const Ideal& b) {
    if (!same_ring(a.ring(), b.ring())) throw RingMismatch();
    return a.groebner() == b.groebner();
}

/// The ideal of the reduced Groebner basis, which is a canonical generating set.
inline Ideal canonical(const Ideal& ideal) {
    auto elements = ideal.groebner().elements();
    return Ideal(ideal.ring(), std::vector<Polynomial>(elements.begin(), elements.end()));
}

/// The homogeneous maximal ideal (x_0, ..., x_n).
inline Ideal maximal_ideal(const RingPtr& ring) {
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < ring->nvars(); ++i) gens.push_back(Polynomial::variable(ring, i));
    return Ideal(ring, std::move(gens));
}

/// m^k, generated by all monomials of degree k.
inline Ideal power_of_maximal(const RingPtr& ring, std::int64_t k) {
    if (k <= 0) return Ideal::unit(ring);
    std::vector<Polynomial> gens;
    for (const auto& m : monomials_of_degree(*ring, k)) gens.push_back(Polynomial::monomial(ring, m));
    return Ideal(ring, std::move(gens));
}

/// Exact quotient a / g; throws when g does not divide a.
inline Polynomial exact_divide(const Polynomial& a, const Polynomial& g) {
    if (g.is_zero()) throw DomainError("division by zero polynomial");
    const auto& F = a.ring()->field();
    const Coeff inv = F.inv(g.leading_coefficient());
    detail::Geobucket bucket(a.ring());
    bucket.add(a, 1, a.ring()->one());
    std::vector<Term> quotient;
    while (auto lt = bucket.pop_leading()) {
        if (!g.leading_monomial().divides(lt->mono)) throw Error("internal error: inexact polynomial division");
        Monomial m = lt->mono / g.leading_monomial();
        Coeff c = F.mul(lt->coeff, inv);
        quotient.push_back({m, c});
        bucket.add(g, F.neg(c), m, 1);
    }
    return Polynomial::from_terms(g.ring(), std::move(quotient));
}

namespace detail {

inline RingPtr elimination_ring(const Ring& base) {
    auto names = base.names();
    std::string t = "elim_t";
    while (std::find(names.begin(), names.end(), t) != names.end()) t += '_';
    names.push_back(t);
    return std::make_shared<const Ring>(base.characteristic(), std::move(names), MonomialOrder::eliminate_last);
}

inline Polynomial embed(const Polynomial& a, const RingPtr& target, Exponent t_power) {
    std::vector<Term> terms;
    terms.reserve(a.size());
    const std::size_t n = a.ring()->nvars();
    for (const auto& t : a.terms()) {
        Monomial m(target->nvars());
        for (std::size_t i = 0; i < n; ++i) m.set(i, t.mono[i]);
        m.set(n, t_power);
        terms.push_back({m, t.coeff});
    }
    return Polynomial::from_terms(target, std::move(terms));
}

inline Polynomial project(const Polynomial& a, const RingPtr& target) {
    std::vector<Term> terms;
    terms.reserve(a.size());
    const std::size_t n = target->nvars();
    for (const auto& t : a.terms()) {
        Monomial m(n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, t.mono[i]);
        terms.push_back({m, t.coeff});
    }
    return Polynomial::from_terms(target, std::move(terms));
}

}  // namespace detail

/// I ∩ J by eliminating t from t·I + (1 - t)·J.
inline Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
    if (!same_ring(a.ring(), b.ring())) throw RingMismatch();
    if (a.is_zero() || b.is_zero()) return Ideal::zero(a.ring());
    auto ext = detail::elimination_ring(*a.ring());
    std::vector<Polynomial> gens;
    for (const auto& g : a.generators()) gens.push_back(detail::embed(g, ext, 1));
    for (const auto& h : b.generators()) gens.push_back(detail::embed(h, ext, 0) - detail::embed(h, ext, 1));
    Ideal lifted(ext, std::move(gens));
    const std::size_t t = a.ring()->nvars();
    std::vector<Polynomial> kept;
    for (const auto& g : lifted.groebner().elements()) {
        // Under the block order the leading term carries the highest power of t.
        if (g.leading_monomial()[t] == 0) kept.push_back(detail::project(g, a.ring()));
    }
    return Ideal(a.ring(), std::move(kept));
}

/// (I : g) = (1/g)·(I ∩ (g)).
inline Ideal colon(const Ideal& ideal, const Polynomial& g) {
    if (!same_ring(ideal.ring(), g.ring())) throw RingMismatch();
    if (g.is_zero()) throw DomainError("colon by the zero ideal");
    if (g.is_constant()) return ideal;
    auto meet = ideal_intersection(ideal, Ideal(ideal.ring(), {g}));
    std::vector<Polynomial> gens;
    for (const auto& h : meet.generators()) gens.push_back(exact_divide(h, g));
    return Ideal(ideal.ring(), std::move(gens));
}

/// (I : J) = ∩ over generators h of J of (I : h).
inline Ideal colon(const Ideal& ideal, const Ideal& by) {
    if (!same_ring(ideal.ring(), by.ring())) throw RingMismatch();
    if (by.is_zero()) throw DomainError("colon by the zero ideal");
    std::optional<Ideal> acc;
    for (const auto& h : by.generators()) {
        auto part = colon(ideal, h);
        acc = acc ? ideal_intersection(*acc, part) : part;
    }
    return canonical(*acc);
}

/// √I = m for a proper homogeneous ideal: every variable has a pure power
/// among the leading monomials.
inline bool is_zero_dimensional(const Ideal& ideal) {
    const auto& basis = ideal.groebner();
    if (basis.is_unit()) throw DomainError("is_zero_dimensional: unit ideal");
    const std::size_t n = ideal.ring()->nvars();
    std::vector<bool> hit(n, false);
    for (const auto& lm : basis.leading_monomials()) {
        std::size_t support = 0;
        std::size_t which = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (lm[i] != 0) {
                ++support;
                which = i;
            }
        }
        if (support == 1) hit[which] = true;
    }
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

/// Number of monomials of degree s outside the leading-term ideal, i.e. the
/// Hilbert function of S/I at s.
inline std::int64_t hilbert_function(const Ideal& ideal, std::int64_t s) {
    auto leads = ideal.groebner().leading_monomials();
    std::int64_t count = 0;
    for (const auto& m : monomials_of_degree(*ideal.ring(), s)) {
        bool standard = std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
        if (standard) ++count;
    }
    return count;
}

/// Monomial basis of S/I, by ascending degree and descending order within a degree.
inline std::vector<Monomial> standard_monomials(const Ideal& ideal) {
    if (!is_zero_dimensional(ideal)) throw DomainError("standard_monomials: ideal is not zero-dimensional");
    const auto& ring = *ideal.ring();
    auto leads = ideal.groebner().leading_monomials();
    auto is_standard = [&](const Monomial& m) {
        return std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
    };
    std::vector<Monomial> out;
    std::vector<Monomial> layer{ring.one()};
    while (!layer.empty()) {
        out.insert(out.end(), layer.begin(), layer.end());
        std::vector<Monomial> next;
        for (const auto& m : layer) {
            for (std::size_t i = 0; i < ring.nvars(); ++i) {
                auto c = m * ring.variable(i);
                if (is_standard(c) && std::find(next.begin(), next.end(), c) == next.end()) next.push_back(c);
            }
        }
        std::sort(next.begin(), next.end(), [&](const Monomial& a, const Monomial& b) { return ring.compare(a, b) > 0; });
        layer = std::move(next);
    }
    return out;
}

}  // namespace fpure

#endif
