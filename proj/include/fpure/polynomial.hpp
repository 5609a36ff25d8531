#ifndef FPURE_POLYNOMIAL_HPP
#define FPURE_POLYNOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ring.hpp"

namespace fpure {

struct Term {
    Monomial mono;
    Coeff coeff;

    friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial over F_p. Terms are kept sorted in strictly descending
/// monomial order with nonzero coefficients, so equality is structural.
class Polynomial {
public:
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial constant(RingPtr ring, std::int64_t c) {
        Polynomial r(std::move(ring));
        Coeff v = r.ring_->field().reduce(c);
        if (v != 0) r.terms_.push_back({r.ring_->one(), v});
        return r;
    }

    static Polynomial monomial(RingPtr ring, const Monomial& m, Coeff c = 1) {
        Polynomial r(std::move(ring));
        if (m.size() != r.ring_->nvars()) throw DomainError("monomial has wrong number of variables");
        c %= r.ring_->characteristic();
        if (c != 0) r.terms_.push_back({m, c});
        return r;
    }

    static Polynomial variable(RingPtr ring, std::size_t i) {
        if (i >= ring->nvars()) throw DomainError("variable index out of range");
        auto m = ring->variable(i);
        return monomial(std::move(ring), m);
    }

    /// Canonicalizes an arbitrary term list: sorts, merges duplicates and
    /// drops zero coefficients.
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms) {
        Polynomial r(std::move(ring));
        const auto& R = *r.ring_;
        for (auto& t : terms) t.coeff %= R.characteristic();
        std::sort(terms.begin(), terms.end(),
                  [&R](const Term& a, const Term& b) { return R.compare(a.mono, b.mono) > 0; });
        for (auto& t : terms) {
            if (!r.terms_.empty() && r.terms_.back().mono == t.mono) {
                r.terms_.back().coeff = R.field().add(r.terms_.back().coeff, t.coeff);
                if (r.terms_.back().coeff == 0) r.terms_.pop_back();
            } else if (t.coeff != 0) {
                r.terms_.push_back(t);
            }
        }
        return r;
    }

    const RingPtr& ring() const noexcept { return ring_; }
    std::span<const Term> terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    const Term& leading_term() const {
        if (is_zero()) throw DomainError("zero polynomial has no leading term");
        return terms_.front();
    }
    const Monomial& leading_monomial() const { return leading_term().mono; }
    Coeff leading_coefficient() const { return leading_term().coeff; }

    /// Maximum weighted degree of a term; -1 for the zero polynomial.
    std::int64_t degree() const noexcept {
        std::int64_t d = -1;
        for (const auto& t : terms_) d = std::max(d, ring_->weighted_degree(t.mono));
        return d;
    }

    bool is_homogeneous() const noexcept {
        if (terms_.empty()) return true;
        auto d = ring_->weighted_degree(terms_.front().mono);
        return std::all_of(terms_.begin(), terms_.end(),
                           [&](const Term& t) { return ring_->weighted_degree(t.mono) == d; });
    }

    bool is_constant() const noexcept { return terms_.empty() || (size() == 1 && terms_[0].mono.is_one()); }

    Coeff coefficient(const Monomial& m) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [this](const Term& t, const Monomial& x) {
            return ring_->compare(t.mono, x) > 0;
        });
        return (it != terms_.end() && it->mono == m) ? it->coeff : 0;
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& t : r.terms_) t.coeff = ring_->field().neg(t.coeff);
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        return a.merged(b, 1, a.ring_->one());
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        a.check_ring(b);
        return a.merged(b, a.ring_->field().neg(1 % a.ring_->characteristic()), a.ring_->one());
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_ring(b);
        if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
        if (a.size() == 1) return b.times_term(a.terms_[0].mono, a.terms_[0].coeff);
        if (b.size() == 1) return a.times_term(b.terms_[0].mono, b.terms_[0].coeff);
        const auto& F = a.ring_->field();
        std::unordered_map<Monomial, Coeff, MonomialHash> acc;
        acc.reserve(a.size() * b.size());
        for (const auto& s : a.terms_) {
            for (const auto& t : b.terms_) {
                auto& slot = acc[s.mono * t.mono];
                slot = F.add(slot, F.mul(s.coeff, t.coeff));
            }
        }
        std::vector<Term> terms;
        terms.reserve(acc.size());
        for (const auto& [m, c] : acc) {
            if (c != 0) terms.push_back({m, c});
        }
        return from_terms(a.ring_, std::move(terms));
    }

    Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
    Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
    Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

    /// c * m * this. Multiplying by a monomial preserves the term order.
    Polynomial times_term(const Monomial& m, Coeff c) const {
        Polynomial r(ring_);
        const auto& F = ring_->field();
        c %= ring_->characteristic();
        if (c == 0) return r;
        r.terms_.reserve(size());
        for (const auto& t : terms_) r.terms_.push_back({t.mono * m, F.mul(t.coeff, c)});
        return r;
    }

    Polynomial scaled(Coeff c) const { return times_term(ring_->one(), c); }

    Polynomial monic() const {
        if (is_zero()) return *this;
        return scaled(ring_->field().inv(leading_coefficient()));
    }

    /// this + c * m * b, merged in one pass.
    Polynomial merged(const Polynomial& b, Coeff c, const Monomial& m) const {
        check_ring(b);
        const auto& R = *ring_;
        const auto& F = R.field();
        Polynomial r(ring_);
        r.terms_.reserve(size() + b.size());
        auto i = terms_.begin();
        auto j = b.terms_.begin();
        while (i != terms_.end() || j != b.terms_.end()) {
            if (j == b.terms_.end()) {
                r.terms_.push_back(*i++);
                continue;
            }
            Monomial bm = j->mono * m;
            int cmp = i == terms_.end() ? -1 : R.compare(i->mono, bm);
            if (cmp > 0) {
                r.terms_.push_back(*i++);
            } else if (cmp < 0) {
                Coeff v = F.mul(j->coeff, c);
                if (v != 0) r.terms_.push_back({bm, v});
                ++j;
            } else {
                Coeff v = F.add(i->coeff, F.mul(j->coeff, c));
                if (v != 0) r.terms_.push_back({bm, v});
                ++i;
                ++j;
            }
        }
        return r;
    }

    /// Drops every term satisfying pred.
    template <class Pred>
    Polynomial without_terms(Pred pred) const {
        Polynomial r(ring_);
        for (const auto& t : terms_) {
            if (!pred(t.mono)) r.terms_.push_back(t);
        }
        return r;
    }

    /// Homogeneous component of the given weighted degree.
    Polynomial component(std::int64_t deg) const {
        return without_terms([&](const Monomial& m) { return ring_->weighted_degree(m) != deg; });
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
    }

    void check_ring(const Polynomial& b) const {
        if (!same_ring(ring_, b.ring_)) throw RingMismatch();
    }

private:
    RingPtr ring_;
    std::vector<Term> terms_;
};

/// a^q for q a power of the characteristic: every monomial is raised to the
/// q-th power and coefficients are fixed, since Frobenius is the identity on F_p.
inline Polynomial frobenius_power(const Polynomial& a, std::int64_t q) {
    std::vector<Term> terms;
    terms.reserve(a.size());
    for (const auto& t : a.terms()) terms.push_back({t.mono.pow(q), t.coeff});
    return Polynomial::from_terms(a.ring(), std::move(terms));
}

/// Plain binary exponentiation without the characteristic-p shortcut.
inline Polynomial pow_by_squaring(const Polynomial& a, std::uint64_t e) {
    Polynomial result = Polynomial::constant(a.ring(), 1);
    Polynomial base = a;
    while (e != 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e != 0) base *= base;
    }
    return result;
}

/// a^e. Factors of p in e are taken with the Frobenius fast path.
inline Polynomial pow(const Polynomial& a, std::uint64_t e) {
    const std::uint64_t p = a.ring()->characteristic();
    std::int64_t frob = 1;
    while (e != 0 && e % p == 0) {
        e /= p;
        frob *= static_cast<std::int64_t>(p);
        if (frob > kMaxExponent) throw OverflowError("power too large");
    }
    auto r = pow_by_squaring(a, e);
    return frob == 1 ? r : frobenius_power(r, frob);
}

inline Polynomial partial_derivative(const Polynomial& a, std::size_t var) {
    const auto& R = *a.ring();
    if (var >= R.nvars()) throw DomainError("variable index out of range");
    std::vector<Term> terms;
    for (const auto& t : a.terms()) {
        Exponent e = t.mono[var];
        Coeff c = R.field().mul(t.coeff, R.field().reduce(e));
        if (c == 0) continue;
        Monomial m = t.mono;
        m.set(var, e - 1);
        terms.push_back({m, c});
    }
    return Polynomial::from_terms(a.ring(), std::move(terms));
}

/// All monomials of total degree s, sorted descending in the ring's order.
inline std::vector<Monomial> monomials_of_degree(const Ring& ring, std::int64_t s) {
    std::vector<Monomial> out;
    if (s < 0) return out;
    const std::size_t n = ring.nvars();
    Monomial m(n);
    auto rec = [&](auto&& self, std::size_t i, std::int64_t left) -> void {
        if (i + 1 == n) {
            m.set(i, static_cast<Exponent>(left));
            out.push_back(m);
            return;
        }
        for (std::int64_t e = left; e >= 0; --e) {
            m.set(i, static_cast<Exponent>(e));
            self(self, i + 1, left - e);
        }
        m.set(i, 0);
    };
    rec(rec, 0, s);
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return ring.compare(a, b) > 0; });
    return out;
}

inline std::string to_string(const Monomial& m, const Ring& ring) {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += '*';
        s += ring.names()[i];
        if (m[i] > 1) s += '^' + std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
}

/// Canonical text: descending terms, explicit '*' and '^', coefficients in [0, p).
inline std::string to_string(const Polynomial& a) {
    if (a.is_zero()) return "0";
    std::string s;
    for (const auto& t : a.terms()) {
        if (!s.empty()) s += " + ";
        if (t.mono.is_one()) {
            s += std::to_string(t.coeff);
        } else {
            if (t.coeff != 1) s += std::to_string(t.coeff) + '*';
            s += to_string(t.mono, *a.ring());
        }
    }
    return s;
}

}  // namespace fpure

#endif
