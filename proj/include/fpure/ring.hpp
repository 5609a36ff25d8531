#ifndef FPURE_RING_HPP
#define FPURE_RING_HPP

#include <cctype>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "field.hpp"
#include "monomial.hpp"

namespace fpure {

enum class MonomialOrder {
    /// Graded reverse lexicographic, x_0 > x_1 > ... > x_n.
    grevlex,
    /// Block order: the last variable t dominates, ties broken by grevlex on
    /// the others. t carries weight 0 so x-homogeneous inputs stay graded.
    eliminate_last,
};

/// Polynomial ring F_p[x_0..x_n] with a fixed monomial order.
class Ring {
public:
    Ring(std::uint32_t p, std::vector<std::string> names,
         MonomialOrder order = MonomialOrder::grevlex)
        : field_(p), names_(std::move(names)), order_(order) {
        if (names_.empty()) throw DomainError("a ring needs at least one variable");
        // One slot stays free for the auxiliary elimination variable.
        std::size_t cap = order_ == MonomialOrder::eliminate_last ? kMaxVars : kMaxVars - 1;
        if (names_.size() > cap) {
            throw DomainError("at most " + std::to_string(kMaxVars - 1) + " variables supported");
        }
        std::set<std::string> seen;
        for (const auto& name : names_) {
            if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) {
                throw DomainError("variable name '" + name + "' must start with a letter");
            }
            for (char ch : name) {
                if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') {
                    throw DomainError("variable name '" + name + "' has invalid characters");
                }
            }
            if (!seen.insert(name).second) throw DomainError("duplicate variable name '" + name + "'");
        }
    }

    const PrimeField& field() const noexcept { return field_; }
    std::uint32_t characteristic() const noexcept { return field_.characteristic(); }
    std::size_t nvars() const noexcept { return names_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    MonomialOrder order() const noexcept { return order_; }

    /// Grading used for pair selection and homogeneity: the elimination
    /// variable has weight 0.
    std::int64_t weighted_degree(const Monomial& m) const noexcept {
        if (order_ == MonomialOrder::eliminate_last) return m.degree() - m[nvars() - 1];
        return m.degree();
    }

    /// Three-way comparison under the ring's order: negative when a < b.
    int compare(const Monomial& a, const Monomial& b) const noexcept {
        std::size_t last = nvars();
        if (order_ == MonomialOrder::eliminate_last) {
            --last;
            if (a[last] != b[last]) return a[last] < b[last] ? -1 : 1;
        }
        auto da = weighted_degree(a);
        auto db = weighted_degree(b);
        if (da != db) return da < db ? -1 : 1;
        for (std::size_t i = last; i-- > 0;) {
            if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
        }
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b) const noexcept { return compare(a, b) < 0; }

    Monomial one() const { return Monomial(nvars()); }

    Monomial variable(std::size_t i) const {
        Monomial m(nvars());
        m.set(i, 1);
        return m;
    }

    friend bool operator==(const Ring& a, const Ring& b) {
        return a.field_ == b.field_ && a.order_ == b.order_ && a.names_ == b.names_;
    }

private:
    PrimeField field_;
    std::vector<std::string> names_;
    MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::uint32_t p, std::vector<std::string> names) {
    return std::make_shared<const Ring>(p, std::move(names));
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || (a && b && *a == *b);
}

}  // namespace fpure

#endif
