#ifndef FPURE_MONOMIAL_HPP
#define FPURE_MONOMIAL_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <limits>
#include <span>
#include <string>

#include "error.hpp"

namespace fpure {

/// Hard limit on the number of variables of any ring, including the
/// auxiliary variable used for elimination.
inline constexpr std::size_t kMaxVars = 8;

using Exponent = std::int32_t;
inline constexpr std::int64_t kMaxExponent = std::numeric_limits<Exponent>::max();

/// Exponent vector x_0^{e_0} ... x_n^{e_n} with cached total degree.
class Monomial {
public:
    Monomial() = default;

    explicit Monomial(std::size_t nvars) : nvars_(static_cast<std::uint8_t>(nvars)) {
        if (nvars > kMaxVars) throw DomainError("too many variables");
    }

    Monomial(std::initializer_list<Exponent> exps) : Monomial(exps.size()) {
        std::size_t i = 0;
        for (auto e : exps) set(i++, e);
    }

    explicit Monomial(std::span<const Exponent> exps) : Monomial(exps.size()) {
        for (std::size_t i = 0; i < exps.size(); ++i) set(i, exps[i]);
    }

    std::size_t size() const noexcept { return nvars_; }
    std::int64_t degree() const noexcept { return degree_; }

    Exponent operator[](std::size_t i) const noexcept { return exp_[i]; }

    void set(std::size_t i, Exponent e) {
        if (e < 0) throw DomainError("negative exponent");
        degree_ += std::int64_t{e} - exp_[i];
        exp_[i] = e;
    }

    std::span<const Exponent> exponents() const noexcept { return {exp_.data(), nvars_}; }

    bool is_one() const noexcept { return degree_ == 0; }

    /// True when this monomial divides other.
    bool divides(const Monomial& other) const noexcept {
        if (degree_ > other.degree_) return false;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (exp_[i] > other.exp_[i]) return false;
        }
        return true;
    }

    /// True when some exponent is at least q, i.e. membership in m^[q].
    bool in_bracket_power(std::int64_t q) const noexcept {
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (exp_[i] >= q) return true;
        }
        return false;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r(a.nvars_);
        for (std::size_t i = 0; i < a.nvars_; ++i) {
            std::int64_t e = std::int64_t{a.exp_[i]} + b.exp_[i];
            if (e > kMaxExponent) throw OverflowError("exponent overflow in monomial product");
            r.exp_[i] = static_cast<Exponent>(e);
        }
        r.degree_ = a.degree_ + b.degree_;
        return r;
    }

    /// Exact quotient a / b; b must divide a.
    friend Monomial operator/(const Monomial& a, const Monomial& b) {
        Monomial r(a.nvars_);
        for (std::size_t i = 0; i < a.nvars_; ++i) {
            r.exp_[i] = a.exp_[i] - b.exp_[i];
        }
        r.degree_ = a.degree_ - b.degree_;
        return r;
    }

    Monomial pow(std::int64_t e) const {
        Monomial r(nvars_);
        for (std::size_t i = 0; i < nvars_; ++i) {
            std::int64_t v = std::int64_t{exp_[i]} * e;
            if (v > kMaxExponent) throw OverflowError("exponent overflow in monomial power");
            r.exp_[i] = static_cast<Exponent>(v);
        }
        r.degree_ = degree_ * e;
        return r;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a.nvars_);
        for (std::size_t i = 0; i < a.nvars_; ++i) r.set(i, std::max(a.exp_[i], b.exp_[i]));
        return r;
    }

    friend bool coprime(const Monomial& a, const Monomial& b) noexcept {
        for (std::size_t i = 0; i < a.nvars_; ++i) {
            if (a.exp_[i] != 0 && b.exp_[i] != 0) return false;
        }
        return true;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
        return a.nvars_ == b.nvars_ && a.exp_ == b.exp_;
    }

    std::size_t hash() const noexcept {
        std::size_t h = nvars_;
        for (std::size_t i = 0; i < nvars_; ++i) {
            h ^= static_cast<std::size_t>(exp_[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }

private:
    std::array<Exponent, kMaxVars> exp_{};
    std::int64_t degree_ = 0;
    std::uint8_t nvars_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

}  // namespace fpure

#endif
