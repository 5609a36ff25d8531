#ifndef FPURE_FIELD_HPP
#define FPURE_FIELD_HPP

#include <cstdint>
#include <string>

#include "error.hpp"

namespace fpure {

using Coeff = std::uint32_t;

/// The prime field F_p. Elements are plain integers kept in [0, p).
class PrimeField {
public:
    explicit PrimeField(std::uint32_t p) : p_(p) {
        if (!is_prime(p)) {
            throw DomainError("characteristic " + std::to_string(p) + " is not prime");
        }
    }

    std::uint32_t characteristic() const noexcept { return p_; }

    static bool is_prime(std::uint64_t n) noexcept {
        if (n < 2) return false;
        for (std::uint64_t k = 2; k * k <= n; ++k) {
            if (n % k == 0) return false;
        }
        return true;
    }

    Coeff reduce(std::int64_t v) const noexcept {
        auto r = v % static_cast<std::int64_t>(p_);
        if (r < 0) r += p_;
        return static_cast<Coeff>(r);
    }

    Coeff add(Coeff a, Coeff b) const noexcept {
        std::uint64_t s = std::uint64_t{a} + b;
        return static_cast<Coeff>(s >= p_ ? s - p_ : s);
    }
    Coeff sub(Coeff a, Coeff b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    Coeff neg(Coeff a) const noexcept { return a == 0 ? 0 : p_ - a; }
    Coeff mul(Coeff a, Coeff b) const noexcept {
        return static_cast<Coeff>((std::uint64_t{a} * b) % p_);
    }

    Coeff pow(Coeff a, std::uint64_t e) const noexcept {
        Coeff result = 1 % p_;
        Coeff base = a;
        while (e != 0) {
            if (e & 1U) result = mul(result, base);
            base = mul(base, base);
            e >>= 1U;
        }
        return result;
    }

    /// Inverse by Fermat's little theorem; a must be nonzero.
    Coeff inv(Coeff a) const {
        if (a == 0) throw DomainError("division by zero in F_" + std::to_string(p_));
        return pow(a, p_ - 2);
    }

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint32_t p_;
};

}  // namespace fpure

#endif
