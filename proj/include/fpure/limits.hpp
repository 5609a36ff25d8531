#ifndef FPURE_LIMITS_HPP
#define FPURE_LIMITS_HPP

#include <cstddef>
#include <cstdint>

#include "monomial.hpp"

namespace fpure {

/// Resource caps for the searches over Frobenius powers.
struct Limits {
    /// Largest q tried when searching for a stable q; 0 means p^6.
    std::int64_t max_q = 0;
    /// Widest coefficient matrix built by the graded-piece computations.
    std::size_t max_cols = 20000;

    std::int64_t q_cap(std::int64_t p) const {
        if (max_q > 0) return max_q;
        std::int64_t q = 1;
        for (int i = 0; i < 6 && q <= kMaxExponent / p; ++i) q *= p;
        return q;
    }
};

}  // namespace fpure

#endif
