#include <gtest/gtest.h>

#include <random>

#include "fpure/invariants.hpp"
#include "fpure/parser.hpp"
#include "fpure/report.hpp"
#include "oracle.hpp"
#include "random_ideals.hpp"

using namespace fpure;

namespace {

Ideal ideal_of(const RingPtr& R, std::initializer_list<const char*> gens) {
    std::vector<Polynomial> v;
    for (auto g : gens) v.push_back(parse_polynomial(g, R));
    return Ideal(R, std::move(v));
}

CompleteIntersection ci_of(std::uint32_t p, std::vector<std::string> vars, std::initializer_list<const char*> forms) {
    auto R = make_ring(p, std::move(vars));
    std::vector<Polynomial> v;
    for (auto f : forms) v.push_back(parse_polynomial(f, R));
    return CompleteIntersection(R, std::move(v));
}

Ideal pure_powers(const RingPtr& R, std::int64_t a, std::int64_t b) {
    Monomial xa(2), yb(2);
    xa.set(0, static_cast<Exponent>(a));
    yb.set(1, static_cast<Exponent>(b));
    return Ideal(R, {Polynomial::monomial(R, xa), Polynomial::monomial(R, yb)});
}

const char* kQuartic = "x^2*y^2 + y^2*z^2 + z^2*x^2";

// Random m-primary ideals in 2 or 3 variables with their stable q.
struct Sample {
    Ideal ideal;
    std::int64_t q;
};

// Checks at q and p*q stay cheap for p <= 3.
std::vector<Sample> samples(unsigned seed, int count) {
    std::mt19937 rng(seed);
    std::vector<Sample> out;
    for (int k = 0; k < count; ++k) {
        std::uint32_t p = std::array{2U, 3U}[k % 2];
        auto R = gen::ring(p, 2 + k % 2);
        auto I = gen::m_primary_ideal(rng, R, R->nvars() == 3 ? 3 : 4);
        out.push_back({I, stable_q(I)});
    }
    return out;
}

}  // namespace

TEST(Regularity, Examples) {
    auto R3 = make_ring(3, {"x", "y", "z"});
    EXPECT_EQ(regularity_artinian(maximal_ideal(R3)), 0);
    EXPECT_EQ(regularity_artinian(ideal_of(R3, {"x^3", "y^3", "z^3"})), 6);
    auto R2 = make_ring(5, {"x", "y"});
    for (std::int64_t a = 1; a <= 4; ++a) {
        for (std::int64_t b = 1; b <= 4; ++b) EXPECT_EQ(regularity_artinian(pure_powers(R2, a, b)), a + b - 2);
    }
    EXPECT_THROW(regularity_artinian(Ideal::unit(R3)), DomainError);
    EXPECT_THROW(regularity_artinian(ideal_of(R3, {"x", "y"})), DomainError);
}

TEST(PowerContainment, Examples) {
    auto R = make_ring(3, {"x", "y"});
    EXPECT_TRUE(power_containment(power_of_maximal(R, 2), 2));
    EXPECT_FALSE(power_containment(pure_powers(R, 2, 3), 3));
    EXPECT_TRUE(ideal_membership(parse_polynomial("x^2*y", R), pure_powers(R, 2, 3)));
    EXPECT_FALSE(ideal_membership(parse_polynomial("x*y^2", R), pure_powers(R, 2, 3)));
    EXPECT_THROW(power_containment(pure_powers(R, 2, 3), -1), DomainError);

    auto ci = ci_of(3, {"x", "y", "z"}, {kQuartic});
    auto tau = compute_tau(ci);
    EXPECT_TRUE(power_containment(tau.tau, 1));
    EXPECT_FALSE(power_containment(tau.tau, 0));
}

TEST(Mq, Examples) {
    auto R5 = make_ring(5, {"x", "y"});
    EXPECT_EQ(m_q(pure_powers(R5, 2, 3), 5), 5);
    auto R2 = make_ring(2, {"x", "y"});
    EXPECT_EQ(m_q(pure_powers(R2, 2, 3), 2), 0);
    auto R3 = make_ring(3, {"x", "y", "z"});
    EXPECT_EQ(m_q(maximal_ideal(R3), 3), 6);
    EXPECT_THROW(m_q(maximal_ideal(R3), 4), DomainError);
    EXPECT_THROW(m_q(Ideal::unit(R3), 3), DomainError);
    EXPECT_THROW(m_q(Ideal::zero(R3), 3), DomainError);
}

TEST(Mq, ThreeRegimes) {
    for (std::uint32_t p : {2U, 3U, 5U}) {
        auto R = make_ring(p, {"x", "y"});
        for (auto [a, b] : {std::pair{2, 3}, std::pair{3, 3}, std::pair{2, 5}}) {
            for (std::int64_t q = p; q <= std::int64_t{p} * p * p; q *= p) {
                std::int64_t expected = q <= a ? 0 : (q <= b ? q - a : 2 * q - (a + b));
                EXPECT_EQ(m_q(pure_powers(R, a, b), q), expected) << "p=" << p << " a=" << a << " b=" << b << " q=" << q;
            }
        }
    }
}

TEST(Mq, AgreesWithOracle) {
    std::mt19937 rng(77);
    for (int k = 0; k < 25; ++k) {
        std::uint32_t p = std::array{2U, 3U, 5U}[k % 3];
        auto R = gen::ring(p, 2 + k % 2);
        auto I = gen::m_primary_ideal(rng, R, 3);
        for (std::int64_t q = p; q <= (R->nvars() == 3 ? 9 : 25); q *= p) {
            EXPECT_EQ(m_q(I, q), oracle::m_q({I.generators().begin(), I.generators().end()}, R, q)) << "q=" << q;
        }
    }
}

TEST(Stabilization, Examples) {
    for (std::uint32_t p : {2U, 3U, 5U}) {
        auto R = make_ring(p, {"x", "y", "z"});
        for (std::int64_t q = p; q <= std::int64_t{p} * p; q *= p) EXPECT_TRUE(stabilization_check(maximal_ideal(R), q));
    }
    EXPECT_TRUE(stabilization_check(pure_powers(make_ring(5, {"x", "y"}), 2, 3), 5));
    EXPECT_FALSE(stabilization_check(pure_powers(make_ring(2, {"x", "y"}), 2, 3), 2));
    EXPECT_EQ(stable_q(pure_powers(make_ring(2, {"x", "y"}), 2, 3)), 4);
    Limits tight;
    tight.max_q = 2;
    EXPECT_THROW(stable_q(pure_powers(make_ring(2, {"x", "y"}), 2, 3), tight), ResourceLimit);
}

TEST(Invariants, ClosedForms) {
    auto quartic = ci_of(3, {"x", "y", "z"}, {kQuartic});
    EXPECT_EQ(a_invariant(quartic), 1);
    EXPECT_EQ(a_invariant(ci_of(5, {"x", "y", "z"}, {"x^3 + y^3 + z^3"})), 0);
    auto c2 = ci_of(5, {"x", "y", "z", "w"}, {"x*z - y*w", "x^3 + y^3 + z^3 + w^3"});
    EXPECT_EQ(a_invariant(c2), 1);
    EXPECT_EQ(thmA_bound(quartic, compute_tau(quartic)), 1);

    auto cubic2 = ci_of(2, {"x", "y", "z"}, {"x^3 + y^3 + z^3"});
    auto tau2 = compute_tau(cubic2);
    ASSERT_TRUE(tau2.is_m_primary && !tau2.is_unit);
    EXPECT_EQ(thmA_bound(cubic2, tau2), 0 - *tau2.ell);
    EXPECT_THROW(thmA_bound(ci_of(5, {"x", "y"}, {"x*y"}), compute_tau(ci_of(5, {"x", "y"}, {"x*y"}))), DomainError);

    EXPECT_EQ(cor_bound(2, 1, 4), -8);
    EXPECT_EQ(thmB_threshold(2, 1, 4), 6);
    EXPECT_EQ(cor_bound(2, 3, 6), 0);
    EXPECT_EQ(thmB_threshold(2, 3, 6), 0);
    EXPECT_EQ(thmB_threshold(2, 1, 3), 4);
    EXPECT_THROW(cor_bound(2, 0, 3), DomainError);
    EXPECT_THROW(cor_bound(2, 4, 8), DomainError);
    EXPECT_THROW(thmB_threshold(2, 2, 1), DomainError);
}

TEST(HilbertSeries, Examples) {
    EXPECT_EQ(hilbert_series_ci({2}, {2}, 1), (std::vector<std::int64_t>{1, 2, 1}));
    EXPECT_EQ(hilbert_series_ci({4}, {3, 3}, 2).size(), 8U);
    EXPECT_THROW(hilbert_series_ci({4}, {3}, 2), DomainError);
    EXPECT_THROW(hilbert_series_ci({0}, {3}, 1), DomainError);
    // The series of (x^a, y^b) has degree a+b-2, its regularity, and counts standard monomials.
    for (std::int64_t a = 1; a <= 4; ++a) {
        for (std::int64_t b = 1; b <= 4; ++b) {
            auto h = hilbert_series_ci({a}, {b}, 1);
            EXPECT_EQ(static_cast<std::int64_t>(h.size()) - 1, a + b - 2);
            auto I = pure_powers(make_ring(3, {"x", "y"}), a, b);
            for (std::size_t s = 0; s < h.size(); ++s) EXPECT_EQ(hilbert_function(I, static_cast<std::int64_t>(s)), h[s]);
        }
    }
}

TEST(Jacobian, IsolatedSingularity) {
    auto fermat = ci_of(5, {"x", "y", "z"}, {"x^3 + y^3 + z^3"});
    EXPECT_TRUE(ideal_equal(jacobian_ideal(fermat), ideal_of(fermat.ring(), {"3*x^2", "3*y^2", "3*z^2"})));
    EXPECT_TRUE(isolated_singularity_test(fermat));
    EXPECT_FALSE(isolated_singularity_test(ci_of(3, {"x", "y", "z"}, {kQuartic})));
    // Regression snapshot; e.g. (1,2,1,3) is a singular F_5-point.
    auto c2 = ci_of(5, {"x", "y", "z", "w"}, {"x*z - y*w", "x^2 + y^2 + z^2 + w^2"});
    EXPECT_EQ(jacobian_minors(c2).size(), 6U);
    EXPECT_FALSE(isolated_singularity_test(c2));
}

TEST(Jacobian, MinorsAgreeWithTwoByTwoFormula) {
    auto ci = ci_of(7, {"x", "y", "z", "w"}, {"x*y - z*w", "x^2 + 2*y^2 - z^2 + 3*w^2"});
    auto minors = jacobian_minors(ci);
    std::size_t k = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j, ++k) {
            auto expect = partial_derivative(ci.forms()[0], i) * partial_derivative(ci.forms()[1], j) -
                          partial_derivative(ci.forms()[1], i) * partial_derivative(ci.forms()[0], j);
            EXPECT_EQ(minors[k], expect);
        }
    }
}

TEST(Properties, RegularityIsContainmentThreshold) {
    for (const auto& [I, q] : samples(101, 20)) {
        auto reg = regularity_artinian(I);
        EXPECT_FALSE(power_containment(I, reg));
        EXPECT_TRUE(power_containment(I, reg + 1));
    }
}

TEST(Properties, MqDetectsPowerContainment) {
    for (const auto& [I, q] : samples(202, 15)) {
        const auto nv = static_cast<std::int64_t>(I.ring()->nvars());
        const auto reg = regularity_artinian(I);
        const std::int64_t p = I.ring()->characteristic();
        for (std::int64_t ell = 0; ell <= reg + 2; ++ell) {
            bool via_mq = nv * q - m_q(I, q) <= nv - 1 + ell && nv * (p * q) - m_q(I, p * q) <= nv - 1 + ell;
            EXPECT_EQ(via_mq, power_containment(I, ell)) << "ell=" << ell;
        }
    }
}

TEST(Properties, ColonOfMaximalPower) {
    for (std::uint32_t p : {2U, 3U}) {
        for (std::size_t nv : {2U, 3U}) {
            auto R = gen::ring(p, nv);
            const auto n = static_cast<std::int64_t>(nv) - 1;
            for (std::int64_t q = p; q <= std::int64_t{p} * p; q *= p) {
                if (nv == 3 && q > 4) continue;
                for (std::int64_t ell = 0; ell <= q; ++ell) {
                    auto lhs = colon(bracket_power_of_maximal(R, q), power_of_maximal(R, ell));
                    auto rhs = ideal_sum(bracket_power_of_maximal(R, q), power_of_maximal(R, (n + 1) * q - (n + ell)));
                    EXPECT_TRUE(ideal_equal(lhs, rhs)) << "p=" << p << " n=" << n << " q=" << q << " ell=" << ell;
                }
            }
        }
    }
}

TEST(Properties, ColonContainmentDetectsPowerContainment) {
    for (const auto& [I, q] : samples(303, 12)) {
        const auto reg = regularity_artinian(I);
        const std::int64_t p = I.ring()->characteristic();
        for (std::int64_t ell = 0; ell <= reg + 1; ++ell) {
            bool by_colon = true;
            for (std::int64_t qq : {q, p * q}) {
                auto bracket = bracket_power_of_maximal(I.ring(), qq);
                by_colon = by_colon && contains(colon(bracket, power_of_maximal(I.ring(), ell)), colon(bracket, I));
            }
            EXPECT_EQ(by_colon, power_containment(I, ell)) << "ell=" << ell;
        }
    }
}

TEST(Properties, InjectivityBoundDominatesDegreeBound) {
    std::mt19937 rng(404);
    int checked = 0;
    for (int k = 0; k < 40; ++k) {
        std::uint32_t p = std::array{2U, 3U, 5U}[k % 3];
        auto R = gen::ring(p, 2 + k % 2);
        CompleteIntersection ci(R, {gen::form(rng, R, 2 + k % 4, 0.5)});
        auto report = analyze(ci);
        if (report.thmA_bound) {
            ++checked;
            EXPECT_GE(*report.thmA_bound, report.cor_bound);
            EXPECT_EQ(report.ell, report.reg_s_mod_tau);
        }
    }
    EXPECT_GT(checked, 5);
}

TEST(Report, QuarticAndJsonRoundTrip) {
    auto report = analyze(ci_of(3, {"x", "y", "z"}, {kQuartic}));
    EXPECT_EQ(report.a_invariant, 1);
    EXPECT_EQ(report.reg_s_mod_tau, 0);
    EXPECT_EQ(report.ell, 0);
    EXPECT_EQ(report.thmA_bound, 1);
    EXPECT_EQ(report.cor_bound, -8);
    EXPECT_EQ(report.thmB_threshold, 6);
    EXPECT_FALSE(report.fpure_at_m);
    EXPECT_EQ(report.tau_class, TauClass::isolated_non_f_pure_point);
    EXPECT_FALSE(report.isolated_singularity);

    nlohmann::json j = report;
    EXPECT_EQ(j.at("thmA_bound"), 1);
    EXPECT_EQ(j.get<AnalysisReport>(), report);

    auto node = analyze(ci_of(5, {"x", "y"}, {"x*y"}));
    nlohmann::json jn = node;
    EXPECT_TRUE(jn.at("ell").is_null());
    EXPECT_TRUE(jn.at("thmA_bound").is_null());
    EXPECT_TRUE(jn.at("fpure_at_m").get<bool>());
    EXPECT_EQ(jn.get<AnalysisReport>(), node);
}
