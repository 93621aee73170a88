#include "oracles.hpp"
#include "qcircle/errors.hpp"
#include "qcircle/partitions.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace qc;

TEST(Partitions, SmallValues) {
    auto t = p_recurrence(4);
    std::vector<BigInt> expect{1, 1, 2, 3, 5};
    EXPECT_EQ(t.values, expect);
    EXPECT_EQ(p_euler_product(4).values, expect);
}

TEST(Partitions, TableValues) {
    auto r = p_recurrence(80);
    auto e = p_euler_product(80);
    EXPECT_EQ(r.values[10], 42);
    EXPECT_EQ(r.values[20], 627);
    EXPECT_EQ(r.values[40], 37338);
    EXPECT_EQ(r.values[80], 15796476);
    EXPECT_EQ(r.values, e.values);
}

TEST(Partitions, MatchesExhaustiveCount) {
    auto r = p_recurrence(30);
    for (int n = 0; n <= 30; ++n) EXPECT_EQ(r.values[n], oracle::count_partitions(n, n)) << n;
}

TEST(Partitions, RoutesAgreeTo2000) {
    auto r = p_recurrence(2000);
    EXPECT_EQ(r.values, p_euler_product(2000).values);
    for (int n = 1; n <= 2000; ++n) EXPECT_GE(r.values[n], r.values[n - 1]);
}

TEST(Partitions, RamanujanCongruences) {
    EXPECT_TRUE(check_ramanujan_congruences(3000).empty());
    auto r = p_recurrence(6);
    EXPECT_EQ(r.values[4] % 5, 0);
    EXPECT_EQ(r.values[6] % 11, 0);
}

TEST(Partitions, KroneckerSymbol) {
    EXPECT_EQ(kronecker(2, 7), 1);
    EXPECT_EQ(kronecker(3, 7), -1);
    EXPECT_EQ(kronecker(-1, 3), -1);
    EXPECT_EQ(kronecker(-1, 5), 1);
    EXPECT_EQ(kronecker(2, 3), -1);
    EXPECT_EQ(kronecker(6, 9), 0);
    EXPECT_EQ(kronecker(5, -1), 1);
    EXPECT_EQ(kronecker(-5, -1), -1);
    for (long d = -60; d <= 60; ++d) EXPECT_EQ(kronecker(12, d), oracle::kronecker12(d)) << d;
}

TEST(Partitions, KloostermanTrivialModulus) {
    for (long n = 1; n <= 30; ++n) EXPECT_LT(abs(kloosterman_A(1, n, 128) - 1), Real(1e-30)) << n;
}

TEST(Partitions, KloostermanA2BruteForce) {
    auto brute = oracle::quadratic_A(2, 1);
    Real a = kloosterman_A(2, 1, 128);
    EXPECT_NEAR(a.convert_to<double>(), brute.real(), 1e-12);
    EXPECT_NEAR(a.convert_to<double>(), -1.0, 1e-12);
}

TEST(Partitions, KloostermanMatchesSelbergFormula) {
    for (long k = 1; k <= 20; ++k)
        for (long n = 1; n <= 50; n += 7) {
            auto a = kloosterman_A_complex(k, n, 128);
            EXPECT_NEAR(a.re.convert_to<double>(), oracle::selberg_A(k, n), 1e-9) << k << " " << n;
            EXPECT_LT(abs(a.im), Real(1e-30));
        }
}

TEST(Partitions, BesselThreeHalvesSeries) {
    PrecisionScope ps(192);
    for (const char* s : {"0.5", "1", "5", "20"}) {
        Real x(s);
        Real a = bessel_I_three_halves(x);
        Real b = oracle::bessel_I_series(Real(1.5), x);
        EXPECT_LT(abs((a - b) / b), Real(1e-40)) << s;
    }
}

TEST(Partitions, RademacherExamples) {
    EXPECT_EQ(rademacher_p(10, 5).rounded, 42);
    auto r = rademacher_p(80, 18);
    EXPECT_EQ(r.rounded, 15796476);
    EXPECT_LT(r.tail_bound, 0.5);
    EXPECT_EQ(r.precision_bits, rademacher_bits(80));
}

TEST(Partitions, RademacherRejectsLowPrecision) {
    EXPECT_THROW(rademacher_p(100, 20, 16), InsufficientPrecision);
    EXPECT_THROW(rademacher_p(0, 3), ValidationError);
}

TEST(Partitions, RademacherThreadIndependent) {
    auto a = rademacher_p(150, 25, 0, 1);
    auto b = rademacher_p(150, 25, 0, 3);
    EXPECT_EQ(a.approx, b.approx);
}

TEST(Partitions, RademacherTailDecay) {
    for (long n : {50L, 120L, 200L}) {
        auto r = rademacher_p(n, 640);
        std::vector<Real> tail(r.terms.size() + 1, Real(0));
        for (long k = static_cast<long>(r.terms.size()); k >= 1; --k) tail[k - 1] = tail[k] + abs(r.terms[k - 1].term_value);
        for (long K : {10L, 20L, 40L, 80L, 160L}) {
            EXPECT_LT(tail[2 * K] / tail[K], Real("0.55")) << "n=" << n << " K=" << K;
            EXPECT_LT(tail[4 * K], tail[K] / 2) << "n=" << n << " K=" << K;
        }
    }
}

TEST(Partitions, TermsDecayBeyondInitialRange) {
    auto r = rademacher_p(100, 50);
    Real first = abs(r.terms[0].term_value);
    for (std::size_t i = 5; i < r.terms.size(); ++i) EXPECT_LT(abs(r.terms[i].term_value), first * Real(1e-6));
}

TEST(Partitions, HardyRamanujanRatioTrend) {
    auto p = p_recurrence(200);
    double prev = 1e9;
    for (long n : {50L, 100L, 200L}) {
        Real ratio = to_real(p.values[n]) / hardy_ramanujan_leading(n, 128);
        double dev = std::abs(ratio.convert_to<double>() - 1);
        EXPECT_LT(dev, prev) << n;
        prev = dev;
        Real main = rademacher_main_term(n, 128);
        EXPECT_LT(abs(main / to_real(p.values[n]) - 1), Real(1e-3)) << n;
    }
}

TEST(Partitions, NearOneAsymptotic) {
    PrecisionScope ps(192);
    for (const char* ts : {"0.01", "0.001"}) {
        Real t(ts);
        Real P = eval_P_near_root(0, 1, t, 192);
        Real lead = boost::multiprecision::sqrt(t / (2 * pi())) * boost::multiprecision::exp(pi() * pi() / (6 * t));
        Real ratio = P / lead;
        EXPECT_LT(abs(ratio - boost::multiprecision::exp(-t / 24)), Real(1e-30)) << ts;
        EXPECT_LT(abs(ratio - 1), t / 20) << ts;
    }
}

TEST(Partitions, NearRootRoutesAgree) {
    PrecisionScope ps(192);
    Real t("0.05");
    for (auto [h, k] : std::vector<std::pair<long, long>>{{0, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 5}}) {
        Real direct = eval_P_near_root(h, k, t, 192);
        Complex tau(to_real(Rational(h, k)), t / (2 * pi()));
        Real via_eta = boost::multiprecision::exp(-t / 24) / abs(oracle::eta_product(tau));
        EXPECT_LT(abs(direct / via_eta - 1), Real(1e-40)) << h << "/" << k;
    }
}

TEST(Partitions, NearRootTableAnchors) {
    PrecisionScope ps(128);
    EXPECT_EQ(sci(eval_P_near_root(0, 1, Real("0.5"), 128), 2), "7.4");
    EXPECT_EQ(truncate_decimal(eval_P_near_root(1, 2, Real("0.1"), 128), 1), "10.8");
    EXPECT_EQ(sci(eval_P_near_root(0, 1, Real("0.01"), 128), 2), "1.1e70");
    EXPECT_EQ(sci(eval_P_near_root(1, 2, Real("0.01"), 128), 2), "4.1e16");
}
