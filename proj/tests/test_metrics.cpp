#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "ecgdn/errors.hpp"
#include "ecgdn/metrics.hpp"
#include "ecgdn/rng.hpp"

using namespace ecgdn;

TEST_CASE("signal power") {
    std::vector<double> zeros{0, 0, 0};
    CHECK(signal_power(zeros) == 0.0);
    CHECK_THROWS_AS(signal_power_log(zeros), DataError);

    std::vector<double> x{1, 2};
    CHECK(signal_power(x) == 5.0);

    std::vector<double> one{1};
    CHECK(signal_power_log(one) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("snr") {
    std::vector<double> x{1, -2, 0.5};
    CHECK(snr(x, x) == doctest::Approx(0.0).epsilon(1e-12));

    std::vector<double> a{1}, b{3};
    CHECK(snr(a, b) == doctest::Approx(10.0 * std::log10(1.0 / 9.0)).epsilon(1e-12));
    CHECK(snr(b, a) == doctest::Approx(10.0 * std::log10(9.0)).epsilon(1e-12));

    std::vector<double> zero{0};
    CHECK_THROWS_AS(snr(zero, b), DataError);
    CHECK_THROWS_AS(snr(b, zero), DataError);
    std::vector<double> longer{1, 1};
    CHECK_THROWS_AS(snr(a, longer), DataError);
}

TEST_CASE("ssd") {
    std::vector<double> x{1, 2}, y{0, 0};
    CHECK(ssd(x, x) == 0.0);
    CHECK(ssd(x, y) == 5.0);

    Rng rng(11);
    for (int t = 0; t < 20; ++t) {
        std::vector<double> a(16), b(16);
        for (auto* v : {&a, &b})
            for (double& e : *v) e = rng.uniform(-3, 3);
        CHECK(ssd(a, b) == doctest::Approx(ssd(b, a)).epsilon(1e-12));
        CHECK(ssd(a, b) >= 0.0);
    }
}

TEST_CASE("mad") {
    std::vector<double> x{1, 5}, y{2, 2};
    CHECK(mad(x, x) == 0.0);
    CHECK(mad(x, y) == 3.0);
    CHECK(mad(y, x) == 3.0);
    CHECK_THROWS_AS(mad(std::vector<double>{}, std::vector<double>{}), DataError);
}

TEST_CASE("cosine distance") {
    std::vector<double> x{1, 0}, y{0, 1};
    CHECK(cosine_distance(x, x) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(cosine_distance(x, y) == doctest::Approx(1.0).epsilon(1e-12));

    std::vector<double> p{1}, q{-1};
    CHECK(cosine_distance(p, q) == doctest::Approx(2.0).epsilon(1e-12));

    std::vector<double> zero{0, 0};
    CHECK_THROWS_AS(cosine_distance(zero, y), DataError);
}

TEST_CASE("cosine distance is scale invariant for positive scalings") {
    Rng rng(3);
    for (int t = 0; t < 20; ++t) {
        std::vector<double> a(8), b(8);
        for (auto* v : {&a, &b})
            for (double& e : *v) e = rng.uniform(-2, 2);
        double base = cosine_distance(a, b);
        double sa = rng.uniform(0.1, 10), sb = rng.uniform(0.1, 10);
        std::vector<double> a2 = a, b2 = b;
        for (double& e : a2) e *= sa;
        for (double& e : b2) e *= sb;
        CHECK(cosine_distance(a2, b2) == doctest::Approx(base).epsilon(1e-9));
    }
}

TEST_CASE("noise removed fraction") {
    CHECK(noise_removed_fraction(10, 0) == doctest::Approx(1.0));
    CHECK(noise_removed_fraction(10, 10) == doctest::Approx(0.0));
    CHECK(noise_removed_fraction(10, 15) == doctest::Approx(-0.5));
    CHECK_THROWS_AS(noise_removed_fraction(0, 1), DataError);
    CHECK_THROWS_AS(noise_removed_fraction(-1, 1), DataError);
}

TEST_CASE("summarize_stats singleton") {
    std::vector<double> v{5};
    auto s = summarize_stats(v);
    CHECK(s.mean == 5.0);
    CHECK(s.std_dev == 0.0);
    CHECK(s.min == 5.0);
    CHECK(s.q25 == 5.0);
    CHECK(s.q50 == 5.0);
    CHECK(s.q75 == 5.0);
    CHECK(s.max == 5.0);
}

TEST_CASE("summarize_stats four values") {
    std::vector<double> v{1, 2, 3, 4};
    auto s = summarize_stats(v);
    CHECK(s.mean == doctest::Approx(2.5));
    CHECK(s.std_dev == doctest::Approx(std::sqrt(5.0 / 3.0)).epsilon(1e-12));
    CHECK(s.q25 == doctest::Approx(1.75));
    CHECK(s.q50 == doctest::Approx(2.5));
    CHECK(s.q75 == doctest::Approx(3.25));
}

TEST_CASE("summarize_stats ordering and permutation invariance") {
    Rng rng(17);
    for (int t = 0; t < 30; ++t) {
        std::size_t n = 1 + rng.uniform_index(40);
        std::vector<double> v(n);
        for (double& e : v) e = rng.uniform(-100, 100);
        auto s = summarize_stats(v);
        CHECK(s.min <= s.q25);
        CHECK(s.q25 <= s.q50);
        CHECK(s.q50 <= s.q75);
        CHECK(s.q75 <= s.max);
        CHECK(s.std_dev >= 0.0);

        // shuffle
        for (std::size_t i = n; i > 1; --i)
            std::swap(v[i - 1], v[rng.uniform_index(i)]);
        CHECK(summarize_stats(v) == s);
    }
    CHECK_THROWS_AS(summarize_stats(std::vector<double>{}), DataError);
}
