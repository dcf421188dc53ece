#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "ecgdn/errors.hpp"
#include "ecgdn/rng.hpp"
#include "ecgdn/signal.hpp"

using namespace ecgdn;
namespace fs = std::filesystem;

namespace {

EcgSegment two_lead(std::vector<double> i, std::vector<double> ii) {
    EcgSegment s;
    s.segment_id = "seg";
    s.leads = {Lead{"I", std::move(i)}, Lead{"II", std::move(ii)}};
    return s;
}

fs::path temp_dir() {
    auto dir = fs::temp_directory_path() / "ecgdn_test_signal";
    fs::create_directories(dir);
    return dir;
}

} // namespace

TEST_CASE("derive_leads zero case") {
    auto s = derive_leads(two_lead({0, 0, 0}, {0, 0, 0}));
    REQUIRE(s.leads.size() == 6);
    for (const auto& name : {"III", "aVR", "aVL", "aVF"})
        for (double v : s.lead(name).samples) CHECK(v == 0.0);
}

TEST_CASE("derive_leads single-sample values") {
    auto s = derive_leads(two_lead({0.2}, {0.5}));
    CHECK(s.lead("III").samples[0] == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(s.lead("aVR").samples[0] == doctest::Approx(-0.35).epsilon(1e-12));
    CHECK(s.lead("aVL").samples[0] == doctest::Approx(-0.05).epsilon(1e-12));
    CHECK(s.lead("aVF").samples[0] == doctest::Approx(0.4).epsilon(1e-12));
}

TEST_CASE("derive_leads aVL identity when I == II") {
    std::vector<double> x = {0.1, -0.4, 0.9, 0.0};
    auto s = derive_leads(two_lead(x, x));
    for (std::size_t k = 0; k < x.size(); ++k)
        CHECK(s.lead("aVL").samples[k] == doctest::Approx(x[k] / 2).epsilon(1e-12));
}

TEST_CASE("derive_leads is linear and shape preserving") {
    Rng rng(7);
    std::vector<double> xi(64), xii(64), yi(64), yii(64);
    for (auto* v : {&xi, &xii, &yi, &yii})
        for (double& e : *v) e = rng.uniform(-2, 2);
    const double a = 1.7, b = -0.3;

    auto X = two_lead(xi, xii);
    auto Y = two_lead(yi, yii);
    std::vector<double> zi(64), zii(64);
    for (std::size_t k = 0; k < 64; ++k) {
        zi[k] = a * xi[k] + b * yi[k];
        zii[k] = a * xii[k] + b * yii[k];
    }
    auto dz = derive_leads(two_lead(zi, zii));
    auto dx = derive_leads(X);
    auto dy = derive_leads(Y);
    for (const auto& name : {"III", "aVR", "aVL", "aVF"})
        for (std::size_t k = 0; k < 64; ++k)
            CHECK(dz.lead(name).samples[k] ==
                  doctest::Approx(a * dx.lead(name).samples[k] + b * dy.lead(name).samples[k])
                      .epsilon(1e-12));
    CHECK(dz.length() == 64);
    CHECK(dz.sample_rate == X.sample_rate);
}

TEST_CASE("derive_leads requires I and II") {
    EcgSegment s;
    s.leads = {Lead{"II", {0.0}}};
    CHECK_THROWS_AS(derive_leads(s), DataError);
}

TEST_CASE("segment save/load round trip is bit-exact") {
    EcgSegment s = two_lead({0.123456789012345678, -1e-17, 3.5},
                            {2.0 / 3.0, 1e300, -0.0});
    s.sample_rate = 500;
    s.annotations.push_back(WaveAnnotation{WaveType::QRS, 1, 0, 3, true});
    auto path = (temp_dir() / "roundtrip.csv").string();
    save_segment(s, path);
    auto loaded = load_segment(path);
    CHECK(loaded == s);
}

TEST_CASE("load rejects ragged leads") {
    auto path = (temp_dir() / "ragged.csv").string();
    std::ofstream f(path);
    f << "I,II\n0.0,0.0\n1.0\n";
    f.close();
    CHECK_THROWS_WITH_AS(load_segment(path), doctest::Contains("ragged"), DataError);
}

TEST_CASE("load rejects non-finite samples") {
    auto path = (temp_dir() / "nan.csv").string();
    std::ofstream f(path);
    f << "I,II\n0.0,nan\n";
    f.close();
    CHECK_THROWS_WITH_AS(load_segment(path), doctest::Contains("non-finite"), DataError);
}

TEST_CASE("load rejects empty file") {
    auto path = (temp_dir() / "empty.csv").string();
    std::ofstream(path).close();
    CHECK_THROWS_AS(load_segment(path), DataError);
}

TEST_CASE("validate_segment catches invariant violations") {
    EcgSegment s = two_lead({1.0, 2.0}, {1.0});
    CHECK_THROWS_AS(validate_segment(s), DataError);
    s = two_lead({1.0}, {std::numeric_limits<double>::infinity()});
    CHECK_THROWS_AS(validate_segment(s), DataError);
    s = two_lead({1.0}, {1.0});
    s.sample_rate = 0;
    CHECK_THROWS_AS(validate_segment(s), DataError);
}

TEST_CASE("stable_hash is stable") {
    // Frozen values: changing the hash would silently re-partition every
    // dataset built from an existing master seed.
    CHECK(stable_hash(0, "abc") == stable_hash(0, "abc"));
    CHECK(stable_hash(0, "abc") != stable_hash(1, "abc"));
    CHECK(derive_seed(42, "test", "seg-001") == derive_seed(42, "test", "seg-001"));
    CHECK(derive_seed(42, "test", "seg-001") != derive_seed(42, "train", "seg-001"));
}
