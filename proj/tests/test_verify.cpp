#include <gtest/gtest.h>

#include "flagres/verify.hpp"

using namespace flagres;

class SuitePasses : public ::testing::TestWithParam<std::string> {};

TEST_P(SuitePasses, DefaultConfiguration) {
    verify::SuiteConfig cfg;
    cfg.samples = 50;
    const auto rep = verify::run_suite(GetParam(), cfg);
    EXPECT_FALSE(rep.checks.empty());
    EXPECT_TRUE(rep.pass()) << verify::report_text(rep);
    EXPECT_FALSE(rep.first_failure.has_value());
}

TEST_P(SuitePasses, SL4Word) {
    verify::SuiteConfig cfg;
    cfg.word = Word(4, {1, 2, 3, 1, 2, 1});
    cfg.samples = 20;
    cfg.seed = 7;
    const auto rep = verify::run_suite(GetParam(), cfg);
    EXPECT_TRUE(rep.pass()) << verify::report_text(rep);
}

INSTANTIATE_TEST_SUITE_P(AllSuites, SuitePasses, ::testing::ValuesIn(verify::suite_names()));

TEST(Verify, ReportsAreDeterministic) {
    verify::SuiteConfig cfg;
    cfg.samples = 30;
    for (const auto& name : verify::suite_names()) {
        const auto a = verify::run_suite(name, cfg), b = verify::run_suite(name, cfg);
        EXPECT_EQ(verify::report_json(a).dump(), verify::report_json(b).dump());
        EXPECT_EQ(verify::report_text(a), verify::report_text(b));
    }
}

TEST(Verify, TightToleranceFailsWithWitness) {
    verify::SuiteConfig cfg;
    cfg.samples = 10;
    cfg.tol.value = 1e-30;
    cfg.tol.recon = 1e-30;
    const auto rep = verify::run_suite("iwasawa", cfg);
    EXPECT_FALSE(rep.pass());
    ASSERT_TRUE(rep.first_failure.has_value());
    EXPECT_TRUE(rep.first_failure->contains("check"));
}

TEST(Verify, UnknownSuite) {
    EXPECT_THROW(verify::run_suite("nope", {}), DomainError);
}
