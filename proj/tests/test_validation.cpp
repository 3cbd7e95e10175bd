#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "zpr/validation.hpp"

using namespace zpr;

TEST_CASE("perturbed Stefan-Boltzmann constant fails the energy identity")
{
    ValidationOptions opt;
    opt.run_monte_carlo = false;
    CHECK(run_criterion(8, opt).pass());
    opt.sigma_scale = 1.01;
    CheckResult r = run_criterion(8, opt);
    CHECK_FALSE(r.pass());
    CHECK(r.summary_line().rfind("FAIL [ 8]", 0) == 0);
}

TEST_CASE("criterion lookup")
{
    CHECK(std::string(criterion_title(11)) == "hadron-scale estimates");
    CHECK_THROWS(criterion_title(0));
    CHECK_THROWS(criterion_title(criterion_count + 1));
}

TEST_CASE("summary line shape")
{
    CheckResult r = run_criterion(2);
    CHECK(r.pass());
    CHECK(r.summary_line().rfind("PASS [ 2] phi-kernels vs quadrature", 0) == 0);
}
