#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "posetx/verify.hpp"

using namespace posetx;

TEST_CASE("reduced-scope run passes every check") {
  VerifyScope scope;
  scope.k_max = 3;
  scope.m_max = 3;
  scope.random_vertical_trials = 200;
  auto results = run_verify_checks(scope);
  CHECK(results.size() == verify_check_names().size());
  for (const auto& r : results) {
    INFO(r.name, ": ", r.detail);
    CHECK(r.pass);
  }
}

TEST_CASE("checklist names are unique and stable") {
  const auto& names = verify_check_names();
  std::set<std::string> unique(names.begin(), names.end());
  CHECK(unique.size() == names.size());
  CHECK(unique.count("downset-count-agreement") == 1);
  CHECK(unique.count("catalog-census-golden") == 1);
  CHECK(unique.count("matrix-identities") == 1);
  CHECK(unique.count("checklist-complete") == 1);
}
