#include <doctest.h>

#include "tra/verify.hpp"

using namespace tra;

TEST_SUITE("verify") {
  TEST_CASE("every check passes on the table potential") {
    VerifyConfig c;
    c.spec = PotentialSpec::from_half_lambda2(Family::A, 10.0, -80.0);
    c.N = 30;
    c.quick = true;
    const VerifyReport r = run_verify(c);
    CHECK(r.checks.size() >= 10);
    for (const CheckResult& x : r.checks) {
      CAPTURE(x.name);
      CAPTURE(x.detail);
      CHECK(x.status == CheckStatus::Pass);
    }
    CHECK(r.all_passed());
  }

  TEST_CASE("regime violation fails and skips the rest") {
    VerifyConfig c;
    c.spec = PotentialSpec::from_half_lambda2(Family::A, 10.0, -80.0);
    c.N = 10;
    c.free_param = -12.0;
    c.quick = true;
    const VerifyReport r = run_verify(c);
    CHECK_FALSE(r.all_passed());
    int failed = 0;
    int skipped = 0;
    for (const CheckResult& x : r.checks) {
      failed += x.status == CheckStatus::Fail;
      skipped += x.status == CheckStatus::Skipped;
    }
    CHECK(failed == 1);
    CHECK(skipped == static_cast<int>(r.checks.size()) - 1);
  }

  TEST_CASE("individual checks") {
    CHECK(check_identity_recursion_sum(100, 7).status == CheckStatus::Pass);
    CHECK(check_jacobi_orthogonality().status == CheckStatus::Pass);
    CHECK(check_wilson_dual_path(30, 3).status == CheckStatus::Pass);
    CHECK(to_string(CheckStatus::Pass) == "pass");
  }
}
