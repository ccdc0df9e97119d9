#include <doctest.h>

#include "tra/error.hpp"
#include "tra/tridiagonal.hpp"

using namespace tra;

TEST_SUITE("tridiagonal") {
  TEST_CASE("entries, product and norm") {
    const SymTridiagonal m({1.0, 2.0, 3.0}, {-1.0, 0.5});
    CHECK(m.size() == 3);
    CHECK(m.at(0, 1) == -1.0);
    CHECK(m.at(1, 0) == -1.0);
    CHECK(m.at(0, 2) == 0.0);
    const std::vector<double> y = m.multiply({1.0, 1.0, 1.0});
    CHECK(y == std::vector<double>{0.0, 1.5, 3.5});
    CHECK(m.norm_inf() == 3.5);
    CHECK(m.negated().at(1, 2) == -0.5);
  }
  TEST_CASE("shape checks") {
    CHECK_THROWS_AS(SymTridiagonal({1.0, 2.0}, {}), DomainError);
    CHECK_NOTHROW(SymTridiagonal({}, {}));
  }
}
