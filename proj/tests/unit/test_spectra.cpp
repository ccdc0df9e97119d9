#include <doctest.h>

#include <cmath>

#include "oracles/frozen_values.hpp"
#include "tra/eigensolver.hpp"
#include "tra/spectra.hpp"

using namespace tra;

namespace {

const PotentialSpec kTable = PotentialSpec::from_half_lambda2(Family::A, 10.0, -80.0);

// published convergence table, energies in units of -lambda^2/2
constexpr double kPublishedExact[5] = {19.564814269481, 11.718388037498, 5.871961805514, 2.025535573531, 0.179109341547};
constexpr double kPublishedN100[5] = {19.564814269481, 11.718388037497, 5.871961805514, 2.025535570742, 0.178285719099};
constexpr double kPublishedN10[5] = {19.564814269470, 11.718388029082, 5.871959151893, 2.025073374517, 0.143562312026};

}  // namespace

TEST_SUITE("spectra") {
  TEST_CASE("exact levels of the table") {
    const ExactSpectrum ex = exact_spectrum(kTable);
    REQUIRE(ex.k_max == 4);
    for (int k = 0; k < 5; ++k) {
      CHECK(std::abs(-ex.eps[static_cast<std::size_t>(k)] - kPublishedExact[k]) <= 1e-11);
      CHECK(ex.eps[static_cast<std::size_t>(k)] == doctest::Approx(oracle::kTableExact[static_cast<std::size_t>(k)]).epsilon(1e-15));
    }
  }

  TEST_CASE("matrix levels against the 45-digit pencil") {
    const std::pair<int, const std::array<double, 5>*> cases[] = {
        {10, &oracle::kPencilN10}, {30, &oracle::kPencilN30}, {50, &oracle::kPencilN50}, {100, &oracle::kPencilN100}};
    for (const auto& [N, ref] : cases) {
      const SpectrumResult r = numeric_spectrum(kTable, N);
      REQUIRE(r.numeric.size() == 5);
      for (std::size_t k = 0; k < 5; ++k) {
        CAPTURE(N);
        CAPTURE(k);
        CHECK(std::abs(r.numeric[k] - (*ref)[k]) <= 2e-13);
      }
    }
  }

  TEST_CASE("matrix levels against the printed table") {
    const SpectrumResult r100 = numeric_spectrum(kTable, 100);
    const SpectrumResult r10 = numeric_spectrum(kTable, 10);
    for (std::size_t k = 0; k < 5; ++k) {
      CHECK(std::abs(-r100.numeric[k] - kPublishedN100[k]) <= 1e-6);
      CHECK(std::abs(-r10.numeric[k] - kPublishedN10[k]) <= 1e-6);
    }
  }

  TEST_CASE("convergence table is monotone and lays out like the table") {
    const ConvergenceTable t = convergence_table(kTable, {10, 30, 50, 100});
    for (int k = 0; k < 5; ++k) {
      CHECK(t.monotone(k));
    }
    const std::string csv = t.to_csv();
    CHECK(csv.rfind("level,N=10,N=30,N=50,N=100,exact\n0,19.5648142694698,", 0) == 0);
    CHECK(t.to_text().find("0.179109341547") != std::string::npos);
    const std::string raw = t.to_csv(false);
    CHECK(raw.find(",-19.5648142694813\n") != std::string::npos);
  }

  TEST_CASE("single-N list") {
    const ConvergenceTable t = convergence_table(kTable, {40});
    CHECK(t.runs.size() == 1);
    CHECK(t.monotone(0));
  }

  TEST_CASE("explicit nu inside the plateau changes little") {
    NuPolicy pol;
    pol.kind = NuPolicy::Kind::Explicit;
    pol.value = -2.0 * 50 - std::sqrt(10.25) - 2.3;
    const ConvergenceTable t = convergence_table(kTable, {50}, pol);
    CHECK(t.runs[0].nu_used == doctest::Approx(pol.value));
    CHECK(std::abs(t.runs[0].numeric[0] - oracle::kPencilN50[0]) <= 1e-9);
  }

  TEST_CASE("level count for large N") {
    for (int N : {18, 25, 60}) {
      CHECK(numeric_spectrum(kTable, N).numeric.size() == 5);
    }
  }

  TEST_CASE("no bound states") {
    const SpectrumResult r = numeric_spectrum(PotentialSpec{}, 20);
    CHECK(r.exact.empty());
    CHECK(r.k_max == -1);
    CHECK(r.numeric.empty());
    const ConvergenceTable t = convergence_table(PotentialSpec{}, {10});
    CHECK(t.to_csv() == "level,N=10,exact\n");
  }

  TEST_CASE("family B equals its mapped family-A problem") {
    const PotentialSpec b = PotentialSpec::from_half_lambda2(Family::B, 400.0, 150.0);
    const PotentialSpec a = equivalent_family_a(b);
    CHECK(a.v0 == doctest::Approx(100.0 * 0.5));
    CHECK(a.vs == doctest::Approx(-150.0 * 0.5));
    const ExactSpectrum eb = exact_spectrum(b), ea = exact_spectrum(a);
    REQUIRE(eb.eps.size() == ea.eps.size());
    for (std::size_t k = 0; k < eb.eps.size(); ++k) {
      CHECK(eb.eps[k] == doctest::Approx(ea.eps[k]).epsilon(1e-14));
    }
    const TraParams p = derive_params(b, 9);
    const Pencil direct = build_matrices_direct_b(p);
    const Pencil mapped = build_matrices(p);
    const GeneralizedEigResult gd = generalized_eig(direct.T, direct.R, false);
    const GeneralizedEigResult gm = generalized_eig(mapped.T, mapped.R, false);
    for (std::size_t j = 0; j < gd.eigenvalues.size(); ++j) {
      CHECK(std::abs(gd.eigenvalues[j] - gm.eigenvalues[j]) <= 1e-12 * std::max(1.0, std::abs(gm.eigenvalues[j])));
    }
  }
}
