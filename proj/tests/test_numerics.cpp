#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "test_util.hpp"
#include "xcoh/numerics.hpp"

using namespace xcoh;
using testutil::Rng;

TEST_CASE("shannon_entropy on reference spectra") {
  CHECK(shannon_entropy(std::vector<double>{1.0, 0.0, 0.0, 0.0}) ==
        doctest::Approx(0.0).epsilon(1e-15));
  CHECK(shannon_entropy(std::vector<double>{0.5, 0.5}) == doctest::Approx(1.0));
  CHECK(shannon_entropy(std::vector<double>{0.25, 0.25, 0.25, 0.25}) ==
        doctest::Approx(2.0));
}

TEST_CASE("shannon_entropy tolerates clamped numerical noise") {
  const std::vector<double> noisy = {1.0 + 5e-13, -5e-13, 0.0, 0.0};
  CHECK(shannon_entropy(noisy) == doctest::Approx(0.0).epsilon(1e-11));
}

TEST_CASE("shannon_entropy rejects bad distributions") {
  CHECK_THROWS_AS(shannon_entropy(std::vector<double>{-1e-3, 0.5, 0.5}),
                  std::domain_error);
  CHECK_THROWS_AS(shannon_entropy(std::vector<double>{0.5, 0.4}),
                  std::domain_error);
}

TEST_CASE("shannon_entropy is permutation invariant and maximal on uniform") {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> p(4);
    double sum = 0.0;
    for (auto& x : p) {
      x = rng.uniform();
      sum += x;
    }
    for (auto& x : p) x /= sum;
    const double h = shannon_entropy(p);
    std::vector<double> q = {p[2], p[0], p[3], p[1]};
    CHECK(shannon_entropy(q) == doctest::Approx(h).epsilon(1e-14));
    CHECK(h <= 2.0 + 1e-12);
  }
  CHECK(shannon_entropy(std::vector<double>{0.25, 0.25, 0.25, 0.25}) ==
        doctest::Approx(2.0));
}

TEST_CASE("binary_entropy reference values") {
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(1.0) == 0.0);
  CHECK(binary_entropy(0.5) == doctest::Approx(1.0));
  // direct evaluation of -p log2 p - (1-p) log2 (1-p) at p = 3/4
  CHECK(binary_entropy(0.75) ==
        doctest::Approx(0.8112781244591328).epsilon(1e-14));
  CHECK_THROWS_AS(binary_entropy(-0.01), std::domain_error);
  CHECK_THROWS_AS(binary_entropy(1.01), std::domain_error);
}

TEST_CASE("sqrt_psd_2x2 fixed points") {
  const Herm2 identity{1.0, 1.0, {0.0, 0.0}};
  const Herm2 root = sqrt_psd_2x2(identity);
  CHECK(root.a == doctest::Approx(1.0));
  CHECK(root.d == doctest::Approx(1.0));
  CHECK(std::abs(root.b) == doctest::Approx(0.0));

  // rank-1 block eps * [[1/2,1/2],[1/2,1/2]] has square root sqrt(eps) * P
  for (double eps : {1e-6, 0.01, 0.5}) {
    const Herm2 r = sqrt_psd_2x2({0.5 * eps, 0.5 * eps, {0.5 * eps, 0.0}});
    const double expected = 0.5 * std::sqrt(eps);
    CHECK(r.a == doctest::Approx(expected).epsilon(1e-12));
    CHECK(r.d == doctest::Approx(expected).epsilon(1e-12));
    CHECK(r.b.real() == doctest::Approx(expected).epsilon(1e-12));
  }

  const Herm2 zero_root = sqrt_psd_2x2(Herm2{});
  CHECK(zero_root.a == 0.0);
  CHECK(zero_root.d == 0.0);
}

TEST_CASE("sqrt_psd_2x2 squares back to its input") {
  auto square_entries = [](const Herm2& s) {
    const double a = s.a * s.a + std::norm(s.b);
    const double d = s.d * s.d + std::norm(s.b);
    const Complex b = s.b * (s.a + s.d);
    return Herm2{a, d, b};
  };

  const Herm2 example{0.5, 0.5, {0.25, 0.0}};
  const Herm2 sq = square_entries(sqrt_psd_2x2(example));
  CHECK(std::abs(sq.a - 0.5) <= 1e-12);
  CHECK(std::abs(sq.d - 0.5) <= 1e-12);
  CHECK(std::abs(sq.b.real() - 0.25) <= 1e-12);

  Rng rng(1234);
  for (int trial = 0; trial < 500; ++trial) {
    const Herm2 m = testutil::random_psd_herm2(rng);
    const Herm2 back = square_entries(sqrt_psd_2x2(m));
    CHECK(std::abs(back.a - m.a) <= 1e-12);
    CHECK(std::abs(back.d - m.d) <= 1e-12);
    CHECK(std::abs(back.b - m.b) <= 1e-12);
  }
}

TEST_CASE("sqrt_psd_2x2 rejects indefinite blocks") {
  CHECK_THROWS_AS(sqrt_psd_2x2({0.5, 0.5, {0.6, 0.0}}), std::domain_error);
  CHECK_THROWS_AS(sqrt_psd_2x2({-0.1, 0.5, {0.0, 0.0}}), std::domain_error);
}

TEST_CASE("eig_hermitian_4x4 on diagonal and pure inputs") {
  Herm4 diag;
  diag.set(0, 0, 0.4);
  diag.set(1, 1, 0.3);
  diag.set(2, 2, 0.2);
  diag.set(3, 3, 0.1);
  const auto ev = eig_hermitian_4x4(diag);
  CHECK(ev[0] == doctest::Approx(0.4).epsilon(1e-14));
  CHECK(ev[1] == doctest::Approx(0.3).epsilon(1e-14));
  CHECK(ev[2] == doctest::Approx(0.2).epsilon(1e-14));
  CHECK(ev[3] == doctest::Approx(0.1).epsilon(1e-14));

  // Bell projector (|00> + |11>)(<00| + <11|)/2
  Herm4 bell;
  bell.set(0, 0, 0.5);
  bell.set(3, 3, 0.5);
  bell.set(0, 3, 0.5);
  const auto bv = eig_hermitian_4x4(bell);
  CHECK(bv[0] == doctest::Approx(1.0).epsilon(1e-12));
  for (int i = 1; i < 4; ++i) CHECK(std::abs(bv[i]) <= 1e-12);
}

TEST_CASE("eig_hermitian_4x4 matches the Werner closed-form spectrum") {
  const double eps = 0.5;
  Herm4 werner;
  werner.set(0, 0, 0.25 * (1 + eps));
  werner.set(1, 1, 0.25 * (1 - eps));
  werner.set(2, 2, 0.25 * (1 - eps));
  werner.set(3, 3, 0.25 * (1 + eps));
  werner.set(0, 3, 0.5 * eps);
  const auto ev = eig_hermitian_4x4(werner);
  CHECK(ev[0] == doctest::Approx(0.625).epsilon(1e-12));
  CHECK(ev[1] == doctest::Approx(0.125).epsilon(1e-12));
  CHECK(ev[2] == doctest::Approx(0.125).epsilon(1e-12));
  CHECK(ev[3] == doctest::Approx(0.125).epsilon(1e-12));
}

TEST_CASE("eig_hermitian_4x4 recovers a planted spectrum") {
  Rng rng(777);
  for (int trial = 0; trial < 200; ++trial) {
    std::array<double, 4> spectrum;
    double sum = 0.0;
    for (auto& x : spectrum) {
      x = rng.uniform();
      sum += x;
    }
    for (auto& x : spectrum) x /= sum;
    std::sort(spectrum.begin(), spectrum.end(), std::greater<double>());
    const Herm4 m = testutil::herm4_with_spectrum(rng, spectrum);
    const auto ev = eig_hermitian_4x4(m);
    for (int i = 0; i < 4; ++i)
      CHECK(std::abs(ev[i] - spectrum[static_cast<std::size_t>(i)]) <= 1e-10);
  }
}

TEST_CASE("eig_hermitian_4x4_full eigenpairs satisfy the residual bound") {
  Rng rng(31337);
  for (int trial = 0; trial < 100; ++trial) {
    std::array<double, 4> spectrum;
    double sum = 0.0;
    for (auto& x : spectrum) {
      x = rng.uniform();
      sum += x;
    }
    for (auto& x : spectrum) x /= sum;
    const Herm4 m = testutil::herm4_with_spectrum(rng, spectrum);
    const auto sys = eig_hermitian_4x4_full(m);
    CHECK(sys.sweeps < 60);
    for (int k = 0; k < 4; ++k) {
      double residual2 = 0.0;
      for (int i = 0; i < 4; ++i) {
        Complex acc{0.0, 0.0};
        for (int j = 0; j < 4; ++j) acc += m(i, j) * sys.vectors[k][j];
        acc -= sys.values[k] * sys.vectors[k][i];
        residual2 += std::norm(acc);
      }
      CHECK(std::sqrt(residual2) <= 1e-10);
    }
  }
}

TEST_CASE("bisect_monotone inverts reference functions") {
  const auto identity = [](double x) { return x; };
  CHECK(bisect_monotone(identity, 0.3, 0.0, 1.0) ==
        doctest::Approx(0.3).epsilon(1e-11));

  const auto mnms_rel = [](double e) {
    return 1.0 - binary_entropy(0.5 * (1.0 + e));
  };
  CHECK(std::abs(bisect_monotone(mnms_rel, 0.0, 0.0, 1.0)) <= 1e-10);
  // forward-evaluate first: f(0.5) = 1 - H2(0.75)
  const double target = mnms_rel(0.5);
  CHECK(target == doctest::Approx(0.1887218755408672).epsilon(1e-14));
  CHECK(bisect_monotone(mnms_rel, target, 0.0, 1.0) ==
        doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("bisect_monotone round-trips random monotone functions") {
  Rng rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const double a = rng.uniform(0.1, 2.0);
    const double b = rng.uniform(0.0, 2.0);
    const double c = rng.uniform(0.0, 2.0);
    const auto f = [a, b, c](double x) {
      return a * x + b * x * x * x + c * std::atan(x);
    };
    const double x = rng.uniform();
    const double found = bisect_monotone(f, f(x), 0.0, 1.0);
    CHECK(std::abs(found - x) <= 1e-9);
  }
}

TEST_CASE("bisect_monotone rejects targets outside the bracket") {
  const auto identity = [](double x) { return x; };
  CHECK_THROWS_AS(bisect_monotone(identity, 1.5, 0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(bisect_monotone(identity, -0.5, 0.0, 1.0),
                  std::domain_error);
}

TEST_CASE("Herm4 stays Hermitian under set") {
  Herm4 m;
  m.set(0, 3, Complex(0.2, 0.1));
  m.set(2, 2, Complex(0.5, 1e-3));  // imaginary part of a diagonal is dropped
  CHECK(m(3, 0) == std::conj(m(0, 3)));
  CHECK(m(2, 2).imag() == 0.0);
}
