#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "rotframe/errors.hpp"
#include "rotframe/tensor.hpp"

using namespace rotframe;

TEST_CASE("metric_at matches the closed form") {
  SUBCASE("unit radius, c = 1") {
    const MetricAt m = metric_at({0, 1, 0, 0}, 1.0);
    CHECK(m.g[kT][kT] == 1.0);
    CHECK(m.g[kRho][kRho] == -1.0);
    CHECK(m.g[kPhi][kPhi] == -1.0);
    CHECK(m.g[kZ][kZ] == -1.0);
    CHECK(m.sqrt_neg_det == 1.0);
  }
  SUBCASE("rho = 2") {
    const MetricAt m = metric_at({0, 2, 0, 0}, 1.0);
    CHECK(m.g[kPhi][kPhi] == -4.0);
    CHECK(m.sqrt_neg_det == 2.0);
  }
  SUBCASE("c = 2") {
    const MetricAt m = metric_at({0, 1, 0, 0}, 2.0);
    CHECK(m.g[kT][kT] == 4.0);
    CHECK(m.sqrt_neg_det == 2.0);
    CHECK(m.det_g < 0.0);
  }
  CHECK_THROWS_AS(metric_at({0, 0, 0, 0}, 1.0), DomainError);
  CHECK_THROWS_AS(metric_at({0, -1, 0, 0}, 1.0), DomainError);
  CHECK_THROWS_AS(metric_at({0, 1, 0, 0}, 0.0), DomainError);
}

TEST_CASE("g * g_inv is the identity over the reference grid") {
  for (double rho : {0.1, 0.5, 1.0, 2.0, 10.0}) {
    for (double c : {1.0, 2.0, 3e8}) {
      const MetricAt m = metric_at({0, rho, 0, 0}, c);
      double worst = 0.0;
      for (std::size_t a = 0; a < kDim; ++a) {
        for (std::size_t b = 0; b < kDim; ++b) {
          double sum = 0.0;
          for (std::size_t k = 0; k < kDim; ++k) sum += m.g[a][k] * m.g_inv[k][b];
          worst = std::max(worst, std::abs(sum - (a == b ? 1.0 : 0.0)));
        }
      }
      CHECK(worst < 1e-13);
      CHECK(m.sqrt_neg_det == doctest::Approx(std::sqrt(-m.det_g)).epsilon(1e-15));
    }
  }
}

TEST_CASE("christoffel symbols") {
  SUBCASE("rho = 1") {
    const Connection g = christoffel_at({0, 1, 0, 0});
    CHECK(g[kRho][kPhi][kPhi] == -1.0);
    CHECK(g[kPhi][kRho][kPhi] == 1.0);
    CHECK(g[kPhi][kPhi][kRho] == 1.0);
  }
  SUBCASE("rho = 2") {
    const Connection g = christoffel_at({0, 2, 0, 0});
    CHECK(g[kRho][kPhi][kPhi] == -2.0);
    CHECK(g[kPhi][kRho][kPhi] == 0.5);
  }
  CHECK_THROWS_AS(christoffel_at({0, 0, 0, 0}), DomainError);
}

TEST_CASE("christoffel symbols vanish off the documented set") {
  oracles::Draw draw(11);
  for (int n = 0; n < 100; ++n) {
    const Event e = draw.event();
    const Connection g = christoffel_at(e);
    for (std::size_t a = 0; a < kDim; ++a) {
      for (std::size_t b = 0; b < kDim; ++b) {
        for (std::size_t c = 0; c < kDim; ++c) {
          CHECK(g[a][b][c] == g[a][c][b]);
          const bool documented = (a == kRho && b == kPhi && c == kPhi) ||
                                  (a == kPhi && b == kRho && c == kPhi) ||
                                  (a == kPhi && b == kPhi && c == kRho);
          if (!documented) CHECK(g[a][b][c] == 0.0);
        }
      }
    }
  }
}

TEST_CASE("metric is covariantly constant") {
  oracles::Draw draw(12);
  const double h = 1e-4;
  const double c = 1.7;
  for (int n = 0; n < 50; ++n) {
    const Event e = draw.event(0.5, 5.0);
    const MetricAt m = metric_at(e, c);
    const Connection conn = christoffel_at(e);
    for (std::size_t k = 0; k < kDim; ++k) {
      Event plus = e;
      Event minus = e;
      plus[k] += h;
      minus[k] -= h;
      const MetricAt mp = metric_at(plus, c);
      const MetricAt mm = metric_at(minus, c);
      for (std::size_t a = 0; a < kDim; ++a) {
        for (std::size_t b = 0; b < kDim; ++b) {
          double cov = (mp.g[a][b] - mm.g[a][b]) / (2.0 * h);
          for (std::size_t l = 0; l < kDim; ++l) {
            cov -= conn[l][k][a] * m.g[l][b] + conn[l][k][b] * m.g[a][l];
          }
          CHECK(std::abs(cov) < 1e-8);
        }
      }
    }
  }
}

TEST_CASE("lower and raise") {
  const MetricAt m1 = metric_at({0, 1, 0, 0}, 1.0);
  const MetricAt m2 = metric_at({0, 2, 0, 0}, 1.0);

  CHECK(lower(FourVector::contravariant({1, 0, 0, 0}), m1).components ==
        Components{1, 0, 0, 0});
  const FourVector low = lower(FourVector::contravariant({0, 0, 1, 0}), m2);
  CHECK(low.components == Components{0, 0, -4, 0});
  CHECK(low.variance == Variance::kCovariant);

  CHECK_THROWS_AS(lower(low, m2), VarianceError);
  CHECK_THROWS_AS(raise(FourVector::contravariant({1, 0, 0, 0}), m2), VarianceError);

  oracles::Draw draw(13);
  for (int n = 0; n < 200; ++n) {
    const MetricAt m = metric_at(draw.event(), draw.log_uniform(0.5, 5.0));
    const FourVector v = FourVector::contravariant(
        {draw.uniform(-3, 3), draw.uniform(-3, 3), draw.uniform(-3, 3), draw.uniform(-3, 3)});
    const FourVector back = raise(lower(v, m), m);
    for (std::size_t i = 0; i < kDim; ++i) {
      CHECK(std::abs(back[i] - v[i]) <= 1e-14 * std::max(1.0, std::abs(v[i])));
    }
  }
}

TEST_CASE("dot product") {
  const MetricAt m = metric_at({0, 1, 0, 0}, 1.0);
  const FourVector et = FourVector::contravariant({1, 0, 0, 0});
  const FourVector er = FourVector::contravariant({0, 1, 0, 0});
  const FourVector ez = FourVector::contravariant({0, 0, 0, 1});
  CHECK(dot(et, et, m) == 1.0);
  CHECK(dot(et, er, m) == 0.0);
  CHECK(dot(ez, ez, m) == -1.0);

  // Mixed variance gives the same scalar as the all-contravariant form.
  const MetricAt m3 = metric_at({0, 3, 0, 0}, 2.0);
  const FourVector a = FourVector::contravariant({0.3, -1.2, 0.7, 2.0});
  const FourVector b = FourVector::contravariant({1.1, 0.4, -0.5, 0.9});
  const double ref = dot(a, b, m3);
  CHECK(dot(lower(a, m3), b, m3) == doctest::Approx(ref).epsilon(1e-15));
  CHECK(dot(a, lower(b, m3), m3) == doctest::Approx(ref).epsilon(1e-15));
  CHECK(dot(lower(a, m3), lower(b, m3), m3) == doctest::Approx(ref).epsilon(1e-15));
  CHECK(dot(b, a, m3) == doctest::Approx(ref).epsilon(1e-15));
}

TEST_CASE("levi-civita symbol") {
  CHECK(levi_civita_symbol(kT, kRho, kPhi, kZ) == 1);
  CHECK(levi_civita_symbol(kRho, kT, kPhi, kZ) == -1);
  CHECK(levi_civita_symbol(kT, kT, kPhi, kZ) == 0);
  CHECK(levi_civita_symbol(kZ, kT, kRho, kPhi) == -1);
  CHECK_THROWS_AS(levi_civita_symbol(0, 1, 2, 4), IndexError);

  int total = 0;
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = 0; j < kDim; ++j)
      for (std::size_t k = 0; k < kDim; ++k)
        for (std::size_t l = 0; l < kDim; ++l) total += std::abs(levi_civita_symbol(i, j, k, l));
  CHECK(total == 24);
}

TEST_CASE("antisymmetric tensor storage") {
  oracles::Draw draw(14);
  Matrix4 m{};
  for (auto& row : m)
    for (double& x : row) x = draw.uniform(-1, 1);
  const AntisymmetricTensor w = AntisymmetricTensor::antisymmetric_part(m);
  for (std::size_t a = 0; a < kDim; ++a) {
    CHECK(w(a, a) == 0.0);
    for (std::size_t b = 0; b < kDim; ++b) {
      CHECK(w(a, b) + w(b, a) == 0.0);
      CHECK(w(a, b) == doctest::Approx(0.5 * (m[a][b] - m[b][a])));
    }
  }
  AntisymmetricTensor v;
  v.set(kPhi, kRho, 2.5);
  CHECK(v(kRho, kPhi) == -2.5);
  CHECK_THROWS_AS(v.set(kT, kT, 1.0), IndexError);
}
