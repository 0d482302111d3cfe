#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "blasius/rk_integrator.hpp"

using namespace blasius;

namespace {

using S1 = StateVector<1>;
using S3 = StateVector<3>;

auto growth = [](double, const S1& y) { return S1{y[0]}; };

double endpoint_error(const ButcherTableau& tableau, double h) {
  const auto samples = integrate(growth, tableau, GridSpec{h, 1.0}, S1{1.0});
  return std::fabs(samples.back().y[0] - std::exp(1.0));
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const SolverError& e) {
    return e.code();
  }
  FAIL("expected SolverError");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("tableaux satisfy their structural invariants") {
  for (const ButcherTableau* t : {&cooper_verner8(), &classical_rk4()}) {
    double weights = 0.0;
    for (std::size_t i = 0; i < t->stage_count(); ++i) {
      weights += t->weight(i);
      double row = 0.0;
      for (std::size_t j = 0; j < t->stage_count(); ++j) {
        if (j >= i) CHECK(t->coupling(i, j) == 0.0);
        row += t->coupling(i, j);
      }
      CHECK(std::fabs(row - t->node(i)) <= 1e-14);
    }
    CHECK(std::fabs(weights - 1.0) <= 1e-14);
  }
  CHECK(cooper_verner8().stage_count() == 11);
  CHECK(cooper_verner8().declared_order() == 8);
  CHECK(classical_rk4().declared_order() == 4);
}

TEST_CASE("malformed tableaux are rejected") {
  // implicit entry on the diagonal
  CHECK_THROWS_AS(ButcherTableau("bad", {0.0, 1.0}, {0.5, 0.5}, {{0.0}, {0.5, 0.5}}, 2),
                  SolverError);
  // weights do not sum to one
  CHECK_THROWS_AS(ButcherTableau("bad", {0.0, 1.0}, {0.5, 0.6}, {{}, {1.0}}, 2), SolverError);
  // node differs from the row sum
  CHECK_THROWS_AS(ButcherTableau("bad", {0.0, 0.7}, {0.5, 0.5}, {{}, {1.0}}, 2), SolverError);
  CHECK_NOTHROW(ButcherTableau("heun", {0.0, 1.0}, {0.5, 0.5}, {{}, {1.0}}, 2));
}

TEST_CASE("single_step examples") {
  auto zero = [](double, const S3&) { return S3{0.0, 0.0, 0.0}; };
  for (const ButcherTableau* t : {&cooper_verner8(), &classical_rk4()}) {
    const S3 y = single_step(zero, *t, 0.0, S3{1.0, 2.0, 3.0}, 0.5);
    CHECK(y == S3{1.0, 2.0, 3.0});

    auto one = [](double, const S1&) { return S1{1.0}; };
    CHECK(single_step(one, *t, 0.0, S1{0.0}, 0.25)[0] == doctest::Approx(0.25).epsilon(1e-15));
  }

  const double y = single_step(growth, cooper_verner8(), 0.0, S1{1.0}, 0.1)[0];
  CHECK(std::fabs(y - 1.10517091807564762481) <= 1e-13);
}

TEST_CASE("single_step rejects non-positive steps and reports rhs blow-up") {
  CHECK(code_of([] { single_step(growth, classical_rk4(), 0.0, S1{1.0}, 0.0); }) ==
        ErrorCode::InvalidArgument);

  auto poisoned = [](double t, const S1& y) {
    return S1{t > 0.3 ? std::numeric_limits<double>::quiet_NaN() : y[0]};
  };
  try {
    single_step(poisoned, classical_rk4(), 0.0, S1{1.0}, 0.5);
    FAIL("expected rhs blow-up");
  } catch (const SolverError& e) {
    CHECK(e.code() == ErrorCode::RhsBlowUp);
    // stages sit at t = 0, 0.25, 0.25, 0.5; only the last is past 0.3
    CHECK(std::string(e.what()).find("stage 3") != std::string::npos);
    CHECK(std::string(e.what()).find("t=0.5") != std::string::npos);
  }
}

TEST_CASE("integrate examples") {
  SUBCASE("exponential growth") {
    const auto s = integrate(growth, cooper_verner8(), GridSpec{0.1, 1.0}, S1{1.0});
    CHECK(std::fabs(s.back().y[0] - 2.71828182845904523536) <= 1e-12);
  }
  SUBCASE("quadratic polynomial is integrated exactly") {
    auto cubic_free = [](double, const S3& y) { return S3{y[1], y[2], 0.0}; };
    const auto s = integrate(cubic_free, cooper_verner8(), GridSpec{0.01, 2.0}, S3{0.0, 0.0, 1.0});
    CHECK(s.back().t == 2.0);
    CHECK(s.back().y[0] == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(s.back().y[1] == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(s.back().y[2] == 1.0);
  }
  SUBCASE("exponential decay") {
    auto decay = [](double, const S1& y) { return S1{-2.0 * y[0]}; };
    const auto s = integrate(decay, cooper_verner8(), GridSpec{0.05, 1.0}, S1{1.0});
    CHECK(std::fabs(s.back().y[0] - 0.135335283236612691894) <= 1e-12);
  }
}

TEST_CASE("integrate returns every grid node without drift") {
  const GridSpec grid{0.001, 10.0};
  const auto s = integrate(growth, classical_rk4(), GridSpec{0.001, 10.0}, S1{1e-5});
  REQUIRE(s.size() == 10001);
  CHECK(s.front().t == 0.0);
  CHECK(s.front().y[0] == 1e-5);
  CHECK(s.back().t == 10.0);
  for (std::size_t i = 0; i + 1 < s.size(); i += 997) {
    CHECK(s[i].t == static_cast<double>(i) * grid.step);
  }
}

TEST_CASE("grid validation") {
  CHECK_NOTHROW((GridSpec{0.001, 10.0}.validate()));
  CHECK_NOTHROW((GridSpec{0.1, 1.0}.validate()));
  CHECK_THROWS_AS((GridSpec{0.0, 1.0}.validate()), SolverError);
  CHECK_THROWS_AS((GridSpec{0.1, -1.0}.validate()), SolverError);
  CHECK_THROWS_AS((GridSpec{0.2, 1.0}.validate()), SolverError);   // 5 steps
  CHECK_THROWS_AS((GridSpec{0.03, 1.0}.validate()), SolverError);  // not a multiple
  CHECK(GridSpec{0.001, 10.0}.intervals() == 10000);
}

TEST_CASE("integrate reports state blow-up") {
  // e^30 > 1e12 while every stage stays finite
  CHECK(code_of([] { integrate(growth, cooper_verner8(), GridSpec{0.01, 30.0}, S1{1.0}); }) ==
        ErrorCode::StateBlowUp);

  // y = 1 / (1 - t) overflows inside a stage first
  auto quadratic = [](double, const S1& y) { return S1{y[0] * y[0]}; };
  const ErrorCode code =
      code_of([&] { integrate(quadratic, cooper_verner8(), GridSpec{0.001, 2.0}, S1{1.0}); });
  CHECK((code == ErrorCode::StateBlowUp || code == ErrorCode::RhsBlowUp));
}

TEST_CASE("projection hook sees every accepted state") {
  int calls = 0;
  auto count = [&calls](double, S1& y) {
    ++calls;
    y[0] = std::min(y[0], 2.0);
  };
  const auto s = integrate(growth, classical_rk4(), GridSpec{0.01, 1.0}, S1{1.0}, count);
  CHECK(calls == 100);
  CHECK(s.back().y[0] == 2.0);
}

TEST_CASE("order of convergence of the order-8 scheme") {
  const double e1 = endpoint_error(cooper_verner8(), 0.1);
  const double e2 = endpoint_error(cooper_verner8(), 0.05);
  CHECK(e1 / e2 >= std::pow(2.0, 7.5));

  // keep halving while rounding does not dominate
  double h = 0.1;
  double prev = endpoint_error(cooper_verner8(), h);
  while (true) {
    h /= 2.0;
    const double next = endpoint_error(cooper_verner8(), h);
    if (next < 1e-13) break;
    CHECK(prev / next >= std::pow(2.0, 7.5));
    prev = next;
  }
}

TEST_CASE("order of convergence of the classical scheme") {
  const double ratio = endpoint_error(classical_rk4(), 0.1) / endpoint_error(classical_rk4(), 0.05);
  CHECK(ratio > std::pow(2.0, 3.8));
  CHECK(ratio < std::pow(2.0, 4.2));
}

TEST_CASE("single_step is linear for linear fields") {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double a = u(rng), b = u(rng), c = u(rng), alpha = u(rng);
    auto field = [=](double, const S3& y) {
      return S3{alpha * (a * y[0] + y[1]), alpha * (b * y[1] - y[2]), alpha * (c * y[2] + y[0])};
    };
    const S3 y0{u(rng), u(rng), u(rng)};
    const double scale = u(rng) * 10.0;
    const S3 scaled0{scale * y0[0], scale * y0[1], scale * y0[2]};
    const S3 y1 = single_step(field, cooper_verner8(), 0.0, y0, 0.1);
    const S3 y1s = single_step(field, cooper_verner8(), 0.0, scaled0, 0.1);
    for (int i = 0; i < 3; ++i) {
      const double expected = scale * y1[i];
      CHECK(std::fabs(y1s[i] - expected) <= 1e-13 * std::max(1.0, std::fabs(expected)));
    }
  }
}

TEST_CASE("integration is deterministic") {
  auto osc = [](double, const S3& y) { return S3{y[1], -y[0], std::sin(y[0])}; };
  const auto a = integrate(osc, cooper_verner8(), GridSpec{0.01, 5.0}, S3{1.0, 0.0, 0.0});
  const auto b = integrate(osc, cooper_verner8(), GridSpec{0.01, 5.0}, S3{1.0, 0.0, 0.0});
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].y == b[i].y);
}
