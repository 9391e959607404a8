#include <stdexcept>

#include "doctest.h"
#include "ippp/schedule.hpp"

using ippp::Schedule;
using ippp::ScheduleValues;

TEST_CASE("square-root penalty growth values") {
  const Schedule s = Schedule::convex_sqrt(1.0, 2.0);
  // k = 3: beta_3 = 2 sqrt(4) = 4, eps_hat_3 = 1 / (4 * 4) = 1/16.
  const ScheduleValues v = s.at(3);
  CHECK(v.gamma == doctest::Approx(1.0));
  CHECK(v.beta == doctest::Approx(4.0));
  CHECK(v.eps_hat == doctest::Approx(1.0 / 16.0));
}

TEST_CASE("cube-root penalty growth values, rho form") {
  const Schedule s = Schedule::nonconvex_cbrt(1.0, 1.0, 0.5);
  // k = 7: beta_7 = 8^{1/3} = 2, gamma_7 = 2 (1 + 2 * 0.5) = 4,
  // eps_hat_7 = 1 / 8^{4/3} = 1/16.
  const ScheduleValues v = s.at(7);
  CHECK(v.beta == doctest::Approx(2.0));
  CHECK(v.gamma == doctest::Approx(4.0));
  CHECK(v.eps_hat == doctest::Approx(1.0 / 16.0));
}

TEST_CASE("cube-root penalty growth values, gamma form") {
  const Schedule s = Schedule::nonconvex_cbrt_gamma(1.0, 0.1);
  const ScheduleValues v = s.at(7);
  CHECK(v.beta == doctest::Approx(2.0));
  CHECK(v.gamma == doctest::Approx(0.2));
  CHECK(v.eps_hat == doctest::Approx(1.0 / 16.0));
}

TEST_CASE("constant penalty values") {
  const Schedule s = Schedule::constant_feasible(5.0, 1.0, 0.0);
  // k = 2: gamma = 2 (1 + 0) = 2, beta = 5, eps_hat = 1/9.
  const ScheduleValues v = s.at(2);
  CHECK(v.gamma == doctest::Approx(2.0));
  CHECK(v.beta == doctest::Approx(5.0));
  CHECK(v.eps_hat == doctest::Approx(1.0 / 9.0));

  const ScheduleValues w = Schedule::constant_feasible_gamma(5.0, 0.3).at(2);
  CHECK(w.gamma == doctest::Approx(0.3));
  CHECK(w.beta == doctest::Approx(5.0));
  CHECK(w.eps_hat == doctest::Approx(1.0 / 9.0));
}

TEST_CASE("rejects a proximal weight that cannot dominate weak convexity") {
  CHECK_THROWS_WITH_AS(static_cast<void>(Schedule::convex_sqrt(0.5, 1.0, 0.5)),
                       doctest::Contains("gamma > rho0"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(static_cast<void>(Schedule::convex_sqrt(0.0, 1.0, 0.0)),
                       doctest::Contains("gamma > rho0"),
                       std::invalid_argument);
  CHECK_THROWS_AS(static_cast<void>(Schedule::convex_sqrt(-1.0, 1.0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(static_cast<void>(Schedule::nonconvex_cbrt(1.0, 0.0, 0.0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(static_cast<void>(Schedule::constant_feasible(0.0, 1.0, 0.1)),
                  std::invalid_argument);
}

TEST_CASE("penalty weight grows and inner tolerance shrinks") {
  const Schedule schedules[] = {
      Schedule::convex_sqrt(1.0, 2.0),
      Schedule::nonconvex_cbrt(1.5, 0.3, 0.2),
      Schedule::nonconvex_cbrt_gamma(1.5, 0.7),
      Schedule::constant_feasible(4.0, 0.3, 0.2),
      Schedule::constant_feasible_gamma(4.0, 0.7),
  };
  for (const Schedule& s : schedules) {
    ScheduleValues prev = s.at(0);
    for (long k = 1; k < 200; ++k) {
      const ScheduleValues cur = s.at(k);
      CHECK(cur.beta >= prev.beta);
      CHECK(cur.eps_hat <= prev.eps_hat);
      CHECK(cur.gamma > 0.0);
      prev = cur;
    }
  }
}

TEST_CASE("inner tolerance floor") {
  // Far into the run the raw formula drops below 1e-12 and the floor holds.
  const Schedule s = Schedule::convex_sqrt(1.0, 1e5);
  CHECK(s.at(1000000).eps_hat == 1e-12);
}

TEST_CASE("negative iteration index is rejected") {
  CHECK_THROWS_AS(Schedule::convex_sqrt(1.0, 1.0).at(-1),
                  std::invalid_argument);
}
