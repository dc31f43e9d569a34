#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qcoh/boundary.hpp"
#include "qcoh/gw_engine.hpp"
#include "qcoh/potential.hpp"

using namespace qcoh;

namespace {

SeriesKey key(int d, int n) { return {MultiIndex{d}, MultiIndex{n}}; }

bool all_residuals_vanish(const PotentialBundle& P) {
  const int m = P.model().rank();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l)
          if (!wdvv_residual(P, i, j, k, l).is_zero()) return false;
  return true;
}

std::vector<int> plane_classes(int d) {
  std::vector<int> c{1, 1};
  c.resize(static_cast<std::size_t>(3 * d), 2);
  return c;
}

}  // namespace

TEST_CASE("gamma copies the table") {
  auto t = nd_plane(4);
  auto g = gamma_series(t);
  CHECK(g.coefficient(key(1, 2)) == 1);
  CHECK(g.coefficient(key(3, 8)) == 12);
  CHECK(g.coefficient(key(4, 11)) == 620);
  CHECK(g.coefficient(key(0, 3)) == 0);  // no classical part
  CHECK(g.bounds() == default_truncation(t.model(), 12));
  CHECK_THROWS_AS(gamma_series(t, Truncation{15, 20}), std::invalid_argument);
  CHECK_NOTHROW(gamma_series(t, Truncation{6, 4}));
}

TEST_CASE("third partials") {
  auto P = build_potential(nd_plane(4));
  // Phi_111 = sum d^3 N_d e^{dy1} y2^{3d-1}/(3d-1)!
  CHECK(P.phi(1, 1, 1).coefficient(key(0, 0)) == 0);
  CHECK(P.phi(1, 1, 1).coefficient(key(2, 5)) == 8);
  CHECK(P.phi(1, 1, 1).coefficient(key(3, 8)) == 27 * 12);
  CHECK(P.phi(2, 2, 2).coefficient(key(4, 8)) == 620);
  CHECK(P.phi(1, 2, 2).coefficient(key(3, 6)) == 3 * 12);
  CHECK(P.phi(0, 1, 1).coefficient(key(0, 0)) == 1);
  CHECK(P.phi(0, 1, 1).size() == 1);
  CHECK(P.phi(2, 0, 0) == P.constant(Rational(1)));
  CHECK(P.phi(0, 1, 2).is_zero());
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      CHECK(P.gamma_partial(0, a, b).is_zero());
      for (int c = 0; c < 3; ++c) {
        CHECK(P.phi(a, b, c) == P.phi(c, a, b));
        CHECK(P.phi(a, b, c) == P.phi(b, a, c));
      }
    }
}

TEST_CASE("associativity residuals vanish on the solved tables") {
  CHECK(all_residuals_vanish(build_potential(nd_plane(6))));
  CHECK(all_residuals_vanish(build_potential(fano3_solve(Fano3::p3, 4))));
  CHECK(all_residuals_vanish(build_potential(fano3_solve(Fano3::q3, 4))));
  auto pp = builtin_model("p1xp1");
  CHECK(all_residuals_vanish(build_potential(wdvv_solve(pp, default_seeds(pp), 8))));
}

TEST_CASE("a wrong number breaks associativity") {
  auto t = nd_plane(4);
  t.set(EffectiveClass{3}, MultiIndex{8}, Int(13));
  auto P = build_potential(t);
  CHECK_FALSE(wdvv_residual(P, 1, 1, 2, 2).restricted_to_degree(MultiIndex{3}).is_zero());
  CHECK(wdvv_residual(P, 1, 1, 2, 2).restricted_to_degree(MultiIndex{2}).is_zero());
  CHECK_FALSE(all_residuals_vanish(P));
}

TEST_CASE("f_bracket and residual symmetries") {
  auto P = build_potential(fano3_solve(Fano3::q3, 3));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) {
          CHECK(f_bracket(P, i, j, k, l) == f_bracket(P, k, l, i, j));
          CHECK(f_bracket(P, i, j, k, l) == f_bracket(P, j, i, l, k));
        }
}

TEST_CASE("g_bracket matches the boundary intersection counts") {
  auto t = nd_plane(6);
  for (int d = 2; d <= 5; ++d) {
    CAPTURE(d);
    auto c = plane_classes(d);
    auto counts = intersection_counts(d, t);
    CHECK(g_bracket(t, EffectiveClass{d}, c, 0, 1, 2, 3) == counts.lhs);
    CHECK(g_bracket(t, EffectiveClass{d}, c, 0, 2, 1, 3) == counts.rhs);
  }
  CHECK(g_bracket(t, EffectiveClass{2}, plane_classes(2), 0, 1, 2, 3) == 2);
}

TEST_CASE("g_bracket is symmetric in the middle pair on random insertions") {
  auto t = nd_plane(4);
  std::mt19937 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    // lines cost nothing against the dimension; each degree needs 3 more points
    const int d = 1 + static_cast<int>(rng() % 3);
    const int lines = static_cast<int>(rng() % 4);
    std::vector<int> c(static_cast<std::size_t>(lines), 1);
    c.resize(static_cast<std::size_t>(lines + 3 * d - 2), 2);
    if (c.size() < 4) continue;
    std::shuffle(c.begin(), c.end(), rng);
    CAPTURE(d);
    CAPTURE(lines);
    CHECK(g_bracket(t, EffectiveClass{d}, c, 0, 1, 2, 3) == g_bracket(t, EffectiveClass{d}, c, 0, 2, 1, 3));
    CHECK(g_bracket(t, EffectiveClass{d}, c, 0, 1, 2, 3) == g_bracket(t, EffectiveClass{d}, c, 2, 3, 0, 1));
  }
  CHECK_THROWS_AS(g_bracket(t, EffectiveClass{1}, {2, 2, 1}, 0, 1, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(g_bracket(t, EffectiveClass{1}, {2, 2, 1, 1}, 0, 1, 2, 4), std::out_of_range);
}
