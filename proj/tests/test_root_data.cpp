#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "qcasimir/errors.hpp"
#include "qcasimir/root_system.hpp"

using namespace qcasimir;
using oracle::Vec;

namespace {

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::InvalidArgument;
}

Weight w(std::vector<Rational> c) { return Weight::from_rationals(c); }

const std::vector<std::pair<LieType, int>> kSystems = {
    {LieType::B, 2}, {LieType::B, 3}, {LieType::B, 4}, {LieType::B, 5}, {LieType::C, 3},
    {LieType::C, 4}, {LieType::C, 5}, {LieType::D, 4}, {LieType::D, 5}, {LieType::D, 6}};

// Coordinates of v in the basis b by Gauss-Jordan elimination.
Vec solve(const std::vector<Vec>& b, const Vec& v) {
  const std::size_t n = b.size();
  std::vector<Vec> m(n, Vec(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = b[j][i];
    m[i][n] = v[i];
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (m[p][c] == 0) ++p;
    std::swap(m[p], m[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      Rational f = m[r][c] / m[c][c];
      for (std::size_t j = c; j <= n; ++j) m[r][j] -= f * m[c][j];
    }
  }
  Vec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n] / m[i][i];
  return x;
}

}  // namespace

TEST_CASE("root systems of small rank") {
  auto b2 = build_root_system(LieType::B, 2);
  CHECK(b2.rho == w({Rational(3, 2), Rational(1, 2)}));
  CHECK(b2.positive_roots.size() == 4);
  CHECK(b2.c_n == 4);
  CHECK(b2.dim_natural == 5);
  CHECK(b2.name() == "B2");

  auto c3 = build_root_system(LieType::C, 3);
  CHECK(c3.rho == w({3, 2, 1}));
  CHECK(c3.positive_roots.size() == 9);
  CHECK(c3.c_n == 7);

  auto d4 = build_root_system(LieType::D, 4);
  CHECK(d4.rho == w({3, 2, 1, 0}));
  CHECK(d4.positive_roots.size() == 12);
  CHECK(d4.c_n == 7);
}

TEST_CASE("rank constraints") {
  CHECK(code_of([] { build_root_system(LieType::B, 1); }) == Errc::RankTooSmall);
  CHECK(code_of([] { build_root_system(LieType::C, 2); }) == Errc::RankTooSmall);
  CHECK(code_of([] { build_root_system(LieType::D, 3); }) == Errc::RankTooSmall);
  CHECK(code_of([] { build_root_system(LieType::B, Weight::kMaxRank + 1); }) == Errc::RankTooLarge);
}

TEST_CASE("lie type names") {
  CHECK(parse_lie_type("b") == LieType::B);
  CHECK(parse_lie_type("D") == LieType::D);
  CHECK(to_char(LieType::C) == 'C');
  CHECK(code_of([] { parse_lie_type("A"); }) == Errc::InvalidArgument);
}

TEST_CASE("pairing") {
  auto e1 = Weight::unit(2, 0);
  CHECK(pairing(e1, e1) == 1);
  CHECK(pairing(build_root_system(LieType::B, 2).rho, e1) == Rational(3, 2));
  for (int n = 2; n <= 6; ++n) {
    auto wn = fundamental_weight(build_root_system(LieType::B, n), n);
    Rational expect(n, 4);
    expect.canonicalize();
    CHECK(pairing(wn, wn) == expect);
  }
  CHECK(code_of([] { pairing(Weight::unit(2, 0), Weight::unit(3, 0)); }) == Errc::LengthMismatch);
}

TEST_CASE("fundamental weights") {
  auto b2 = build_root_system(LieType::B, 2);
  CHECK(fundamental_weight(b2, 1) == w({1, 0}));
  CHECK(fundamental_weight(b2, 2) == w({Rational(1, 2), Rational(1, 2)}));
  auto d4 = build_root_system(LieType::D, 4);
  Rational h(1, 2);
  CHECK(fundamental_weight(d4, 3) == w({h, h, h, -h}));
  CHECK(fundamental_weight(d4, 4) == w({h, h, h, h}));
  CHECK(fundamental_weight(d4, 2) == w({1, 1, 0, 0}));
  CHECK(code_of([&] { fundamental_weight(d4, 0); }) == Errc::IndexOutOfRange);
  CHECK(code_of([&] { fundamental_weight(d4, 5); }) == Errc::IndexOutOfRange);
}

TEST_CASE("hook weights") {
  CHECK(hook_weight(build_root_system(LieType::B, 3), 2, 1).weight == w({1, 1, 0}));
  CHECK(hook_weight(build_root_system(LieType::C, 3), 5, 4).weight == w({1, 1, 1}));
  CHECK(hook_weight(build_root_system(LieType::D, 4), 4, 3, true).weight == w({1, 1, 1, -1}));
  auto c3 = build_root_system(LieType::C, 3);
  CHECK(code_of([&] { hook_weight(c3, 3, 7); }) == Errc::IndexOutOfRange);
  CHECK(code_of([&] { hook_weight(c3, 3, 2, true); }) == Errc::BarNotApplicable);
  auto d4 = build_root_system(LieType::D, 4);
  CHECK(code_of([&] { hook_weight(d4, 4, 2, true); }) == Errc::BarNotApplicable);
  CHECK(code_of([&] { hook_weight(d4, 4, 7); }) == Errc::IndexOutOfRange);
}

TEST_CASE("type C signs") {
  auto c3 = build_root_system(LieType::C, 3);
  CHECK(tau(c3, 0) == 1);
  CHECK(tau(c3, 3) == 0);
  CHECK(tau(c3, 5) == -1);
  CHECK(code_of([] { tau(build_root_system(LieType::B, 3), 0); }) == Errc::WrongType);
}

TEST_CASE("positive roots match the eps description") {
  for (auto [t, n] : kSystems) {
    auto rs = build_root_system(t, n);
    std::set<Vec> mine, theirs;
    for (const auto& a : rs.positive_roots) mine.insert(a.coords());
    for (const auto& a : oracle::positive_roots(t, n)) theirs.insert(a);
    CHECK(mine == theirs);
    CHECK(rs.rho.coords() == oracle::rho(t, n));
  }
}

TEST_CASE("2 rho is the sum of the positive roots") {
  for (auto [t, n] : kSystems) {
    auto rs = build_root_system(t, n);
    Weight sum(n);
    for (const auto& a : rs.positive_roots) sum += a;
    CHECK(sum == 2 * rs.rho);
  }
}

TEST_CASE("positive roots are non-negative integer combinations of simple roots") {
  for (auto [t, n] : kSystems) {
    auto rs = build_root_system(t, n);
    std::vector<Vec> simple;
    for (const auto& a : rs.simple_roots) {
      simple.push_back(a.coords());
      CHECK(std::find(rs.positive_roots.begin(), rs.positive_roots.end(), a) != rs.positive_roots.end());
    }
    CHECK(simple.size() == static_cast<std::size_t>(n));
    for (const auto& beta : rs.positive_roots)
      for (const auto& c : solve(simple, beta.coords())) {
        CHECK(c >= 0);
        CHECK(is_integer(c));
      }
  }
}

TEST_CASE("fundamental weights are dual to the simple coroots") {
  for (auto [t, n] : kSystems) {
    auto rs = build_root_system(t, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        CHECK(pairing(rs.fundamental_weights[i], coroot(rs.simple_roots[j])) == (i == j ? 1 : 0));
  }
}

TEST_CASE("hook weights are dominant") {
  for (auto [t, n] : kSystems) {
    auto rs = build_root_system(t, n);
    for (int r = 0; r <= n - 1; ++r)
      for (int k = r + 1; k <= r + 4; ++k) {
        auto h = hook_weight(rs, k, r);
        CHECK(is_dominant(rs, h.weight));
        auto c = h.weight.coords();
        for (int i = 0; i + 1 < n; ++i) CHECK(c[i] >= c[i + 1]);
        CHECK((t == LieType::D || c[n - 1] >= 0));
      }
    if (t == LieType::D)
      for (int k = n; k <= n + 2; ++k) CHECK(is_dominant(rs, hook_weight(rs, k, n - 1, true).weight));
    if (t == LieType::D) CHECK(!is_dominant(rs, hook_weight(rs, n - 1, n - 1, true).weight));
  }
}

TEST_CASE("dominance test") {
  auto b3 = build_root_system(LieType::B, 3);
  auto d4 = build_root_system(LieType::D, 4);
  Rational h(1, 2);
  CHECK(is_dominant(b3, w({2, 1, 0})));
  CHECK(!is_dominant(b3, w({1, 2, 0})));
  CHECK(!is_dominant(b3, w({1, 1, -1})));
  CHECK(is_dominant(b3, w({3 * h, h, h})));
  CHECK(!is_dominant(b3, w({1, h, h})));
  CHECK(is_dominant(d4, w({1, 1, 1, -1})));
  CHECK(!is_dominant(d4, w({1, 1, 0, -1})));
  CHECK(!is_dominant(build_root_system(LieType::C, 3), w({h, h, h})));
}

TEST_CASE("index sets") {
  CHECK(build_root_system(LieType::B, 3).casimir_indices.size() == 7);
  CHECK(build_root_system(LieType::C, 3).casimir_indices.size() == 6);
  auto d4 = build_root_system(LieType::D, 4);
  CHECK(natural_weight(d4, -2) == -Weight::unit(4, 1));
  CHECK(natural_weight(build_root_system(LieType::B, 2), 0).is_zero());
}
