#include "qcasimir/root_system.hpp"

#include <cctype>
#include <cstdlib>

#include "qcasimir/errors.hpp"

namespace qcasimir {

char to_char(LieType t) {
  switch (t) {
    case LieType::B: return 'B';
    case LieType::C: return 'C';
    case LieType::D: return 'D';
  }
  return '?';
}

LieType parse_lie_type(std::string_view s) {
  if (s.size() == 1) {
    switch (std::toupper(static_cast<unsigned char>(s[0]))) {
      case 'B': return LieType::B;
      case 'C': return LieType::C;
      case 'D': return LieType::D;
      default: break;
    }
  }
  throw Error(Errc::InvalidArgument, "unknown Lie type '" + std::string(s) + "' (expected B, C or D)");
}

int RootSystem::hook_r_max() const {
  switch (type) {
    case LieType::B: return 2 * rank - 1;
    case LieType::C: return 2 * rank;
    case LieType::D: return 2 * rank - 2;
  }
  return 0;
}

namespace {

Weight from_doubled_vec(const std::vector<int>& d) { return Weight::from_doubled(d); }

// Doubled coordinates of eps_i + s*eps_j (0-based, s = +-1).
Weight pair_root(int n, int i, int j, int s) {
  std::vector<int> d(n, 0);
  d[i] = 2;
  d[j] = 2 * s;
  return from_doubled_vec(d);
}

int min_rank(LieType t) {
  switch (t) {
    case LieType::B: return 2;
    case LieType::C: return 3;
    case LieType::D: return 4;
  }
  return 0;
}

}  // namespace

RootSystem build_root_system(LieType t, int n) {
  if (n < min_rank(t))
    throw Error(Errc::RankTooSmall, std::string(1, to_char(t)) + std::to_string(n) + " requires rank >= " +
                                        std::to_string(min_rank(t)));
  if (n > Weight::kMaxRank)
    throw Error(Errc::RankTooLarge, "rank " + std::to_string(n) + " exceeds " + std::to_string(Weight::kMaxRank));

  RootSystem rs;
  rs.type = t;
  rs.rank = n;

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      rs.positive_roots.push_back(pair_root(n, i, j, -1));
      rs.positive_roots.push_back(pair_root(n, i, j, +1));
    }
  if (t != LieType::D)
    for (int i = 0; i < n; ++i)
      rs.positive_roots.push_back(t == LieType::B ? Weight::unit(n, i) : 2 * Weight::unit(n, i));

  for (int i = 0; i + 1 < n; ++i) rs.simple_roots.push_back(pair_root(n, i, i + 1, -1));
  switch (t) {
    case LieType::B: rs.simple_roots.push_back(Weight::unit(n, n - 1)); break;
    case LieType::C: rs.simple_roots.push_back(2 * Weight::unit(n, n - 1)); break;
    case LieType::D: rs.simple_roots.push_back(pair_root(n, n - 2, n - 1, +1)); break;
  }

  // rho_i = n - i + 1/2 (B), n - i + 1 (C), n - i (D), 1-based i.
  std::vector<int> rho(n);
  for (int i = 1; i <= n; ++i) {
    switch (t) {
      case LieType::B: rho[i - 1] = 2 * (n - i) + 1; break;
      case LieType::C: rho[i - 1] = 2 * (n - i + 1); break;
      case LieType::D: rho[i - 1] = 2 * (n - i); break;
    }
  }
  rs.rho = Weight::from_doubled(rho);

  for (int r = 1; r <= n; ++r) {
    std::vector<int> d(n, 0);
    for (int i = 0; i < r; ++i) d[i] = 2;
    if (t == LieType::B && r == n) {
      for (int i = 0; i < n; ++i) d[i] = 1;
    } else if (t == LieType::D && r >= n - 1) {
      for (int i = 0; i < n; ++i) d[i] = 1;
      d[n - 1] = r == n - 1 ? -1 : 1;
    }
    rs.fundamental_weights.push_back(Weight::from_doubled(d));
  }

  switch (t) {
    case LieType::B:
      rs.c_n = 2 * n;
      rs.kappa_n = Rational(2 * n - 1, 2);
      rs.dim_natural = 2 * n + 1;
      break;
    case LieType::C:
      rs.c_n = 2 * n + 1;
      rs.kappa_n = n;
      rs.dim_natural = 2 * n;
      break;
    case LieType::D:
      rs.c_n = 2 * n - 1;
      rs.kappa_n = n - 1;
      rs.dim_natural = 2 * n;
      break;
  }
  rs.kappa_n.canonicalize();

  for (int a = -n; a <= n; ++a)
    if (a != 0 || t == LieType::B) rs.casimir_indices.push_back(a);
  return rs;
}

Weight fundamental_weight(const RootSystem& rs, int i) {
  if (i < 1 || i > rs.rank) throw Error(Errc::IndexOutOfRange, "fundamental weight index " + std::to_string(i));
  return rs.fundamental_weights[i - 1];
}

Weight natural_weight(const RootSystem& rs, int a) {
  if (a == 0) {
    if (!rs.has_zero_index()) throw Error(Errc::IndexOutOfRange, "index 0 exists only in type B");
    return Weight(rs.rank);
  }
  if (std::abs(a) > rs.rank) throw Error(Errc::IndexOutOfRange, "natural weight index " + std::to_string(a));
  Weight e = Weight::unit(rs.rank, std::abs(a) - 1);
  return a > 0 ? e : -e;
}

Weight coroot(const Weight& alpha) {
  // (alpha, alpha) is 1, 2 or 4 for the roots of B, C, D.
  Rational len = pairing(alpha, alpha);
  std::vector<Rational> c = alpha.coords();
  for (auto& x : c) x = 2 * x / len;
  return Weight::from_rationals(c);
}

bool is_dominant(const RootSystem& rs, const Weight& w) {
  if (w.rank() != rs.rank) return false;
  const int n = rs.rank;
  const bool integral = w.is_integral();
  bool half_odd = true;
  for (int i = 0; i < n; ++i) half_odd = half_odd && (w.doubled(i) % 2 != 0);
  if (!integral && !(half_odd && rs.type != LieType::C)) return false;
  for (int i = 0; i + 2 < n; ++i)
    if (w.doubled(i) < w.doubled(i + 1)) return false;
  if (rs.type == LieType::D) {
    if (n >= 2 && w.doubled(n - 2) < std::abs(w.doubled(n - 1))) return false;
  } else {
    if (n >= 2 && w.doubled(n - 2) < w.doubled(n - 1)) return false;
    if (w.doubled(n - 1) < 0) return false;
  }
  return true;
}

int hook_rbar(const RootSystem& rs, int r) {
  const int n = rs.rank;
  if (r < 0 || r > rs.hook_r_max()) throw Error(Errc::IndexOutOfRange, "hook parameter r = " + std::to_string(r));
  switch (rs.type) {
    case LieType::B: return std::min(r, 2 * n - 1 - r);
    case LieType::C: return std::min({r, 2 * n - r, n - 1});
    case LieType::D: return std::min(r, 2 * n - 2 - r);
  }
  return 0;
}

HookWeight hook_weight(const RootSystem& rs, int k, int r, bool bar) {
  const int n = rs.rank;
  if (k < 0) throw Error(Errc::IndexOutOfRange, "hook parameter k must be non-negative");
  int rbar = hook_rbar(rs, r);
  std::vector<int> c(n, 0);
  if (bar) {
    if (rs.type != LieType::D || r != n - 1)
      throw Error(Errc::BarNotApplicable, "the barred hook exists only in type D with r = n-1");
    c[0] = k - n + 1;
    for (int i = 1; i < n - 1; ++i) c[i] = 1;
    c[n - 1] = -1;
  } else {
    c[0] = k - r;
    for (int i = 1; i <= rbar; ++i) c[i] = 1;
  }
  return HookWeight{k, r, bar, Weight::from_ints(c)};
}

int tau(const RootSystem& rs, int r) {
  if (rs.type != LieType::C) throw Error(Errc::WrongType, "tau is defined for type C only");
  if (r < 0 || r > 2 * rs.rank) throw Error(Errc::IndexOutOfRange, "tau index " + std::to_string(r));
  if (r <= rs.rank - 1) return 1;
  if (r == rs.rank) return 0;
  return -1;
}

}  // namespace qcasimir
