#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qcasimir/rational.hpp"
#include "qcasimir/weight.hpp"

namespace qcasimir {

enum class LieType { B, C, D };

char to_char(LieType t);
/// "B", "C" or "D" (case-insensitive). Throws InvalidArgument.
LieType parse_lie_type(std::string_view s);

/// Root data of B_n, C_n or D_n in the eps-basis.
struct RootSystem {
  LieType type = LieType::B;
  int rank = 0;
  std::vector<Weight> positive_roots;
  std::vector<Weight> simple_roots;
  Weight rho;
  /// varpi_1 .. varpi_n
  std::vector<Weight> fundamental_weights;
  /// Constant of the eigenvalue formula: 2n (B), 2n+1 (C), 2n-1 (D).
  int c_n = 0;
  /// rho_n = kappa_n * eps_1 + rho_{n-1}.
  Rational kappa_n;
  /// Dimension of the natural module: 2n+1 (B), 2n (C, D).
  int dim_natural = 0;
  /// Index set I'_n of the Casimir formulas: -n..-1, 1..n, and 0 in type B.
  std::vector<int> casimir_indices;

  bool has_zero_index() const { return type == LieType::B; }
  /// Largest admissible hook parameter r: 2n-1 (B), 2n (C), 2n-2 (D).
  int hook_r_max() const;
  std::string name() const { return std::string(1, to_char(type)) + std::to_string(rank); }
};

/// Throws RankTooSmall below B2 / C3 / D4 and RankTooLarge above Weight::kMaxRank.
RootSystem build_root_system(LieType t, int n);

/// varpi_i for 1 <= i <= n. Throws IndexOutOfRange.
Weight fundamental_weight(const RootSystem& rs, int i);

/// eps_a for a in I'_n, with eps_{-a} = -eps_a and eps_0 = 0.
Weight natural_weight(const RootSystem& rs, int a);

/// 2*alpha/(alpha, alpha)
Weight coroot(const Weight& alpha);

/// B/C: l1 >= ... >= ln >= 0; D: l1 >= ... >= l_{n-1} >= |ln|; coordinates
/// must lie in the weight lattice (all integers or, for B/D, all half-odd).
bool is_dominant(const RootSystem& rs, const Weight& w);

/// The hook weight lambda_k^r = (k-r) eps_1 + mu_{rbar}, or in type D with
/// bar set, (k-n+1) eps_1 + eps_2 + ... + eps_{n-1} - eps_n.
struct HookWeight {
  int k = 0;
  int r = 0;
  bool bar = false;
  Weight weight;
};

int hook_rbar(const RootSystem& rs, int r);

/// Throws IndexOutOfRange (r outside the type's range) or BarNotApplicable.
HookWeight hook_weight(const RootSystem& rs, int k, int r, bool bar = false);

/// Type C sign: 1 (r <= n-1), 0 (r == n), -1 (r >= n+1). Throws WrongType.
int tau(const RootSystem& rs, int r);

}  // namespace qcasimir
