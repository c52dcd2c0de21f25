#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qcasimir/group_algebra.hpp"
#include "qcasimir/root_system.hpp"
#include "qcasimir/weight.hpp"

namespace qcasimir {

/// Signed permutation w with w(eps_i) = signs[i] * eps_{perm[i]} (0-based).
struct SignedPerm {
  int n = 0;
  std::array<std::int8_t, Weight::kMaxRank> perm{};
  std::array<std::int8_t, Weight::kMaxRank> signs{};

  static SignedPerm identity(int n);
  /// From images of +1..+n on the index set {-n..-1, 1..n}.
  static SignedPerm from_images(const std::vector<int>& images);
  /// Image of a in {-n..-1, 1..n}.
  int image(int a) const;
  int negative_signs() const;

  friend bool operator==(const SignedPerm& a, const SignedPerm& b) = default;
  friend auto operator<=>(const SignedPerm& a, const SignedPerm& b) = default;
};

/// (a * b)(x) = a(b(x))
SignedPerm compose(const SignedPerm& a, const SignedPerm& b);
SignedPerm inverse(const SignedPerm& w);

/// Type D elements need an even number of sign changes.
bool is_element(const SignedPerm& w, const RootSystem& rs);

/// All of W, in a fixed order. Throws RankTooLargeForEnumeration above rank 7.
/// The result is cached per system and shared.
const std::vector<SignedPerm>& enumerate_weyl(const RootSystem& rs);

/// Determinant of the signed permutation matrix.
int sgn(const SignedPerm& w);

Weight act(const SignedPerm& w, const Weight& mu);
/// Throws RankMismatch.
GAElem act(const SignedPerm& w, const GAElem& x);

/// The reflection in the hyperplane orthogonal to a root.
SignedPerm reflection(const Weight& root);

/// Left coset representatives of the stabiliser of eps_1 (a copy of W_{n-1}):
/// the transpositions (1,i)(-1,-i) and (1,-i)(-1,i) for 2 <= i <= n, the
/// identity, and (1,-1)(n,-n).
std::vector<SignedPerm> coset_representatives(const RootSystem& rs);

/// Elements of W fixing eps_1.
std::vector<SignedPerm> stabilizer_of_eps1(const RootSystem& rs);

/// Cycle-free image notation, e.g. "[2, -1, 3]".
std::string to_string(const SignedPerm& w);

}  // namespace qcasimir
