#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qcasimir/rational.hpp"

namespace qcasimir {

/// A vector in the span of eps_1..eps_n with half-integer coordinates.
///
/// Coordinates are held doubled, one signed byte each, packed into a single
/// 64-bit key with eps_1 in the most significant byte. Comparing keys is
/// therefore the lexicographic order on coordinates, which is the monomial
/// order used for exact division in the group algebra.
class Weight {
 public:
  static constexpr int kMaxRank = 8;
  static constexpr int kMaxDoubled = 127;
  static constexpr int kMinDoubled = -128;

  Weight() = default;
  explicit Weight(int rank);

  /// From doubled coordinates (2*x_i). Throws WeightOutOfRange / RankTooLarge.
  static Weight from_doubled(std::span<const int> doubled);
  /// From integer coordinates.
  static Weight from_ints(std::span<const int> coords);
  /// From rational coordinates on the half-integer grid; throws GridMismatch.
  static Weight from_rationals(std::span<const Rational> coords);
  /// eps_i for 0-based i.
  static Weight unit(int rank, int i);

  int rank() const { return rank_; }
  int doubled(int i) const { return static_cast<int>((key_ >> shift(i)) & 0xFFU) - 128; }
  Rational coord(int i) const;
  std::vector<int> doubled_coords() const;
  std::vector<Rational> coords() const;

  bool is_zero() const;
  /// All coordinates are integers.
  bool is_integral() const;

  std::uint64_t key() const { return key_; }

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator-(const Weight& a);
  friend Weight operator*(int c, const Weight& a);

  friend bool operator==(const Weight&, const Weight&) = default;
  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
    if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
    return a.key_ <=> b.key_;
  }

 private:
  static constexpr int shift(int i) { return 8 * (kMaxRank - 1 - i); }
  static std::uint64_t pack(std::span<const int> doubled);

  std::uint64_t key_ = 0x8080808080808080ULL;
  int rank_ = 0;
};

/// Standard bilinear form with (eps_i, eps_j) = delta_ij. Throws LengthMismatch.
Rational pairing(const Weight& a, const Weight& b);

/// Human-readable "(3/2, 1/2)".
std::string to_string(const Weight& w);

}  // namespace qcasimir
