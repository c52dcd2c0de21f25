#include "qcasimir/weight.hpp"

#include "qcasimir/errors.hpp"

namespace qcasimir {

Weight::Weight(int rank) : rank_(rank) {
  if (rank < 0 || rank > kMaxRank)
    throw Error(Errc::RankTooLarge, "weights support rank <= " + std::to_string(kMaxRank));
}

std::uint64_t Weight::pack(std::span<const int> doubled) {
  std::uint64_t key = 0x8080808080808080ULL;
  for (std::size_t i = 0; i < doubled.size(); ++i) {
    int d = doubled[i];
    if (d < kMinDoubled || d > kMaxDoubled)
      throw Error(Errc::WeightOutOfRange, "coordinate " + std::to_string(d) + "/2 out of range");
    int s = shift(static_cast<int>(i));
    key &= ~(std::uint64_t{0xFF} << s);
    key |= static_cast<std::uint64_t>(d + 128) << s;
  }
  return key;
}

Weight Weight::from_doubled(std::span<const int> doubled) {
  Weight w(static_cast<int>(doubled.size()));
  w.key_ = pack(doubled);
  return w;
}

Weight Weight::from_ints(std::span<const int> coords) {
  std::vector<int> d(coords.begin(), coords.end());
  for (int& x : d) x *= 2;
  return from_doubled(d);
}

Weight Weight::from_rationals(std::span<const Rational> coords) {
  std::vector<int> d;
  d.reserve(coords.size());
  for (const auto& x : coords) {
    Rational twice = 2 * x;
    if (!is_integer(twice)) throw Error(Errc::GridMismatch, "coordinate not on the half-integer grid");
    if (!twice.get_num().fits_sint_p())
      throw Error(Errc::WeightOutOfRange, "coordinate too large");
    d.push_back(static_cast<int>(twice.get_num().get_si()));
  }
  return from_doubled(d);
}

Weight Weight::unit(int rank, int i) {
  if (i < 0 || i >= rank) throw Error(Errc::IndexOutOfRange, "unit weight index");
  std::vector<int> d(rank, 0);
  d[i] = 2;
  return from_doubled(d);
}

Rational Weight::coord(int i) const {
  Rational r(doubled(i), 2);
  r.canonicalize();
  return r;
}

std::vector<int> Weight::doubled_coords() const {
  std::vector<int> out(rank_);
  for (int i = 0; i < rank_; ++i) out[i] = doubled(i);
  return out;
}

std::vector<Rational> Weight::coords() const {
  std::vector<Rational> out;
  out.reserve(rank_);
  for (int i = 0; i < rank_; ++i) out.push_back(coord(i));
  return out;
}

bool Weight::is_zero() const { return key_ == 0x8080808080808080ULL; }

bool Weight::is_integral() const {
  for (int i = 0; i < rank_; ++i)
    if (doubled(i) % 2 != 0) return false;
  return true;
}

Weight& Weight::operator+=(const Weight& o) {
  if (rank_ != o.rank_) throw Error(Errc::RankMismatch, "adding weights of different rank");
  int d[kMaxRank];
  for (int i = 0; i < rank_; ++i) d[i] = doubled(i) + o.doubled(i);
  key_ = pack(std::span<const int>(d, rank_));
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (rank_ != o.rank_) throw Error(Errc::RankMismatch, "subtracting weights of different rank");
  int d[kMaxRank];
  for (int i = 0; i < rank_; ++i) d[i] = doubled(i) - o.doubled(i);
  key_ = pack(std::span<const int>(d, rank_));
  return *this;
}

Weight operator-(const Weight& a) { return -1 * a; }

Weight operator*(int c, const Weight& a) {
  int d[Weight::kMaxRank];
  for (int i = 0; i < a.rank_; ++i) d[i] = c * a.doubled(i);
  return Weight::from_doubled(std::span<const int>(d, a.rank_));
}

Rational pairing(const Weight& a, const Weight& b) {
  if (a.rank() != b.rank()) throw Error(Errc::LengthMismatch, "pairing weights of different rank");
  long s = 0;
  for (int i = 0; i < a.rank(); ++i) s += static_cast<long>(a.doubled(i)) * b.doubled(i);
  Rational r(s, 4);
  r.canonicalize();
  return r;
}

std::string to_string(const Weight& w) {
  std::string out = "(";
  for (int i = 0; i < w.rank(); ++i) {
    if (i) out += ", ";
    out += w.coord(i).get_str();
  }
  return out + ")";
}

}  // namespace qcasimir
