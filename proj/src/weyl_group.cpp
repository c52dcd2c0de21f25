#include "qcasimir/weyl_group.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "qcasimir/errors.hpp"

namespace qcasimir {

SignedPerm SignedPerm::identity(int n) {
  SignedPerm w;
  w.n = n;
  for (int i = 0; i < n; ++i) {
    w.perm[i] = static_cast<std::int8_t>(i);
    w.signs[i] = 1;
  }
  return w;
}

SignedPerm SignedPerm::from_images(const std::vector<int>& images) {
  const int n = static_cast<int>(images.size());
  if (n > Weight::kMaxRank) throw Error(Errc::RankTooLarge, "signed permutation too long");
  SignedPerm w;
  w.n = n;
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) {
    int a = std::abs(images[i]);
    if (a < 1 || a > n || seen[a - 1]) throw Error(Errc::InvalidArgument, "not a signed permutation");
    seen[a - 1] = true;
    w.perm[i] = static_cast<std::int8_t>(a - 1);
    w.signs[i] = static_cast<std::int8_t>(images[i] > 0 ? 1 : -1);
  }
  return w;
}

int SignedPerm::image(int a) const {
  if (a == 0) return 0;
  int i = std::abs(a) - 1;
  int img = signs[i] * (perm[i] + 1);
  return a > 0 ? img : -img;
}

int SignedPerm::negative_signs() const {
  int c = 0;
  for (int i = 0; i < n; ++i) c += signs[i] < 0;
  return c;
}

SignedPerm compose(const SignedPerm& a, const SignedPerm& b) {
  if (a.n != b.n) throw Error(Errc::RankMismatch, "composing signed permutations of different size");
  SignedPerm w;
  w.n = a.n;
  for (int i = 0; i < a.n; ++i) {
    int j = b.perm[i];
    w.perm[i] = a.perm[j];
    w.signs[i] = static_cast<std::int8_t>(b.signs[i] * a.signs[j]);
  }
  return w;
}

SignedPerm inverse(const SignedPerm& w) {
  SignedPerm v;
  v.n = w.n;
  for (int i = 0; i < w.n; ++i) {
    v.perm[w.perm[i]] = static_cast<std::int8_t>(i);
    v.signs[w.perm[i]] = w.signs[i];
  }
  return v;
}

bool is_element(const SignedPerm& w, const RootSystem& rs) {
  if (w.n != rs.rank) return false;
  return rs.type != LieType::D || w.negative_signs() % 2 == 0;
}

int sgn(const SignedPerm& w) {
  // Sign of the underlying permutation by cycle count, times the sign flips.
  int s = w.negative_signs() % 2 ? -1 : 1;
  std::array<bool, Weight::kMaxRank> seen{};
  for (int i = 0; i < w.n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = w.perm[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  return s;
}

namespace {

std::vector<SignedPerm> build_weyl(const RootSystem& rs) {
  const int n = rs.rank;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<SignedPerm> out;
  do {
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
      if (rs.type == LieType::D && __builtin_popcount(mask) % 2) continue;
      SignedPerm w;
      w.n = n;
      for (int i = 0; i < n; ++i) {
        w.perm[i] = static_cast<std::int8_t>(p[i]);
        w.signs[i] = static_cast<std::int8_t>((mask >> i) & 1U ? -1 : 1);
      }
      out.push_back(w);
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

const std::vector<SignedPerm>& enumerate_weyl(const RootSystem& rs) {
  if (rs.rank > 7)
    throw Error(Errc::RankTooLargeForEnumeration, "Weyl group enumeration is limited to rank 7");
  static std::mutex mu;
  static std::map<std::pair<LieType, int>, std::unique_ptr<std::vector<SignedPerm>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{rs.type, rs.rank}];
  if (!slot) slot = std::make_unique<std::vector<SignedPerm>>(build_weyl(rs));
  return *slot;
}

Weight act(const SignedPerm& w, const Weight& mu) {
  if (w.n != mu.rank()) throw Error(Errc::RankMismatch, "acting on a weight of different rank");
  int d[Weight::kMaxRank];
  for (int i = 0; i < w.n; ++i) d[w.perm[i]] = w.signs[i] * mu.doubled(i);
  return Weight::from_doubled(std::span<const int>(d, w.n));
}

GAElem act(const SignedPerm& w, const GAElem& x) {
  if (!x.is_zero() && x.rank() != w.n) throw Error(Errc::RankMismatch, "acting on an element of different rank");
  GAElem out(w.n);
  for (const auto& [mu, c] : x.terms()) out.add_term(act(w, mu), c);
  return out;
}

SignedPerm reflection(const Weight& root) {
  const int n = root.rank();
  std::vector<int> nz;
  for (int i = 0; i < n; ++i)
    if (root.doubled(i) != 0) nz.push_back(i);
  SignedPerm w = SignedPerm::identity(n);
  if (nz.size() == 1) {
    w.signs[nz[0]] = -1;
    return w;
  }
  if (nz.size() != 2 || std::abs(root.doubled(nz[0])) != std::abs(root.doubled(nz[1])))
    throw Error(Errc::InvalidArgument, "not a root of type B, C or D: " + to_string(root));
  int i = nz[0], j = nz[1];
  // eps_i - eps_j swaps i and j; eps_i + eps_j also negates both.
  std::int8_t s = root.doubled(i) == root.doubled(j) ? -1 : 1;
  w.perm[i] = static_cast<std::int8_t>(j);
  w.perm[j] = static_cast<std::int8_t>(i);
  w.signs[i] = s;
  w.signs[j] = s;
  return w;
}

std::vector<SignedPerm> coset_representatives(const RootSystem& rs) {
  const int n = rs.rank;
  std::vector<SignedPerm> out;
  for (int i = 1; i < n; ++i) {
    SignedPerm t = SignedPerm::identity(n);
    t.perm[0] = static_cast<std::int8_t>(i);
    t.perm[i] = 0;
    out.push_back(t);
    t.signs[0] = -1;
    t.signs[i] = -1;
    out.push_back(t);
  }
  out.push_back(SignedPerm::identity(n));
  SignedPerm f = SignedPerm::identity(n);
  f.signs[0] = -1;
  f.signs[n - 1] = -1;
  out.push_back(f);
  return out;
}

std::vector<SignedPerm> stabilizer_of_eps1(const RootSystem& rs) {
  std::vector<SignedPerm> out;
  for (const auto& w : enumerate_weyl(rs))
    if (w.perm[0] == 0 && w.signs[0] == 1) out.push_back(w);
  return out;
}

std::string to_string(const SignedPerm& w) {
  std::string out = "[";
  for (int i = 1; i <= w.n; ++i) {
    if (i > 1) out += ", ";
    out += std::to_string(w.image(i));
  }
  return out + "]";
}

}  // namespace qcasimir
