#include "qcasimir/characters.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "qcasimir/errors.hpp"

namespace qcasimir {

GAElem antisymmetrize(const GAElem& x, const RootSystem& rs) {
  GAElem out(rs.rank);
  for (const auto& w : enumerate_weyl(rs)) {
    const int s = sgn(w);
    for (const auto& [mu, c] : x.terms()) out.add_term(act(w, mu), s > 0 ? c : -c);
  }
  return out;
}

namespace {

GAElem denominator_product(const RootSystem& rs) {
  GAElem out = GAElem::constant(QLaurent(1), rs.rank);
  for (const auto& alpha : rs.positive_roots) {
    std::vector<int> d(rs.rank);
    for (int i = 0; i < rs.rank; ++i) d[i] = alpha.doubled(i) / 2;
    Weight half = Weight::from_doubled(d);
    GAElem factor = GAElem::monomial(half) - GAElem::monomial(-half);
    out = out * factor;
  }
  return out;
}

std::mutex& cache_mutex() {
  static std::mutex mu;
  return mu;
}

}  // namespace

const GAElem& weyl_denominator(const RootSystem& rs, DenominatorMode mode) {
  static std::map<std::tuple<LieType, int, DenominatorMode>, std::unique_ptr<GAElem>> cache;
  {
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto it = cache.find({rs.type, rs.rank, mode});
    if (it != cache.end()) return *it->second;
  }
  GAElem value = mode == DenominatorMode::Product ? denominator_product(rs)
                                                  : antisymmetrize(GAElem::monomial(rs.rho), rs);
  std::lock_guard<std::mutex> lock(cache_mutex());
  auto& slot = cache[{rs.type, rs.rank, mode}];
  if (!slot) slot = std::make_unique<GAElem>(std::move(value));
  return *slot;
}

GAElem weyl_character(const RootSystem& rs, const Weight& lam) {
  if (!is_dominant(rs, lam)) throw Error(Errc::NotDominant, to_string(lam) + " is not dominant for " + rs.name());
  static std::map<std::tuple<LieType, int, std::uint64_t>, GAElem> cache;
  const auto key = std::make_tuple(rs.type, rs.rank, lam.key());
  {
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const GAElem& delta = weyl_denominator(rs, DenominatorMode::Alternant);
  GAElem chi = ga_div_exact(antisymmetrize(GAElem::monomial(lam + rs.rho), rs), delta);
  std::lock_guard<std::mutex> lock(cache_mutex());
  cache.emplace(key, chi);
  return chi;
}

GAElem ext_power_char(const RootSystem& rs, int r) {
  const int n = rs.rank;
  if (r < 0 || r > rs.dim_natural) return GAElem(n);
  // Coefficients of t^0..t^j of the partial product.
  std::vector<GAElem> poly(1, GAElem::constant(QLaurent(1), n));
  auto multiply_linear = [&](const GAElem& a) {
    std::vector<GAElem> next(poly.size() + 1, GAElem(n));
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j] += poly[j];
      next[j + 1] += poly[j] * a;
    }
    poly = std::move(next);
  };
  if (rs.type == LieType::B) multiply_linear(GAElem::constant(QLaurent(1), n));
  for (int i = 0; i < n; ++i) {
    Weight e = Weight::unit(n, i);
    multiply_linear(GAElem::monomial(e));
    multiply_linear(GAElem::monomial(-e));
  }
  return poly[r];
}

GAElem natural_character(const RootSystem& rs) {
  GAElem out(rs.rank);
  for (int a : rs.casimir_indices) out.add_term(natural_weight(rs, a), QLaurent(1));
  return out;
}

}  // namespace qcasimir
