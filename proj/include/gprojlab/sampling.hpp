#pragma once

// Seeded random modules and short exact sequences for property checks.

#include <random>
#include <vector>

#include "gprojlab/rep.hpp"

namespace gprojlab {

struct SampleConfig {
  std::size_t max_dim = 12;
  int coeff_lo = -3;
  int coeff_hi = 3;
};

namespace detail {

inline std::size_t pick(std::mt19937_64& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

template <class K>
Morphism<K> random_morphism(const Representation<K>& m, const Representation<K>& n, std::mt19937_64& rng,
                            const SampleConfig& cfg) {
  auto basis = hom_basis(m, n);
  std::vector<K> coeffs;
  for (std::size_t i = 0; i < basis.size(); ++i) coeffs.push_back(random_scalar<K>(rng, cfg.coeff_lo, cfg.coeff_hi));
  return linear_combination(basis, coeffs, m, n);
}

template <class K>
Representation<K> random_projective_sum(const AlgebraPtr& a, std::mt19937_64& rng, std::size_t summands) {
  std::vector<Representation<K>> parts;
  for (std::size_t i = 0; i < summands; ++i) parts.push_back(projective<K>(a, pick(rng, a->num_vertices())));
  return direct_sum(parts, a).object;
}

/// Cokernel of a random map between small sums of projectives.
template <class K>
Representation<K> random_presented(const AlgebraPtr& a, std::mt19937_64& rng, const SampleConfig& cfg) {
  for (int attempt = 0; attempt < 16; ++attempt) {
    auto p0 = random_projective_sum<K>(a, rng, 1 + pick(rng, 2));
    if (p0.total_dim() > cfg.max_dim + 6) continue;
    auto p1 = random_projective_sum<K>(a, rng, 1 + pick(rng, 2));
    auto c = cokernel(random_morphism(p1, p0, rng, cfg)).object;
    if (!c.is_zero() && c.total_dim() <= cfg.max_dim) return c;
  }
  return simple<K>(a, pick(rng, a->num_vertices()));
}

}  // namespace detail

/// A random module of total dimension at most cfg.max_dim: a presented module,
/// the dual of one over the opposite algebra, or a direct sum of two.
template <class K>
Representation<K> random_module(const AlgebraPtr& a, const AlgebraPtr& opposite, std::mt19937_64& rng,
                                const SampleConfig& cfg = {}) {
  switch (detail::pick(rng, 4)) {
    case 0:
    case 1: return detail::random_presented<K>(a, rng, cfg);
    case 2: return dual(detail::random_presented<K>(opposite, rng, cfg), a);
    default: {
      SampleConfig half = cfg;
      half.max_dim = std::max<std::size_t>(1, cfg.max_dim / 2);
      auto x = detail::random_presented<K>(a, rng, half);
      auto y = dual(detail::random_presented<K>(opposite, rng, half), a);
      return direct_sum<K>({x, y}, a).object;
    }
  }
}

template <class K>
Representation<K> random_module(const AlgebraPtr& a, std::mt19937_64& rng, const SampleConfig& cfg = {}) {
  return random_module<K>(a, opposite_algebra(*a), rng, cfg);
}

template <class K>
std::vector<Representation<K>> random_modules(const AlgebraPtr& a, std::size_t count, std::uint64_t seed,
                                              const SampleConfig& cfg = {}) {
  std::mt19937_64 rng(seed);
  auto op = opposite_algebra(*a);
  std::vector<Representation<K>> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_module<K>(a, op, rng, cfg));
  return out;
}

/// 0 -> L --alpha--> M --beta--> N -> 0.
template <class K>
struct ShortExactSequence {
  Morphism<K> alpha;
  Morphism<K> beta;
};

template <class K>
bool is_short_exact(const ShortExactSequence<K>& s) {
  if (!compose(s.beta, s.alpha).is_zero()) return false;
  for (std::size_t v = 0; v < s.alpha.components.size(); ++v) {
    const std::size_t ra = rank(s.alpha.components[v]), rb = rank(s.beta.components[v]);
    if (ra != s.alpha.source.dim(v) || rb != s.beta.target.dim(v) || ra + rb != s.alpha.target.dim(v)) return false;
  }
  return true;
}

/// Random f: M1 -> M2 gives 0 -> ker f -> M1 -> im f -> 0 or 0 -> im f -> M2 -> coker f -> 0.
template <class K>
ShortExactSequence<K> random_short_exact(const AlgebraPtr& a, const AlgebraPtr& opposite, std::mt19937_64& rng,
                                         const SampleConfig& cfg = {}) {
  SampleConfig half = cfg;
  half.max_dim = std::max<std::size_t>(2, cfg.max_dim / 2);
  auto m1 = random_module<K>(a, opposite, rng, half);
  auto m2 = random_module<K>(a, opposite, rng, half);
  auto f = detail::random_morphism(m1, m2, rng, cfg);
  if (f.is_zero()) {
    auto sum = direct_sum<K>({m1, m2}, a);
    return {sum.injections[0], sum.projections[1]};
  }
  auto img = image(f);
  if (detail::pick(rng, 2) == 0) {
    auto ker = kernel(f);
    return {ker.map, img.corestriction};
  }
  auto cok = cokernel(f);
  return {img.inclusion, cok.map};
}

}  // namespace gprojlab
