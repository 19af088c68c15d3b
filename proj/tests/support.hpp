#pragma once

#include <random>

#include "gprojlab/cli.hpp"

namespace gprojlab::testing {

inline AlgebraPtr s3() { return nakayama_cyclic(3, 2); }
inline AlgebraPtr a2() { return nakayama_linear(2); }

inline AlgebraPtr two_loop() {
  return parse_algebra("algebra L; vertices: 1; arrows: x: 1 -> 1, y: 1 -> 1; relations: x.x, x.y, y.x, y.y;").algebra;
}

inline AlgebraPtr two_s3_at_vertex() { return glue_at_vertex(*s3(), 0, *s3(), 0).algebra; }

/// Random invertible matrix of size n with small entries.
template <class K>
Matrix<K> random_invertible(std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    Matrix<K> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = random_scalar<K>(rng, -3, 3);
    if (rank(m) == n) return m;
  }
}

/// A copy of m under a random change of basis at every vertex, with the iso.
template <class K>
std::pair<Representation<K>, Morphism<K>> conjugate(const Representation<K>& m, std::mt19937_64& rng) {
  std::vector<Matrix<K>> g, ginv;
  for (auto d : m.dims()) {
    g.push_back(random_invertible<K>(d, rng));
    ginv.push_back(*inverse(g.back()));
  }
  std::vector<Matrix<K>> maps;
  const Quiver& q = m.algebra().quiver();
  for (std::size_t a = 0; a < q.num_arrows(); ++a)
    maps.push_back(g[q.arrow(a).target] * m.action(a) * ginv[q.arrow(a).source]);
  Representation<K> c(m.algebra_ptr(), m.dims(), std::move(maps));
  return {c, Morphism<K>{m, c, g}};
}

/// Every path of the quiver up to length `max_len`, as arrow sequences.
inline std::vector<std::vector<std::size_t>> all_walks(const Quiver& q, std::size_t max_len) {
  std::vector<std::vector<std::size_t>> out, frontier;
  for (std::size_t a = 0; a < q.num_arrows(); ++a) frontier.push_back({a});
  while (!frontier.empty() && frontier.front().size() <= max_len) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& w : frontier) {
      out.push_back(w);
      if (w.size() == max_len) continue;
      for (std::size_t a = 0; a < q.num_arrows(); ++a)
        if (q.arrow(w.back()).target == q.arrow(a).source) {
          auto x = w;
          x.push_back(a);
          next.push_back(x);
        }
    }
    frontier = std::move(next);
  }
  return out;
}

/// Brute-force: a walk is zero iff it contains a generator as a contiguous block.
inline bool walk_in_ideal(const std::vector<std::size_t>& w, const MonomialIdeal& ideal) {
  for (const auto& g : ideal.generators)
    for (std::size_t i = 0; i + g.arrows.size() <= w.size(); ++i)
      if (std::equal(g.arrows.begin(), g.arrows.end(), w.begin() + i)) return true;
  return false;
}

}  // namespace gprojlab::testing
