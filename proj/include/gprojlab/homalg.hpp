#pragma once

// Projective covers, syzygies, minimal resolutions, Ext, isomorphism testing,
// Krull-Schmidt decomposition and certified projective dimensions.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gprojlab/rep.hpp"

namespace gprojlab {

class BoundExhausted : public Error {
 public:
  using Error::Error;
};

class SplitFailure : public Error {
 public:
  SplitFailure(const std::string& msg, std::vector<std::size_t> dims) : Error(msg), dims_(std::move(dims)) {}
  const std::vector<std::size_t>& module_dims() const { return dims_; }

 private:
  std::vector<std::size_t> dims_;
};

/// Default resolution bound: 4 * dim A + 4.
inline std::size_t default_bound(const BoundAlgebra& a) { return 4 * a.dimension() + 4; }

// ---------------------------------------------------------------------------
// Projective covers and resolutions

template <class K>
struct ProjectiveCover {
  Representation<K> projective;
  std::vector<std::size_t> generators;  // vertex of each indecomposable summand
  Morphism<K> epi;
};

/// Offset of summand j's block at vertex x inside a direct sum of projectives.
inline std::size_t summand_offset(const BoundAlgebra& a, const std::vector<std::size_t>& gens, std::size_t x, std::size_t j) {
  std::size_t off = 0;
  for (std::size_t i = 0; i < j; ++i) off += a.paths_between(gens[i], x).size();
  return off;
}

template <class K>
Representation<K> projective_sum(const AlgebraPtr& alg, const std::vector<std::size_t>& gens) {
  std::vector<Representation<K>> parts;
  for (auto u : gens) parts.push_back(projective<K>(alg, u));
  return direct_sum(parts, alg).object;
}

/// Minimal projective cover: one P(v) per basis vector of (top M)_v.
template <class K>
ProjectiveCover<K> projective_cover(const Representation<K>& m) {
  const BoundAlgebra& a = m.algebra();
  auto rad = radical(m);
  std::vector<std::size_t> gens;
  std::vector<Matrix<K>> gen_vectors;
  for (std::size_t v = 0; v < a.num_vertices(); ++v) {
    Matrix<K> comp = complement_basis(rad.map.components[v]);
    for (std::size_t c = 0; c < comp.cols(); ++c) {
      gens.push_back(v);
      gen_vectors.push_back(comp.column(c));
    }
  }
  Representation<K> p = projective_sum<K>(m.algebra_ptr(), gens);
  std::vector<Matrix<K>> comps;
  for (std::size_t x = 0; x < a.num_vertices(); ++x) {
    Matrix<K> f(m.dim(x), p.dim(x));
    std::size_t col = 0;
    for (std::size_t j = 0; j < gens.size(); ++j)
      for (auto path : a.paths_between(gens[j], x)) {
        f.set_block(0, col++, m.path_action(path) * gen_vectors[j]);
      }
    comps.push_back(std::move(f));
  }
  return {p, gens, Morphism<K>{p, m, std::move(comps)}};
}

/// Dimension of the projective cover, from the top alone.
template <class K>
std::size_t cover_dimension(const Representation<K>& m) {
  const BoundAlgebra& a = m.algebra();
  auto rad = radical(m);
  std::size_t total = 0;
  for (std::size_t v = 0; v < a.num_vertices(); ++v) total += (m.dim(v) - rad.object.dim(v)) * a.paths_from(v).size();
  return total;
}

template <class K>
bool is_projective(const Representation<K>& m) {
  return cover_dimension(m) == m.total_dim();
}

/// Omega M with its inclusion into the projective cover.
template <class K>
WithMap<K> syzygy_with_inclusion(const Representation<K>& m) {
  return kernel(projective_cover(m).epi);
}

template <class K>
Representation<K> syzygy(const Representation<K>& m) {
  return syzygy_with_inclusion(m).object;
}

template <class K>
Representation<K> syzygy_power(Representation<K> m, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) m = syzygy(m);
  return m;
}

/// Minimal projective resolution P_k -> ... -> P_0 -> M -> 0, computed up to a degree.
template <class K>
class Resolution {
 public:
  Resolution(const Representation<K>& m, std::size_t max_degree) : module_(m) {
    Representation<K> cur = m;
    for (std::size_t k = 0; k <= max_degree; ++k) {
      syzygies_.push_back(cur);
      if (cur.is_zero()) {
        terminated_ = true;
        break;
      }
      auto cover = projective_cover(cur);
      auto ker = kernel(cover.epi);
      if (k > 0) differentials_.push_back(compose(inclusions_.back(), cover.epi));
      covers_.push_back(cover);
      inclusions_.push_back(ker.map);
      cur = ker.object;
    }
    if (!terminated_ && cur.is_zero()) {
      syzygies_.push_back(cur);
      terminated_ = true;
    }
  }

  const Representation<K>& module() const { return module_; }
  /// Number of projective terms computed (nonzero ones).
  std::size_t length() const { return covers_.size(); }
  bool terminated() const { return terminated_; }
  const ProjectiveCover<K>& cover(std::size_t k) const { return covers_.at(k); }
  const Representation<K>& syzygy(std::size_t k) const { return syzygies_.at(k); }
  /// d_k : P_k -> P_{k-1}, k >= 1.
  const Morphism<K>& differential(std::size_t k) const { return differentials_.at(k - 1); }

  /// Whether degrees 0..k are all known (computed or past termination).
  bool knows_degree(std::size_t k) const { return terminated_ || k < covers_.size(); }

  /// dim Ext^k(M, N) from the Hom complex Hom(P_*, N).
  std::size_t ext_dim(std::size_t k, const Representation<K>& n) const {
    if (!knows_degree(k + 1))
      throw BoundExhausted("resolution bound exhausted before degree " + std::to_string(k + 1));
    std::size_t cochains = cochain_dim(k, n);
    std::size_t rank_out = coboundary_rank(k, n);
    std::size_t rank_in = k == 0 ? 0 : coboundary_rank(k - 1, n);
    return cochains - rank_out - rank_in;
  }

  /// Matrix of Hom(P_k, N) -> Hom(P_{k+1}, N), f |-> f after d_{k+1}, in the
  /// coordinates Hom(P(u), N) = N_u.
  Matrix<K> coboundary(std::size_t k, const Representation<K>& n) const {
    const BoundAlgebra& a = module_.algebra();
    const std::vector<std::size_t> empty;
    const auto& src_gens = k < covers_.size() ? covers_[k].generators : empty;
    const auto& dst_gens = k + 1 < covers_.size() ? covers_[k + 1].generators : empty;
    std::vector<std::size_t> col_off{0}, row_off{0};
    for (auto u : src_gens) col_off.push_back(col_off.back() + n.dim(u));
    for (auto u : dst_gens) row_off.push_back(row_off.back() + n.dim(u));
    Matrix<K> m(row_off.back(), col_off.back());
    if (dst_gens.empty() || src_gens.empty()) return m;
    const Morphism<K>& d = differential(k + 1);
    for (std::size_t i = 0; i < dst_gens.size(); ++i) {
      const std::size_t x = dst_gens[i];
      const std::size_t col_of_generator = summand_offset(a, dst_gens, x, i);  // e_x comes first
      for (std::size_t j = 0; j < src_gens.size(); ++j) {
        const std::size_t base = summand_offset(a, src_gens, x, j);
        auto paths = a.paths_between(src_gens[j], x);
        Matrix<K> block(n.dim(x), n.dim(src_gens[j]));
        for (std::size_t p = 0; p < paths.size(); ++p) {
          const K& coef = d.components[x](base + p, col_of_generator);
          if (is_zero(coef)) continue;
          block = block + coef * n.path_action(paths[p]);
        }
        m.set_block(row_off[i], col_off[j], block);
      }
    }
    return m;
  }

 private:
  std::size_t cochain_dim(std::size_t k, const Representation<K>& n) const {
    if (k >= covers_.size()) return 0;
    std::size_t d = 0;
    for (auto u : covers_[k].generators) d += n.dim(u);
    return d;
  }
  std::size_t coboundary_rank(std::size_t k, const Representation<K>& n) const { return rank(coboundary(k, n)); }

  Representation<K> module_;
  std::vector<ProjectiveCover<K>> covers_;
  std::vector<Morphism<K>> inclusions_;     // Omega^{k+1} -> P_k
  std::vector<Morphism<K>> differentials_;  // d_1, d_2, ...
  std::vector<Representation<K>> syzygies_;
  bool terminated_ = false;
};

/// dim Ext^k(M, N); throws BoundExhausted if degree k+1 is beyond `bound`.
template <class K>
std::size_t ext_dim(std::size_t k, const Representation<K>& m, const Representation<K>& n, std::size_t bound) {
  if (k + 1 > bound) {
    Resolution<K> r(m, bound);
    return r.ext_dim(k, n);
  }
  Resolution<K> r(m, k + 1);
  return r.ext_dim(k, n);
}

template <class K>
std::size_t ext_dim(std::size_t k, const Representation<K>& m, const Representation<K>& n) {
  return ext_dim(k, m, n, std::max<std::size_t>(default_bound(m.algebra()), k + 1));
}

/// Independent Ext^1: per-arrow cocycles satisfying the linearized monomial
/// relations, modulo coboundaries N_a g_s - g_t M_a.
template <class K>
std::size_t ext1_cocycle_oracle(const Representation<K>& m, const Representation<K>& n) {
  const BoundAlgebra& a = m.algebra();
  const Quiver& q = a.quiver();
  std::vector<std::size_t> off{0};
  for (const auto& arr : q.arrows()) off.push_back(off.back() + n.dim(arr.target) * m.dim(arr.source));
  const std::size_t unknowns = off.back();

  std::vector<std::vector<K>> rows;
  for (const auto& g : a.ideal().generators) {
    const std::size_t len = g.length();
    const std::size_t out_dim = n.dim(g.target), in_dim = m.dim(g.source);
    std::vector<std::vector<K>> block(out_dim * in_dim, std::vector<K>(unknowns, K(0)));
    for (std::size_t j = 0; j < len; ++j) {
      const std::size_t arrow = g.arrows[j];
      const Arrow& arr = q.arrow(arrow);
      Matrix<K> left = Matrix<K>::identity(n.dim(arr.target));
      for (std::size_t t = j + 1; t < len; ++t) left = n.action(g.arrows[t]) * left;
      Matrix<K> right = Matrix<K>::identity(m.dim(g.source));
      for (std::size_t t = 0; t < j; ++t) right = m.action(g.arrows[t]) * right;
      // (left * f * right)(r, c) = sum_{x, y} left(r, x) f(x, y) right(y, c)
      for (std::size_t r = 0; r < out_dim; ++r)
        for (std::size_t x = 0; x < left.cols(); ++x) {
          if (is_zero(left(r, x))) continue;
          for (std::size_t y = 0; y < right.rows(); ++y)
            for (std::size_t c = 0; c < in_dim; ++c) {
              if (is_zero(right(y, c))) continue;
              block[r * in_dim + c][off[arrow] + x * m.dim(arr.source) + y] += left(r, x) * right(y, c);
            }
        }
    }
    for (auto& row : block) rows.push_back(std::move(row));
  }
  Matrix<K> constraints(rows.size(), unknowns);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < unknowns; ++c) constraints(r, c) = rows[r][c];
  const std::size_t cocycles = unknowns - rank(constraints);

  // Coboundary map g = (g_v) |-> (N_a g_s - g_t M_a)_a.
  std::vector<std::size_t> goff{0};
  for (std::size_t v = 0; v < a.num_vertices(); ++v) goff.push_back(goff.back() + n.dim(v) * m.dim(v));
  Matrix<K> cob(unknowns, goff.back());
  for (std::size_t arrow = 0; arrow < q.num_arrows(); ++arrow) {
    const Arrow& arr = q.arrow(arrow);
    const std::size_t s = arr.source, t = arr.target;
    for (std::size_t i = 0; i < n.dim(t); ++i)
      for (std::size_t j = 0; j < m.dim(s); ++j) {
        const std::size_t row = off[arrow] + i * m.dim(s) + j;
        for (std::size_t k = 0; k < n.dim(s); ++k)
          if (!is_zero(n.action(arrow)(i, k))) cob(row, goff[s] + k * m.dim(s) + j) += n.action(arrow)(i, k);
        for (std::size_t k = 0; k < m.dim(t); ++k)
          if (!is_zero(m.action(arrow)(k, j))) cob(row, goff[t] + i * m.dim(t) + k) -= m.action(arrow)(k, j);
      }
  }
  return cocycles - rank(cob);
}

// ---------------------------------------------------------------------------
// Isomorphism testing

enum class IsoVerdict { Yes, No, Inconclusive };

template <class K>
struct IsoResult {
  IsoVerdict verdict = IsoVerdict::Inconclusive;
  std::optional<Morphism<K>> iso;
  std::string reason;
  explicit operator bool() const { return verdict == IsoVerdict::Yes; }
};

namespace detail {

template <class K>
std::vector<std::size_t> socle_dims(const Representation<K>& m) {
  return socle(m).object.dims();
}

/// Top vertex of a uniserial module.
template <class K>
std::size_t top_vertex(const Representation<K>& m) {
  auto layers = radical_layers(m);
  for (std::size_t v = 0; v < layers.front().size(); ++v)
    if (layers.front()[v]) return v;
  return 0;
}

/// Generator-based iso between two uniserial modules with equal top and length
/// over a Nakayama algebra.
template <class K>
std::optional<Morphism<K>> uniserial_iso(const Representation<K>& m, const Representation<K>& n) {
  const BoundAlgebra& a = m.algebra();
  const std::size_t v = top_vertex(m);
  const std::size_t len = loewy_length(m);
  auto generator = [&](const Representation<K>& x) {
    auto rad = radical(x);
    return complement_basis(rad.map.components[v]).column(0);
  };
  Matrix<K> gm = generator(m), gn = generator(n);
  std::vector<std::vector<Matrix<K>>> cols_m(a.num_vertices()), cols_n(a.num_vertices());
  for (auto p : a.paths_from(v)) {
    const Path& path = a.basis_path(p);
    if (path.length() >= len) continue;
    cols_m[path.target].push_back(m.path_action(p) * gm);
    cols_n[path.target].push_back(n.path_action(p) * gn);
  }
  std::vector<Matrix<K>> comps;
  for (std::size_t x = 0; x < a.num_vertices(); ++x) {
    Matrix<K> bm = hstack(cols_m[x], m.dim(x)), bn = hstack(cols_n[x], n.dim(x));
    auto inv = inverse(bm);
    if (!inv) return std::nullopt;
    comps.push_back(bn * *inv);
  }
  Morphism<K> f{m, n, std::move(comps)};
  if (!f.commutes() || !f.is_isomorphism()) return std::nullopt;
  return f;
}

}  // namespace detail

/// Decides M = N when it can: invariants give certified "no", a verified
/// invertible morphism gives "yes"; uniserial modules over Nakayama algebras
/// are decided exactly by (top vertex, Loewy length).
template <class K>
IsoResult<K> is_isomorphic(const Representation<K>& m, const Representation<K>& n, std::uint64_t seed = 0) {
  using R = IsoResult<K>;
  if (!same_algebra(m, n)) return R{IsoVerdict::No, std::nullopt, "different algebras"};
  if (m.dims() != n.dims()) return R{IsoVerdict::No, std::nullopt, "dimension vectors differ"};
  if (m.is_zero()) return R{IsoVerdict::Yes, identity_morphism(m), "zero modules"};
  if (m == n) return R{IsoVerdict::Yes, identity_morphism(m), "identical data"};
  auto layers_m = radical_layers(m);
  if (layers_m != radical_layers(n)) return R{IsoVerdict::No, std::nullopt, "radical layers differ"};
  if (detail::socle_dims(m) != detail::socle_dims(n)) return R{IsoVerdict::No, std::nullopt, "socles differ"};

  bool uniserial = true;
  for (const auto& layer : layers_m)
    if (std::accumulate(layer.begin(), layer.end(), std::size_t{0}) != 1) uniserial = false;
  if (uniserial && m.algebra().is_nakayama()) {
    // Same layers means same top vertex and Loewy length.
    if (auto f = detail::uniserial_iso(m, n)) return R{IsoVerdict::Yes, std::move(f), "uniserial rule"};
  }

  auto hom_mn = hom_basis(m, n);
  const std::size_t hom_nm = hom_dim(n, m);
  if (hom_mn.size() != hom_nm) return R{IsoVerdict::No, std::nullopt, "dim Hom(M,N) != dim Hom(N,M)"};
  if (hom_mn.size() != hom_dim(m, m)) return R{IsoVerdict::No, std::nullopt, "dim Hom(M,N) != dim End(M)"};
  if (hom_mn.empty()) return R{IsoVerdict::No, std::nullopt, "no morphisms"};

  std::mt19937_64 rng(seed);
  auto try_coeffs = [&](const std::vector<K>& coeffs) -> std::optional<Morphism<K>> {
    Morphism<K> f = linear_combination(hom_mn, coeffs, m, n);
    if (f.is_isomorphism()) return f;
    return std::nullopt;
  };
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<K> coeffs;
    for (std::size_t i = 0; i < hom_mn.size(); ++i) coeffs.push_back(random_scalar<K>(rng, -1000, 1000));
    if (auto f = try_coeffs(coeffs)) return R{IsoVerdict::Yes, std::move(f), "randomized search"};
  }
  // Deterministic sweep: single basis elements, then consecutive pairs.
  for (std::size_t i = 0; i < hom_mn.size(); ++i) {
    std::vector<K> coeffs(hom_mn.size(), K(0));
    coeffs[i] = K(1);
    if (auto f = try_coeffs(coeffs)) return R{IsoVerdict::Yes, std::move(f), "basis sweep"};
    if (i + 1 < hom_mn.size()) {
      coeffs[i + 1] = K(1);
      if (auto f = try_coeffs(coeffs)) return R{IsoVerdict::Yes, std::move(f), "basis sweep"};
    }
  }
  return R{IsoVerdict::Inconclusive, std::nullopt, "no invertible morphism found"};
}

// ---------------------------------------------------------------------------
// Decomposition into indecomposables

template <class K>
struct Decomposition {
  bool conclusive = true;
  std::vector<Representation<K>> summands;       // indecomposable, in discovery order
  std::vector<Morphism<K>> inclusions;           // summand -> M
  std::vector<std::size_t> iso_class;            // class index of each summand
  std::vector<std::size_t> class_representative; // first summand of each class
  std::vector<std::size_t> multiplicity;         // per class
  std::optional<Morphism<K>> reassembly;         // (+) summands -> M, verified iso
};

namespace detail {

inline mpz_class lcm_of_denominators(const std::vector<Rational>& coeffs) {
  mpz_class l = 1;
  for (const auto& c : coeffs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

inline std::vector<mpz_class> divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<mpz_class> out;
  if (n == 0 || n > mpz_class("1000000000000")) return out;
  const long v = n.get_si();
  for (long d = 1; d * d <= v; ++d)
    if (v % d == 0) {
      out.emplace_back(d);
      if (d != v / d) out.emplace_back(v / d);
    }
  return out;
}

template <class K>
K eval_poly(const std::vector<K>& c, const K& x) {
  K acc(0);
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

/// Roots in the field of a monic polynomial (rational root test / exhaustive mod p).
template <class K>
std::vector<K> field_roots(std::vector<K> c) {
  std::vector<K> roots;
  while (c.size() > 1 && is_zero(c.front())) {
    c.erase(c.begin());
    if (std::find(roots.begin(), roots.end(), K(0)) == roots.end()) roots.push_back(K(0));
  }
  if (c.size() <= 1) return roots;
  if constexpr (FieldTraits<K>::characteristic == 0) {
    mpz_class l = lcm_of_denominators(c);
    std::vector<mpz_class> ints;
    for (const auto& x : c) ints.push_back(mpz_class(x * l));
    for (const auto& p : divisors(ints.front()))
      for (const auto& q : divisors(ints.back()))
        for (int sign : {1, -1}) {
          Rational cand(p * sign, q);
          cand.canonicalize();
          if (std::find(roots.begin(), roots.end(), cand) != roots.end()) continue;
          if (is_zero(eval_poly(c, cand))) roots.push_back(cand);
        }
  } else {
    for (std::int64_t t = 1; t < static_cast<std::int64_t>(FieldTraits<K>::characteristic); ++t)
      if (is_zero(eval_poly(c, K(t)))) roots.push_back(K(t));
  }
  return roots;
}

template <class K>
Matrix<K> matrix_power(const Matrix<K>& a, std::size_t e) {
  Matrix<K> r = Matrix<K>::identity(a.rows());
  for (std::size_t i = 0; i < e; ++i) r = r * a;
  return r;
}

/// Fitting split along x - lambda; nullopt when trivial.
template <class K>
std::optional<std::pair<WithMap<K>, WithMap<K>>> fitting_split(const Representation<K>& m, const Morphism<K>& x,
                                                               const K& lambda) {
  std::vector<Matrix<K>> ker, img;
  std::size_t ker_total = 0;
  for (std::size_t v = 0; v < m.dims().size(); ++v) {
    Matrix<K> y = x.components[v] - lambda * Matrix<K>::identity(m.dim(v));
    Matrix<K> power = matrix_power(y, m.dim(v));
    ker.push_back(nullspace(power));
    img.push_back(column_basis(power));
    ker_total += ker.back().cols();
  }
  if (ker_total == 0 || ker_total == m.total_dim()) return std::nullopt;
  return std::make_pair(subrepresentation(m, std::move(ker)), subrepresentation(m, std::move(img)));
}

template <class K>
bool obviously_indecomposable(const Representation<K>& m) {
  auto t = top(m).object.total_dim();
  if (t == 1) return true;
  return socle(m).object.total_dim() == 1;
}

template <class K>
void decompose_into(const Representation<K>& x, const Morphism<K>& inclusion, Decomposition<K>& out) {
  if (x.is_zero()) return;
  auto leaf = [&](bool certain) {
    out.summands.push_back(x);
    out.inclusions.push_back(inclusion);
    if (!certain) out.conclusive = false;
  };
  if (obviously_indecomposable(x)) return leaf(true);
  auto end = hom_basis(x, x);
  if (end.size() == 1) return leaf(true);

  std::optional<std::size_t> semisimple_rank;
  if constexpr (FieldTraits<K>::characteristic == 0) {
    // rad End = radical of the trace form (x, y) |-> tr(xy) in characteristic 0.
    Matrix<K> gram(end.size(), end.size());
    for (std::size_t i = 0; i < end.size(); ++i)
      for (std::size_t j = i; j < end.size(); ++j) {
        K t(0);
        for (std::size_t v = 0; v < x.dims().size(); ++v) t += (end[i].components[v] * end[j].components[v]).trace();
        gram(i, j) = t;
        gram(j, i) = t;
      }
    semisimple_rank = rank(gram);
    if (*semisimple_rank == 1) return leaf(true);
  }

  auto try_element = [&](const Morphism<K>& e) -> bool {
    std::vector<K> candidates;
    for (std::size_t v = 0; v < x.dims().size(); ++v) {
      if (x.dim(v) == 0) continue;
      for (const auto& r : field_roots(characteristic_polynomial(e.components[v])))
        if (std::find(candidates.begin(), candidates.end(), r) == candidates.end()) candidates.push_back(r);
    }
    for (const auto& lambda : candidates) {
      if (auto split = fitting_split(x, e, lambda)) {
        decompose_into(split->first.object, compose(inclusion, split->first.map), out);
        decompose_into(split->second.object, compose(inclusion, split->second.map), out);
        return true;
      }
    }
    return false;
  };
  for (const auto& e : end)
    if (try_element(e)) return;
  for (std::size_t i = 0; i < end.size(); ++i)
    for (std::size_t j = i + 1; j < end.size(); ++j) {
      std::vector<K> coeffs(end.size(), K(0));
      coeffs[i] = K(1);
      coeffs[j] = K(1);
      if (try_element(linear_combination(end, coeffs, x, x))) return;
      coeffs[j] = K(-1);
      if (try_element(linear_combination(end, coeffs, x, x))) return;
    }
  if (semisimple_rank)
    throw SplitFailure("could not split a module whose endomorphism ring has semisimple rank " +
                           std::to_string(*semisimple_rank),
                       x.dims());
  leaf(false);
}

}  // namespace detail

/// Splits M into indecomposables using the trace-form radical of End(M) and
/// Fitting decompositions; the reassembly isomorphism is verified.
template <class K>
Decomposition<K> decompose(const Representation<K>& m, std::uint64_t seed = 0) {
  Decomposition<K> out;
  detail::decompose_into(m, identity_morphism(m), out);
  // Iso classes.
  for (std::size_t i = 0; i < out.summands.size(); ++i) {
    std::optional<std::size_t> cls;
    for (std::size_t c = 0; c < out.class_representative.size() && !cls; ++c) {
      auto r = is_isomorphic(out.summands[out.class_representative[c]], out.summands[i], seed);
      if (r.verdict == IsoVerdict::Yes) cls = c;
      if (r.verdict == IsoVerdict::Inconclusive) out.conclusive = false;
    }
    if (!cls) {
      cls = out.class_representative.size();
      out.class_representative.push_back(i);
      out.multiplicity.push_back(0);
    }
    out.iso_class.push_back(*cls);
    ++out.multiplicity[*cls];
  }
  if (!out.summands.empty()) {
    auto sum = direct_sum(out.summands, m.algebra_ptr());
    std::vector<Matrix<K>> comps;
    for (std::size_t v = 0; v < m.dims().size(); ++v) {
      std::vector<Matrix<K>> blocks;
      for (const auto& inc : out.inclusions) blocks.push_back(inc.components[v]);
      comps.push_back(hstack(blocks, m.dim(v)));
    }
    Morphism<K> f{sum.object, m, std::move(comps)};
    if (!f.commutes() || !f.is_isomorphism())
      throw SplitFailure("reassembly map is not an isomorphism", m.dims());
    out.reassembly = std::move(f);
  }
  return out;
}

/// Nonprojective indecomposable summands, one per iso class with multiplicities.
template <class K>
std::vector<Representation<K>> distinct_summands(const Decomposition<K>& d) {
  std::vector<Representation<K>> out;
  for (auto i : d.class_representative) out.push_back(d.summands[i]);
  return out;
}

// ---------------------------------------------------------------------------
// Dimension certificates

template <class K>
struct DimensionCertificate {
  enum class Kind { Finite, Infinite, Undetermined };
  Kind kind = Kind::Undetermined;
  std::size_t value = 0;  // Finite: the dimension; Undetermined: the bound

  // Infinite: chain[0] is a summand of M, chain[k+1] a summand of Omega chain[k];
  // chain.back() == cycle[0]; cycle[k+1 mod p] is a summand of Omega cycle[k].
  std::size_t entry_degree = 0;
  std::vector<Representation<K>> chain;
  std::vector<Representation<K>> cycle;
  // Chain mode (no decomposition available): Omega^i M = Omega^j M.
  std::optional<Morphism<K>> periodic_iso;

  bool finite() const { return kind == Kind::Finite; }
  bool infinite() const { return kind == Kind::Infinite; }
  bool undetermined() const { return kind == Kind::Undetermined; }
  std::size_t period() const { return periodic_iso ? value : cycle.size(); }

  std::string to_string() const {
    switch (kind) {
      case Kind::Finite: return "Finite(" + std::to_string(value) + ")";
      case Kind::Infinite:
        return "Infinite(" + std::to_string(entry_degree) + "<" + std::to_string(entry_degree + period()) + ")";
      default: return "Undetermined(" + std::to_string(value) + ")";
    }
  }

  static DimensionCertificate make_finite(std::size_t n) {
    DimensionCertificate c;
    c.kind = Kind::Finite;
    c.value = n;
    return c;
  }
  static DimensionCertificate make_undetermined(std::size_t bound) {
    DimensionCertificate c;
    c.kind = Kind::Undetermined;
    c.value = bound;
    return c;
  }
};

namespace detail {

/// Syzygies beyond this total dimension stop the chain search.
inline constexpr std::size_t kChainDimLimit = 2048;

/// Omega chain with periodicity detection by isomorphism (any characteristic).
template <class K>
DimensionCertificate<K> proj_dim_by_chain(const Representation<K>& m, std::size_t bound, std::uint64_t seed) {
  using C = DimensionCertificate<K>;
  std::vector<Representation<K>> chain{m};
  for (std::size_t n = 0; n <= bound; ++n) {
    const auto& cur = chain.back();
    if (is_projective(cur)) return C::make_finite(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (chain[i].dims() != cur.dims()) continue;
      auto r = is_isomorphic(chain[i], cur, seed);
      if (r.verdict == IsoVerdict::Yes) {
        C c;
        c.kind = C::Kind::Infinite;
        c.entry_degree = i;
        c.value = n - i;
        c.chain = {chain[i], cur};
        c.periodic_iso = std::move(r.iso);
        return c;
      }
    }
    if (n == bound || cur.total_dim() > kChainDimLimit) break;
    chain.push_back(syzygy(cur));
  }
  return C::make_undetermined(bound);
}

/// Graph on iso classes of indecomposables, X -> summands of Omega X.
template <class K>
DimensionCertificate<K> proj_dim_by_summands(const Representation<K>& m, std::size_t bound, std::uint64_t seed) {
  using C = DimensionCertificate<K>;
  struct Node {
    Representation<K> module;
    bool projective = false;
    bool expanded = false;
    std::size_t depth = 0;
    std::vector<std::size_t> children;
  };
  std::vector<Node> nodes;
  auto find_or_add = [&](const Representation<K>& x, std::size_t depth) {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (nodes[i].module.dims() != x.dims()) continue;
      if (is_isomorphic(nodes[i].module, x, seed).verdict == IsoVerdict::Yes) return i;
    }
    nodes.push_back({x, is_projective(x), false, depth, {}});
    return nodes.size() - 1;
  };

  std::vector<std::size_t> roots;
  for (const auto& s : distinct_summands(decompose(m, seed))) roots.push_back(find_or_add(s, 0));
  bool truncated = false;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].projective) continue;
    if (nodes[i].depth >= bound) {
      truncated = true;
      continue;
    }
    auto omega = syzygy(nodes[i].module);
    auto parts = distinct_summands(decompose(omega, seed));
    std::vector<std::size_t> kids;
    for (const auto& s : parts) kids.push_back(find_or_add(s, nodes[i].depth + 1));
    nodes[i].children = std::move(kids);
    nodes[i].expanded = true;
  }

  // Cycle search among nonprojective expanded nodes.
  enum : int { kWhite, kGrey, kBlack };
  std::vector<int> colour(nodes.size(), kWhite);
  std::vector<std::size_t> stack;
  std::optional<std::pair<std::vector<std::size_t>, std::size_t>> found;  // (stack, cycle start position)
  std::function<void(std::size_t)> dfs = [&](std::size_t u) {
    if (found) return;
    colour[u] = kGrey;
    stack.push_back(u);
    for (auto c : nodes[u].children) {
      if (found) break;
      if (nodes[c].projective) continue;
      if (colour[c] == kGrey) {
        std::size_t pos = std::find(stack.begin(), stack.end(), c) - stack.begin();
        found = std::make_pair(stack, pos);
      } else if (colour[c] == kWhite) {
        dfs(c);
      }
    }
    stack.pop_back();
    colour[u] = kBlack;
  };
  for (auto r : roots)
    if (!nodes[r].projective && colour[r] == kWhite) dfs(r);
  if (found) {
    const auto& [path, pos] = *found;
    C c;
    c.kind = C::Kind::Infinite;
    c.entry_degree = pos;
    for (std::size_t k = 0; k <= pos; ++k) c.chain.push_back(nodes[path[k]].module);
    for (std::size_t k = pos; k < path.size(); ++k) c.cycle.push_back(nodes[path[k]].module);
    c.value = c.cycle.size();
    return c;
  }
  if (truncated) return C::make_undetermined(bound);

  std::vector<std::optional<std::size_t>> pd(nodes.size());
  std::function<std::size_t(std::size_t)> eval = [&](std::size_t u) -> std::size_t {
    if (pd[u]) return *pd[u];
    std::size_t best = 0;
    if (!nodes[u].projective) {
      best = 1;
      for (auto c : nodes[u].children) best = std::max(best, 1 + eval(c));
    }
    pd[u] = best;
    return best;
  };
  std::size_t result = 0;
  for (auto r : roots) result = std::max(result, eval(r));
  return C::make_finite(result);
}

}  // namespace detail

/// Projective dimension certificate of M, examining syzygies up to degree `bound`.
template <class K>
DimensionCertificate<K> proj_dim(const Representation<K>& m, std::size_t bound, std::uint64_t seed = 0) {
  if (m.is_zero() || is_projective(m)) return DimensionCertificate<K>::make_finite(0);
  try {
    return detail::proj_dim_by_summands(m, bound, seed);
  } catch (const SplitFailure&) {
    // Some summand would not split over the base field; fall back to the plain chain.
    return detail::proj_dim_by_chain(m, bound, seed);
  }
}

template <class K>
DimensionCertificate<K> proj_dim(const Representation<K>& m) {
  return proj_dim(m, default_bound(m.algebra()));
}

/// Injective dimension via the dual over the opposite algebra.
template <class K>
DimensionCertificate<K> inj_dim(const Representation<K>& m, std::size_t bound, std::uint64_t seed = 0,
                                AlgebraPtr opposite = nullptr) {
  if (!opposite) opposite = opposite_algebra(m.algebra());
  return proj_dim(dual(m, opposite), bound, seed);
}

namespace detail {

template <class K>
bool is_summand_of(const Representation<K>& x, const Representation<K>& m, std::uint64_t seed) {
  for (const auto& s : decompose(m, seed).summands)
    if (s.dims() == x.dims() && is_isomorphic(s, x, seed).verdict == IsoVerdict::Yes) return true;
  return false;
}

}  // namespace detail

/// Re-checks a certificate against M from scratch.
template <class K>
bool verify_certificate(const Representation<K>& m, const DimensionCertificate<K>& c, std::uint64_t seed = 0) {
  using Kind = typename DimensionCertificate<K>::Kind;
  switch (c.kind) {
    case Kind::Finite: {
      Representation<K> cur = m;
      for (std::size_t i = 0; i < c.value; ++i) {
        if (is_projective(cur) && !cur.is_zero()) return false;
        cur = syzygy(cur);
      }
      return is_projective(cur);
    }
    case Kind::Infinite: {
      if (c.periodic_iso) {
        const auto& f = *c.periodic_iso;
        Representation<K> a = syzygy_power(m, c.entry_degree);
        Representation<K> b = syzygy_power(a, c.value);
        return !a.is_zero() && f.source == a && f.target == b && f.commutes() && f.is_isomorphism();
      }
      if (c.chain.empty() || c.cycle.empty() || !(c.chain.back() == c.cycle.front())) return false;
      for (const auto& x : c.cycle)
        if (is_projective(x)) return false;
      if (!detail::is_summand_of(c.chain.front(), m, seed)) return false;
      for (std::size_t k = 0; k + 1 < c.chain.size(); ++k)
        if (!detail::is_summand_of(c.chain[k + 1], syzygy(c.chain[k]), seed)) return false;
      for (std::size_t k = 0; k < c.cycle.size(); ++k)
        if (!detail::is_summand_of(c.cycle[(k + 1) % c.cycle.size()], syzygy(c.cycle[k]), seed)) return false;
      return true;
    }
    default: return true;
  }
}

}  // namespace gprojlab
