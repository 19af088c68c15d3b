#pragma once

// Finite-dimensional representations of a bound quiver, morphisms between
// them, and the basic constructions of the module category.

#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gprojlab/matrix.hpp"
#include "gprojlab/quiver.hpp"

namespace gprojlab {

template <class K>
class Representation {
 public:
  Representation() = default;

  /// maps[a] has shape dims[target(a)] x dims[source(a)].
  Representation(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Matrix<K>> maps)
      : algebra_(std::move(algebra)), dims_(std::move(dims)), maps_(std::move(maps)) {
    const Quiver& q = algebra_->quiver();
    if (dims_.size() != q.num_vertices()) throw InvalidInput("dimension vector has the wrong length");
    if (maps_.size() != q.num_arrows()) throw InvalidInput("one matrix per arrow is required");
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
      const Arrow& arr = q.arrow(a);
      if (maps_[a].rows() != dims_[arr.target] || maps_[a].cols() != dims_[arr.source])
        throw InvalidInput("matrix for arrow '" + arr.label + "' has shape " + std::to_string(maps_[a].rows()) + "x" +
                           std::to_string(maps_[a].cols()) + ", expected " + std::to_string(dims_[arr.target]) + "x" +
                           std::to_string(dims_[arr.source]));
    }
  }

  static Representation zero(AlgebraPtr algebra) {
    std::vector<std::size_t> dims(algebra->num_vertices(), 0);
    std::vector<Matrix<K>> maps;
    for (std::size_t a = 0; a < algebra->num_arrows(); ++a) maps.emplace_back(0, 0);
    return Representation(std::move(algebra), std::move(dims), std::move(maps));
  }

  const BoundAlgebra& algebra() const { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const { return algebra_; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t dim(std::size_t v) const { return dims_.at(v); }
  std::size_t total_dim() const { return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0}); }
  bool is_zero() const { return total_dim() == 0; }
  const Matrix<K>& action(std::size_t arrow) const { return maps_.at(arrow); }
  const std::vector<Matrix<K>>& actions() const { return maps_; }

  /// Action of a path (arrows applied in order); identity for stationary paths.
  Matrix<K> path_action(const Path& p) const {
    Matrix<K> m = Matrix<K>::identity(dims_[p.source]);
    for (auto a : p.arrows) m = maps_[a] * m;
    return m;
  }
  Matrix<K> path_action(std::size_t basis_index) const { return path_action(algebra_->basis_path(basis_index)); }

  friend bool operator==(const Representation& a, const Representation& b) {
    return same_algebra(a, b) && a.dims_ == b.dims_ && a.maps_ == b.maps_;
  }

  friend bool same_algebra(const Representation& a, const Representation& b) {
    return a.algebra_ == b.algebra_ || *a.algebra_ == *b.algebra_;
  }

 private:
  AlgebraPtr algebra_;
  std::vector<std::size_t> dims_;
  std::vector<Matrix<K>> maps_;
};

template <class K>
struct Morphism {
  Representation<K> source;
  Representation<K> target;
  std::vector<Matrix<K>> components;  // components[v]: target.dim(v) x source.dim(v)

  bool commutes() const {
    const Quiver& q = source.algebra().quiver();
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
      const Arrow& arr = q.arrow(a);
      if (target.action(a) * components[arr.source] != components[arr.target] * source.action(a)) return false;
    }
    return true;
  }

  bool is_zero() const {
    for (const auto& c : components)
      if (!c.is_zero()) return false;
    return true;
  }

  bool is_isomorphism() const {
    for (const auto& c : components)
      if (c.rows() != c.cols() || rank(c) != c.rows()) return false;
    return true;
  }

  std::size_t rank_at(std::size_t v) const { return rank(components[v]); }
};

template <class K>
Morphism<K> identity_morphism(const Representation<K>& m) {
  std::vector<Matrix<K>> comps;
  for (auto d : m.dims()) comps.push_back(Matrix<K>::identity(d));
  return {m, m, std::move(comps)};
}

template <class K>
Morphism<K> zero_morphism(const Representation<K>& m, const Representation<K>& n) {
  std::vector<Matrix<K>> comps;
  for (std::size_t v = 0; v < m.dims().size(); ++v) comps.emplace_back(n.dim(v), m.dim(v));
  return {m, n, std::move(comps)};
}

/// g after f.
template <class K>
Morphism<K> compose(const Morphism<K>& g, const Morphism<K>& f) {
  std::vector<Matrix<K>> comps;
  for (std::size_t v = 0; v < f.components.size(); ++v) comps.push_back(g.components[v] * f.components[v]);
  return {f.source, g.target, std::move(comps)};
}

template <class K>
Morphism<K> linear_combination(const std::vector<Morphism<K>>& basis, const std::vector<K>& coeffs,
                               const Representation<K>& source, const Representation<K>& target) {
  Morphism<K> out = zero_morphism(source, target);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (is_zero(coeffs[i])) continue;
    for (std::size_t v = 0; v < out.components.size(); ++v)
      out.components[v] = out.components[v] + coeffs[i] * basis[i].components[v];
  }
  return out;
}

/// First relation whose composite action is nonzero, if any.
template <class K>
std::optional<Path> validate_rep(const Representation<K>& r) {
  for (const auto& g : r.algebra().ideal().generators)
    if (!r.path_action(g).is_zero()) return g;
  return std::nullopt;
}

template <class K>
Representation<K> simple(AlgebraPtr alg, std::size_t v) {
  std::vector<std::size_t> dims(alg->num_vertices(), 0);
  dims.at(v) = 1;
  std::vector<Matrix<K>> maps;
  for (const auto& arr : alg->quiver().arrows()) maps.emplace_back(dims[arr.target], dims[arr.source]);
  return Representation<K>(std::move(alg), std::move(dims), std::move(maps));
}

/// P(v): basis at vertex u = basis paths from v to u; arrows act by appending.
template <class K>
Representation<K> projective(AlgebraPtr alg, std::size_t v) {
  const BoundAlgebra& a = *alg;
  std::vector<std::vector<std::size_t>> paths_at(a.num_vertices());
  std::vector<std::size_t> position(a.dimension(), 0);
  for (auto p : a.paths_from(v)) {
    auto t = a.basis_path(p).target;
    position[p] = paths_at[t].size();
    paths_at[t].push_back(p);
  }
  std::vector<std::size_t> dims;
  for (const auto& ps : paths_at) dims.push_back(ps.size());
  std::vector<Matrix<K>> maps;
  for (std::size_t arrow = 0; arrow < a.num_arrows(); ++arrow) {
    const Arrow& arr = a.quiver().arrow(arrow);
    Matrix<K> m(dims[arr.target], dims[arr.source]);
    for (std::size_t j = 0; j < paths_at[arr.source].size(); ++j)
      if (auto ext = a.extend(paths_at[arr.source][j], arrow)) m(position[*ext], j) = K(1);
    maps.push_back(std::move(m));
  }
  return Representation<K>(std::move(alg), std::move(dims), std::move(maps));
}

/// Vector-space dual, a representation of the opposite algebra.
template <class K>
Representation<K> dual(const Representation<K>& r, AlgebraPtr opposite) {
  std::vector<Matrix<K>> maps;
  for (const auto& m : r.actions()) maps.push_back(m.transpose());
  return Representation<K>(std::move(opposite), r.dims(), std::move(maps));
}

template <class K>
Representation<K> dual(const Representation<K>& r) {
  return dual(r, opposite_algebra(r.algebra()));
}

template <class K>
Morphism<K> dual(const Morphism<K>& f, AlgebraPtr opposite) {
  std::vector<Matrix<K>> comps;
  for (const auto& c : f.components) comps.push_back(c.transpose());
  return {dual(f.target, opposite), dual(f.source, opposite), std::move(comps)};
}

/// I(v) = D(P_op(v)); `opposite` must be opposite_algebra(*alg).
template <class K>
Representation<K> injective(AlgebraPtr alg, std::size_t v, const AlgebraPtr& opposite) {
  return dual(projective<K>(opposite, v), std::move(alg));
}

template <class K>
Representation<K> injective(AlgebraPtr alg, std::size_t v) {
  return injective<K>(alg, v, opposite_algebra(*alg));
}

/// Basis of Hom(m, n) as solutions of the commuting-square system.
template <class K>
std::vector<Morphism<K>> hom_basis(const Representation<K>& m, const Representation<K>& n) {
  if (!same_algebra(m, n)) throw InvalidInput("hom_basis: representations over different algebras");
  const Quiver& q = m.algebra().quiver();
  const std::size_t nv = q.num_vertices();
  std::vector<std::size_t> offset(nv + 1, 0);
  for (std::size_t v = 0; v < nv; ++v) offset[v + 1] = offset[v] + n.dim(v) * m.dim(v);
  const std::size_t unknowns = offset[nv];
  // f_v(i, j) is unknown offset[v] + i * m.dim(v) + j.
  std::size_t equations = 0;
  for (const auto& arr : q.arrows()) equations += n.dim(arr.target) * m.dim(arr.source);
  Matrix<K> sys(equations, unknowns);
  std::size_t row = 0;
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const Arrow& arr = q.arrow(a);
    const std::size_t s = arr.source, t = arr.target;
    const Matrix<K>& na = n.action(a);
    const Matrix<K>& ma = m.action(a);
    for (std::size_t i = 0; i < n.dim(t); ++i)
      for (std::size_t j = 0; j < m.dim(s); ++j, ++row) {
        // (N_a f_s)(i, j) - (f_t M_a)(i, j) = 0
        for (std::size_t k = 0; k < n.dim(s); ++k)
          if (!is_zero(na(i, k))) sys(row, offset[s] + k * m.dim(s) + j) += na(i, k);
        for (std::size_t k = 0; k < m.dim(t); ++k)
          if (!is_zero(ma(k, j))) sys(row, offset[t] + i * m.dim(t) + k) -= ma(k, j);
      }
  }
  Matrix<K> null = nullspace(sys);
  std::vector<Morphism<K>> basis;
  for (std::size_t c = 0; c < null.cols(); ++c) {
    std::vector<Matrix<K>> comps;
    for (std::size_t v = 0; v < nv; ++v) {
      Matrix<K> f(n.dim(v), m.dim(v));
      for (std::size_t i = 0; i < n.dim(v); ++i)
        for (std::size_t j = 0; j < m.dim(v); ++j) f(i, j) = null(offset[v] + i * m.dim(v) + j, c);
      comps.push_back(std::move(f));
    }
    basis.push_back({m, n, std::move(comps)});
  }
  return basis;
}

template <class K>
std::size_t hom_dim(const Representation<K>& m, const Representation<K>& n) {
  return hom_basis(m, n).size();
}

/// Flattens a morphism into one column vector (vertex blocks, row-major).
template <class K>
std::vector<K> flatten(const Morphism<K>& f) {
  std::vector<K> out;
  for (const auto& c : f.components)
    for (const auto& x : c.data()) out.push_back(x);
  return out;
}

/// Rank of the span of a family of morphisms with common source and target.
template <class K>
std::size_t span_rank(const std::vector<Morphism<K>>& family) {
  if (family.empty()) return 0;
  auto first = flatten(family.front());
  Matrix<K> m(first.size(), family.size());
  for (std::size_t c = 0; c < family.size(); ++c) {
    auto col = flatten(family[c]);
    for (std::size_t r = 0; r < col.size(); ++r) m(r, c) = col[r];
  }
  return rank(m);
}

/// A subobject or quotient together with its canonical map.
template <class K>
struct WithMap {
  Representation<K> object;
  Morphism<K> map;
};

/// Subrepresentation spanned by the columns of bases[v] (must be invariant).
template <class K>
WithMap<K> subrepresentation(const Representation<K>& m, std::vector<Matrix<K>> bases) {
  const Quiver& q = m.algebra().quiver();
  std::vector<Matrix<K>> lefts;
  std::vector<std::size_t> dims;
  for (const auto& b : bases) {
    lefts.push_back(left_inverse(b));
    dims.push_back(b.cols());
  }
  std::vector<Matrix<K>> maps;
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const Arrow& arr = q.arrow(a);
    Matrix<K> image = m.action(a) * bases[arr.source];
    Matrix<K> coords = lefts[arr.target] * image;
    if (bases[arr.target] * coords != image) throw std::logic_error("subrepresentation: subspace is not invariant");
    maps.push_back(std::move(coords));
  }
  Representation<K> sub(m.algebra_ptr(), std::move(dims), std::move(maps));
  return {sub, Morphism<K>{sub, m, std::move(bases)}};
}

/// Quotient by the invariant subspaces spanned by bases[v].
template <class K>
WithMap<K> quotient(const Representation<K>& m, const std::vector<Matrix<K>>& bases) {
  const Quiver& q = m.algebra().quiver();
  std::vector<Quotient<K>> quots;
  std::vector<std::size_t> dims;
  for (const auto& b : bases) {
    quots.push_back(quotient_by(b));
    dims.push_back(quots.back().projection.rows());
  }
  std::vector<Matrix<K>> maps;
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const Arrow& arr = q.arrow(a);
    maps.push_back(quots[arr.target].projection * m.action(a) * quots[arr.source].section);
  }
  Representation<K> quot(m.algebra_ptr(), std::move(dims), std::move(maps));
  std::vector<Matrix<K>> comps;
  for (auto& qt : quots) comps.push_back(std::move(qt.projection));
  return {quot, Morphism<K>{m, quot, std::move(comps)}};
}

template <class K>
WithMap<K> kernel(const Morphism<K>& f) {
  std::vector<Matrix<K>> bases;
  for (const auto& c : f.components) bases.push_back(nullspace(c));
  return subrepresentation(f.source, std::move(bases));
}

template <class K>
WithMap<K> cokernel(const Morphism<K>& f) {
  std::vector<Matrix<K>> bases;
  for (const auto& c : f.components) bases.push_back(column_basis(c));
  return quotient(f.target, bases);
}

/// Image with its inclusion into the target; `corestriction` is the epi from the source.
template <class K>
struct ImageResult {
  Representation<K> object;
  Morphism<K> inclusion;
  Morphism<K> corestriction;
};

template <class K>
ImageResult<K> image(const Morphism<K>& f) {
  std::vector<Matrix<K>> bases;
  for (const auto& c : f.components) bases.push_back(column_basis(c));
  std::vector<Matrix<K>> coords;
  for (std::size_t v = 0; v < bases.size(); ++v) coords.push_back(left_inverse(bases[v]) * f.components[v]);
  auto sub = subrepresentation(f.target, std::move(bases));
  return {sub.object, sub.map, Morphism<K>{f.source, sub.object, std::move(coords)}};
}

template <class K>
struct DirectSum {
  Representation<K> object;
  std::vector<Morphism<K>> injections;
  std::vector<Morphism<K>> projections;
};

template <class K>
DirectSum<K> direct_sum(const std::vector<Representation<K>>& parts, const AlgebraPtr& algebra) {
  for (const auto& p : parts)
    if (p.algebra_ptr() != algebra && !(p.algebra() == *algebra)) throw InvalidInput("direct_sum: mixed algebras");
  const Quiver& q = algebra->quiver();
  std::vector<std::size_t> dims(q.num_vertices(), 0);
  for (const auto& p : parts)
    for (std::size_t v = 0; v < dims.size(); ++v) dims[v] += p.dim(v);
  std::vector<Matrix<K>> maps;
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    std::vector<Matrix<K>> blocks;
    for (const auto& p : parts) blocks.push_back(p.action(a));
    maps.push_back(block_diagonal(blocks));
  }
  Representation<K> sum(algebra, dims, std::move(maps));
  DirectSum<K> out{sum, {}, {}};
  std::vector<std::size_t> offset(dims.size(), 0);
  for (const auto& p : parts) {
    std::vector<Matrix<K>> inj, proj;
    for (std::size_t v = 0; v < dims.size(); ++v) {
      Matrix<K> i(dims[v], p.dim(v));
      for (std::size_t k = 0; k < p.dim(v); ++k) i(offset[v] + k, k) = K(1);
      proj.push_back(i.transpose());
      inj.push_back(std::move(i));
      offset[v] += p.dim(v);
    }
    out.injections.push_back({p, sum, std::move(inj)});
    out.projections.push_back({sum, p, std::move(proj)});
  }
  return out;
}

template <class K>
DirectSum<K> direct_sum(const std::vector<Representation<K>>& parts) {
  if (parts.empty()) throw InvalidInput("direct_sum of an empty list needs the algebra");
  return direct_sum(parts, parts.front().algebra_ptr());
}

/// rad M: at each vertex, the sum of images of incoming arrows.
template <class K>
WithMap<K> radical(const Representation<K>& m) {
  const Quiver& q = m.algebra().quiver();
  std::vector<Matrix<K>> bases;
  for (std::size_t v = 0; v < q.num_vertices(); ++v) {
    std::vector<Matrix<K>> parts;
    for (auto a : q.arrows_into(v)) parts.push_back(m.action(a));
    bases.push_back(column_basis(hstack(parts, m.dim(v))));
  }
  return subrepresentation(m, std::move(bases));
}

/// top M = M / rad M with the canonical projection.
template <class K>
WithMap<K> top(const Representation<K>& m) {
  auto rad = radical(m);
  return quotient(m, rad.map.components);
}

/// soc M: at each vertex, the common kernel of outgoing arrows.
template <class K>
WithMap<K> socle(const Representation<K>& m) {
  const Quiver& q = m.algebra().quiver();
  std::vector<Matrix<K>> bases;
  for (std::size_t v = 0; v < q.num_vertices(); ++v) {
    std::vector<Matrix<K>> parts;
    for (auto a : q.arrows_from(v)) parts.push_back(m.action(a));
    bases.push_back(nullspace(vstack(parts, m.dim(v))));
  }
  return subrepresentation(m, std::move(bases));
}

/// Dimension vectors of the radical layers rad^i M / rad^{i+1} M.
template <class K>
std::vector<std::vector<std::size_t>> radical_layers(const Representation<K>& m) {
  std::vector<std::vector<std::size_t>> layers;
  Representation<K> cur = m;
  while (!cur.is_zero()) {
    auto rad = radical(cur);
    std::vector<std::size_t> layer;
    for (std::size_t v = 0; v < cur.dims().size(); ++v) layer.push_back(cur.dim(v) - rad.object.dim(v));
    layers.push_back(std::move(layer));
    cur = rad.object;
  }
  return layers;
}

template <class K>
std::size_t loewy_length(const Representation<K>& m) {
  return radical_layers(m).size();
}

/// Each radical layer is one-dimensional.
template <class K>
bool is_uniserial(const Representation<K>& m) {
  for (const auto& layer : radical_layers(m))
    if (std::accumulate(layer.begin(), layer.end(), std::size_t{0}) != 1) return false;
  return true;
}

/// Restricts a morphism between representations to invariant subspaces / quotients.
/// `into_sub(f, sub_source, sub_target)` where sub_* are inclusions with f(sub_source) in sub_target.
template <class K>
Morphism<K> restrict_to_subobjects(const Morphism<K>& f, const Morphism<K>& sub_source, const Morphism<K>& sub_target) {
  std::vector<Matrix<K>> comps;
  for (std::size_t v = 0; v < f.components.size(); ++v) {
    Matrix<K> img = f.components[v] * sub_source.components[v];
    comps.push_back(left_inverse(sub_target.components[v]) * img);
  }
  return {sub_source.source, sub_target.source, std::move(comps)};
}

/// Map induced on quotients: q_target after f after a section of q_source.
template <class K>
Morphism<K> induced_on_quotients(const Morphism<K>& f, const Morphism<K>& q_source, const Morphism<K>& q_target) {
  std::vector<Matrix<K>> comps;
  for (std::size_t v = 0; v < f.components.size(); ++v) {
    // A right inverse of the projection: solve projection * s = I.
    const Matrix<K>& p = q_source.components[v];
    auto section = solve(p, Matrix<K>::identity(p.rows()));
    if (!section) throw std::logic_error("induced_on_quotients: projection is not onto");
    comps.push_back(q_target.components[v] * f.components[v] * *section);
  }
  return {q_source.target, q_target.target, std::move(comps)};
}

}  // namespace gprojlab
