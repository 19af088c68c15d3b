#pragma once

// Recollement functors for arrow-connected algebras, restriction and
// extension functors for vertex gluings, gluing trees, and drivers that check
// the gluing statements on concrete algebras.

#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "gprojlab/gorenstein.hpp"
#include "gprojlab/sampling.hpp"

namespace gprojlab {

// ---------------------------------------------------------------------------
// Restriction and extension by zero along a component embedding

template <class K>
Representation<K> restrict_module(const Representation<K>& t, const AlgebraPtr& component, const Embedding& e) {
  std::vector<std::size_t> dims;
  for (auto v : e.vertex_map) dims.push_back(t.dim(v));
  std::vector<Matrix<K>> maps;
  for (auto a : e.arrow_map) maps.push_back(t.action(a));
  return Representation<K>(component, std::move(dims), std::move(maps));
}

template <class K>
Morphism<K> restrict_morphism(const Morphism<K>& f, const AlgebraPtr& component, const Embedding& e) {
  std::vector<Matrix<K>> comps;
  for (auto v : e.vertex_map) comps.push_back(f.components[v]);
  return {restrict_module(f.source, component, e), restrict_module(f.target, component, e), std::move(comps)};
}

/// X on the embedded vertices, zero elsewhere. Only meaningful when the other
/// vertices share no vertex with the component.
template <class K>
Representation<K> extend_by_zero(const Representation<K>& x, const AlgebraPtr& whole, const Embedding& e) {
  std::vector<std::size_t> dims(whole->num_vertices(), 0);
  for (std::size_t v = 0; v < e.vertex_map.size(); ++v) dims[e.vertex_map[v]] = x.dim(v);
  std::vector<Matrix<K>> maps;
  for (const auto& arr : whole->quiver().arrows()) maps.emplace_back(dims[arr.target], dims[arr.source]);
  for (std::size_t a = 0; a < e.arrow_map.size(); ++a) maps[e.arrow_map[a]] = x.action(a);
  return Representation<K>(whole, std::move(dims), std::move(maps));
}

template <class K>
Morphism<K> extend_by_zero(const Morphism<K>& f, const AlgebraPtr& whole, const Embedding& e) {
  auto s = extend_by_zero(f.source, whole, e), t = extend_by_zero(f.target, whole, e);
  std::vector<Matrix<K>> comps;
  for (std::size_t v = 0; v < whole->num_vertices(); ++v) comps.emplace_back(t.dim(v), s.dim(v));
  for (std::size_t v = 0; v < e.vertex_map.size(); ++v) comps[e.vertex_map[v]] = f.components[v];
  return {s, t, std::move(comps)};
}

/// Label of the first arrow whose square fails to commute, if any.
template <class K>
std::optional<std::string> failing_square(const Morphism<K>& f) {
  const Quiver& q = f.source.algebra().quiver();
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const Arrow& arr = q.arrow(a);
    if (f.target.action(a) * f.components[arr.source] != f.components[arr.target] * f.source.action(a))
      return arr.label;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Arrow-connected algebras: Lambda = [[A, M], [0, B]] with one arrow w -> v,
// w in B and v in A. A module is a triple (X over A, Y over B, phi).

struct ArrowGluing {
  AlgebraPtr lambda;
  AlgebraPtr a;  // target side
  AlgebraPtr b;  // source side
  Embedding a_embed;
  Embedding b_embed;
  std::size_t arrow = 0;  // connecting arrow in lambda
  std::size_t v = 0;      // target vertex, in A
  std::size_t w = 0;      // source vertex, in B

  static ArrowGluing make(const AlgebraPtr& b, std::size_t w, const AlgebraPtr& a, std::size_t v,
                          const std::string& label = "c") {
    auto g = connect_by_arrow(*b, w, *a, v, label);
    return {g.algebra, a, b, g.second, g.first, *g.connecting_arrow, v, w};
  }
};

template <class K>
struct TripleModule {
  Representation<K> x;
  Representation<K> y;
  Matrix<K> phi;  // action of the connecting arrow, Y_w -> X_v
};

template <class K>
TripleModule<K> split_triple(const Representation<K>& t, const ArrowGluing& g) {
  return {restrict_module(t, g.a, g.a_embed), restrict_module(t, g.b, g.b_embed), t.action(g.arrow)};
}

template <class K>
Representation<K> assemble_triple(const TripleModule<K>& tr, const ArrowGluing& g) {
  std::vector<std::size_t> dims(g.lambda->num_vertices(), 0);
  for (std::size_t v = 0; v < g.a_embed.vertex_map.size(); ++v) dims[g.a_embed.vertex_map[v]] = tr.x.dim(v);
  for (std::size_t v = 0; v < g.b_embed.vertex_map.size(); ++v) dims[g.b_embed.vertex_map[v]] = tr.y.dim(v);
  std::vector<Matrix<K>> maps(g.lambda->num_arrows());
  for (std::size_t a = 0; a < g.a_embed.arrow_map.size(); ++a) maps[g.a_embed.arrow_map[a]] = tr.x.action(a);
  for (std::size_t a = 0; a < g.b_embed.arrow_map.size(); ++a) maps[g.b_embed.arrow_map[a]] = tr.y.action(a);
  if (tr.phi.rows() != tr.x.dim(g.v) || tr.phi.cols() != tr.y.dim(g.w))
    throw InvalidInput("assemble_triple: phi has the wrong shape");
  maps[g.arrow] = tr.phi;
  Representation<K> t(g.lambda, std::move(dims), std::move(maps));
  if (auto bad = validate_rep(t)) throw InvalidInput("assemble_triple: relation " + path_to_string(g.lambda->quiver(), *bad) + " violated");
  return t;
}

/// A-submodule of X generated by the columns of u inside X_v.
template <class K>
std::vector<Matrix<K>> generated_subspaces(const Representation<K>& x, std::size_t v, const Matrix<K>& u) {
  const BoundAlgebra& a = x.algebra();
  std::vector<Matrix<K>> bases;
  for (std::size_t t = 0; t < a.num_vertices(); ++t) {
    std::vector<Matrix<K>> parts;
    for (auto p : a.paths_between(v, t)) parts.push_back(x.path_action(p) * u);
    bases.push_back(column_basis(hstack(parts, x.dim(t))));
  }
  return bases;
}

/// i^*(X, Y, phi) = Coker phi: X modulo the submodule generated by the image of phi.
template <class K>
WithMap<K> i_upper_star_with_map(const Representation<K>& t, const ArrowGluing& g) {
  auto tr = split_triple(t, g);
  return quotient(tr.x, generated_subspaces(tr.x, g.v, tr.phi));
}

template <class K>
Representation<K> i_upper_star(const Representation<K>& t, const ArrowGluing& g) {
  return i_upper_star_with_map(t, g).object;
}

template <class K>
Morphism<K> i_upper_star(const Morphism<K>& f, const ArrowGluing& g) {
  auto qs = i_upper_star_with_map(f.source, g), qt = i_upper_star_with_map(f.target, g);
  return induced_on_quotients(restrict_morphism(f, g.a, g.a_embed), qs.map, qt.map);
}

template <class K>
Representation<K> i_lower_star(const Representation<K>& x, const ArrowGluing& g) {
  return extend_by_zero(x, g.lambda, g.a_embed);
}
template <class K>
Morphism<K> i_lower_star(const Morphism<K>& f, const ArrowGluing& g) {
  return extend_by_zero(f, g.lambda, g.a_embed);
}

template <class K>
Representation<K> i_upper_shriek(const Representation<K>& t, const ArrowGluing& g) {
  return restrict_module(t, g.a, g.a_embed);
}
template <class K>
Morphism<K> i_upper_shriek(const Morphism<K>& f, const ArrowGluing& g) {
  return restrict_morphism(f, g.a, g.a_embed);
}

template <class K>
Representation<K> j_upper_star(const Representation<K>& t, const ArrowGluing& g) {
  return restrict_module(t, g.b, g.b_embed);
}
template <class K>
Morphism<K> j_upper_star(const Morphism<K>& f, const ArrowGluing& g) {
  return restrict_morphism(f, g.b, g.b_embed);
}

template <class K>
Representation<K> j_lower_star(const Representation<K>& y, const ArrowGluing& g) {
  return extend_by_zero(y, g.lambda, g.b_embed);
}
template <class K>
Morphism<K> j_lower_star(const Morphism<K>& f, const ArrowGluing& g) {
  return extend_by_zero(f, g.lambda, g.b_embed);
}

/// j_!(Y) = (M (x)_B Y, Y, id) with M (x)_B Y = P_A(v) (x) Y_w: at an A-vertex x
/// the basis is (path v -> x) (x) (basis of Y_w), path-major.
template <class K>
Representation<K> j_lower_shriek(const Representation<K>& y, const ArrowGluing& g) {
  const BoundAlgebra& a = *g.a;
  const std::size_t l = y.dim(g.w);
  std::vector<std::size_t> dims(g.lambda->num_vertices(), 0);
  for (std::size_t v = 0; v < g.b_embed.vertex_map.size(); ++v) dims[g.b_embed.vertex_map[v]] = y.dim(v);
  std::vector<std::vector<std::size_t>> paths_at(a.num_vertices());
  std::map<std::size_t, std::size_t> position;
  for (auto p : a.paths_from(g.v)) {
    auto t = a.basis_path(p).target;
    position[p] = paths_at[t].size();
    paths_at[t].push_back(p);
  }
  for (std::size_t x = 0; x < a.num_vertices(); ++x) dims[g.a_embed.vertex_map[x]] = paths_at[x].size() * l;
  std::vector<Matrix<K>> maps;
  for (const auto& arr : g.lambda->quiver().arrows()) maps.emplace_back(dims[arr.target], dims[arr.source]);
  for (std::size_t b = 0; b < g.b_embed.arrow_map.size(); ++b) maps[g.b_embed.arrow_map[b]] = y.action(b);
  for (std::size_t arrow = 0; arrow < a.num_arrows(); ++arrow) {
    const Arrow& arr = a.quiver().arrow(arrow);
    Matrix<K>& m = maps[g.a_embed.arrow_map[arrow]];
    for (std::size_t j = 0; j < paths_at[arr.source].size(); ++j)
      if (auto ext = a.extend(paths_at[arr.source][j], arrow))
        m.set_block(position[*ext] * l, j * l, Matrix<K>::identity(l));
  }
  // The connecting arrow sends Y_w identically onto e_v (x) Y_w, which comes first.
  maps[g.arrow].set_block(0, 0, Matrix<K>::identity(l));
  return Representation<K>(g.lambda, std::move(dims), std::move(maps));
}

template <class K>
Morphism<K> j_lower_shriek(const Morphism<K>& f, const ArrowGluing& g) {
  auto s = j_lower_shriek(f.source, g), t = j_lower_shriek(f.target, g);
  std::vector<Matrix<K>> comps;
  for (std::size_t v = 0; v < g.lambda->num_vertices(); ++v) comps.emplace_back(t.dim(v), s.dim(v));
  for (std::size_t v = 0; v < g.b_embed.vertex_map.size(); ++v) comps[g.b_embed.vertex_map[v]] = f.components[v];
  for (std::size_t x = 0; x < g.a->num_vertices(); ++x) {
    const std::size_t count = g.a->paths_between(g.v, x).size();
    std::vector<Matrix<K>> blocks(count, f.components[g.w]);
    comps[g.a_embed.vertex_map[x]] = block_diagonal(blocks);
  }
  return {s, t, std::move(comps)};
}

/// Counit j_! j^* T -> T: p (x) y |-> X_p c(y).
template <class K>
Morphism<K> counit_j(const Representation<K>& t, const ArrowGluing& g) {
  auto y = j_upper_star(t, g);
  auto src = j_lower_shriek(y, g);
  std::vector<Matrix<K>> comps;
  for (std::size_t v = 0; v < g.lambda->num_vertices(); ++v) comps.emplace_back(t.dim(v), src.dim(v));
  for (std::size_t v = 0; v < g.b_embed.vertex_map.size(); ++v)
    comps[g.b_embed.vertex_map[v]] = Matrix<K>::identity(y.dim(v));
  auto x = i_upper_shriek(t, g);
  const Matrix<K>& c = t.action(g.arrow);
  for (std::size_t xv = 0; xv < g.a->num_vertices(); ++xv) {
    std::vector<Matrix<K>> blocks;
    for (auto p : g.a->paths_between(g.v, xv)) blocks.push_back(x.path_action(p) * c);
    comps[g.a_embed.vertex_map[xv]] = hstack(blocks, t.dim(g.a_embed.vertex_map[xv]));
  }
  return {src, t, std::move(comps)};
}

/// Unit T -> i_* i^* T: the quotient map on the A-part.
template <class K>
Morphism<K> unit_i(const Representation<K>& t, const ArrowGluing& g) {
  auto q = i_upper_star_with_map(t, g);
  auto tgt = i_lower_star(q.object, g);
  auto ext = extend_by_zero(q.map, g.lambda, g.a_embed);
  std::vector<Matrix<K>> comps;
  for (std::size_t v = 0; v < g.lambda->num_vertices(); ++v) comps.emplace_back(tgt.dim(v), t.dim(v));
  for (std::size_t v = 0; v < g.a_embed.vertex_map.size(); ++v) comps[g.a_embed.vertex_map[v]] = q.map.components[v];
  return {t, tgt, std::move(comps)};
}

/// The six functors (objects and morphisms) plus unit/counit, bundled so a
/// test can substitute a deliberately wrong one.
template <class K>
struct RecollementFunctors {
  using Obj = std::function<Representation<K>(const Representation<K>&)>;
  using Mor = std::function<Morphism<K>(const Morphism<K>&)>;
  Obj i_upper_star, i_lower_star, i_upper_shriek, j_lower_shriek, j_upper_star, j_lower_star;
  Mor i_upper_star_m, i_lower_star_m, i_upper_shriek_m, j_lower_shriek_m, j_upper_star_m, j_lower_star_m;
  std::function<Morphism<K>(const Representation<K>&)> counit_j, unit_i;
};

template <class K>
RecollementFunctors<K> standard_functors(const ArrowGluing& g) {
  RecollementFunctors<K> f;
  using R = Representation<K>;
  using M = Morphism<K>;
  f.i_upper_star = [g](const R& t) { return i_upper_star(t, g); };
  f.i_lower_star = [g](const R& x) { return i_lower_star(x, g); };
  f.i_upper_shriek = [g](const R& t) { return i_upper_shriek(t, g); };
  f.j_lower_shriek = [g](const R& y) { return j_lower_shriek(y, g); };
  f.j_upper_star = [g](const R& t) { return j_upper_star(t, g); };
  f.j_lower_star = [g](const R& y) { return j_lower_star(y, g); };
  f.i_upper_star_m = [g](const M& m) { return i_upper_star(m, g); };
  f.i_lower_star_m = [g](const M& m) { return i_lower_star(m, g); };
  f.i_upper_shriek_m = [g](const M& m) { return i_upper_shriek(m, g); };
  f.j_lower_shriek_m = [g](const M& m) { return j_lower_shriek(m, g); };
  f.j_upper_star_m = [g](const M& m) { return j_upper_star(m, g); };
  f.j_lower_star_m = [g](const M& m) { return j_lower_star(m, g); };
  f.counit_j = [g](const R& t) { return counit_j(t, g); };
  f.unit_i = [g](const R& t) { return unit_i(t, g); };
  return f;
}

struct CheckRecord {
  std::string name;
  bool passed = true;
  std::size_t samples = 0;
  std::string detail;
};

template <class K>
struct RecollementWitness {
  std::size_t sample_size = 0;
  std::uint64_t seed = 0;
  std::vector<CheckRecord> checks;
  std::optional<std::string> failing_check;
  std::optional<Representation<K>> counterexample;
  std::string counterexample_detail;

  bool passed() const { return !failing_check; }
};

namespace detail {

template <class K>
bool isomorphic_or_equal(const Representation<K>& a, const Representation<K>& b) {
  if (a == b) return true;
  return is_isomorphic(a, b).verdict == IsoVerdict::Yes;
}

template <class K>
bool is_exact_image(const ShortExactSequence<K>& s) {
  return is_short_exact(s);
}

/// Right exactness: beta onto and im alpha = ker beta.
template <class K>
bool is_right_exact_image(const ShortExactSequence<K>& s) {
  if (!compose(s.beta, s.alpha).is_zero()) return false;
  for (std::size_t v = 0; v < s.alpha.components.size(); ++v) {
    const std::size_t ra = rank(s.alpha.components[v]), rb = rank(s.beta.components[v]);
    if (rb != s.beta.target.dim(v) || ra + rb != s.alpha.target.dim(v)) return false;
  }
  return true;
}

}  // namespace detail

/// Checks the recollement statements on seeded random samples: adjunction
/// dimension equalities, full faithfulness, exactness, the vanishing
/// compositions, Im i_* = Ker j^*, and the exact sequence
/// j_! j^* T -> T -> i_* i^* T -> 0. Stops at the first failure.
template <class K>
RecollementWitness<K> verify_recollement(const ArrowGluing& g, const RecollementFunctors<K>& f,
                                         std::size_t sample_size = 20, std::uint64_t seed = 0) {
  RecollementWitness<K> w;
  w.sample_size = sample_size;
  w.seed = seed;
  auto ts = random_modules<K>(g.lambda, sample_size, seed);
  auto xs = random_modules<K>(g.a, sample_size, seed + 1);
  auto ys = random_modules<K>(g.b, sample_size, seed + 2);
  auto ses_of = [&](const AlgebraPtr& alg, std::uint64_t s) {
    std::mt19937_64 rng(s);
    auto op = opposite_algebra(*alg);
    std::vector<ShortExactSequence<K>> out;
    for (std::size_t i = 0; i < sample_size; ++i) out.push_back(random_short_exact<K>(alg, op, rng));
    return out;
  };

  bool stop = false;
  auto run = [&](const std::string& name, const std::function<std::optional<std::pair<Representation<K>, std::string>>()>& body) {
    if (stop) return;
    CheckRecord rec{name, true, sample_size, ""};
    std::optional<std::pair<Representation<K>, std::string>> bad;
    try {
      bad = body();
    } catch (const std::exception& e) {
      rec.passed = false;
      rec.detail = std::string("exception: ") + e.what();
      w.failing_check = name;
      w.counterexample_detail = rec.detail;
      w.checks.push_back(rec);
      stop = true;
      return;
    }
    if (bad) {
      rec.passed = false;
      rec.detail = bad->second;
      w.failing_check = name;
      w.counterexample = bad->first;
      w.counterexample_detail = bad->second;
      stop = true;
    }
    w.checks.push_back(rec);
  };
  using Bad = std::optional<std::pair<Representation<K>, std::string>>;
  auto mismatch = [](std::size_t k, std::size_t lhs, std::size_t rhs) {
    return "sample " + std::to_string(k) + ": " + std::to_string(lhs) + " != " + std::to_string(rhs);
  };

  run("adjunction i^* -| i_*", [&]() -> Bad {
    for (std::size_t k = 0; k < sample_size; ++k) {
      auto lhs = hom_dim(f.i_upper_star(ts[k]), xs[k]), rhs = hom_dim(ts[k], f.i_lower_star(xs[k]));
      if (lhs != rhs) return std::make_pair(ts[k], mismatch(k, lhs, rhs));
    }
    return std::nullopt;
  });
  run("adjunction i_* -| i^!", [&]() -> Bad {
    for (std::size_t k = 0; k < sample_size; ++k) {
      auto lhs = hom_dim(f.i_lower_star(xs[k]), ts[k]), rhs = hom_dim(xs[k], f.i_upper_shriek(ts[k]));
      if (lhs != rhs) return std::make_pair(ts[k], mismatch(k, lhs, rhs));
    }
    return std::nullopt;
  });
  run("adjunction j_! -| j^*", [&]() -> Bad {
    for (std::size_t k = 0; k < sample_size; ++k) {
      auto lhs = hom_dim(f.j_lower_shriek(ys[k]), ts[k]), rhs = hom_dim(ys[k], f.j_upper_star(ts[k]));
      if (lhs != rhs) return std::make_pair(ts[k], mismatch(k, lhs, rhs));
    }
    return std::nullopt;
  });
  run("adjunction j^* -| j_*", [&]() -> Bad {
    for (std::size_t k = 0; k < sample_size; ++k) {
      auto lhs = hom_dim(f.j_upper_star(ts[k]), ys[k]), rhs = hom_dim(ts[k], f.j_lower_star(ys[k]));
      if (lhs != rhs) return std::make_pair(ts[k], mismatch(k, lhs, rhs));
    }
    return std::nullopt;
  });
  run("fully faithful i_*", [&]() -> Bad {
    for (std::size_t k = 0; k < sample_size; ++k) {
      auto ix = f.i_lower_star(xs[k]);
      if (!detail::isomorphic_or_equal(f.i_upper_star(ix), xs[k]) || !detail::isomorphic_or_equal(f.i_upper_shriek(ix), xs[k]))
        return std::make_pair(xs[k], "sample " + std::to_string(k) + ": i^* i_* X or i^! i_* X differs from X");
      const auto& x2 = xs[(k + 1) % sample_size];
      auto lhs = hom_dim(ix, f.i_lower_star(x2)), rhs = hom_dim(xs[k], x2);
      if (lhs != rhs) return std::make_pair(xs[k], mismatch(k, lhs, rhs));
    }
    return std::nullopt;
  });
  run("fully faithful j_!", [&]() -> Bad {
    for (std::size_t k = 0; k < sample_size; ++k) {
      auto jy = f.j_lower_shriek(ys[k]);
      if (!detail::isomorphic_or_equal(f.j_upper_star(jy), ys[k]))
        return std::make_pair(ys[k], "sample " + std::to_string(k) + ": j^* j_! Y differs from Y");
      const auto& y2 = ys[(k + 1) % sample_size];
      auto lhs = hom_dim(jy, f.j_lower_shriek(y2)), rhs = hom_dim(ys[k], y2);
      if (lhs != rhs) return std::make_pair(ys[k], mismatch(k, lhs, rhs));
    }
    return std::nullopt;
  });
  run("fully faithful j_*", [&]() -> Bad {
    for (std::size_t k = 0; k < sample_size; ++k) {
      auto jy = f.j_lower_star(ys[k]);
      if (!detail::isomorphic_or_equal(f.j_upper_star(jy), ys[k]))
        return std::make_pair(ys[k], "sample " + std::to_string(k) + ": j^* j_* Y differs from Y");
      const auto& y2 = ys[(k + 1) % sample_size];
      auto lhs = hom_dim(jy, f.j_lower_star(y2)), rhs = hom_dim(ys[k], y2);
      if (lhs != rhs) return std::make_pair(ys[k], mismatch(k, lhs, rhs));
    }
    return std::nullopt;
  });

  auto exactness = [&](const std::string& name, const AlgebraPtr& alg, std::uint64_t s,
                       const typename RecollementFunctors<K>::Mor& functor, bool right_only) {
    run(name, [&, alg, s]() -> Bad {
      auto seqs = ses_of(alg, s);
      for (std::size_t k = 0; k < seqs.size(); ++k) {
        ShortExactSequence<K> image{functor(seqs[k].alpha), functor(seqs[k].beta)};
        if (auto arrow = failing_square(image.alpha))
          return std::make_pair(seqs[k].alpha.target, "sample " + std::to_string(k) + ": image of the first map fails the square at arrow " + *arrow);
        if (auto arrow = failing_square(image.beta))
          return std::make_pair(seqs[k].alpha.target, "sample " + std::to_string(k) + ": image of the second map fails the square at arrow " + *arrow);
        bool ok = right_only ? detail::is_right_exact_image(image) : detail::is_exact_image(image);
        if (!ok) return std::make_pair(seqs[k].alpha.target, "sample " + std::to_string(k) + ": image sequence is not exact");
      }
      return std::nullopt;
    });
  };
  exactness("exact i_*", g.a, seed + 3, f.i_lower_star_m, false);
  exactness("exact i^!", g.lambda, seed + 4, f.i_upper_shriek_m, false);
  exactness("exact j^*", g.lambda, seed + 5, f.j_upper_star_m, false);
  exactness("exact j_*", g.b, seed + 6, f.j_lower_star_m, false);
  exactness("exact j_!", g.b, seed + 7, f.j_lower_shriek_m, false);
  exactness("right exact i^*", g.lambda, seed + 8, f.i_upper_star_m, true);

  run("vanishing j^* i_*, i^* j_!, i^! j_*", [&]() -> Bad {
    for (std::size_t k = 0; k < sample_size; ++k) {
      if (!f.j_upper_star(f.i_lower_star(xs[k])).is_zero())
        return std::make_pair(xs[k], "sample " + std::to_string(k) + ": j^* i_* X is nonzero");
      if (!f.i_upper_star(f.j_lower_shriek(ys[k])).is_zero())
        return std::make_pair(ys[k], "sample " + std::to_string(k) + ": i^* j_! Y is nonzero");
      if (!f.i_upper_shriek(f.j_lower_star(ys[k])).is_zero())
        return std::make_pair(ys[k], "sample " + std::to_string(k) + ": i^! j_* Y is nonzero");
    }
    return std::nullopt;
  });
  run("Im i_* = Ker j^*", [&]() -> Bad {
    for (std::size_t k = 0; k < sample_size; ++k) {
      // Ker j^* samples: the A-part of T is a submodule with zero B-part.
      std::vector<Representation<K>> candidates{ts[k], f.i_lower_star(f.i_upper_shriek(ts[k]))};
      for (const auto& t : candidates) {
        const bool in_kernel = f.j_upper_star(t).is_zero();
        const bool in_image = detail::isomorphic_or_equal(t, f.i_lower_star(f.i_upper_shriek(t)));
        if (in_kernel != in_image)
          return std::make_pair(t, "sample " + std::to_string(k) + (in_kernel ? ": in Ker j^* but not in Im i_*" : ": in Im i_* but not in Ker j^*"));
      }
    }
    return std::nullopt;
  });
  run("exact j_! j^* T -> T -> i_* i^* T -> 0", [&]() -> Bad {
    for (std::size_t k = 0; k < sample_size; ++k) {
      auto eps = f.counit_j(ts[k]);
      auto eta = f.unit_i(ts[k]);
      if (auto arrow = failing_square(eps))
        return std::make_pair(ts[k], "sample " + std::to_string(k) + ": counit fails the square at arrow " + *arrow);
      if (auto arrow = failing_square(eta))
        return std::make_pair(ts[k], "sample " + std::to_string(k) + ": unit fails the square at arrow " + *arrow);
      if (!detail::is_right_exact_image(ShortExactSequence<K>{eps, eta}))
        return std::make_pair(ts[k], "sample " + std::to_string(k) + ": sequence is not exact");
    }
    return std::nullopt;
  });
  return w;
}

template <class K>
RecollementWitness<K> verify_recollement(const ArrowGluing& g, std::size_t sample_size = 20, std::uint64_t seed = 0) {
  return verify_recollement<K>(g, standard_functors<K>(g), sample_size, seed);
}

/// Hom_A(M, A) as a left B-module, M = e_A Lambda e_B. At a B-vertex x the
/// basis is (B-path x -> w) x (A-path ending at v); it is I_B(w)^r with r the
/// number of A-paths ending at v.
template <class K>
struct DefectHypothesis {
  Representation<K> hom_module;
  std::size_t multiplicity = 0;
  DimensionCertificate<K> pd;
};

template <class K>
DefectHypothesis<K> check_defect_hypothesis(const ArrowGluing& g, std::size_t bound, std::uint64_t seed = 0) {
  const BoundAlgebra& b = *g.b;
  const std::size_t r = g.a->paths_into(g.v).size();
  std::vector<std::vector<std::size_t>> paths_at(b.num_vertices());
  std::map<std::vector<std::size_t>, std::size_t> position;
  for (auto p : b.paths_into(g.w)) {
    const Path& path = b.basis_path(p);
    position[path.arrows] = paths_at[path.source].size();
    paths_at[path.source].push_back(p);
  }
  std::vector<std::size_t> dims;
  for (const auto& ps : paths_at) dims.push_back(ps.size() * r);
  std::vector<Matrix<K>> maps;
  for (std::size_t arrow = 0; arrow < b.num_arrows(); ++arrow) {
    const Arrow& arr = b.quiver().arrow(arrow);
    Matrix<K> m(dims[arr.target], dims[arr.source]);
    // The functional dual to (beta then q) at the source maps to the one dual to q at the target.
    for (std::size_t j = 0; j < paths_at[arr.target].size(); ++j) {
      std::vector<std::size_t> seq{arrow};
      const auto& tail = b.basis_path(paths_at[arr.target][j]).arrows;
      seq.insert(seq.end(), tail.begin(), tail.end());
      if (!b.find_path(seq)) continue;
      m.set_block(j * r, position.at(seq) * r, Matrix<K>::identity(r));
    }
    maps.push_back(std::move(m));
  }
  Representation<K> h(g.b, std::move(dims), std::move(maps));
  auto pd = proj_dim(h, bound, seed);
  return {h, r, pd};
}

// ---------------------------------------------------------------------------
// Vertex gluing: Gamma from A and B with v_A identified to v_B

struct VertexGluing {
  AlgebraPtr gamma;
  AlgebraPtr a;
  AlgebraPtr b;
  Embedding a_embed;
  Embedding b_embed;
  std::size_t va = 0;
  std::size_t vb = 0;
  std::size_t v = 0;  // glued vertex in gamma

  static VertexGluing make(const AlgebraPtr& a, std::size_t va, const AlgebraPtr& b, std::size_t vb) {
    auto g = glue_at_vertex(*a, va, *b, vb);
    return {g.algebra, a, b, g.first, g.second, va, vb, g.first.vertex_map[va]};
  }
};

enum class Side { A, B };

namespace detail {

struct SideData {
  const AlgebraPtr& home;
  const Embedding& home_embed;
  std::size_t home_v;
  const AlgebraPtr& other;
  const Embedding& other_embed;
  std::size_t other_v;
};

inline SideData side_data(const VertexGluing& g, Side s) {
  if (s == Side::B) return {g.b, g.b_embed, g.vb, g.a, g.a_embed, g.va};
  return {g.a, g.a_embed, g.va, g.b, g.b_embed, g.vb};
}

inline void require_no_return(const BoundAlgebra& other, std::size_t v) {
  for (auto p : other.paths_between(v, v))
    if (other.basis_path(p).length() > 0)
      throw InvalidInput("extension functor needs no nonzero cycle at the glued vertex; found " + other.path_string(p));
}

/// Positive-length paths of `other` from (outgoing) or to (incoming) v, grouped by the far vertex.
inline std::vector<std::vector<std::size_t>> far_paths(const BoundAlgebra& other, std::size_t v, bool outgoing) {
  std::vector<std::vector<std::size_t>> at(other.num_vertices());
  for (std::size_t p = 0; p < other.dimension(); ++p) {
    const Path& path = other.basis_path(p);
    if (path.length() == 0) continue;
    if (outgoing && path.source == v) at[path.target].push_back(p);
    if (!outgoing && path.target == v) at[path.source].push_back(p);
  }
  return at;
}

}  // namespace detail

/// i (Side::A) or j (Side::B): restriction of a Gamma-module to a component.
template <class K>
Representation<K> restrict_to(const Representation<K>& t, const VertexGluing& g, Side s) {
  auto d = detail::side_data(g, s);
  return restrict_module(t, d.home, d.home_embed);
}

template <class K>
Morphism<K> restrict_to(const Morphism<K>& f, const VertexGluing& g, Side s) {
  auto d = detail::side_data(g, s);
  return restrict_morphism(f, d.home, d.home_embed);
}

/// Left extension (j_lambda for Side::B, i_lambda for Side::A): Gamma tensored
/// over the component. On the other component's vertices the space is
/// (positive-length paths from v) (x) Y_v and arrows extend paths.
template <class K>
Representation<K> extend_left(const Representation<K>& y, const VertexGluing& g, Side s) {
  auto d = detail::side_data(g, s);
  const BoundAlgebra& o = *d.other;
  detail::require_no_return(o, d.other_v);
  const std::size_t l = y.dim(d.home_v);
  auto at = detail::far_paths(o, d.other_v, true);
  std::map<std::size_t, std::size_t> pos;
  for (const auto& ps : at)
    for (std::size_t i = 0; i < ps.size(); ++i) pos[ps[i]] = i;
  std::vector<std::size_t> dims(g.gamma->num_vertices(), 0);
  for (std::size_t x = 0; x < o.num_vertices(); ++x)
    if (x != d.other_v) dims[d.other_embed.vertex_map[x]] = at[x].size() * l;
  for (std::size_t x = 0; x < d.home_embed.vertex_map.size(); ++x) dims[d.home_embed.vertex_map[x]] = y.dim(x);
  std::vector<Matrix<K>> maps;
  for (const auto& arr : g.gamma->quiver().arrows()) maps.emplace_back(dims[arr.target], dims[arr.source]);
  for (std::size_t a = 0; a < d.home_embed.arrow_map.size(); ++a) maps[d.home_embed.arrow_map[a]] = y.action(a);
  for (std::size_t arrow = 0; arrow < o.num_arrows(); ++arrow) {
    const Arrow& arr = o.quiver().arrow(arrow);
    if (arr.target == d.other_v) continue;  // would close a cycle at v
    Matrix<K>& m = maps[d.other_embed.arrow_map[arrow]];
    if (arr.source == d.other_v) {
      auto p = o.find_path({arrow});
      m.set_block(pos.at(*p) * l, 0, Matrix<K>::identity(l));
      continue;
    }
    for (std::size_t j = 0; j < at[arr.source].size(); ++j)
      if (auto ext = o.extend(at[arr.source][j], arrow)) m.set_block(pos.at(*ext) * l, j * l, Matrix<K>::identity(l));
  }
  return Representation<K>(g.gamma, std::move(dims), std::move(maps));
}

/// Right extension (j_rho / i_rho): on the other component's vertices the space
/// is dual to the positive-length paths into v, tensored with Y_v.
template <class K>
Representation<K> extend_right(const Representation<K>& y, const VertexGluing& g, Side s) {
  auto d = detail::side_data(g, s);
  const BoundAlgebra& o = *d.other;
  detail::require_no_return(o, d.other_v);
  const std::size_t l = y.dim(d.home_v);
  auto at = detail::far_paths(o, d.other_v, false);
  std::map<std::size_t, std::size_t> pos;
  for (const auto& ps : at)
    for (std::size_t i = 0; i < ps.size(); ++i) pos[ps[i]] = i;
  std::vector<std::size_t> dims(g.gamma->num_vertices(), 0);
  for (std::size_t x = 0; x < o.num_vertices(); ++x)
    if (x != d.other_v) dims[d.other_embed.vertex_map[x]] = at[x].size() * l;
  for (std::size_t x = 0; x < d.home_embed.vertex_map.size(); ++x) dims[d.home_embed.vertex_map[x]] = y.dim(x);
  std::vector<Matrix<K>> maps;
  for (const auto& arr : g.gamma->quiver().arrows()) maps.emplace_back(dims[arr.target], dims[arr.source]);
  for (std::size_t a = 0; a < d.home_embed.arrow_map.size(); ++a) maps[d.home_embed.arrow_map[a]] = y.action(a);
  for (std::size_t arrow = 0; arrow < o.num_arrows(); ++arrow) {
    const Arrow& arr = o.quiver().arrow(arrow);
    if (arr.source == d.other_v) continue;  // would close a cycle at v
    Matrix<K>& m = maps[d.other_embed.arrow_map[arrow]];
    if (arr.target == d.other_v) {
      auto p = o.find_path({arrow});
      m.set_block(0, pos.at(*p) * l, Matrix<K>::identity(l));
      continue;
    }
    for (std::size_t j = 0; j < at[arr.target].size(); ++j) {
      std::vector<std::size_t> seq{arrow};
      const auto& tail = o.basis_path(at[arr.target][j]).arrows;
      seq.insert(seq.end(), tail.begin(), tail.end());
      if (auto longer = o.find_path(seq)) m.set_block(j * l, pos.at(*longer) * l, Matrix<K>::identity(l));
    }
  }
  return Representation<K>(g.gamma, std::move(dims), std::move(maps));
}

namespace detail {

template <class K>
Morphism<K> extend_morphism(const Morphism<K>& f, const VertexGluing& g, Side s, bool left) {
  auto sd = side_data(g, s);
  auto src = left ? extend_left(f.source, g, s) : extend_right(f.source, g, s);
  auto tgt = left ? extend_left(f.target, g, s) : extend_right(f.target, g, s);
  auto at = far_paths(*sd.other, sd.other_v, left);
  std::vector<Matrix<K>> comps;
  for (std::size_t v = 0; v < g.gamma->num_vertices(); ++v) comps.emplace_back(tgt.dim(v), src.dim(v));
  for (std::size_t x = 0; x < sd.other->num_vertices(); ++x) {
    if (x == sd.other_v) continue;
    std::vector<Matrix<K>> blocks(at[x].size(), f.components[sd.home_v]);
    comps[sd.other_embed.vertex_map[x]] = block_diagonal(blocks);
  }
  for (std::size_t x = 0; x < sd.home_embed.vertex_map.size(); ++x) comps[sd.home_embed.vertex_map[x]] = f.components[x];
  return {src, tgt, std::move(comps)};
}

}  // namespace detail

template <class K>
Morphism<K> extend_left(const Morphism<K>& f, const VertexGluing& g, Side s) {
  return detail::extend_morphism(f, g, s, true);
}
template <class K>
Morphism<K> extend_right(const Morphism<K>& f, const VertexGluing& g, Side s) {
  return detail::extend_morphism(f, g, s, false);
}

template <class K>
Representation<K> j_restrict(const Representation<K>& t, const VertexGluing& g) { return restrict_to(t, g, Side::B); }
template <class K>
Representation<K> i_restrict(const Representation<K>& t, const VertexGluing& g) { return restrict_to(t, g, Side::A); }
template <class K>
Representation<K> j_lambda(const Representation<K>& y, const VertexGluing& g) { return extend_left(y, g, Side::B); }
template <class K>
Representation<K> j_rho(const Representation<K>& y, const VertexGluing& g) { return extend_right(y, g, Side::B); }
template <class K>
Representation<K> i_lambda(const Representation<K>& x, const VertexGluing& g) { return extend_left(x, g, Side::A); }
template <class K>
Representation<K> i_rho(const Representation<K>& x, const VertexGluing& g) { return extend_right(x, g, Side::A); }

// ---------------------------------------------------------------------------
// Gluing trees

struct GluingStep {
  enum class Kind { Identify, Connect };
  Kind kind = Kind::Identify;
  std::string comp1, vertex1;  // Connect: source
  std::string comp2, vertex2;  // Connect: target
  std::string label = "c";     // arrow label for Connect
};

struct GluingSpec {
  std::string name;
  std::vector<std::pair<std::string, AlgebraPtr>> components;
  std::vector<GluingStep> steps;
  std::optional<std::size_t> triangles;
};

struct GluingNode {
  enum class Kind { Leaf, Vertex, Arrow };
  Kind kind = Kind::Leaf;
  AlgebraPtr algebra;
  std::string name;  // leaves: component name
  std::size_t left = 0, right = 0;
  Embedding left_embed, right_embed;
  // Vertex: the identified vertices. Arrow: left_vertex is the source (in the
  // left child), right_vertex the target (in the right child).
  std::size_t left_vertex = 0, right_vertex = 0;
  std::optional<std::size_t> arrow;
};

inline std::string to_string(GluingNode::Kind k) {
  switch (k) {
    case GluingNode::Kind::Leaf: return "leaf";
    case GluingNode::Kind::Vertex: return "vertex";
    default: return "arrow";
  }
}

class GluingTree {
 public:
  /// Components are relabelled with their name as prefix; steps are applied
  /// left to right, each joining two different connected pieces.
  static GluingTree build(const GluingSpec& spec) {
    if (spec.components.empty()) throw InvalidInput("gluing needs at least one component");
    GluingTree t;
    std::map<std::string, std::size_t> comp_index;
    std::vector<std::size_t> group_of;                    // component -> current node
    std::vector<std::vector<std::size_t>> vertex_in;      // component vertex -> vertex of its current node
    for (const auto& [name, alg] : spec.components) {
      if (comp_index.count(name)) throw InvalidInput("duplicate component name '" + name + "'");
      comp_index[name] = t.nodes_.size();
      GluingNode leaf;
      leaf.kind = GluingNode::Kind::Leaf;
      leaf.algebra = relabel(*alg, name);
      leaf.name = name;
      t.original_.push_back(alg);
      t.leaves_.push_back(t.nodes_.size());
      group_of.push_back(t.nodes_.size());
      std::vector<std::size_t> ident(alg->num_vertices());
      for (std::size_t v = 0; v < ident.size(); ++v) ident[v] = v;
      vertex_in.push_back(ident);
      t.nodes_.push_back(std::move(leaf));
    }
    auto locate = [&](const std::string& comp, const std::string& vertex) {
      auto it = comp_index.find(comp);
      if (it == comp_index.end()) throw InvalidInput("unknown component '" + comp + "'");
      auto v = spec.components[it->second].second->quiver().find_vertex(vertex);
      if (!v) throw InvalidInput("component '" + comp + "' has no vertex '" + vertex + "'");
      return std::make_pair(it->second, *v);
    };
    for (const auto& step : spec.steps) {
      auto [c1, v1] = locate(step.comp1, step.vertex1);
      auto [c2, v2] = locate(step.comp2, step.vertex2);
      const std::size_t g1 = group_of[c1], g2 = group_of[c2];
      if (g1 == g2)
        throw InvalidInput("step joining " + step.comp1 + "." + step.vertex1 + " and " + step.comp2 + "." + step.vertex2 +
                           " does not join two different pieces");
      GluingNode node;
      node.left = g1;
      node.right = g2;
      node.left_vertex = vertex_in[c1][v1];
      node.right_vertex = vertex_in[c2][v2];
      const auto& a1 = *t.nodes_[g1].algebra;
      const auto& a2 = *t.nodes_[g2].algebra;
      GluedAlgebra glued = step.kind == GluingStep::Kind::Identify
                               ? glue_at_vertex(a1, node.left_vertex, a2, node.right_vertex)
                               : connect_by_arrow(a1, node.left_vertex, a2, node.right_vertex, step.label);
      node.kind = step.kind == GluingStep::Kind::Identify ? GluingNode::Kind::Vertex : GluingNode::Kind::Arrow;
      node.algebra = glued.algebra;
      node.left_embed = glued.first;
      node.right_embed = glued.second;
      node.arrow = glued.connecting_arrow;
      const std::size_t id = t.nodes_.size();
      t.nodes_.push_back(std::move(node));
      for (std::size_t c = 0; c < group_of.size(); ++c) {
        if (group_of[c] == g1) {
          for (auto& x : vertex_in[c]) x = glued.first.vertex_map[x];
          group_of[c] = id;
        } else if (group_of[c] == g2) {
          for (auto& x : vertex_in[c]) x = glued.second.vertex_map[x];
          group_of[c] = id;
        }
      }
    }
    for (auto g : group_of)
      if (g != group_of.front()) throw InvalidInput("gluing leaves more than one connected piece");
    t.root_ = group_of.front();
    t.parent_.assign(t.nodes_.size(), t.nodes_.size());
    for (std::size_t i = 0; i < t.nodes_.size(); ++i)
      if (t.nodes_[i].kind != GluingNode::Kind::Leaf) {
        t.parent_[t.nodes_[i].left] = i;
        t.parent_[t.nodes_[i].right] = i;
      }
    t.triangles_ = spec.triangles;
    t.name_ = spec.name;
    return t;
  }

  const std::string& name() const { return name_; }
  std::size_t size() const { return nodes_.size(); }
  const GluingNode& node(std::size_t i) const { return nodes_.at(i); }
  std::size_t root() const { return root_; }
  const std::vector<std::size_t>& leaves() const { return leaves_; }
  const AlgebraPtr& algebra() const { return nodes_[root_].algebra; }
  /// The component as given, before relabelling.
  const AlgebraPtr& component(std::size_t leaf_number) const { return original_.at(leaf_number); }
  std::optional<std::size_t> triangles() const { return triangles_; }

  VertexGluing vertex_gluing(std::size_t i) const {
    const auto& n = nodes_.at(i);
    if (n.kind != GluingNode::Kind::Vertex) throw InvalidInput("not a vertex gluing node");
    return {n.algebra, nodes_[n.left].algebra, nodes_[n.right].algebra, n.left_embed, n.right_embed,
            n.left_vertex, n.right_vertex, n.left_embed.vertex_map[n.left_vertex]};
  }

  ArrowGluing arrow_gluing(std::size_t i) const {
    const auto& n = nodes_.at(i);
    if (n.kind != GluingNode::Kind::Arrow) throw InvalidInput("not an arrow gluing node");
    return {n.algebra, nodes_[n.right].algebra, nodes_[n.left].algebra, n.right_embed, n.left_embed,
            *n.arrow, n.right_vertex, n.left_vertex};
  }

  /// Pushes a module over node i to its parent: vertex nodes use i_lambda for
  /// the left child and j_lambda for the right; arrow nodes use j_! for the
  /// source side and i_* for the target side.
  template <class K>
  Representation<K> extend_to_parent(std::size_t i, const Representation<K>& m) const {
    const std::size_t p = parent_.at(i);
    const auto& n = nodes_.at(p);
    const bool is_left = n.left == i;
    if (n.kind == GluingNode::Kind::Vertex) return extend_left(m, vertex_gluing(p), is_left ? Side::A : Side::B);
    auto g = arrow_gluing(p);
    return is_left ? j_lower_shriek(m, g) : i_lower_star(m, g);
  }

  template <class K>
  Representation<K> extend_to_root(std::size_t i, Representation<K> m) const {
    while (i != root_) {
      m = extend_to_parent(i, m);
      i = parent_.at(i);
    }
    return m;
  }

  /// Moves a module over an original component onto its relabelled leaf.
  template <class K>
  Representation<K> to_leaf(std::size_t leaf_number, const Representation<K>& m) const {
    return Representation<K>(nodes_.at(leaves_.at(leaf_number)).algebra, m.dims(), m.actions());
  }

  std::vector<std::size_t> internal_nodes() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < nodes_.size(); ++i)
      if (nodes_[i].kind != GluingNode::Kind::Leaf) out.push_back(i);
    return out;
  }

 private:
  std::vector<GluingNode> nodes_;
  std::vector<AlgebraPtr> original_;
  std::vector<std::size_t> leaves_;
  std::vector<std::size_t> parent_;
  std::size_t root_ = 0;
  std::optional<std::size_t> triangles_;
  std::string name_;
};

// ---------------------------------------------------------------------------
// Drivers

/// Enumerates a component's Gorenstein projectives with the best strategy available.
template <class K>
GprojList<K> component_gproj(const GorensteinReport<K>& report, std::uint64_t seed = 0) {
  if (report.algebra->is_nakayama()) return gproj_nakayama(report);
  return gproj_by_omega_closure(report, seed);
}

template <class K>
struct DecompositionEvidence {
  bool passed = false;
  std::string failure;
  std::optional<GorensteinReport<K>> root_report;
  std::vector<std::string> component_names;
  std::vector<GorensteinReport<K>> component_reports;
  std::vector<GprojList<K>> component_lists;
  std::vector<StableHomTable> component_tables;
  std::vector<Representation<K>> images;
  std::vector<std::string> labels;
  std::vector<std::size_t> block_of;
  StableHomTable table;
  std::vector<std::vector<std::size_t>> orbits;
  bool images_gproj = false;
  bool pairwise_distinct = false;
  bool block_diagonal = false;
  bool blocks_match = false;
  bool complete = false;
  std::string completeness_detail;
};

/// Checks that the stable category of Gorenstein projectives over the glued
/// algebra splits into the components' stable categories.
template <class K>
DecompositionEvidence<K> verify_gproj_decomposition(const GluingTree& tree, std::size_t bound, std::uint64_t seed = 0) {
  DecompositionEvidence<K> ev;
  auto fail = [&](std::string why) {
    ev.failure = std::move(why);
    ev.passed = false;
    return ev;
  };
  for (std::size_t c = 0; c < tree.leaves().size(); ++c) {
    const auto& leaf = tree.node(tree.leaves()[c]);
    ev.component_names.push_back(leaf.name);
    auto rep = gorenstein_report<K>(leaf.algebra, bound, seed);
    if (!rep.certified()) return fail("component " + leaf.name + " is not certified Gorenstein");
    auto list = component_gproj(rep, seed);
    ev.component_tables.push_back(stable_table(list.modules, list.labels));
    for (std::size_t i = 0; i < list.modules.size(); ++i) {
      ev.images.push_back(tree.extend_to_root(tree.leaves()[c], list.modules[i]));
      ev.labels.push_back(list.labels[i]);
      ev.block_of.push_back(c);
    }
    ev.component_reports.push_back(std::move(rep));
    ev.component_lists.push_back(std::move(list));
  }
  auto root = gorenstein_report<K>(tree.algebra(), bound, seed);
  ev.root_report = root;
  if (!root.certified()) return fail("glued algebra is not certified Gorenstein");

  for (std::size_t i = 0; i < ev.images.size(); ++i) {
    if (is_projective(ev.images[i])) return fail("image " + ev.labels[i] + " is projective");
    if (!is_gproj(ev.images[i], root)) return fail("image " + ev.labels[i] + " is not Gorenstein projective");
    auto d = decompose(ev.images[i], seed);
    if (d.summands.size() != 1 || !d.conclusive) return fail("image " + ev.labels[i] + " is not certified indecomposable");
  }
  ev.images_gproj = true;
  for (std::size_t i = 0; i < ev.images.size(); ++i)
    for (std::size_t j = i + 1; j < ev.images.size(); ++j) {
      auto r = is_isomorphic(ev.images[i], ev.images[j], seed);
      if (r.verdict != IsoVerdict::No) return fail("images " + ev.labels[i] + " and " + ev.labels[j] + " are not certified distinct");
    }
  ev.pairwise_distinct = true;

  ev.table = stable_table(ev.images, ev.labels);
  for (std::size_t i = 0; i < ev.images.size(); ++i)
    for (std::size_t j = 0; j < ev.images.size(); ++j)
      if (ev.block_of[i] != ev.block_of[j] && ev.table.dims[i][j] != 0)
        return fail("stable Hom between " + ev.labels[i] + " and " + ev.labels[j] + " is nonzero across blocks");
  ev.block_diagonal = true;
  {
    std::vector<std::size_t> offset(tree.leaves().size(), 0);
    std::size_t start = 0;
    for (std::size_t c = 0; c < tree.leaves().size(); ++c) {
      offset[c] = start;
      start += ev.component_lists[c].modules.size();
    }
    for (std::size_t c = 0; c < tree.leaves().size(); ++c) {
      const auto& t = ev.component_tables[c].dims;
      for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = 0; j < t.size(); ++j)
          if (ev.table.dims[offset[c] + i][offset[c] + j] != t[i][j])
            return fail("block of component " + ev.component_names[c] + " differs from its own stable table");
    }
  }
  ev.blocks_match = true;

  auto closure = omega_closure_check(ev.images, root, seed);
  if (!closure.closed) return fail("completeness: " + closure.where + " is missing from the list");
  ev.complete = true;
  ev.completeness_detail = "closed under Omega and contains all nonprojective summands of Omega^" +
                           std::to_string(root.dimension()) + " of the simples";
  ev.orbits = omega_stable_orbits(ev.images, seed);
  ev.passed = true;
  return ev;
}

/// Gorenstein projectives over a glued algebra: images of the components'
/// lists, filtered and deduplicated, with the closure check as completeness flag.
template <class K>
GprojList<K> gproj_by_gluing(const GluingTree& tree, const GorensteinReport<K>& root, std::size_t bound,
                             std::uint64_t seed = 0) {
  GprojList<K> out;
  out.strategy = "gluing";
  for (std::size_t c = 0; c < tree.leaves().size(); ++c) {
    const auto& leaf = tree.node(tree.leaves()[c]);
    auto rep = gorenstein_report<K>(leaf.algebra, bound, seed);
    if (!rep.certified()) continue;
    auto list = component_gproj(rep, seed);
    for (std::size_t i = 0; i < list.modules.size(); ++i) {
      auto img = tree.extend_to_root(tree.leaves()[c], list.modules[i]);
      if (is_projective(img) || !is_gproj(img, root) || find_isomorphic(out.modules, img, seed)) continue;
      out.modules.push_back(std::move(img));
      out.labels.push_back(list.labels[i]);
    }
  }
  auto closure = omega_closure_check(out.modules, root, seed);
  out.complete = closure.closed;
  out.note = closure.closed ? "closed under Omega and Omega^d of simples" : "possibly incomplete: " + closure.where;
  return out;
}

struct GdNodeCheck {
  std::size_t node = 0;
  std::string kind;
  std::string rule;
  std::optional<std::size_t> gd, gd_left, gd_right;
  bool applicable = false;
  bool passed = false;
  std::string detail;
};

struct GdBoundEvidence {
  std::vector<GdNodeCheck> nodes;
  bool passed = true;
};

/// At every internal node: arrow gluing gives Gd = max when the children
/// differ and Gd <= Gd A + 1 otherwise; vertex gluing gives Gd <= max{1, Gd A, Gd B}.
template <class K>
GdBoundEvidence gd_bound_check(const GluingTree& tree, std::size_t bound, std::uint64_t seed = 0) {
  GdBoundEvidence ev;
  std::vector<std::optional<std::optional<std::size_t>>> memo(tree.size());
  auto gd_of = [&](std::size_t i) -> std::optional<std::size_t> {
    if (!memo[i]) {
      auto r = gorenstein_report<K>(tree.node(i).algebra, bound, seed);
      memo[i] = r.certified() ? r.gd : std::nullopt;
    }
    return *memo[i];
  };
  for (auto i : tree.internal_nodes()) {
    const auto& n = tree.node(i);
    GdNodeCheck c;
    c.node = i;
    c.kind = to_string(n.kind);
    c.gd_left = gd_of(n.left);
    c.gd_right = gd_of(n.right);
    c.gd = gd_of(i);
    if (!c.gd_left || !c.gd_right) {
      c.rule = "components not certified Gorenstein";
      c.applicable = false;
      c.passed = true;
      ev.nodes.push_back(c);
      continue;
    }
    c.applicable = true;
    if (!c.gd) {
      c.passed = false;
      c.detail = "glued algebra not certified Gorenstein";
    } else if (n.kind == GluingNode::Kind::Arrow) {
      // The target side plays the role of A.
      const std::size_t ga = *c.gd_right, gb = *c.gd_left;
      if (ga != gb) {
        c.rule = "Gd = max{Gd A, Gd B}";
        c.passed = *c.gd == std::max(ga, gb);
      } else {
        c.rule = "Gd <= Gd A + 1";
        c.passed = *c.gd <= ga + 1;
      }
    } else {
      c.rule = "Gd <= max{1, Gd A, Gd B}";
      c.passed = *c.gd <= std::max<std::size_t>({1, *c.gd_left, *c.gd_right});
    }
    if (!c.passed && c.detail.empty()) c.detail = "inequality violated";
    ev.passed = ev.passed && c.passed;
    ev.nodes.push_back(c);
  }
  return ev;
}

}  // namespace gprojlab
