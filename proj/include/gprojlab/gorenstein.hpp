#pragma once

// Gorenstein detection, Gorenstein-projective membership and enumeration,
// stable Hom spaces and syzygy orbits.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gprojlab/homalg.hpp"

namespace gprojlab {

class NotCertifiedGorenstein : public Error {
 public:
  using Error::Error;
};

class UnmatchedSyzygy : public Error {
 public:
  UnmatchedSyzygy(const std::string& msg, std::size_t member) : Error(msg), member_(member) {}
  std::size_t member() const { return member_; }

 private:
  std::size_t member_;
};

enum class Verdict { Yes, No, Unknown };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    default: return "unknown";
  }
}

template <class K>
struct GorensteinReport {
  AlgebraPtr algebra;
  AlgebraPtr opposite;
  std::size_t bound = 0;
  Verdict gorenstein = Verdict::Unknown;
  std::optional<std::size_t> gd;                        // set when gorenstein == Yes
  std::vector<DimensionCertificate<K>> id_projectives;  // id P(v), via duality
  std::vector<DimensionCertificate<K>> pd_injectives;   // pd I(v)
  bool cross_check = true;                              // max id P(v) == max pd I(v)

  bool certified() const { return gorenstein == Verdict::Yes; }
  std::size_t dimension() const {
    if (!gd) throw NotCertifiedGorenstein("algebra is not certified Gorenstein");
    return *gd;
  }
};

/// id of every P(v) (as pd of its dual over the opposite algebra) and pd of
/// every I(v). Gorenstein iff all of them are finite.
template <class K>
GorensteinReport<K> gorenstein_report(const AlgebraPtr& a, std::size_t bound, std::uint64_t seed = 0) {
  GorensteinReport<K> r;
  r.algebra = a;
  r.opposite = opposite_algebra(*a);
  r.bound = bound;
  bool any_infinite = false, any_unknown = false;
  std::size_t max_id = 0, max_pd = 0;
  for (std::size_t v = 0; v < a->num_vertices(); ++v) {
    auto id = proj_dim(dual(projective<K>(a, v), r.opposite), bound, seed);
    auto pd = proj_dim(injective<K>(a, v, r.opposite), bound, seed);
    for (const auto* c : {&id, &pd}) {
      if (c->infinite()) any_infinite = true;
      if (c->undetermined()) any_unknown = true;
    }
    if (id.finite()) max_id = std::max(max_id, id.value);
    if (pd.finite()) max_pd = std::max(max_pd, pd.value);
    r.id_projectives.push_back(std::move(id));
    r.pd_injectives.push_back(std::move(pd));
  }
  if (any_infinite) {
    r.gorenstein = Verdict::No;
  } else if (any_unknown) {
    r.gorenstein = Verdict::Unknown;
  } else {
    r.gorenstein = Verdict::Yes;
    r.gd = max_id;
    r.cross_check = max_id == max_pd;
  }
  return r;
}

template <class K>
GorensteinReport<K> gorenstein_report(const AlgebraPtr& a) {
  return gorenstein_report<K>(a, default_bound(*a));
}

/// Re-verifies every certificate in the report from scratch.
template <class K>
bool verify_report(const GorensteinReport<K>& r, std::uint64_t seed = 0) {
  for (std::size_t v = 0; v < r.algebra->num_vertices(); ++v) {
    if (!verify_certificate(dual(projective<K>(r.algebra, v), r.opposite), r.id_projectives[v], seed)) return false;
    if (!verify_certificate(injective<K>(r.algebra, v, r.opposite), r.pd_injectives[v], seed)) return false;
  }
  return true;
}

/// Ext^i(M, A) = 0 for 1 <= i <= d. Over a d-Gorenstein algebra this
/// characterizes Gorenstein projectives, since vanishing beyond d is automatic.
template <class K>
bool is_gproj(const Representation<K>& m, const GorensteinReport<K>& report) {
  if (!report.certified()) throw NotCertifiedGorenstein("is_gproj needs a certified Gorenstein algebra");
  const std::size_t d = *report.gd;
  if (d == 0 || m.is_zero()) return true;
  Resolution<K> res(m, d + 1);
  for (std::size_t v = 0; v < m.algebra().num_vertices(); ++v) {
    auto p = projective<K>(m.algebra_ptr(), v);
    for (std::size_t i = 1; i <= d; ++i)
      if (res.ext_dim(i, p) != 0) return false;
  }
  return true;
}

/// Left add(A)-approximation M -> P: one copy of P(v) per basis element of Hom(M, P(v)).
template <class K>
Morphism<K> left_projective_approximation(const Representation<K>& m) {
  std::vector<Representation<K>> parts;
  std::vector<Morphism<K>> maps;
  for (std::size_t v = 0; v < m.algebra().num_vertices(); ++v) {
    auto p = projective<K>(m.algebra_ptr(), v);
    for (auto& f : hom_basis(m, p)) {
      parts.push_back(p);
      maps.push_back(std::move(f));
    }
  }
  auto sum = direct_sum(parts, m.algebra_ptr());
  std::vector<Matrix<K>> comps;
  for (std::size_t x = 0; x < m.dims().size(); ++x) {
    std::vector<Matrix<K>> blocks;
    for (const auto& f : maps) blocks.push_back(f.components[x]);
    comps.push_back(vstack(blocks, m.dim(x)));
  }
  return {m, sum.object, std::move(comps)};
}

struct HeuristicGproj {
  bool passes = false;
  std::size_t checked_up_to = 0;
  std::string label = "unverified beyond bound";
};

/// Bounded test for algebras without a Gorenstein certificate: Ext^i(M, A) = 0
/// for i <= bound, and M embeds into a projective with cokernel passing the
/// same test, repeated `bound` times.
template <class K>
HeuristicGproj is_gproj_bounded(const Representation<K>& m, std::size_t bound) {
  HeuristicGproj out;
  out.checked_up_to = bound;
  Representation<K> cur = m;
  for (std::size_t step = 0; step <= bound; ++step) {
    if (cur.is_zero()) break;
    Resolution<K> res(cur, bound + 1);
    for (std::size_t v = 0; v < cur.algebra().num_vertices(); ++v) {
      auto p = projective<K>(cur.algebra_ptr(), v);
      for (std::size_t i = 1; i <= bound; ++i)
        if (res.ext_dim(i, p) != 0) return out;
    }
    if (step == bound) break;
    auto approx = left_projective_approximation(cur);
    for (std::size_t x = 0; x < cur.dims().size(); ++x)
      if (rank(approx.components[x]) != cur.dim(x)) return out;
    cur = cokernel(approx).object;
  }
  out.passes = true;
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration

template <class K>
struct GprojList {
  std::vector<Representation<K>> modules;
  std::vector<std::string> labels;
  std::string strategy;
  bool complete = false;
  std::string note;
};

/// P(v) / rad^len P(v).
template <class K>
Representation<K> uniserial_module(const AlgebraPtr& a, std::size_t v, std::size_t len) {
  auto p = projective<K>(a, v);
  std::vector<Matrix<K>> bases;
  std::vector<std::vector<std::size_t>> cols(a->num_vertices());
  std::vector<std::size_t> seen(a->num_vertices(), 0);
  for (auto q : a->paths_from(v)) {
    const Path& path = a->basis_path(q);
    if (path.length() >= len) cols[path.target].push_back(seen[path.target]);
    ++seen[path.target];
  }
  for (std::size_t x = 0; x < a->num_vertices(); ++x) {
    Matrix<K> b(p.dim(x), cols[x].size());
    for (std::size_t j = 0; j < cols[x].size(); ++j) b(cols[x][j], j) = K(1);
    bases.push_back(std::move(b));
  }
  return quotient(p, bases).object;
}

/// Nonprojective indecomposable Gorenstein projectives of a Nakayama algebra:
/// every indecomposable is uniserial, hence some P(v)/rad^L with L below the
/// Loewy length of P(v); distinct (v, L) are pairwise non-isomorphic.
template <class K>
GprojList<K> gproj_nakayama(const GorensteinReport<K>& report) {
  const AlgebraPtr& a = report.algebra;
  if (!a->is_nakayama()) throw InvalidInput("gproj_nakayama: algebra is not Nakayama");
  GprojList<K> out;
  out.strategy = "nakayama";
  for (std::size_t v = 0; v < a->num_vertices(); ++v) {
    std::size_t top_len = 0;
    for (auto q : a->paths_from(v)) top_len = std::max(top_len, a->basis_path(q).length() + 1);
    for (std::size_t len = 1; len < top_len; ++len) {
      auto u = uniserial_module<K>(a, v, len);
      if (!is_gproj(u, report)) continue;
      out.modules.push_back(std::move(u));
      out.labels.push_back("U(" + a->quiver().vertex_label(v) + "," + std::to_string(len) + ")");
    }
  }
  out.complete = true;
  out.note = "all uniserial modules enumerated";
  return out;
}

/// Nonprojective indecomposable summands of M, one per iso class.
template <class K>
std::vector<Representation<K>> nonprojective_summands(const Representation<K>& m, std::uint64_t seed = 0) {
  std::vector<Representation<K>> out;
  if (m.is_zero()) return out;
  for (auto& s : distinct_summands(decompose(m, seed)))
    if (!is_projective(s)) out.push_back(std::move(s));
  return out;
}

/// Index of a list member isomorphic to x, if any.
template <class K>
std::optional<std::size_t> find_isomorphic(const std::vector<Representation<K>>& list, const Representation<K>& x,
                                           std::uint64_t seed = 0) {
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (list[i].dims() != x.dims()) continue;
    if (is_isomorphic(list[i], x, seed).verdict == IsoVerdict::Yes) return i;
  }
  return std::nullopt;
}

template <class K>
struct ClosureCheck {
  bool closed = true;
  std::optional<Representation<K>> missing;  // a module not matched by the list
  std::string where;
};

/// Whether the list is closed under nonprojective summands of Omega, and
/// contains every nonprojective summand of Omega^d(S_v).
template <class K>
ClosureCheck<K> omega_closure_check(const std::vector<Representation<K>>& list, const GorensteinReport<K>& report,
                                    std::uint64_t seed = 0) {
  ClosureCheck<K> out;
  for (std::size_t i = 0; i < list.size(); ++i)
    for (auto& s : nonprojective_summands(syzygy(list[i]), seed))
      if (!find_isomorphic(list, s, seed)) {
        out.closed = false;
        out.missing = std::move(s);
        out.where = "summand of Omega of member " + std::to_string(i);
        return out;
      }
  const std::size_t d = report.dimension();
  for (std::size_t v = 0; v < report.algebra->num_vertices(); ++v)
    for (auto& s : nonprojective_summands(syzygy_power(simple<K>(report.algebra, v), d), seed))
      if (!find_isomorphic(list, s, seed)) {
        out.closed = false;
        out.missing = std::move(s);
        out.where = "summand of Omega^" + std::to_string(d) + " of simple " + report.algebra->quiver().vertex_label(v);
        return out;
      }
  return out;
}

/// Generic strategy: nonprojective summands of Omega^d(S_v), closed under Omega.
template <class K>
GprojList<K> gproj_by_omega_closure(const GorensteinReport<K>& report, std::uint64_t seed = 0) {
  const AlgebraPtr& a = report.algebra;
  const std::size_t d = report.dimension();
  GprojList<K> out;
  out.strategy = "generic";
  std::vector<Representation<K>> queue;
  for (std::size_t v = 0; v < a->num_vertices(); ++v)
    for (auto& s : nonprojective_summands(syzygy_power(simple<K>(a, v), d), seed)) queue.push_back(std::move(s));
  for (std::size_t i = 0; i < queue.size(); ++i) {
    if (find_isomorphic(out.modules, queue[i], seed)) continue;
    if (!is_gproj(queue[i], report)) continue;
    out.modules.push_back(queue[i]);
    out.labels.push_back("G" + std::to_string(out.modules.size()));
    for (auto& s : nonprojective_summands(syzygy(queue[i]), seed)) queue.push_back(std::move(s));
  }
  out.complete = false;
  out.note = "possibly incomplete: Omega-closure of Omega^d of simples";
  return out;
}

// ---------------------------------------------------------------------------
// Stable category

/// dim Hom(M, N) minus the morphisms factoring through a projective; the
/// latter all factor through the projective cover of N.
template <class K>
std::size_t stable_hom_dim(const Representation<K>& m, const Representation<K>& n) {
  auto hom = hom_basis(m, n);
  if (hom.empty()) return 0;
  auto cover = projective_cover(n);
  std::vector<Morphism<K>> through;
  for (const auto& g : hom_basis(m, cover.projective)) through.push_back(compose(cover.epi, g));
  return hom.size() - span_rank(through);
}

struct StableHomTable {
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> dims;  // dims[i][j] = dim stable Hom(M_i, M_j)
};

template <class K>
StableHomTable stable_table(const std::vector<Representation<K>>& modules, std::vector<std::string> labels = {}) {
  StableHomTable t;
  if (labels.empty())
    for (std::size_t i = 0; i < modules.size(); ++i) labels.push_back("M" + std::to_string(i + 1));
  t.labels = std::move(labels);
  t.dims.assign(modules.size(), std::vector<std::size_t>(modules.size(), 0));
  for (std::size_t i = 0; i < modules.size(); ++i)
    for (std::size_t j = 0; j < modules.size(); ++j) t.dims[i][j] = stable_hom_dim(modules[i], modules[j]);
  return t;
}

/// Omega as a permutation of the list: next[i] = j with Omega M_i = M_j.
/// Throws UnmatchedSyzygy when some syzygy has no match.
template <class K>
std::vector<std::size_t> omega_permutation(const std::vector<Representation<K>>& list, std::uint64_t seed = 0) {
  std::vector<std::size_t> next;
  for (std::size_t i = 0; i < list.size(); ++i) {
    auto parts = nonprojective_summands(syzygy(list[i]), seed);
    if (parts.size() != 1)
      throw UnmatchedSyzygy("syzygy of member " + std::to_string(i) + " has " + std::to_string(parts.size()) +
                                " nonprojective summands",
                            i);
    auto j = find_isomorphic(list, parts.front(), seed);
    if (!j) throw UnmatchedSyzygy("syzygy of member " + std::to_string(i) + " is not in the list", i);
    next.push_back(*j);
  }
  return next;
}

/// Orbits of Omega on the list, each listed from its smallest index.
template <class K>
std::vector<std::vector<std::size_t>> omega_stable_orbits(const std::vector<Representation<K>>& list,
                                                          std::uint64_t seed = 0) {
  auto next = omega_permutation(list, seed);
  std::vector<std::vector<std::size_t>> orbits;
  std::vector<bool> seen(list.size(), false);
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> orbit;
    for (std::size_t j = i; !seen[j]; j = next[j]) {
      seen[j] = true;
      orbit.push_back(j);
    }
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

}  // namespace gprojlab
