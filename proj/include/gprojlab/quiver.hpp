#pragma once

// Quivers, monomial ideals and the finite path-basis algebras kQ/I.
//
// Conventions: a path is stored as the sequence of arrows in the order they are
// applied, so `a.b` means "a then b" and requires t(a) = s(b). The projective
// P(v) has as basis the nonzero paths starting at v.

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gprojlab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

struct Arrow {
  std::string label;
  std::size_t source;
  std::size_t target;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

class Quiver {
 public:
  Quiver() = default;

  std::size_t add_vertex(const std::string& label) {
    if (vertex_index_.count(label)) throw InvalidInput("duplicate vertex label '" + label + "'");
    vertex_index_[label] = vertices_.size();
    vertices_.push_back(label);
    return vertices_.size() - 1;
  }

  std::size_t add_arrow(const std::string& label, std::size_t source, std::size_t target) {
    if (arrow_index_.count(label)) throw InvalidInput("duplicate arrow label '" + label + "'");
    if (source >= vertices_.size() || target >= vertices_.size())
      throw InvalidInput("arrow '" + label + "' refers to an undeclared vertex");
    arrow_index_[label] = arrows_.size();
    arrows_.push_back({label, source, target});
    return arrows_.size() - 1;
  }

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_arrows() const { return arrows_.size(); }
  const std::string& vertex_label(std::size_t v) const { return vertices_.at(v); }
  const std::vector<std::string>& vertex_labels() const { return vertices_; }
  const Arrow& arrow(std::size_t a) const { return arrows_.at(a); }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  std::optional<std::size_t> find_vertex(const std::string& label) const {
    auto it = vertex_index_.find(label);
    if (it == vertex_index_.end()) return std::nullopt;
    return it->second;
  }
  std::optional<std::size_t> find_arrow(const std::string& label) const {
    auto it = arrow_index_.find(label);
    if (it == arrow_index_.end()) return std::nullopt;
    return it->second;
  }

  std::vector<std::size_t> arrows_from(std::size_t v) const {
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < arrows_.size(); ++a)
      if (arrows_[a].source == v) out.push_back(a);
    return out;
  }
  std::vector<std::size_t> arrows_into(std::size_t v) const {
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < arrows_.size(); ++a)
      if (arrows_[a].target == v) out.push_back(a);
    return out;
  }

  friend bool operator==(const Quiver& a, const Quiver& b) {
    return a.vertices_ == b.vertices_ && a.arrows_ == b.arrows_;
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::map<std::string, std::size_t> vertex_index_;
  std::map<std::string, std::size_t> arrow_index_;
};

struct Path {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<std::size_t> arrows;  // in order of application

  static Path stationary(std::size_t v) { return {v, v, {}}; }
  std::size_t length() const { return arrows.size(); }
  friend bool operator==(const Path&, const Path&) = default;
};

/// Builds a path from arrow indices, checking composability.
inline Path make_path(const Quiver& q, const std::vector<std::size_t>& arrows) {
  if (arrows.empty()) throw InvalidInput("a nontrivial path needs at least one arrow");
  Path p{q.arrow(arrows.front()).source, q.arrow(arrows.front()).target, {arrows.front()}};
  for (std::size_t i = 1; i < arrows.size(); ++i) {
    const Arrow& a = q.arrow(arrows[i]);
    if (a.source != p.target)
      throw InvalidInput("arrows '" + q.arrow(arrows[i - 1]).label + "' and '" + a.label + "' do not compose");
    p.arrows.push_back(arrows[i]);
    p.target = a.target;
  }
  return p;
}

inline std::string path_to_string(const Quiver& q, const Path& p) {
  if (p.arrows.empty()) return "e_" + q.vertex_label(p.source);
  std::string s;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) s += '.';
    s += q.arrow(p.arrows[i]).label;
  }
  return s;
}

struct MonomialIdeal {
  std::vector<Path> generators;
  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;
};

/// True when `g` occurs as a contiguous block of `seq` ending exactly at `seq.size()`.
inline bool has_suffix(const std::vector<std::size_t>& seq, const std::vector<std::size_t>& g) {
  if (g.size() > seq.size()) return false;
  return std::equal(g.begin(), g.end(), seq.end() - static_cast<std::ptrdiff_t>(g.size()));
}

inline bool contains_subpath(const std::vector<std::size_t>& seq, const std::vector<std::size_t>& g) {
  if (g.empty() || g.size() > seq.size()) return false;
  return std::search(seq.begin(), seq.end(), g.begin(), g.end()) != seq.end();
}

class NotAdmissible : public Error {
 public:
  NotAdmissible(const std::string& msg, Path witness) : Error(msg), witness_(std::move(witness)) {}
  const Path& witness() const { return witness_; }

 private:
  Path witness_;
};

struct AdmissibilityResult {
  bool admissible = false;
  std::optional<Path> witness;  // a cycle all of whose powers stay nonzero
  std::size_t length_bound = 0;  // every path of length >= bound lies in the ideal
};

namespace detail {

inline void validate_ideal(const Quiver& q, const MonomialIdeal& ideal) {
  for (const auto& g : ideal.generators) {
    if (g.length() < 2) throw InvalidInput("ideal generators must have length at least 2");
    Path rebuilt = make_path(q, g.arrows);
    if (rebuilt.source != g.source || rebuilt.target != g.target)
      throw InvalidInput("ideal generator endpoints are inconsistent");
  }
}

inline bool extension_nonzero(const std::vector<std::size_t>& seq, const MonomialIdeal& ideal) {
  for (const auto& g : ideal.generators)
    if (has_suffix(seq, g.arrows)) return false;
  return true;
}

}  // namespace detail

/// Decides whether only finitely many paths avoid the ideal. Works on the
/// automaton whose states are the nonzero paths of length (max generator
/// length - 1); an infinite nonzero path exists iff that graph has a cycle.
inline AdmissibilityResult is_admissible(const Quiver& q, const MonomialIdeal& ideal) {
  detail::validate_ideal(q, ideal);
  std::size_t max_gen = 2;
  for (const auto& g : ideal.generators) max_gen = std::max(max_gen, g.length());
  const std::size_t window = max_gen - 1;

  // Nonzero paths by length until `window`.
  std::vector<Path> layer;
  for (std::size_t v = 0; v < q.num_vertices(); ++v) layer.push_back(Path::stationary(v));
  std::size_t longest = 0;
  for (std::size_t len = 1; len <= window && !layer.empty(); ++len) {
    std::vector<Path> next;
    for (const auto& p : layer)
      for (auto a : q.arrows_from(p.target)) {
        Path e = p;
        e.arrows.push_back(a);
        e.target = q.arrow(a).target;
        if (detail::extension_nonzero(e.arrows, ideal)) next.push_back(std::move(e));
      }
    if (!next.empty()) longest = len;
    layer = std::move(next);
  }

  // layer now holds the states (nonzero paths of length == window).
  std::map<std::vector<std::size_t>, std::size_t> state_index;
  for (std::size_t i = 0; i < layer.size(); ++i) state_index[layer[i].arrows] = i;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> edges(layer.size());  // (next state, arrow)
  for (std::size_t i = 0; i < layer.size(); ++i)
    for (auto a : q.arrows_from(layer[i].target)) {
      std::vector<std::size_t> ext = layer[i].arrows;
      ext.push_back(a);
      if (!detail::extension_nonzero(ext, ideal)) continue;
      std::vector<std::size_t> suffix(ext.begin() + 1, ext.end());
      edges[i].emplace_back(state_index.at(suffix), a);
    }

  // Iterative DFS for a cycle; also longest path in the DAG when acyclic.
  enum : int { kWhite, kGrey, kBlack };
  std::vector<int> colour(layer.size(), kWhite);
  std::vector<std::size_t> depth(layer.size(), 0);  // longest walk (edges) from the state
  for (std::size_t root = 0; root < layer.size(); ++root) {
    if (colour[root] != kWhite) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    std::vector<std::size_t> via_arrow{0};
    colour[root] = kGrey;
    while (!stack.empty()) {
      auto& [node, next_edge] = stack.back();
      if (next_edge < edges[node].size()) {
        auto [child, arrow] = edges[node][next_edge++];
        if (colour[child] == kGrey) {
          // Cycle: arrows from child's position on the stack to here, then `arrow`.
          std::vector<std::size_t> cyc;
          std::size_t pos = 0;
          while (stack[pos].first != child) ++pos;
          for (std::size_t k = pos + 1; k < stack.size(); ++k) cyc.push_back(via_arrow[k]);
          cyc.push_back(arrow);
          return {false, make_path(q, cyc), 0};
        }
        if (colour[child] == kWhite) {
          colour[child] = kGrey;
          stack.emplace_back(child, 0);
          via_arrow.push_back(arrow);
        }
      } else {
        for (auto [child, arrow] : edges[node]) depth[node] = std::max(depth[node], depth[child] + 1);
        colour[node] = kBlack;
        stack.pop_back();
        via_arrow.pop_back();
      }
    }
  }
  for (std::size_t i = 0; i < layer.size(); ++i) longest = std::max(longest, window + depth[i]);
  return {true, std::nullopt, longest + 1};
}

/// kQ/I for a monomial admissible ideal, realized by its path basis.
class BoundAlgebra {
 public:
  BoundAlgebra(Quiver quiver, MonomialIdeal ideal) : quiver_(std::move(quiver)), ideal_(std::move(ideal)) {
    auto adm = is_admissible(quiver_, ideal_);
    if (!adm.admissible)
      throw NotAdmissible("ideal is not admissible: the cycle " + path_to_string(quiver_, *adm.witness) +
                              " is nonzero in every power",
                          *adm.witness);
    length_bound_ = adm.length_bound;
    enumerate_basis();
  }

  const Quiver& quiver() const { return quiver_; }
  const MonomialIdeal& ideal() const { return ideal_; }
  std::size_t num_vertices() const { return quiver_.num_vertices(); }
  std::size_t num_arrows() const { return quiver_.num_arrows(); }
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<Path>& basis() const { return basis_; }
  const Path& basis_path(std::size_t i) const { return basis_.at(i); }
  std::size_t length_bound() const { return length_bound_; }
  std::size_t max_path_length() const { return length_bound_ - 1; }

  /// Index of the stationary path e_v.
  std::size_t idempotent(std::size_t v) const { return stationary_.at(v); }

  std::optional<std::size_t> find_path(const std::vector<std::size_t>& arrows) const {
    auto it = index_.find(arrows);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// Basis index of "p then q" or nullopt if not composable or zero.
  std::optional<std::size_t> multiply(std::size_t p, std::size_t q) const {
    long r = table_[p * basis_.size() + q];
    if (r < 0) return std::nullopt;
    return static_cast<std::size_t>(r);
  }

  /// Basis index of p followed by arrow a, if nonzero.
  std::optional<std::size_t> extend(std::size_t p, std::size_t arrow) const {
    const Path& path = basis_[p];
    if (quiver_.arrow(arrow).source != path.target) return std::nullopt;
    auto seq = path.arrows;
    seq.push_back(arrow);
    return find_path(seq);
  }

  /// Basis paths from u to w, in basis order.
  std::vector<std::size_t> paths_between(std::size_t u, std::size_t w) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (basis_[i].source == u && basis_[i].target == w) out.push_back(i);
    return out;
  }
  std::vector<std::size_t> paths_from(std::size_t u) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (basis_[i].source == u) out.push_back(i);
    return out;
  }
  std::vector<std::size_t> paths_into(std::size_t w) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (basis_[i].target == w) out.push_back(i);
    return out;
  }

  std::string path_string(std::size_t p) const { return path_to_string(quiver_, basis_[p]); }

  /// Every vertex has at most one outgoing and one incoming arrow.
  bool is_nakayama() const {
    for (std::size_t v = 0; v < num_vertices(); ++v)
      if (quiver_.arrows_from(v).size() > 1 || quiver_.arrows_into(v).size() > 1) return false;
    return true;
  }

  friend bool operator==(const BoundAlgebra& a, const BoundAlgebra& b) {
    return a.quiver_ == b.quiver_ && a.ideal_ == b.ideal_;
  }

 private:
  void enumerate_basis() {
    std::vector<Path> layer;
    for (std::size_t v = 0; v < quiver_.num_vertices(); ++v) layer.push_back(Path::stationary(v));
    std::vector<Path> all;
    while (!layer.empty()) {
      // (lexicographic arrow sequence, start vertex) within one length.
      std::sort(layer.begin(), layer.end(), [](const Path& a, const Path& b) {
        if (a.arrows != b.arrows) return a.arrows < b.arrows;
        return a.source < b.source;
      });
      std::vector<Path> next;
      for (const auto& p : layer) {
        for (auto a : quiver_.arrows_from(p.target)) {
          Path e = p;
          e.arrows.push_back(a);
          e.target = quiver_.arrow(a).target;
          if (detail::extension_nonzero(e.arrows, ideal_)) next.push_back(std::move(e));
        }
        all.push_back(p);
      }
      layer = std::move(next);
    }
    basis_ = std::move(all);
    stationary_.assign(quiver_.num_vertices(), 0);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (basis_[i].arrows.empty())
        stationary_[basis_[i].source] = i;
      else
        index_[basis_[i].arrows] = i;
    }
    const std::size_t n = basis_.size();
    table_.assign(n * n, -1);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) {
        if (basis_[p].target != basis_[q].source) continue;
        if (basis_[p].arrows.empty()) {
          table_[p * n + q] = static_cast<long>(q);
        } else if (basis_[q].arrows.empty()) {
          table_[p * n + q] = static_cast<long>(p);
        } else {
          auto seq = basis_[p].arrows;
          seq.insert(seq.end(), basis_[q].arrows.begin(), basis_[q].arrows.end());
          auto it = index_.find(seq);
          if (it != index_.end()) table_[p * n + q] = static_cast<long>(it->second);
        }
      }
  }

  Quiver quiver_;
  MonomialIdeal ideal_;
  std::size_t length_bound_ = 0;
  std::vector<Path> basis_;
  std::vector<std::size_t> stationary_;
  std::map<std::vector<std::size_t>, std::size_t> index_;
  std::vector<long> table_;
};

using AlgebraPtr = std::shared_ptr<const BoundAlgebra>;

inline AlgebraPtr build_algebra(Quiver quiver, MonomialIdeal ideal) {
  return std::make_shared<const BoundAlgebra>(std::move(quiver), std::move(ideal));
}

/// Parses relation paths given by arrow labels ("a then b" order).
inline MonomialIdeal ideal_from_labels(const Quiver& q, const std::vector<std::vector<std::string>>& relations) {
  MonomialIdeal ideal;
  for (const auto& rel : relations) {
    std::vector<std::size_t> arrows;
    for (const auto& label : rel) {
      auto a = q.find_arrow(label);
      if (!a) throw InvalidInput("unknown arrow '" + label + "' in relation");
      arrows.push_back(*a);
    }
    ideal.generators.push_back(make_path(q, arrows));
  }
  return ideal;
}

inline AlgebraPtr opposite_algebra(const BoundAlgebra& a) {
  Quiver q;
  for (const auto& v : a.quiver().vertex_labels()) q.add_vertex(v);
  for (const auto& arr : a.quiver().arrows()) q.add_arrow(arr.label, arr.target, arr.source);
  MonomialIdeal ideal;
  for (const auto& g : a.ideal().generators) {
    std::vector<std::size_t> rev(g.arrows.rbegin(), g.arrows.rend());
    ideal.generators.push_back(make_path(q, rev));
  }
  return build_algebra(std::move(q), std::move(ideal));
}

/// Linear quiver 1 <- 2 <- ... <- n; arrow a_i goes from i+1 to i.
/// Each relation (start, length) kills the path of that length starting at `start`.
inline AlgebraPtr nakayama_linear(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& relations = {}) {
  if (n < 1) throw InvalidInput("nakayama_linear needs n >= 1");
  Quiver q;
  for (std::size_t i = 1; i <= n; ++i) q.add_vertex(std::to_string(i));
  for (std::size_t i = 1; i < n; ++i) q.add_arrow("a" + std::to_string(i), i, i - 1);
  MonomialIdeal ideal;
  for (auto [start, len] : relations) {
    if (len < 2 || start < 1 || start > n || len >= start)
      throw InvalidInput("relation of length " + std::to_string(len) + " at vertex " + std::to_string(start) +
                         " does not fit in the linear quiver");
    std::vector<std::size_t> arrows;
    for (std::size_t k = 0; k < len; ++k) arrows.push_back(start - 2 - k);  // a_{start-1-k}
    ideal.generators.push_back(make_path(q, arrows));
  }
  return build_algebra(std::move(q), std::move(ideal));
}

/// Oriented cycle on n vertices (arrow a_i: i -> i-1, a_1: 1 -> n) with every path of
/// length `len` set to zero.
inline AlgebraPtr nakayama_cyclic(std::size_t n, std::size_t len) {
  if (n < 1) throw InvalidInput("nakayama_cyclic needs n >= 1");
  if (len < 2) throw InvalidInput("nakayama_cyclic needs len >= 2 for admissibility");
  Quiver q;
  for (std::size_t i = 1; i <= n; ++i) q.add_vertex(std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) q.add_arrow("a" + std::to_string(i), i - 1, (i + n - 2) % n);
  MonomialIdeal ideal;
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> arrows;
    std::size_t v = s;
    for (std::size_t k = 0; k < len; ++k) {
      arrows.push_back(v);  // arrow index == source vertex index
      v = (v + n - 1) % n;
    }
    ideal.generators.push_back(make_path(q, arrows));
  }
  return build_algebra(std::move(q), std::move(ideal));
}

/// Where the vertices and arrows of a component land in a glued algebra.
struct Embedding {
  std::vector<std::size_t> vertex_map;
  std::vector<std::size_t> arrow_map;
};

struct GluedAlgebra {
  AlgebraPtr algebra;
  Embedding first;
  Embedding second;
  std::optional<std::size_t> connecting_arrow;  // set by connect_by_arrow
};

namespace detail {

inline std::string fresh_label(const std::string& label, const std::set<std::string>& used) {
  std::string out = label;
  while (used.count(out)) out += '\'';
  return out;
}

/// Disjoint union of two quivers with `skip` (a vertex of the second) optionally
/// merged into `merge_into` (a vertex of the first).
inline GluedAlgebra combine(const BoundAlgebra& a1, const BoundAlgebra& a2, std::optional<std::size_t> merge_into,
                            std::optional<std::size_t> skip, std::optional<std::pair<std::size_t, std::size_t>> new_arrow,
                            const std::string& new_arrow_label) {
  Quiver q;
  Embedding e1, e2;
  std::set<std::string> vertex_labels, arrow_labels;
  for (const auto& v : a1.quiver().vertex_labels()) {
    e1.vertex_map.push_back(q.add_vertex(v));
    vertex_labels.insert(v);
  }
  for (std::size_t v = 0; v < a2.num_vertices(); ++v) {
    if (skip && v == *skip) {
      e2.vertex_map.push_back(*merge_into);
      continue;
    }
    std::string label = fresh_label(a2.quiver().vertex_label(v), vertex_labels);
    vertex_labels.insert(label);
    e2.vertex_map.push_back(q.add_vertex(label));
  }
  for (const auto& arr : a1.quiver().arrows()) {
    e1.arrow_map.push_back(q.add_arrow(arr.label, e1.vertex_map[arr.source], e1.vertex_map[arr.target]));
    arrow_labels.insert(arr.label);
  }
  for (const auto& arr : a2.quiver().arrows()) {
    std::string label = fresh_label(arr.label, arrow_labels);
    arrow_labels.insert(label);
    e2.arrow_map.push_back(q.add_arrow(label, e2.vertex_map[arr.source], e2.vertex_map[arr.target]));
  }
  std::optional<std::size_t> connecting;
  if (new_arrow) {
    std::string label = fresh_label(new_arrow_label, arrow_labels);
    connecting = q.add_arrow(label, e1.vertex_map[new_arrow->first], e2.vertex_map[new_arrow->second]);
  }
  MonomialIdeal ideal;
  auto push = [&](const BoundAlgebra& src, const Embedding& e) {
    for (const auto& g : src.ideal().generators) {
      std::vector<std::size_t> arrows;
      for (auto a : g.arrows) arrows.push_back(e.arrow_map[a]);
      ideal.generators.push_back(make_path(q, arrows));
    }
  };
  push(a1, e1);
  push(a2, e2);
  return {build_algebra(std::move(q), std::move(ideal)), std::move(e1), std::move(e2), connecting};
}

}  // namespace detail

/// Identifies v1 of a1 with v2 of a2; the ideal is generated by both component ideals.
inline GluedAlgebra glue_at_vertex(const BoundAlgebra& a1, std::size_t v1, const BoundAlgebra& a2, std::size_t v2) {
  if (v1 >= a1.num_vertices() || v2 >= a2.num_vertices()) throw InvalidInput("glue_at_vertex: vertex out of range");
  return detail::combine(a1, a2, v1, v2, std::nullopt, "");
}

/// Disjoint union plus one new arrow w -> v from a_src to a_tgt.
inline GluedAlgebra connect_by_arrow(const BoundAlgebra& a_src, std::size_t w, const BoundAlgebra& a_tgt, std::size_t v,
                                     const std::string& label = "c") {
  if (w >= a_src.num_vertices() || v >= a_tgt.num_vertices()) throw InvalidInput("connect_by_arrow: vertex out of range");
  return detail::combine(a_src, a_tgt, std::nullopt, std::nullopt, std::make_pair(w, v), label);
}

/// Same algebra with every vertex and arrow label prefixed by `prefix.`.
inline AlgebraPtr relabel(const BoundAlgebra& a, const std::string& prefix) {
  Quiver q;
  for (const auto& v : a.quiver().vertex_labels()) q.add_vertex(prefix + "." + v);
  for (const auto& arr : a.quiver().arrows()) q.add_arrow(prefix + "." + arr.label, arr.source, arr.target);
  MonomialIdeal ideal;
  for (const auto& g : a.ideal().generators) ideal.generators.push_back(make_path(q, g.arrows));
  return build_algebra(std::move(q), std::move(ideal));
}

/// Checks that (vertex_map, arrow_map) is a quiver isomorphism a -> b carrying
/// the ideal generators of a exactly onto those of b.
inline bool is_relabeling(const BoundAlgebra& a, const BoundAlgebra& b, const std::vector<std::size_t>& vertex_map,
                          const std::vector<std::size_t>& arrow_map) {
  if (a.num_vertices() != b.num_vertices() || a.num_arrows() != b.num_arrows()) return false;
  if (vertex_map.size() != a.num_vertices() || arrow_map.size() != a.num_arrows()) return false;
  if (std::set<std::size_t>(vertex_map.begin(), vertex_map.end()).size() != vertex_map.size()) return false;
  if (std::set<std::size_t>(arrow_map.begin(), arrow_map.end()).size() != arrow_map.size()) return false;
  for (std::size_t i = 0; i < a.num_arrows(); ++i) {
    if (arrow_map[i] >= b.num_arrows()) return false;
    const Arrow& x = a.quiver().arrow(i);
    const Arrow& y = b.quiver().arrow(arrow_map[i]);
    if (vertex_map[x.source] != y.source || vertex_map[x.target] != y.target) return false;
  }
  std::set<std::vector<std::size_t>> mapped, target;
  for (const auto& g : a.ideal().generators) {
    std::vector<std::size_t> m;
    for (auto x : g.arrows) m.push_back(arrow_map[x]);
    mapped.insert(m);
  }
  for (const auto& g : b.ideal().generators) target.insert(g.arrows);
  return mapped == target;
}

}  // namespace gprojlab
