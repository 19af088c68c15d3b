#pragma once

// JSON and markdown renderings of analysis results. JSON objects keep
// insertion order so equal inputs give byte-identical output.

#include <string>
#include <vector>

#include <json.hpp>

#include "gprojlab/qspec.hpp"

namespace gprojlab {

using Json = nlohmann::ordered_json;

constexpr int kReportSchema = 1;

inline Json algebra_summary(const BoundAlgebra& a, const std::string& name) {
  const Quiver& q = a.quiver();
  Json arrows = Json::array();
  for (const auto& arr : q.arrows())
    arrows.push_back({{"label", arr.label}, {"source", q.vertex_label(arr.source)}, {"target", q.vertex_label(arr.target)}});
  Json relations = Json::array();
  for (const auto& g : a.ideal().generators) relations.push_back(path_to_string(q, g));
  return Json{{"name", name},
              {"vertices", q.vertex_labels()},
              {"arrows", arrows},
              {"relations", relations},
              {"dimension", a.dimension()},
              {"nakayama", a.is_nakayama()},
              {"canonical", serialize_algebra(a, name)}};
}

template <class K>
Json module_json(const Representation<K>& m, const std::string& label) {
  return Json{{"label", label}, {"dims", m.dims()}, {"text", serialize_module(m, label)}};
}

template <class K>
Json morphism_json(const Morphism<K>& f) {
  Json comps = Json::array();
  for (const auto& c : f.components) comps.push_back(serialize_matrix(c));
  return Json{{"source", serialize_module(f.source, "source")},
              {"target", serialize_module(f.target, "target")},
              {"components", comps}};
}

template <class K>
Json certificate_json(const DimensionCertificate<K>& c) {
  Json j{{"summary", c.to_string()}};
  switch (c.kind) {
    case DimensionCertificate<K>::Kind::Finite:
      j["kind"] = "finite";
      j["value"] = c.value;
      break;
    case DimensionCertificate<K>::Kind::Infinite: {
      j["kind"] = "infinite";
      j["entry_degree"] = c.entry_degree;
      j["period"] = c.period();
      Json chain = Json::array(), cycle = Json::array();
      for (std::size_t i = 0; i < c.chain.size(); ++i) chain.push_back(serialize_module(c.chain[i], "C" + std::to_string(i)));
      for (std::size_t i = 0; i < c.cycle.size(); ++i) cycle.push_back(serialize_module(c.cycle[i], "Z" + std::to_string(i)));
      j["chain"] = chain;
      j["cycle"] = cycle;
      if (c.periodic_iso) j["periodic_iso"] = morphism_json(*c.periodic_iso);
      break;
    }
    default:
      j["kind"] = "undetermined";
      j["bound"] = c.value;
  }
  return j;
}

namespace detail {

template <class K>
Matrix<K> matrix_from_text(const std::string& text, std::size_t rows, std::size_t cols) {
  // Reuses the module grammar on a one-arrow quiver of the right shape.
  Quiver q;
  q.add_vertex("s");
  q.add_vertex("t");
  q.add_arrow("f", 0, 1);
  auto alg = build_algebra(std::move(q), {});
  auto r = parse_module<K>("dims: " + std::to_string(cols) + " " + std::to_string(rows) + "; map f = " + text + ";", alg);
  return r.action(0);
}

}  // namespace detail

/// Rebuilds a certificate from its JSON form over `algebra`, so it can be
/// checked again without recomputing anything that produced it.
template <class K>
DimensionCertificate<K> certificate_from_json(const Json& j, const AlgebraPtr& algebra) {
  DimensionCertificate<K> c;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "finite") return DimensionCertificate<K>::make_finite(j.at("value").get<std::size_t>());
  if (kind == "undetermined") return DimensionCertificate<K>::make_undetermined(j.at("bound").get<std::size_t>());
  c.kind = DimensionCertificate<K>::Kind::Infinite;
  c.entry_degree = j.at("entry_degree").get<std::size_t>();
  for (const auto& t : j.at("chain")) c.chain.push_back(parse_module<K>(t.get<std::string>(), algebra));
  for (const auto& t : j.at("cycle")) c.cycle.push_back(parse_module<K>(t.get<std::string>(), algebra));
  if (j.contains("periodic_iso")) {
    const Json& f = j.at("periodic_iso");
    auto s = parse_module<K>(f.at("source").get<std::string>(), algebra);
    auto t = parse_module<K>(f.at("target").get<std::string>(), algebra);
    std::vector<Matrix<K>> comps;
    for (std::size_t v = 0; v < algebra->num_vertices(); ++v)
      comps.push_back(detail::matrix_from_text<K>(f.at("components").at(v).get<std::string>(), t.dim(v), s.dim(v)));
    c.periodic_iso = Morphism<K>{s, t, std::move(comps)};
    c.value = j.at("period").get<std::size_t>();
  }
  return c;
}

template <class K>
Json gorenstein_json(const GorensteinReport<K>& r) {
  Json j;
  if (r.gorenstein == Verdict::Unknown)
    j["gorenstein"] = nullptr;
  else
    j["gorenstein"] = r.gorenstein == Verdict::Yes;
  j["verdict"] = to_string(r.gorenstein);
  if (r.gd)
    j["gd"] = *r.gd;
  else
    j["gd"] = nullptr;
  j["bound"] = r.bound;
  j["cross_check"] = r.cross_check;
  const Quiver& q = r.algebra->quiver();
  Json id = Json::array(), pd = Json::array();
  for (std::size_t v = 0; v < q.num_vertices(); ++v) {
    id.push_back({{"vertex", q.vertex_label(v)}, {"over", "opposite"}, {"module", "D P(" + q.vertex_label(v) + ")"},
                  {"certificate", certificate_json(r.id_projectives[v])}});
    pd.push_back({{"vertex", q.vertex_label(v)}, {"over", "algebra"}, {"module", "I(" + q.vertex_label(v) + ")"},
                  {"certificate", certificate_json(r.pd_injectives[v])}});
  }
  j["id_projectives"] = id;
  j["pd_injectives"] = pd;
  return j;
}

inline Json table_json(const StableHomTable& t) { return Json{{"labels", t.labels}, {"dims", t.dims}}; }

template <class K>
Json gproj_json(const GprojList<K>& list) {
  Json mods = Json::array();
  for (std::size_t i = 0; i < list.modules.size(); ++i) mods.push_back(module_json(list.modules[i], list.labels[i]));
  return Json{{"strategy", list.strategy}, {"complete", list.complete}, {"note", list.note}, {"count", list.modules.size()},
              {"modules", mods}};
}

inline Json orbits_json(const std::vector<std::vector<std::size_t>>& orbits, const std::vector<std::string>& labels) {
  Json out = Json::array();
  for (const auto& o : orbits) {
    Json orbit = Json::array();
    for (auto i : o) orbit.push_back(labels.at(i));
    out.push_back(orbit);
  }
  return out;
}

template <class K>
Json recollement_json(const RecollementWitness<K>& w) {
  Json checks = Json::array();
  for (const auto& c : w.checks)
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"samples", c.samples}, {"detail", c.detail}});
  Json j{{"passed", w.passed()}, {"sample_size", w.sample_size}, {"seed", w.seed}, {"checks", checks}};
  if (w.failing_check) {
    j["failing_check"] = *w.failing_check;
    j["counterexample_detail"] = w.counterexample_detail;
    if (w.counterexample) j["counterexample"] = serialize_module(*w.counterexample, "counterexample");
  }
  return j;
}

template <class K>
Json decomposition_json(const DecompositionEvidence<K>& ev) {
  Json comps = Json::array();
  for (std::size_t c = 0; c < ev.component_names.size(); ++c) {
    Json cj{{"name", ev.component_names[c]}};
    if (c < ev.component_reports.size()) cj["gd"] = ev.component_reports[c].gd ? Json(*ev.component_reports[c].gd) : Json(nullptr);
    if (c < ev.component_lists.size()) cj["gproj"] = gproj_json(ev.component_lists[c]);
    if (c < ev.component_tables.size()) cj["stable_table"] = table_json(ev.component_tables[c]);
    comps.push_back(cj);
  }
  Json images = Json::array();
  for (std::size_t i = 0; i < ev.images.size(); ++i) {
    auto m = module_json(ev.images[i], ev.labels[i]);
    m["block"] = ev.block_of[i];
    images.push_back(m);
  }
  Json j{{"passed", ev.passed},
         {"failure", ev.failure},
         {"steps",
          {{"images_gorenstein_projective", ev.images_gproj},
           {"pairwise_distinct", ev.pairwise_distinct},
           {"block_diagonal", ev.block_diagonal},
           {"blocks_match_components", ev.blocks_match},
           {"complete", ev.complete}}},
         {"completeness", ev.completeness_detail},
         {"components", comps},
         {"images", images},
         {"stable_table", table_json(ev.table)},
         {"omega_orbits", orbits_json(ev.orbits, ev.labels)}};
  if (ev.root_report) j["gorenstein"] = gorenstein_json(*ev.root_report);
  return j;
}

inline Json gd_bounds_json(const GdBoundEvidence& ev, const GluingTree& tree) {
  Json nodes = Json::array();
  auto opt = [](const std::optional<std::size_t>& x) { return x ? Json(*x) : Json(nullptr); };
  for (const auto& n : ev.nodes)
    nodes.push_back({{"node", n.node},
                     {"kind", n.kind},
                     {"left", tree.node(tree.node(n.node).left).name.empty() ? Json(tree.node(n.node).left) : Json(tree.node(tree.node(n.node).left).name)},
                     {"right", tree.node(tree.node(n.node).right).name.empty() ? Json(tree.node(n.node).right) : Json(tree.node(tree.node(n.node).right).name)},
                     {"rule", n.rule},
                     {"gd", opt(n.gd)},
                     {"gd_left", opt(n.gd_left)},
                     {"gd_right", opt(n.gd_right)},
                     {"applicable", n.applicable},
                     {"passed", n.passed},
                     {"detail", n.detail}});
  return Json{{"passed", ev.passed}, {"nodes", nodes}};
}

template <class K>
Json defect_json(const DefectHypothesis<K>& d) {
  return Json{{"passed", d.pd.finite()},
              {"multiplicity", d.multiplicity},
              {"hom_module", serialize_module(d.hom_module, "HomAM")},
              {"pd", certificate_json(d.pd)}};
}

// ---------------------------------------------------------------------------
// Markdown

namespace detail {

inline bool is_table(const Json& j) {
  return j.is_object() && j.size() == 2 && j.contains("labels") && j.contains("dims") && j.at("dims").is_array();
}

inline std::string table_markdown(const Json& t) {
  const auto& labels = t.at("labels");
  std::string out = "| |";
  for (const auto& l : labels) out += " " + l.get<std::string>() + " |";
  out += "\n|---|";
  for (std::size_t i = 0; i < labels.size(); ++i) out += "---|";
  out += "\n";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    out += "| " + labels[i].get<std::string>() + " |";
    for (const auto& d : t.at("dims")[i]) out += " " + d.dump() + " |";
    out += "\n";
  }
  return out;
}

inline std::string scalar_markdown(const Json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s.find('\n') != std::string::npos) return "\n\n```\n" + s + "```\n";
    return s;
  }
  return j.dump();
}

inline void markdown_rec(const Json& j, const std::string& key, int depth, std::string& out) {
  const std::string heading(std::min(depth, 6), '#');
  if (is_table(j)) {
    out += heading + " " + key + "\n\n" + table_markdown(j) + "\n";
  } else if (j.is_object()) {
    out += heading + " " + key + "\n\n";
    std::string scalars;
    for (auto it = j.begin(); it != j.end(); ++it)
      if (!it.value().is_structured()) scalars += "- **" + it.key() + "**: " + scalar_markdown(it.value()) + "\n";
    if (!scalars.empty()) out += scalars + "\n";
    for (auto it = j.begin(); it != j.end(); ++it)
      if (it.value().is_structured()) markdown_rec(it.value(), it.key(), depth + 1, out);
  } else if (j.is_array()) {
    if (std::all_of(j.begin(), j.end(), [](const Json& x) { return !x.is_structured(); })) {
      out += "- **" + key + "**: " + j.dump() + "\n\n";
      return;
    }
    out += heading + " " + key + "\n\n";
    for (std::size_t i = 0; i < j.size(); ++i) markdown_rec(j[i], key + " [" + std::to_string(i) + "]", depth + 1, out);
  } else {
    out += "- **" + key + "**: " + scalar_markdown(j) + "\n";
  }
}

}  // namespace detail

inline std::string render_markdown(const Json& doc, const std::string& title = "gprojlab report") {
  std::string out;
  detail::markdown_rec(doc, title, 1, out);
  return out;
}

enum class ReportFormat { Json, Markdown };

/// One document per analysis; an empty set renders as `[]`.
inline std::string emit_report(const std::vector<Json>& analyses, ReportFormat format) {
  if (format == ReportFormat::Json) {
    if (analyses.size() == 1) return analyses.front().dump(2) + "\n";
    Json arr = Json::array();
    for (const auto& a : analyses) arr.push_back(a);
    return arr.dump(2) + "\n";
  }
  if (analyses.empty()) return "[]\n";
  std::string out;
  for (const auto& a : analyses) out += render_markdown(a);
  return out;
}

}  // namespace gprojlab
