// Acceptance run: one PASS/FAIL line per criterion, exit status 0 only if all pass.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include "gprojlab/cli.hpp"

using namespace gprojlab;

namespace {

using K = Rational;

AlgebraPtr s3() { return nakayama_cyclic(3, 2); }
AlgebraPtr a2() { return nakayama_linear(2); }
AlgebraPtr two_loop() {
  return parse_algebra("algebra L; vertices: 1; arrows: x: 1 -> 1, y: 1 -> 1; relations: x.x, x.y, y.x, y.y;").algebra;
}

std::string sample_path(const std::string& file) { return std::string(GPROJLAB_SAMPLES_DIR) + "/" + file; }

struct Outcome {
  bool passed = true;
  Json evidence = Json::object();
  std::string note;

  void require(bool ok, const std::string& what) {
    if (!ok && passed) note = what;
    passed = passed && ok;
  }
};

// 1. Ext^1 against the cocycle oracle.
Outcome ext_oracle() {
  Outcome o;
  const std::vector<std::pair<std::string, AlgebraPtr>> algs{
      {"A2", a2()}, {"S3", s3()}, {"S3 + S3 at a vertex", glue_at_vertex(*s3(), 0, *s3(), 0).algebra}};
  std::uint64_t seed = 100;
  for (const auto& [name, a] : algs) {
    auto ms = random_modules<K>(a, 50, seed++);
    auto ns = random_modules<K>(a, 50, seed++);
    Json rows = Json::array();
    std::size_t agree = 0;
    for (std::size_t i = 0; i < ms.size(); ++i) {
      const auto e = ext_dim(1, ms[i], ns[i]);
      const auto c = ext1_cocycle_oracle(ms[i], ns[i]);
      rows.push_back({e, c});
      if (e == c) ++agree;
    }
    o.require(agree == ms.size(), name + ": Ext^1 disagrees with the oracle");
    o.evidence[name] = {{"pairs", ms.size()}, {"agree", agree}, {"ext_vs_oracle", rows}};
  }
  return o;
}

// 2. Gorenstein verdicts with re-verified certificates.
Outcome gorenstein_engine() {
  Outcome o;
  auto record = [&](const std::string& name, const AlgebraPtr& a, Verdict want, std::optional<std::size_t> gd) {
    auto r = gorenstein_report<K>(a, default_bound(*a), 0);
    const bool reverified = verify_report(r);
    o.require(r.gorenstein == want, name + ": verdict " + to_string(r.gorenstein));
    if (gd) o.require(r.gd == gd, name + ": wrong Gd");
    o.require(reverified, name + ": certificates do not re-verify");
    o.evidence[name] = {{"report", gorenstein_json(r)}, {"reverified", reverified}};
  };
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t len = 2; len <= 4; ++len)
      record("cyclic n=" + std::to_string(n) + " len=" + std::to_string(len), nakayama_cyclic(n, len), Verdict::Yes, 0);
  for (std::size_t n = 2; n <= 5; ++n) record("A" + std::to_string(n), nakayama_linear(n), Verdict::Yes, 1);
  record("two-loop", two_loop(), Verdict::No, std::nullopt);
  return o;
}

GluingSpec arrow_spec(const std::string& name, AlgebraPtr src, const std::string& w, AlgebraPtr tgt, const std::string& v) {
  return {name, {{"B", std::move(src)}, {"A", std::move(tgt)}}, {{GluingStep::Kind::Connect, "B", w, "A", v, "c"}}, std::nullopt};
}

Outcome check_gd_bounds(const std::vector<GluingSpec>& specs, std::size_t& distinct, std::size_t& equal) {
  Outcome o;
  for (const auto& spec : specs) {
    auto tree = GluingTree::build(spec);
    auto ev = gd_bound_check<K>(tree, default_bound(*tree.algebra()), 0);
    for (const auto& n : ev.nodes) {
      o.require(n.applicable, spec.name + ": component Gd not certified");
      if (n.gd_left && n.gd_right) (*n.gd_left == *n.gd_right ? equal : distinct) += 1;
    }
    o.require(ev.passed, spec.name + ": Gd bound violated");
    o.evidence[spec.name] = gd_bounds_json(ev, tree);
  }
  return o;
}

// 3. Gd of an arrow gluing.
Outcome arrow_gd() {
  const auto lin3 = nakayama_linear(3, {{3, 2}});
  std::vector<GluingSpec> specs{
      arrow_spec("S3 -> A2", s3(), "1", a2(), "2"),
      arrow_spec("A2 -> S3", a2(), "1", s3(), "1"),
      arrow_spec("S3 -> rad2 A3", s3(), "3", lin3, "3"),
      arrow_spec("rad2 A3 -> cyclic(2,3)", lin3, "1", nakayama_cyclic(2, 3), "2"),
      arrow_spec("A4 -> cyclic(4,2)", nakayama_linear(4), "2", nakayama_cyclic(4, 2), "3"),
      arrow_spec("A2 -> rad2 A3", a2(), "2", lin3, "1"),
      arrow_spec("S3 -> S3", s3(), "1", s3(), "1"),
      arrow_spec("A2 -> A3", a2(), "1", nakayama_linear(3), "3"),
      arrow_spec("cyclic(2,3) -> S3", nakayama_cyclic(2, 3), "2", s3(), "2"),
  };
  std::size_t distinct = 0, equal = 0;
  auto o = check_gd_bounds(specs, distinct, equal);
  o.require(distinct >= 5, "fewer than five gluings with distinct component Gd");
  o.require(equal >= 1, "no gluing with equal component Gd");
  o.evidence["distinct_pairs"] = distinct;
  o.evidence["equal_pairs"] = equal;
  return o;
}

// 4. Gd <= 1 for vertex gluings of selfinjective cyclic Nakayama algebras.
Outcome vertex_gd() {
  Outcome o;
  struct Case {
    std::string name;
    std::vector<std::pair<std::string, AlgebraPtr>> comps;
    std::vector<GluingStep> steps;
  };
  using S = GluingStep;
  const std::vector<Case> cases{
      {"S3 . S3", {{"X", s3()}, {"Y", s3()}}, {{S::Kind::Identify, "X", "1", "Y", "1"}}},
      {"cyclic(2,3) . S3", {{"X", nakayama_cyclic(2, 3)}, {"Y", s3()}}, {{S::Kind::Identify, "X", "2", "Y", "1"}}},
      {"cyclic(4,2) . cyclic(2,2)",
       {{"X", nakayama_cyclic(4, 2)}, {"Y", nakayama_cyclic(2, 2)}},
       {{S::Kind::Identify, "X", "3", "Y", "2"}}},
      {"cyclic(3,3) . cyclic(2,3)",
       {{"X", nakayama_cyclic(3, 3)}, {"Y", nakayama_cyclic(2, 3)}},
       {{S::Kind::Identify, "X", "1", "Y", "1"}}},
      {"S3 . S3 . S3 chain",
       {{"X", s3()}, {"Y", s3()}, {"Z", s3()}},
       {{S::Kind::Identify, "X", "2", "Y", "1"}, {S::Kind::Identify, "Y", "3", "Z", "1"}}},
      {"cyclic(2,2) . cyclic(3,4)",
       {{"X", nakayama_cyclic(2, 2)}, {"Y", nakayama_cyclic(3, 4)}},
       {{S::Kind::Identify, "X", "1", "Y", "3"}}},
  };
  for (const auto& c : cases) {
    auto tree = GluingTree::build({c.name, c.comps, c.steps, std::nullopt});
    auto r = gorenstein_report<K>(tree.algebra(), default_bound(*tree.algebra()), 0);
    o.require(r.certified(), c.name + ": not certified Gorenstein");
    o.require(r.certified() && *r.gd <= 1, c.name + ": Gd exceeds 1");
    o.evidence[c.name] = gorenstein_json(r);
  }
  return o;
}

// 5. Recollement axioms on arrow gluings, plus the corrupted control.
Outcome recollement() {
  Outcome o;
  const std::vector<std::pair<std::string, ArrowGluing>> cases{
      {"S3 -> S3", ArrowGluing::make(s3(), 0, s3(), 0)},
      {"A2 -> S3", ArrowGluing::make(a2(), 0, s3(), 1)},
      {"S3 -> rad2 A3", ArrowGluing::make(s3(), 2, nakayama_linear(3, {{3, 2}}), 2)},
  };
  for (const auto& [name, g] : cases) {
    auto w = verify_recollement<K>(g, 20, 0);
    o.require(w.passed(), name + ": " + (w.failing_check ? *w.failing_check : std::string("?")));
    o.evidence[name] = recollement_json(w);
  }
  const auto& g = cases.front().second;
  auto bad = verify_recollement<K>(g, cli_detail::corrupted_functors<K>(g), 20, 0);
  o.require(!bad.passed(), "corrupted functors were accepted");
  o.require(bad.failing_check.has_value() && bad.counterexample.has_value(), "control failure has no counterexample");
  o.evidence["control"] = recollement_json(bad);
  return o;
}

// 6. Gproj of a gluing tree decomposes into the component pieces.
Outcome decomposition() {
  Outcome o;
  const std::vector<std::pair<std::string, std::vector<std::size_t>>> cases{
      {"triangles_m2.quiv", {3, 3}}, {"triangles_m3.quiv", {3, 3, 3}}, {"composite.quiv", {3, 0, 3}}};
  for (const auto& [file, sizes] : cases) {
    auto parsed = parse_algebra(read_file(sample_path(file)));
    const auto& tree = *parsed.tree;
    auto ev = verify_gproj_decomposition<K>(tree, default_bound(*tree.algebra()), 0);
    std::vector<std::size_t> got;
    for (const auto& l : ev.component_lists) got.push_back(l.modules.size());
    std::vector<std::size_t> want = sizes;
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    o.require(ev.passed, file + ": " + ev.failure);
    o.require(ev.block_diagonal && ev.blocks_match && ev.complete, file + ": table or completeness check failed");
    o.require(got == want, file + ": unexpected component counts");
    o.evidence[file] = decomposition_json(ev);
  }
  return o;
}

// 7. Cluster-tilted type A count through the CLI command.
Outcome cluster_tilted() {
  Outcome o;
  const std::vector<std::pair<std::string, std::size_t>> cases{
      {"ct_a_t1.quiv", 1}, {"triangles_m2.quiv", 2}, {"ct_a_t3_chain.quiv", 3}};
  for (const auto& [file, t] : cases) {
    RunConfig cfg;
    cfg.command = "ct-a";
    cfg.input_path = sample_path(file);
    auto r = run_command(cfg);
    o.require(r.exit_code == kExitPass, file + ": exit code " + std::to_string(r.exit_code));
    const auto& v = r.doc["verdicts"];
    o.require(v.value("gproj_count", std::size_t{0}) == 3 * t, file + ": wrong object count");
    o.require(v.value("blocks", std::size_t{0}) == t, file + ": wrong block count");
    o.evidence[file] = r.doc;
  }
  return o;
}

// 8. Homological self-consistency.
Outcome homalg_consistency() {
  Outcome o;
  const std::vector<AlgebraPtr> algs{a2(), s3(), nakayama_linear(4, {{4, 2}}), nakayama_cyclic(2, 3),
                                     glue_at_vertex(*s3(), 0, *s3(), 0).algebra};
  std::size_t shift = 0, shift_ok = 0, reassembled = 0, reassembled_ok = 0;
  for (std::size_t i = 0; i < 30; ++i) {
    const auto& a = algs[i % algs.size()];
    auto m = random_modules<K>(a, 1, 500 + i).front();
    auto n = random_modules<K>(a, 1, 800 + i).front();
    for (std::size_t k = 1; k <= 2; ++k) {
      ++shift;
      if (ext_dim(k + 1, m, n) == ext_dim(k, syzygy(m), n)) ++shift_ok;
    }
    ++reassembled;
    auto d = decompose(m, 0);
    if (d.conclusive && d.reassembly && d.reassembly->commutes() && d.reassembly->is_isomorphism()) ++reassembled_ok;
  }
  o.require(shift == shift_ok, "dimension shift fails");
  o.require(reassembled == reassembled_ok, "reassembly is not an isomorphism");

  Json witnesses = Json::array();
  for (const auto& a : {s3(), two_loop(), nakayama_cyclic(2, 3)})
    for (std::size_t v = 0; v < a->num_vertices(); ++v) {
      auto s = simple<K>(a, v);
      auto c = proj_dim(s, default_bound(*a), 0);
      const bool ok = c.infinite() && verify_certificate(s, c, 0);
      o.require(ok, "infinite witness fails to re-verify");
      witnesses.push_back({{"vertex", v}, {"certificate", certificate_json(c)}, {"reverified", ok}});
    }
  o.evidence = {{"dimension_shift", {{"checks", shift}, {"agree", shift_ok}}},
                {"reassembly", {{"samples", reassembled}, {"isomorphisms", reassembled_ok}}},
                {"infinite_witnesses", witnesses}};
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Ext^1 equals the cocycle oracle", ext_oracle},
      {"Gorenstein verdicts with certificates", gorenstein_engine},
      {"arrow gluing Gd bounds", arrow_gd},
      {"vertex gluing of cyclic Nakayama has Gd <= 1", vertex_gd},
      {"recollement axioms and negative control", recollement},
      {"Gproj decomposition over gluing trees", decomposition},
      {"cluster-tilted type A count", cluster_tilted},
      {"homological self-consistency", homalg_consistency},
  };
  bool all = true;
  std::vector<std::string> first_run;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.passed = false;
      o.note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    first_run.push_back(o.evidence.dump());
    all = all && o.passed;
    std::printf("%s criterion %zu: %s (%.2fs)%s%s\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs,
                o.note.empty() ? "" : " - ", o.note.c_str());
  }

  // 9. A second run of everything must reproduce the evidence byte for byte.
  std::vector<std::size_t> differing;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string again;
    try {
      again = criteria[i].second().evidence.dump();
    } catch (const std::exception&) {
    }
    if (again != first_run[i]) differing.push_back(i + 1);
  }
  const bool deterministic = differing.empty();
  all = all && deterministic;
  std::string note;
  for (auto d : differing) note += (note.empty() ? " - differs: " : ", ") + std::to_string(d);
  std::printf("%s criterion 9: repeated runs give identical evidence%s\n", deterministic ? "PASS" : "FAIL", note.c_str());
  std::fflush(stdout);

  // Optional: write the evidence of the first run to the given path.
  if (argc > 1) {
    Json all_evidence = Json::object();
    for (std::size_t i = 0; i < criteria.size(); ++i) all_evidence[std::to_string(i + 1)] = Json::parse(first_run[i]);
    std::ofstream(argv[1]) << all_evidence.dump(2) << "\n";
  }
  return all ? 0 : 1;
}
