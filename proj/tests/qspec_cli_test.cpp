#include <gtest/gtest.h>

#include <cstdlib>

#include "support.hpp"

using namespace gprojlab;
using namespace gprojlab::testing;

namespace {

std::string sample(const std::string& name) { return std::string(GPROJLAB_SAMPLES_DIR) + "/" + name; }

/// Random quiver with random monomial relations; retried until admissible.
AlgebraPtr random_algebra(std::mt19937_64& rng) {
  for (;;) {
    Quiver q;
    const std::size_t n = 1 + rng() % 4;
    for (std::size_t v = 0; v < n; ++v) q.add_vertex("v" + std::to_string(v));
    const std::size_t arrows = rng() % 5;
    for (std::size_t a = 0; a < arrows; ++a) q.add_arrow("x" + std::to_string(a), rng() % n, rng() % n);
    MonomialIdeal ideal;
    for (const auto& w : all_walks(q, 3))
      if (w.size() >= 2 && rng() % 2 == 0 && !walk_in_ideal(w, ideal)) ideal.generators.push_back(make_path(q, w));
    try {
      return build_algebra(std::move(q), std::move(ideal));
    } catch (const NotAdmissible&) {
    }
  }
}

}  // namespace

// ---- parsing ----

TEST(Parse, HereditaryA2) {
  auto p = parse_algebra("algebra A; vertices: 1 2; arrows: a: 2 -> 1;");
  EXPECT_EQ(p.kind, ParsedAlgebra::Kind::Raw);
  EXPECT_EQ(p.algebra->dimension(), 3u);
  EXPECT_EQ(gorenstein_report<Rational>(p.algebra).dimension(), 1u);
}

TEST(Parse, NakayamaConstructorEqualsLibrary) {
  auto p = parse_algebra("nakayama cyclic n=3 len=2");
  EXPECT_EQ(serialize_algebra(*p.algebra), serialize_algebra(*nakayama_cyclic(3, 2)));
  auto l = parse_algebra("nakayama linear n=4 len=2;");
  EXPECT_EQ(serialize_algebra(*l.algebra), serialize_algebra(*nakayama_linear(4, {{3, 2}, {4, 2}})));
}

TEST(Parse, GlueTwoTriangles) {
  auto p = parse_algebra(
      "glue G { comp X = nakayama cyclic n=3 len=2; comp Y = nakayama cyclic n=3 len=2; identify X.1 = Y.1; }");
  ASSERT_EQ(p.kind, ParsedAlgebra::Kind::Glue);
  EXPECT_EQ(p.algebra->num_vertices(), 5u);
  EXPECT_EQ(p.algebra->num_arrows(), 6u);
  EXPECT_EQ(p.algebra->dimension(), two_s3_at_vertex()->dimension());
  EXPECT_EQ(p.tree->leaves().size(), 2u);
}

TEST(Parse, GlueWithInlineComponentAndConnection) {
  auto p = parse_algebra(R"(
    glue R {
      comp B = { algebra A2; vertices: 1 2; arrows: a: 2 -> 1; };
      comp T = nakayama cyclic n=3 len=2;
      connect B.1 -> T.2 as c;
    })");
  EXPECT_EQ(p.algebra->num_vertices(), 5u);
  EXPECT_TRUE(p.algebra->quiver().find_arrow("c").has_value());
}

TEST(Parse, ErrorsCarryPosition) {
  auto check = [](const std::string& text, std::size_t line, std::size_t col, const std::string& fragment) {
    auto r = try_parse_algebra(text);
    ASSERT_FALSE(r.ok()) << text;
    EXPECT_EQ(r.line, line) << r.error;
    EXPECT_EQ(r.column, col) << r.error;
    EXPECT_NE(r.error.find(fragment), std::string::npos) << r.error;
  };
  check("algebra A;\nvertices: 1 2;\narrows: a: 2 -> 3;", 3, 17, "unknown vertex '3'");
  check("algebra A; vertices: 1; arrows: ;\nrelations: a.a;", 2, 12, "unknown arrow 'a'");
  check("nakayama cyclic n=3 len=1", 1, 17, "len >= 2");
  check("glue G { comp X = nakayama cyclic n=3 len=2; identify X.1 = Y.1; }", 1, 61, "unknown component 'Y'");
  check("glue G { comp X = nakayama cyclic n=3 len=2; comp Y = nakayama cyclic n=3 len=2; }", 1, 82, "disconnected");
  // Admissibility concerns the whole presentation, so no position is attached.
  check("algebra A; vertices: 1; arrows: a: 1 -> 1;", 0, 0, "not admissible");
  check("algebra A; vertices: 1 @;", 1, 24, "unexpected character '@'");
  check("nakayama cyclic n=3 len=2 extra", 1, 27, "unexpected 'extra'");
}

TEST(Parse, ModuleExamples) {
  auto a = s3();
  auto zero = parse_module<Rational>("dims: 0 0 0;", a);
  EXPECT_TRUE(zero.is_zero());
  auto s = parse_module<Rational>("module S; dims: 0 1 0;", a);
  EXPECT_EQ(s, simple<Rational>(a, 1));
  // Vertices 1 and 2 with the arrow 2 -> 1 acting by [1]: the projective at 2.
  auto p = parse_module<Rational>("dims: 1 1 0; map a2 = [[1]];", a);
  EXPECT_EQ(p, projective<Rational>(a, 1));
  EXPECT_EQ(parse_module<Rational>(read_file(sample("module_p1.quiv")), a), projective<Rational>(a, 0));
}

TEST(Parse, ModuleErrors) {
  auto a = s3();
  auto expect_error = [&](const std::string& text, const std::string& fragment) {
    try {
      parse_module<Rational>(text, a);
      FAIL() << "accepted: " << text;
    } catch (const ParseError& e) {
      EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
    }
  };
  expect_error("dims: 1 1;", "expected 3 dimensions");
  expect_error("dims: 1 1 0; map a2 = [[1, 0]];", "rows of length 1");
  expect_error("dims: 1 1 0; map a2 = [[1], [1]];", "needs 1 rows");
  expect_error("dims: 1 1 0; map a2 = [[1.5]];", "floating literals");
  expect_error("dims: 1 1 0; map a2 = [[2e3]];", "floating literals");
  expect_error("dims: 1 1 0; map q = [[1]];", "unknown arrow 'q'");
  expect_error("dims: 1 1 1; map a2 = [[1]]; map a1 = [[1]];", "relation a2.a1 is violated");
}

TEST(Parse, FractionsAndPrimeField) {
  auto a = a2();
  auto m = parse_module<Rational>("dims: 1 1; map a1 = [[-3/6]];", a);
  EXPECT_EQ(m.action(0)(0, 0), Rational(-1, 2));
  auto mp = parse_module<PrimeField>("dims: 1 1; map a1 = [[1/2]];", a);
  EXPECT_EQ(mp.action(0)(0, 0).value(), 16002u);
}

// ---- round trips and totality ----

TEST(Serialize, AlgebraRoundTrip) {
  std::mt19937_64 rng(71);
  for (int t = 0; t < 200; ++t) {
    auto a = random_algebra(rng);
    const std::string text = serialize_algebra(*a, "R");
    auto back = parse_algebra(text);
    EXPECT_EQ(serialize_algebra(*back.algebra, back.name), text);
    EXPECT_EQ(back.algebra->dimension(), a->dimension());
  }
  // Glued algebras have dotted labels and are quoted.
  auto g = parse_algebra(read_file(sample("triangles_m3.quiv")));
  const std::string text = serialize_algebra(*g.algebra, "G3");
  EXPECT_EQ(serialize_algebra(*parse_algebra(text).algebra, "G3"), text);
}

TEST(Serialize, ModuleRoundTripIsExact) {
  std::mt19937_64 rng(72);
  for (const auto& a : {s3(), two_s3_at_vertex(), nakayama_linear(3)}) {
    for (auto m : random_modules<Rational>(a, 20, 73)) {
      // Introduce genuine fractions through a change of basis.
      m = conjugate(m, rng).first;
      auto back = parse_module<Rational>(serialize_module(m), a);
      EXPECT_EQ(back, m);
    }
  }
}

TEST(Serialize, ParserIsTotalOnArbitraryBytes) {
  std::mt19937_64 rng(74);
  const std::vector<std::string> seeds{read_file(sample("composite.quiv")), read_file(sample("arrow_a2_s3.quiv")),
                                       "algebra A; vertices: 1 2; arrows: a: 2 -> 1; relations: ;"};
  for (int t = 0; t < 3000; ++t) {
    std::string text;
    if (t % 3 == 0) {
      const std::size_t len = rng() % 80;
      for (std::size_t i = 0; i < len; ++i) text.push_back(static_cast<char>(rng() % 256));
    } else {
      text = seeds[rng() % seeds.size()];
      const std::size_t edits = 1 + rng() % 4;
      for (std::size_t e = 0; e < edits && !text.empty(); ++e) {
        const std::size_t pos = rng() % text.size();
        switch (rng() % 3) {
          case 0: text.erase(pos, 1 + rng() % 5); break;
          case 1: text.insert(pos, 1, "{};:.,=->[]\"#x19 \n"[rng() % 18]); break;
          default: text[pos] = static_cast<char>(rng() % 256);
        }
      }
    }
    auto r = try_parse_algebra(text);
    if (!r.ok()) EXPECT_FALSE(r.error.empty());
    try {
      parse_module<Rational>(text, s3());
    } catch (const Error&) {
    }
  }
}

// ---- reports ----

TEST(Report, GorensteinJsonForTriangle) {
  auto j = gorenstein_json(gorenstein_report<Rational>(s3()));
  EXPECT_EQ(j["gorenstein"], true);
  EXPECT_EQ(j["gd"], 0);
  auto h = gorenstein_json(gorenstein_report<Rational>(two_loop()));
  EXPECT_EQ(h["gorenstein"], false);
}

TEST(Report, EmptyAnalysisSet) {
  EXPECT_EQ(emit_report({}, ReportFormat::Json), "[]\n");
  EXPECT_EQ(emit_report({}, ReportFormat::Markdown), "[]\n");
}

TEST(Report, CertificatesSurviveSerialization) {
  auto a = two_loop();
  auto s = simple<Rational>(a, 0);
  auto c = proj_dim(s, default_bound(*a));
  ASSERT_TRUE(c.infinite());
  auto j = Json::parse(certificate_json(c).dump());
  auto back = certificate_from_json<Rational>(j, a);
  EXPECT_TRUE(verify_certificate(s, back));
  auto sp = simple<PrimeField>(a, 0);
  auto cp = proj_dim(sp, default_bound(*a));
  auto backp = certificate_from_json<PrimeField>(Json::parse(certificate_json(cp).dump()), a);
  EXPECT_TRUE(verify_certificate(sp, backp));
}

TEST(Report, DecompositionTableAsMarkdown) {
  RunConfig cfg;
  cfg.command = "verify";
  cfg.which = "decomposition";
  cfg.input_path = sample("triangles_m2.quiv");
  cfg.format = "md";
  auto r = run_command(cfg);
  ASSERT_EQ(r.exit_code, kExitPass);
  const std::string md = render(r, "md");
  EXPECT_NE(md.find("| | U(X.1,1) | U(X.2,1) | U(X.3,1) | U(Y.1,1) | U(Y.2,1) | U(Y.3,1) |"), std::string::npos) << md;
  EXPECT_NE(md.find("| U(X.1,1) | 1 | 0 | 0 | 0 | 0 | 0 |"), std::string::npos);
}

// ---- command line ----

namespace {

CommandResult run(const std::string& command, const std::string& file, const std::string& which = "") {
  RunConfig cfg;
  cfg.command = command;
  cfg.input_path = sample(file);
  cfg.which = which;
  return run_command(cfg);
}

}  // namespace

TEST(Cli, AnalyzeExamples) {
  auto s = run("analyze", "s3.quiv");
  EXPECT_EQ(s.exit_code, kExitPass);
  EXPECT_EQ(s.doc["certificates"]["gd"], 0);
  EXPECT_EQ(s.doc["schema"], 1);
  EXPECT_EQ(run("analyze", "a2.quiv").doc["certificates"]["gd"], 1);
  auto h = run("analyze", "two_loop.quiv");
  EXPECT_EQ(h.exit_code, kExitPass);
  EXPECT_EQ(h.doc["certificates"]["gorenstein"], false);
}

TEST(Cli, GprojExamples) {
  auto s = run("gproj", "s3.quiv");
  EXPECT_EQ(s.doc["verdicts"]["gproj_count"], 3);
  EXPECT_EQ(s.doc["verdicts"]["orbit_count"], 1);
  EXPECT_EQ(run("gproj", "a2.quiv").doc["verdicts"]["gproj_count"], 0);
  auto g = run("gproj", "triangles_m2.quiv");
  EXPECT_EQ(g.doc["verdicts"]["gproj_count"], 6);
  EXPECT_EQ(g.doc["verdicts"]["orbit_count"], 2);
}

TEST(Cli, VerifyAndControl) {
  EXPECT_EQ(run("verify", "arrow_s3_s3.quiv", "recollement").exit_code, kExitPass);
  EXPECT_EQ(run("verify", "triangles_m2.quiv", "decomposition").exit_code, kExitPass);
  RunConfig cfg;
  cfg.command = "verify";
  cfg.which = "recollement";
  cfg.control = true;
  cfg.input_path = sample("arrow_s3_s3.quiv");
  auto r = run_command(cfg);
  EXPECT_EQ(r.exit_code, kExitFailed);
  EXPECT_TRUE(r.doc["certificates"]["recollement"]["nodes"][0].contains("counterexample"));
}

TEST(Cli, CtA) {
  EXPECT_EQ(run("ct-a", "ct_a_t1.quiv").exit_code, kExitPass);
  auto r = run("ct-a", "ct_a_t3_chain.quiv");
  EXPECT_EQ(r.exit_code, kExitPass);
  EXPECT_EQ(r.doc["verdicts"]["gproj_count"], 9);
  EXPECT_EQ(r.doc["verdicts"]["blocks"], 3);
  // Without a triangle count the command refuses.
  EXPECT_EQ(run("ct-a", "arrow_s3_s3.quiv").exit_code, kExitInput);
}

TEST(Cli, ExitCodes) {
  RunConfig bad;
  bad.command = "analyze";
  bad.input_text = "algebra A; vertices: 1; arrows: a: 1 -> 2;";
  auto r = run_command(bad);
  EXPECT_EQ(r.exit_code, kExitInput);
  EXPECT_EQ(r.doc["error"]["line"], 1);
  EXPECT_EQ(run("analyze", "does_not_exist.quiv").exit_code, kExitInput);

  RunConfig tight;
  tight.command = "analyze";
  tight.input_text = "nakayama linear n=3 len=2";
  tight.bound = 1;
  EXPECT_EQ(run_command(tight).exit_code, kExitUndetermined);
}

TEST(Cli, EnvironmentBound) {
  RunConfig cfg;
  cfg.command = "analyze";
  cfg.input_text = "nakayama linear n=3 len=2";
  ::setenv("GPROJLAB_BOUND", "1", 1);
  auto r = run_command(cfg);
  ::unsetenv("GPROJLAB_BOUND");
  EXPECT_EQ(r.doc["config"]["bound"], 1);
  EXPECT_EQ(r.doc["config"]["bound_source"], "GPROJLAB_BOUND");
  EXPECT_EQ(r.exit_code, kExitUndetermined);
  auto d = run_command(cfg);
  EXPECT_EQ(d.doc["config"]["bound"], 4 * 5 + 4);
}

TEST(Cli, Deterministic) {
  for (const auto& [cmd, file] : std::vector<std::pair<std::string, std::string>>{
           {"gproj", "composite.quiv"}, {"verify", "arrow_a2_s3.quiv"}, {"ct-a", "triangles_m3.quiv"}}) {
    EXPECT_EQ(render(run(cmd, file), "json"), render(run(cmd, file), "json"));
  }
}

TEST(Cli, PrimeFieldAgrees) {
  RunConfig cfg;
  cfg.command = "gproj";
  cfg.input_path = sample("composite.quiv");
  auto rat = run_command(cfg);
  cfg.field = "p";
  auto p = run_command(cfg);
  EXPECT_EQ(rat.doc["verdicts"], p.doc["verdicts"]);
  EXPECT_EQ(rat.doc["tables"]["stable_hom"], p.doc["tables"]["stable_hom"]);
}
