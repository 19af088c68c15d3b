#include <gtest/gtest.h>

#include "support.hpp"

using namespace gprojlab;
using namespace gprojlab::testing;

namespace {

std::vector<AlgebraPtr> test_algebras() {
  return {a2(), s3(), two_s3_at_vertex(), nakayama_linear(4, {{4, 2}}), nakayama_cyclic(2, 3)};
}

}  // namespace

// ---- representations ----

TEST(Rep, ProjectiveDimensionVectorCountsPaths) {
  for (const auto& a : test_algebras())
    for (std::size_t v = 0; v < a->num_vertices(); ++v) {
      auto p = projective<Rational>(a, v);
      for (std::size_t x = 0; x < a->num_vertices(); ++x) EXPECT_EQ(p.dim(x), a->paths_between(v, x).size());
      EXPECT_FALSE(validate_rep(p).has_value());
    }
}

TEST(Rep, YonedaForProjectivesAndInjectives) {
  // Hom(P(v), M) = M_v and Hom(M, I(v)) = M_v.
  for (const auto& a : test_algebras()) {
    auto ms = random_modules<Rational>(a, 8, 21);
    for (const auto& m : ms)
      for (std::size_t v = 0; v < a->num_vertices(); ++v) {
        EXPECT_EQ(hom_dim(projective<Rational>(a, v), m), m.dim(v));
        EXPECT_EQ(hom_dim(m, injective<Rational>(a, v)), m.dim(v));
      }
  }
}

TEST(Rep, HomBasisElementsCommute) {
  for (const auto& a : test_algebras()) {
    auto ms = random_modules<Rational>(a, 6, 22);
    for (std::size_t i = 0; i + 1 < ms.size(); ++i)
      for (const auto& f : hom_basis(ms[i], ms[i + 1])) EXPECT_TRUE(f.commutes());
  }
}

TEST(Rep, DualIsInvolutive) {
  for (const auto& a : test_algebras()) {
    auto op = opposite_algebra(*a);
    for (const auto& m : random_modules<Rational>(a, 6, 23)) {
      auto back = dual(dual(m, op), a);
      EXPECT_EQ(back, m);
    }
  }
}

TEST(Rep, KernelImageCokernelDimensions) {
  for (const auto& a : test_algebras()) {
    std::mt19937_64 rng(24);
    auto op = opposite_algebra(*a);
    for (int t = 0; t < 10; ++t) {
      auto ses = random_short_exact<Rational>(a, op, rng);
      EXPECT_TRUE(is_short_exact(ses));
      EXPECT_TRUE(ses.alpha.commutes());
      EXPECT_TRUE(ses.beta.commutes());
    }
  }
}

TEST(Rep, RadicalLayersOfProjectivesOverNakayama) {
  auto a = nakayama_cyclic(3, 3);
  for (std::size_t v = 0; v < 3; ++v) {
    auto p = projective<Rational>(a, v);
    EXPECT_TRUE(is_uniserial(p));
    EXPECT_EQ(loewy_length(p), 3u);
  }
}

// ---- homological algebra ----

TEST(Homalg, ExtMatchesCocycleOracle) {
  for (const auto& a : test_algebras()) {
    auto ms = random_modules<Rational>(a, 12, 31);
    auto ns = random_modules<Rational>(a, 12, 32);
    for (std::size_t i = 0; i < ms.size(); ++i) EXPECT_EQ(ext_dim(1, ms[i], ns[i]), ext1_cocycle_oracle(ms[i], ns[i]));
  }
}

TEST(Homalg, ExtOneFromLongExactSequence) {
  // 0 -> Hom(M,N) -> Hom(P0,N) -> Hom(Omega M,N) -> Ext^1(M,N) -> 0.
  for (const auto& a : test_algebras()) {
    auto ms = random_modules<Rational>(a, 8, 33);
    auto ns = random_modules<Rational>(a, 8, 34);
    for (std::size_t i = 0; i < ms.size(); ++i) {
      auto cover = projective_cover(ms[i]);
      auto omega = syzygy(ms[i]);
      const long expected = static_cast<long>(hom_dim(omega, ns[i])) - static_cast<long>(hom_dim(cover.projective, ns[i])) +
                            static_cast<long>(hom_dim(ms[i], ns[i]));
      EXPECT_EQ(static_cast<long>(ext_dim(1, ms[i], ns[i])), expected);
    }
  }
}

TEST(Homalg, DimensionShift) {
  for (const auto& a : test_algebras()) {
    auto ms = random_modules<Rational>(a, 6, 35);
    auto ns = random_modules<Rational>(a, 6, 36);
    for (std::size_t i = 0; i < ms.size(); ++i)
      for (std::size_t k = 1; k <= 2; ++k) EXPECT_EQ(ext_dim(k + 1, ms[i], ns[i]), ext_dim(k, syzygy(ms[i]), ns[i]));
  }
}

TEST(Homalg, ProjectiveDimensionsOnLinearQuiver) {
  // Hereditary A_n: pd S_1 = 0 (it is projective), pd S_v = 1 otherwise.
  auto a = nakayama_linear(4);
  EXPECT_TRUE(proj_dim(simple<Rational>(a, 0)).finite());
  EXPECT_EQ(proj_dim(simple<Rational>(a, 0)).value, 0u);
  for (std::size_t v = 1; v < 4; ++v) EXPECT_EQ(proj_dim(simple<Rational>(a, v)).value, 1u);
  // Radical square zero A_4: pd S_v = v - 1.
  auto r = nakayama_linear(4, {{3, 2}, {4, 2}});
  for (std::size_t v = 0; v < 4; ++v) EXPECT_EQ(proj_dim(simple<Rational>(r, v)).value, v);
}

TEST(Homalg, InfiniteCertificatesReverify) {
  for (const auto& a : {s3(), two_loop(), nakayama_cyclic(2, 3)}) {
    for (std::size_t v = 0; v < a->num_vertices(); ++v) {
      auto s = simple<Rational>(a, v);
      auto c = proj_dim(s, default_bound(*a));
      ASSERT_TRUE(c.infinite()) << c.to_string();
      EXPECT_TRUE(verify_certificate(s, c));
      auto sp = simple<PrimeField>(a, v);
      auto cp = proj_dim(sp, default_bound(*a));
      ASSERT_TRUE(cp.infinite());
      EXPECT_TRUE(verify_certificate(sp, cp));
    }
  }
}

TEST(Homalg, TamperedCertificateIsRejected) {
  auto a = s3();
  auto s = simple<Rational>(a, 0);
  auto c = proj_dim(s, 20);
  ASSERT_TRUE(c.infinite());
  auto bad = c;
  bad.cycle.front() = simple<Rational>(a, 1);
  EXPECT_FALSE(verify_certificate(s, bad));
  EXPECT_FALSE(verify_certificate(s, DimensionCertificate<Rational>::make_finite(1)));
}

TEST(Homalg, UndeterminedAtTinyBound) {
  auto c = proj_dim(simple<Rational>(nakayama_linear(5), 4), 0);
  EXPECT_TRUE(c.undetermined());
}

TEST(Homalg, IsomorphismUnderChangeOfBasis) {
  std::mt19937_64 rng(41);
  for (const auto& a : test_algebras())
    for (const auto& m : random_modules<Rational>(a, 6, 42)) {
      auto [c, g] = conjugate(m, rng);
      auto r = is_isomorphic(m, c);
      ASSERT_EQ(r.verdict, IsoVerdict::Yes);
      ASSERT_TRUE(r.iso.has_value());
      EXPECT_TRUE(r.iso->commutes());
      EXPECT_TRUE(r.iso->is_isomorphism());
    }
}

TEST(Homalg, NonIsomorphicSameDimensionVector) {
  // Over A_2, S_1 + S_2 and P(2) share the dimension vector (1,1).
  auto a = a2();
  auto sum = direct_sum<Rational>({simple<Rational>(a, 0), simple<Rational>(a, 1)}, a).object;
  EXPECT_EQ(is_isomorphic(sum, projective<Rational>(a, 1)).verdict, IsoVerdict::No);
}

TEST(Homalg, DecomposeReassembles) {
  for (const auto& a : test_algebras()) {
    for (const auto& m : random_modules<Rational>(a, 6, 43)) {
      auto d = decompose(m);
      ASSERT_TRUE(d.conclusive);
      std::size_t total = 0;
      for (const auto& s : d.summands) total += s.total_dim();
      EXPECT_EQ(total, m.total_dim());
      ASSERT_TRUE(d.reassembly.has_value());
      EXPECT_TRUE(d.reassembly->commutes());
      EXPECT_TRUE(d.reassembly->is_isomorphism());
      for (const auto& s : d.summands) EXPECT_EQ(decompose(s).summands.size(), 1u);
    }
  }
}

TEST(Homalg, DecomposeKnownSums) {
  auto a = s3();
  std::vector<Representation<Rational>> parts{simple<Rational>(a, 0), projective<Rational>(a, 1), simple<Rational>(a, 0),
                                              simple<Rational>(a, 2)};
  auto d = decompose(direct_sum<Rational>(parts, a).object);
  EXPECT_EQ(d.summands.size(), 4u);
  EXPECT_EQ(d.multiplicity.size(), 3u);
}
