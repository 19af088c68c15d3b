#include <gtest/gtest.h>

#include "support.hpp"

using namespace gprojlab;
using namespace gprojlab::testing;

// ---- scalars ----

TEST(Field, RationalLiterals) {
  EXPECT_EQ(FieldTraits<Rational>::parse("-6/4"), Rational(-3, 2));
  EXPECT_EQ(FieldTraits<Rational>::parse("7"), Rational(7));
  EXPECT_THROW(FieldTraits<Rational>::parse("1.5"), std::invalid_argument);
  EXPECT_THROW(FieldTraits<Rational>::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(FieldTraits<Rational>::parse("1e3"), std::invalid_argument);
}

TEST(Field, PrimeFieldInverses) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    PrimeField x = random_scalar<PrimeField>(rng, 1, 32002);
    EXPECT_EQ((x * (PrimeField(1) / x)).value(), 1u);
  }
  EXPECT_EQ(FieldTraits<PrimeField>::parse("1/2").value(), 16002u);
  EXPECT_THROW(FieldTraits<PrimeField>::parse("1/32003"), std::invalid_argument);
}

// ---- matrices ----

template <class K>
Matrix<K> random_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng) {
  Matrix<K> m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = random_scalar<K>(rng, -2, 2);
  return m;
}

template <class K>
class MatrixProps : public ::testing::Test {};
using Fields = ::testing::Types<Rational, PrimeField>;
TYPED_TEST_SUITE(MatrixProps, Fields);

TYPED_TEST(MatrixProps, RankNullity) {
  using K = TypeParam;
  std::mt19937_64 rng(11);
  for (int t = 0; t < 60; ++t) {
    auto m = random_matrix<K>(1 + t % 5, 1 + (t / 5) % 6, rng);
    auto n = nullspace(m);
    EXPECT_EQ(rank(m) + n.cols(), m.cols());
    EXPECT_TRUE((m * n).is_zero());
    EXPECT_EQ(rank(n), n.cols());
  }
}

TYPED_TEST(MatrixProps, SolveAndInverse) {
  using K = TypeParam;
  std::mt19937_64 rng(12);
  for (int t = 0; t < 40; ++t) {
    auto a = random_matrix<K>(4, 3, rng);
    auto x = random_matrix<K>(3, 2, rng);
    auto b = a * x;
    auto sol = solve(a, b);
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(a * *sol, b);
    auto g = random_invertible<K>(4, rng);
    EXPECT_EQ(g * *inverse(g), Matrix<K>::identity(4));
  }
}

TYPED_TEST(MatrixProps, CayleyHamilton) {
  using K = TypeParam;
  std::mt19937_64 rng(13);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 1 + t % 5;
    auto a = random_matrix<K>(n, n, rng);
    auto c = characteristic_polynomial(a);
    ASSERT_EQ(c.size(), n + 1);
    Matrix<K> acc(n, n), power = Matrix<K>::identity(n);
    for (std::size_t k = 0; k <= n; ++k) {
      Matrix<K> term = power;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) term(i, j) *= c[k];
      acc = acc + term;
      power = power * a;
    }
    EXPECT_TRUE(acc.is_zero());
  }
}

TYPED_TEST(MatrixProps, ComplementAndIntersection) {
  using K = TypeParam;
  std::mt19937_64 rng(14);
  for (int t = 0; t < 30; ++t) {
    auto a = column_basis(random_matrix<K>(5, 2, rng));
    auto b = column_basis(random_matrix<K>(5, 4, rng));
    auto comp = complement_basis(a);
    EXPECT_EQ(rank(hstack<K>({a, comp}, 5)), 5u);
    auto meet = intersect_spans(a, b);
    EXPECT_EQ(meet.cols(), a.cols() + b.cols() - rank(hstack<K>({a, b}, 5)));
  }
}

// ---- quivers and bound algebras ----

TEST(Quiver, PathBasisMatchesBruteForce) {
  std::vector<AlgebraPtr> algs{s3(), a2(), nakayama_cyclic(4, 3), nakayama_linear(5, {{4, 2}, {5, 3}}), two_loop(),
                               two_s3_at_vertex()};
  for (const auto& a : algs) {
    const auto& q = a->quiver();
    std::size_t count = q.num_vertices();
    for (const auto& w : all_walks(q, a->length_bound() + 1))
      if (!walk_in_ideal(w, a->ideal())) {
        ++count;
        EXPECT_TRUE(a->find_path(w).has_value());
        EXPECT_LT(w.size(), a->length_bound());
      } else {
        EXPECT_FALSE(a->find_path(w).has_value());
      }
    EXPECT_EQ(a->dimension(), count);
  }
}

TEST(Quiver, KnownDimensions) {
  EXPECT_EQ(s3()->dimension(), 6u);
  EXPECT_EQ(a2()->dimension(), 3u);
  EXPECT_EQ(nakayama_linear(4)->dimension(), 10u);
  EXPECT_EQ(two_loop()->dimension(), 3u);
  // Five vertices, six arrows, and the two length-two paths through the glued
  // vertex that pass from one triangle into the other.
  EXPECT_EQ(two_s3_at_vertex()->dimension(), 13u);
}

TEST(Quiver, NonAdmissibleIsRejectedWithWitness) {
  Quiver q;
  q.add_vertex("1");
  q.add_vertex("2");
  q.add_arrow("a", 0, 1);
  q.add_arrow("b", 1, 0);
  MonomialIdeal ideal;
  try {
    build_algebra(q, ideal);
    FAIL() << "expected NotAdmissible";
  } catch (const NotAdmissible& e) {
    EXPECT_GE(e.witness().length(), 2u);
    EXPECT_EQ(e.witness().source, e.witness().target);
  }
  // Killing a.b is enough: every long walk around the cycle contains it.
  ideal.generators.push_back(make_path(q, {0, 1}));
  EXPECT_NO_THROW(build_algebra(q, ideal));
}

TEST(Quiver, CyclicNakayamaDimension) {
  // Each vertex starts one path of every length below len.
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t len = 2; len <= 5; ++len) EXPECT_EQ(nakayama_cyclic(n, len)->dimension(), n * len);
}

TEST(Quiver, NakayamaRecognition) {
  EXPECT_TRUE(s3()->is_nakayama());
  EXPECT_TRUE(a2()->is_nakayama());
  EXPECT_FALSE(two_loop()->is_nakayama());
  EXPECT_FALSE(two_s3_at_vertex()->is_nakayama());
}

TEST(Quiver, OppositeIsInvolutive) {
  for (const auto& a : {s3(), nakayama_linear(4, {{4, 2}}), two_s3_at_vertex()}) {
    auto op = opposite_algebra(*a);
    EXPECT_EQ(op->dimension(), a->dimension());
    auto back = opposite_algebra(*op);
    EXPECT_EQ(serialize_algebra(*back), serialize_algebra(*a));
  }
}

TEST(Quiver, GluingEmbeddingsAreRelabelings) {
  auto g = connect_by_arrow(*s3(), 0, *a2(), 1, "c");
  EXPECT_EQ(g.algebra->num_vertices(), 5u);
  EXPECT_EQ(g.algebra->num_arrows(), 5u);
  ASSERT_TRUE(g.connecting_arrow.has_value());
  const Arrow& c = g.algebra->quiver().arrow(*g.connecting_arrow);
  EXPECT_EQ(c.source, g.first.vertex_map[0]);
  EXPECT_EQ(c.target, g.second.vertex_map[1]);
  auto v = glue_at_vertex(*s3(), 0, *s3(), 0);
  EXPECT_EQ(v.first.vertex_map[0], v.second.vertex_map[0]);
  EXPECT_EQ(v.algebra->num_vertices(), 5u);
}
