#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "oracles.hpp"
#include "subcode/error.hpp"
#include "subcode/subspace.hpp"

using namespace subcode;

namespace {

Subspace span_of(const Field& f, int n, std::vector<Vector> gens) { return Subspace::span(f, n, gens); }

Vector e(int n, int i) {
  Vector v(n, 0);
  v[i] = 1;
  return v;
}

Subspace random_subspace(const Field& f, int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> count(0, n + 1), elem(0, f->q() - 1);
  std::vector<Vector> gens(count(rng), Vector(n));
  for (auto& g : gens)
    for (auto& x : g) x = static_cast<Elem>(elem(rng));
  return Subspace::span(f, n, gens);
}

}  // namespace

TEST(Subspace, CanonicalizeExamples) {
  const Field f2 = make_field(2);
  const Subspace s = span_of(f2, 3, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
  EXPECT_EQ(s.dim(), 2);
  EXPECT_EQ(s.basis(), (std::vector<Vector>{{1, 0, 1}, {0, 1, 1}}));
  EXPECT_TRUE(span_of(f2, 3, {}).is_zero());

  const Field f3 = make_field(3);
  const Subspace t = span_of(f3, 2, {{2, 0}, {1, 0}});
  EXPECT_EQ(t.dim(), 1);
  EXPECT_EQ(t.basis(), (std::vector<Vector>{{1, 0}}));
}

TEST(Subspace, SumAndIntersectionExamples) {
  const Field f2 = make_field(2);
  const Subspace x = span_of(f2, 2, {{1, 0}});
  const Subspace y = span_of(f2, 2, {{0, 1}});
  EXPECT_EQ(sum(x, y), Subspace::full(f2, 2));
  EXPECT_EQ(sum(x, x), x);
  EXPECT_TRUE(intersect(x, span_of(f2, 2, {{1, 1}})).is_zero());
  EXPECT_EQ(intersect(x, x), x);

  const Subspace a = span_of(f2, 3, {e(3, 0), e(3, 1)});
  const Subspace b = span_of(f2, 3, {e(3, 0), e(3, 2)});
  EXPECT_EQ(sum(a, b), Subspace::full(f2, 3));
  EXPECT_EQ(intersect(a, b), span_of(f2, 3, {e(3, 0)}));
  EXPECT_EQ(subspace_distance(a, b), 2);
  EXPECT_EQ(subspace_distance(a, a), 0);
  EXPECT_EQ(subspace_distance(Subspace::zero(f2, 3), a), 2);
}

TEST(Subspace, Containment) {
  const Field f2 = make_field(2);
  const Subspace a = span_of(f2, 3, {e(3, 0), e(3, 1)});
  EXPECT_TRUE(a.contains(Vector{0, 0, 0}));
  EXPECT_TRUE(a.contains(Vector{1, 1, 0}));
  EXPECT_FALSE(a.contains(Vector{0, 0, 1}));
  EXPECT_FALSE(a.contains(span_of(f2, 3, {e(3, 2)})));
  EXPECT_TRUE(a.contains(Subspace::zero(f2, 3)));
  EXPECT_EQ(a.to_string(), "<100,010>");
  EXPECT_EQ(Subspace::zero(f2, 3).to_string(), "<0>");
}

TEST(Subspace, StrictRrefParsing) {
  const Field f2 = make_field(2);
  const std::vector<Vector> good{{1, 0, 1}, {0, 1, 1}};
  EXPECT_EQ(Subspace::from_rref(f2, 3, good).dim(), 2);
  const std::vector<Vector> bad{{1, 1, 0}, {0, 1, 1}};
  try {
    Subspace::from_rref(f2, 3, bad);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::NotRref);
  }
}

TEST(Subspace, Errors) {
  const Field f2 = make_field(2), f3 = make_field(3);
  auto kind = [](auto fn) {
    try {
      fn();
    } catch (const Error& err) {
      return err.kind();
    }
    return ErrorKind::InternalInconsistency;
  };
  EXPECT_EQ(kind([&] { Subspace::zero(f2, 7); }), ErrorKind::ScaleCap);
  EXPECT_EQ(kind([&] { sum(Subspace::zero(f2, 2), Subspace::zero(f2, 3)); }), ErrorKind::DimensionMismatch);
  EXPECT_EQ(kind([&] { intersect(Subspace::zero(f2, 2), Subspace::zero(f3, 2)); }), ErrorKind::DimensionMismatch);
  EXPECT_EQ(kind([&] { span_of(f2, 2, {{2, 0}}); }), ErrorKind::InvalidElement);
  EXPECT_EQ(kind([&] { span_of(f2, 2, {{1, 0, 0}}); }), ErrorKind::DimensionMismatch);
}

TEST(Subspace, OperationsAgreeWithPointSetOracle) {
  std::mt19937 rng(20240611);
  for (int q : {2, 3, 4}) {
    const Field f = field_of_order(q);
    const oracle::PolyField ref = oracle::poly_field_for(f);
    for (int n = 1; n <= 4; ++n) {
      for (int trial = 0; trial < 40; ++trial) {
        const Subspace x = random_subspace(f, n, rng);
        const Subspace y = random_subspace(f, n, rng);
        const auto px = oracle::points_of(x), py = oracle::points_of(y);
        EXPECT_EQ(oracle::dim_of(px, q), x.dim());
        EXPECT_EQ(oracle::points_of(intersect(x, y)), oracle::meet_points(px, py));
        EXPECT_EQ(oracle::points_of(sum(x, y)), oracle::join_points(ref, n, px, py));
        EXPECT_EQ(subspace_distance(x, y), oracle::distance(px, py, q));
        EXPECT_EQ(x.contains(y), oracle::meet_points(px, py) == py);
        for (int pt = 0; pt < static_cast<int>(std::pow(q, n)); ++pt)
          EXPECT_EQ(x.contains(oracle::decode(pt, q, n)), px.count(pt) == 1);
      }
    }
  }
}

TEST(Subspace, EqualityIsCanonical) {
  std::mt19937 rng(7);
  const Field f = make_field(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Subspace x = random_subspace(f, 3, rng);
    const Subspace y = random_subspace(f, 3, rng);
    EXPECT_EQ(x == y, oracle::points_of(x) == oracle::points_of(y));
    if (x == y) EXPECT_EQ(x.hash(), y.hash());
    // Re-spanning the members gives the same canonical basis.
    EXPECT_EQ(Subspace::span(f, 3, x.members()), x);
  }
}

TEST(Subspace, GaussianBinomialMatchesRecurrence) {
  for (int q : {2, 3, 4, 5, 7, 8, 9})
    for (int n = 0; n <= 6; ++n)
      for (int k = 0; k <= n; ++k) EXPECT_EQ(gaussian_binomial(q, n, k), oracle::gaussian_binomial(q, n, k));
}

TEST(Subspace, EnumerationCounts) {
  const Field f2 = make_field(2);
  EXPECT_EQ(enumerate_grassmannian(f2, 3, 1).elements.size(), 7u);
  EXPECT_EQ(enumerate_grassmannian(f2, 3, 0).elements.size(), 1u);
  EXPECT_EQ(enumerate_grassmannian(f2, 4, 2).elements.size(), 35u);
  EXPECT_EQ(enumerate_projective_space(f2, 2).size(), 5u);
  EXPECT_EQ(enumerate_projective_space(f2, 3).size(), 16u);
  EXPECT_EQ(enumerate_projective_space(f2, 4).size(), 67u);
}

TEST(Subspace, EnumerationMatchesBruteForce) {
  for (auto [q, n] : {std::pair{2, 3}, {2, 4}, {3, 2}, {3, 3}, {4, 2}}) {
    const Field f = field_of_order(q);
    const auto listed = enumerate_projective_space(f, n);
    std::set<oracle::PointSet> seen;
    for (const Subspace& s : listed) EXPECT_TRUE(seen.insert(oracle::points_of(s)).second);
    const auto brute = oracle::all_subspaces(oracle::poly_field_for(f), n);
    EXPECT_EQ(seen, std::set<oracle::PointSet>(brute.begin(), brute.end())) << "q=" << q << " n=" << n;
    EXPECT_TRUE(std::is_sorted(listed.begin(), listed.end()));
  }
}

TEST(Subspace, EnumerationCap) {
  const Field f9 = make_field(3, 2);
  try {
    enumerate_grassmannian(f9, 6, 3);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::ScaleCap);
  }
}

TEST(Subspace, MetricAxiomsOnP23) {
  const Field f2 = make_field(2);
  const auto all = enumerate_projective_space(f2, 3);
  for (const auto& x : all) {
    EXPECT_EQ(subspace_distance(x, x), 0);
    for (const auto& y : all) {
      const int dxy = subspace_distance(x, y);
      EXPECT_EQ(dxy, subspace_distance(y, x));
      if (!(x == y)) EXPECT_GT(dxy, 0);
      for (const auto& z : all) EXPECT_LE(subspace_distance(x, z), dxy + subspace_distance(y, z));
    }
  }
}

TEST(Subspace, DimensionFormulaProperty) {
  std::mt19937 rng(99);
  for (int q : {2, 3, 5}) {
    const Field f = field_of_order(q);
    for (int trial = 0; trial < 300; ++trial) {
      const int n = 1 + trial % 6;
      const Subspace x = random_subspace(f, n, rng), y = random_subspace(f, n, rng);
      EXPECT_EQ(sum(x, y).dim() + intersect(x, y).dim(), x.dim() + y.dim());
      EXPECT_TRUE(sum(x, y).contains(x));
      EXPECT_TRUE(x.contains(intersect(x, y)));
    }
  }
}
