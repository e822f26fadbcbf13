#include <gtest/gtest.h>

#include <random>

#include "subcode/decomposition.hpp"
#include "subcode/error.hpp"
#include "subcode/search.hpp"

using namespace subcode;

namespace {

int find_word(const SubspaceCode& code, std::vector<Vector> gens) {
  return *code.index_of(Subspace::span(code.field(), code.ambient_dim(), gens));
}

SubspaceCode full_pair(const Field& f, int n) {
  AdditionTable t(2);
  t.set(0, 1, 1);
  t.set(1, 0, 1);
  return SubspaceCode(f, n, {Subspace::zero(f, n), Subspace::full(f, n)}, t);
}

}  // namespace

TEST(Decomposition, Indecomposables) {
  const Field f2 = make_field(2);
  const SubspaceCode cc = coordinate_code(f2, 3);
  const auto ind = indecomposable_codewords(cc);
  ASSERT_EQ(ind.size(), 3u);
  for (int w : ind) EXPECT_EQ(cc.word(w).dim(), 1);

  const SubspaceCode rc = remark_counterexample(f2, 3);
  EXPECT_EQ(indecomposable_codewords(rc), (std::vector<int>{1, 2, 3}));

  EXPECT_EQ(indecomposable_codewords(full_pair(f2, 3)), std::vector<int>{1});
}

TEST(Decomposition, PairwiseDisjoint) {
  const Field f2 = make_field(2);
  const SubspaceCode cc = coordinate_code(f2, 3);
  const auto lines = indecomposable_codewords(cc);
  EXPECT_TRUE(check_pairwise_disjoint(lines, cc));
  const SubspaceCode rc = remark_counterexample(f2, 3);
  const int pair[] = {1, 2};
  EXPECT_FALSE(check_pairwise_disjoint(pair, rc));
  const int single[] = {3};
  EXPECT_TRUE(check_pairwise_disjoint(single, rc));
}

TEST(Decomposition, DisjointFamilies) {
  const Field f2 = make_field(2);
  const SubspaceCode cc = coordinate_code(f2, 3);
  const auto lines = indecomposable_codewords(cc);
  const CheckReport r = verify_disjoint_family(lines, cc);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.checks().size(), 4u);

  const SubspaceCode c4 = coordinate_code(f2, 4);
  const int planes[] = {find_word(c4, {{1, 0, 0, 0}, {0, 1, 0, 0}}), find_word(c4, {{0, 0, 1, 0}, {0, 0, 0, 1}})};
  EXPECT_TRUE(verify_disjoint_family(planes, c4).passed());
  EXPECT_EQ(c4.word(c4.add(planes[0], planes[1])).dim(), 4);

  const int one[] = {5};
  EXPECT_TRUE(verify_disjoint_family(one, c4).passed());

  const SubspaceCode rc = remark_counterexample(f2, 3);
  const int pair[] = {1, 2};
  try {
    verify_disjoint_family(pair, rc);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotDisjoint);
  }
}

TEST(Decomposition, Decompose) {
  const Field f2 = make_field(2);
  const SubspaceCode cc = coordinate_code(f2, 3);
  const Decomposer d(cc);
  const int target = find_word(cc, {{1, 0, 0}, {0, 0, 1}});
  const Decomposition parts = d.decompose(target);
  std::vector<Subspace> words;
  for (int w : parts.part_words) words.push_back(cc.word(w));
  std::sort(words.begin(), words.end());
  const std::vector<Vector> e1{{1, 0, 0}}, e3{{0, 0, 1}};
  std::vector<Subspace> expected{Subspace::span(f2, 3, e1), Subspace::span(f2, 3, e3)};
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(words, expected);

  EXPECT_TRUE(d.decompose(0).parts.empty());

  const SubspaceCode c4 = coordinate_code(f2, 4);
  const int top = *c4.index_of(Subspace::full(f2, 4));
  EXPECT_EQ(decompose(c4, top).parts.size(), 4u);

  try {
    decompose(remark_counterexample(f2, 3), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotClosedUnderIntersection);
  }
}

TEST(Decomposition, Bases) {
  const Field f2 = make_field(2);
  const BasisReport cc = indecomposable_bases(coordinate_code(f2, 3));
  EXPECT_TRUE(cc.unique);
  ASSERT_EQ(cc.bases.size(), 1u);
  EXPECT_EQ(cc.bases[0].size(), 3u);

  const BasisReport rc = indecomposable_bases(remark_counterexample(f2, 3));
  EXPECT_FALSE(rc.unique);
  EXPECT_EQ(rc.bases, (std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 3}}));

  const BasisReport fp = indecomposable_bases(full_pair(f2, 2));
  EXPECT_TRUE(fp.unique);
  EXPECT_EQ(fp.bases, (std::vector<std::vector<int>>{{1}}));
}

TEST(Decomposition, RandomDirectSumsDecomposeUniquely) {
  std::mt19937 rng(404);
  for (int q : {2, 3}) {
    const Field f = field_of_order(q);
    for (int n = 2; n <= 4; ++n) {
      const auto space = enumerate_projective_space(f, n);
      for (int trial = 0; trial < 10; ++trial) {
        // Random independent blocks, grown until nothing fits.
        std::vector<Subspace> blocks;
        Subspace total = Subspace::zero(f, n);
        for (int attempt = 0; attempt < 50; ++attempt) {
          const Subspace& s = space[rng() % space.size()];
          if (s.is_zero() || sum_dim(total, s) != total.dim() + s.dim()) continue;
          blocks.push_back(s);
          total = sum(total, s);
        }
        const SubspaceCode code = build_direct_sum_code(f, n, blocks);
        const Decomposer d(code);
        EXPECT_EQ(d.indecomposables().size(), blocks.size());
        for (int w = 0; w < code.size(); ++w) EXPECT_NO_THROW(d.decompose(w));
        EXPECT_TRUE(indecomposable_bases(code).unique);
      }
    }
  }
}
