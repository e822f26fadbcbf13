#include <gtest/gtest.h>

#include <map>
#include <set>

#include "oracles.hpp"
#include "subcode/error.hpp"
#include "subcode/lattice.hpp"
#include "subcode/search.hpp"

using namespace subcode;

namespace {

std::vector<int> host_indices(const SubspaceCode& code, const SubspaceLattice& host) {
  std::vector<int> out;
  for (const Subspace& w : code.words())
    out.push_back(static_cast<int>(std::find(host.elements.begin(), host.elements.end(), w) - host.elements.begin()));
  return out;
}

FiniteLattice chain(int size) {
  std::vector<char> leq(size * size, 0);
  for (int a = 0; a < size; ++a)
    for (int b = a; b < size; ++b) leq[a * size + b] = 1;
  return FiniteLattice::from_order(size, leq);
}

}  // namespace

TEST(Lattice, ProjectiveLatticeShapes) {
  const Field f2 = make_field(2);
  const SubspaceLattice p1 = build_projective_lattice(f2, 1);
  EXPECT_EQ(p1.lattice.size(), 2);
  EXPECT_EQ(height(p1.lattice), 1);

  const SubspaceLattice p2 = build_projective_lattice(f2, 2);
  EXPECT_EQ(p2.lattice.size(), 5);
  EXPECT_EQ(atoms(p2.lattice).size(), 3u);

  const SubspaceLattice p3 = build_projective_lattice(f2, 3);
  EXPECT_EQ(p3.lattice.size(), 16);
  const auto at = atoms(p3.lattice);
  ASSERT_EQ(at.size(), 7u);
  for (int a : at) EXPECT_EQ(p3.elements[a].dim(), 1);
  EXPECT_EQ(height(p3.lattice), 3);
  EXPECT_TRUE(check_modular(p3.lattice).holds);
  EXPECT_TRUE(check_geometric(p3.lattice).holds);
  EXPECT_FALSE(check_distributive(p3.lattice).holds);
}

TEST(Lattice, DistributiveWitnessOnP22) {
  const Field f2 = make_field(2);
  const SubspaceLattice p2 = build_projective_lattice(f2, 2);
  EXPECT_TRUE(check_modular(p2.lattice).holds);
  const LawResult d = check_distributive(p2.lattice);
  ASSERT_FALSE(d.holds);
  ASSERT_TRUE(d.witness.has_value());
  const auto [a, b, c] = *d.witness;
  const Subspace &A = p2.elements[a], &B = p2.elements[b], &C = p2.elements[c];
  // Any failing triple of three distinct lines works; check the law fails.
  EXPECT_EQ(A.dim(), 1);
  EXPECT_EQ(B.dim(), 1);
  EXPECT_EQ(C.dim(), 1);
  EXPECT_EQ(intersect(sum(A, B), C), C);
  EXPECT_TRUE(sum(intersect(A, C), intersect(B, C)).is_zero());
  const std::set<std::string> ab{A.to_string(), B.to_string()};
  EXPECT_EQ(ab, (std::set<std::string>{"<10>", "<01>"}));
  EXPECT_EQ(C.to_string(), "<11>");
}

TEST(Lattice, LawsAgreeWithPointSetOracle) {
  for (auto [q, n] : {std::pair{2, 2}, {2, 3}, {3, 2}}) {
    const Field f = field_of_order(q);
    const oracle::PolyField ref = oracle::poly_field_for(f);
    const SubspaceLattice sl = build_projective_lattice(f, n);
    std::vector<oracle::PointSet> pts;
    for (const auto& s : sl.elements) pts.push_back(oracle::points_of(s));
    std::map<oracle::PointSet, int> index;
    for (int i = 0; i < static_cast<int>(pts.size()); ++i) index[pts[i]] = i;
    bool modular = true, distributive = true;
    for (std::size_t a = 0; a < pts.size(); ++a) {
      for (std::size_t b = 0; b < pts.size(); ++b) {
        EXPECT_EQ(sl.lattice.meet(a, b), index.at(oracle::meet_points(pts[a], pts[b])));
        EXPECT_EQ(sl.lattice.join(a, b), index.at(oracle::join_points(ref, n, pts[a], pts[b])));
        for (std::size_t c = 0; c < pts.size(); ++c) {
          const auto lhs = oracle::meet_points(oracle::join_points(ref, n, pts[a], pts[b]), pts[c]);
          const auto rhs =
              oracle::join_points(ref, n, oracle::meet_points(pts[a], pts[c]), oracle::meet_points(pts[b], pts[c]));
          distributive = distributive && lhs == rhs;
          if (oracle::meet_points(pts[a], pts[c]) == pts[a]) {
            const auto ml = oracle::join_points(ref, n, pts[a], oracle::meet_points(pts[b], pts[c]));
            const auto mr = oracle::meet_points(oracle::join_points(ref, n, pts[a], pts[b]), pts[c]);
            modular = modular && ml == mr;
          }
        }
      }
    }
    EXPECT_EQ(check_modular(sl.lattice).holds, modular);
    EXPECT_EQ(check_distributive(sl.lattice).holds, distributive);
    EXPECT_EQ(height(sl.lattice), n);
  }
}

TEST(Lattice, CodeLattices) {
  const Field f2 = make_field(2);
  const SubspaceLattice boolean = build_lattice_from_code(coordinate_code(f2, 3));
  EXPECT_EQ(boolean.lattice.size(), 8);
  EXPECT_TRUE(check_distributive(boolean.lattice).holds);
  EXPECT_TRUE(check_geometric(boolean.lattice).holds);
  const auto at = atoms(boolean.lattice);
  ASSERT_EQ(at.size(), 3u);
  for (int a : at) EXPECT_EQ(boolean.elements[a].dim(), 1);
  EXPECT_EQ(height(boolean.lattice), 3);
  const CheckReport bound = check_birkhoff_bound(boolean.lattice);
  EXPECT_TRUE(bound.passed());

  AdditionTable t(2);
  t.set(0, 1, 1);
  t.set(1, 0, 1);
  const SubspaceCode two(f2, 3, {Subspace::zero(f2, 3), Subspace::full(f2, 3)}, t);
  const SubspaceLattice c2 = build_lattice_from_code(two);
  EXPECT_EQ(c2.lattice.size(), 2);
  EXPECT_EQ(height(c2.lattice), 1);
  EXPECT_TRUE(check_geometric(c2.lattice).holds);
  EXPECT_EQ(atoms(c2.lattice), std::vector<int>{c2.lattice.top()});
  EXPECT_TRUE(check_birkhoff_bound(c2.lattice).passed());

  try {
    build_lattice_from_code(remark_counterexample(f2, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotMeetClosed);
    EXPECT_NE(std::string(e.what()).find("1 and 2"), std::string::npos);
  }
}

TEST(Lattice, Sublattices) {
  const Field f2 = make_field(2);
  const SubspaceLattice host = build_projective_lattice(f2, 3);
  const auto cc = host_indices(coordinate_code(f2, 3), host);
  EXPECT_TRUE(is_sublattice(cc, host.lattice));
  const auto rc = host_indices(remark_counterexample(f2, 3), host);
  EXPECT_FALSE(is_sublattice(rc, host.lattice));
  for (int i = 0; i < host.lattice.size(); ++i) {
    const int single[] = {i};
    EXPECT_TRUE(is_sublattice(single, host.lattice));
  }
  const int bad[] = {99};
  EXPECT_THROW(is_sublattice(bad, host.lattice), Error);
}

TEST(Lattice, AbstractLattices) {
  const FiniteLattice c3 = chain(3);
  EXPECT_TRUE(check_distributive(c3).holds);
  EXPECT_EQ(height(c3), 2);
  EXPECT_FALSE(check_geometric(c3).holds);  // the top is not a join of atoms

  // Pentagon N5: 0 < a < b < 1, 0 < c < 1. Not modular.
  const int n = 5;
  std::vector<char> leq(n * n, 0);
  auto set = [&](int x, int y) { leq[x * n + y] = 1; };
  for (int i = 0; i < n; ++i) {
    set(i, i);
    set(0, i);
    set(i, 4);
  }
  set(1, 2);
  const FiniteLattice n5 = FiniteLattice::from_order(n, leq);
  EXPECT_FALSE(check_modular(n5).holds);
  EXPECT_FALSE(check_distributive(n5).holds);
  EXPECT_THROW(check_birkhoff_bound(n5), Error);

  // Two incomparable maxima: not a lattice.
  std::vector<char> vee{1, 1, 1, 0, 1, 0, 0, 0, 1};
  EXPECT_THROW(FiniteLattice::from_order(3, vee), Error);
}

TEST(Lattice, HasseDot) {
  const Field f2 = make_field(2);
  const SubspaceLattice p2 = build_projective_lattice(f2, 2);
  std::vector<std::string> labels;
  for (const auto& s : p2.elements) labels.push_back(s.to_string());
  const std::string dot = hasse_dot(p2.lattice, labels);
  EXPECT_NE(dot.find("digraph hasse"), std::string::npos);
  // Six cover edges: bottom to three lines, three lines to top.
  std::size_t edges = 0;
  for (std::size_t pos = dot.find("->"); pos != std::string::npos; pos = dot.find("->", pos + 2)) ++edges;
  EXPECT_EQ(edges, 6u);
  EXPECT_NE(dot.find("<11>"), std::string::npos);
}

TEST(Lattice, ProjectiveCap) {
  const Field f3 = make_field(3);
  EXPECT_THROW(build_projective_lattice(f3, 5), Error);
}
