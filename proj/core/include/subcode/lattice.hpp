#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "subcode/code.hpp"
#include "subcode/subspace.hpp"

namespace subcode {

// A finite lattice on element indices 0..size-1 with dense order, meet and
// join tables. Construction validates the partial order and that every pair
// has a greatest lower and least upper bound.
class FiniteLattice {
 public:
  // `leq[a * size + b]` is true iff a ≤ b. Meet and join are derived.
  static FiniteLattice from_order(int size, std::vector<char> leq);
  // Meet and join supplied by the caller, verified against the order.
  static FiniteLattice from_tables(int size, std::vector<char> leq, std::vector<int> meet,
                                   std::vector<int> join);

  int size() const noexcept { return size_; }
  bool leq(int a, int b) const { return leq_[idx(a, b)] != 0; }
  int meet(int a, int b) const { return meet_[idx(a, b)]; }
  int join(int a, int b) const { return join_[idx(a, b)]; }
  int bottom() const noexcept { return bottom_; }
  int top() const noexcept { return top_; }

  // Pairs (a, b) with a ⋖ b.
  std::vector<std::pair<int, int>> covers() const;

 private:
  FiniteLattice() = default;
  std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a) * size_ + b; }
  void validate_order() const;
  void validate_bounds();

  int size_ = 0;
  std::vector<char> leq_;
  std::vector<int> meet_, join_;
  int bottom_ = 0;
  int top_ = 0;
};

// A lattice whose elements are subspaces ordered by inclusion.
struct SubspaceLattice {
  std::vector<Subspace> elements;
  FiniteLattice lattice;
};

SubspaceLattice build_projective_lattice(const Field& field, int n);
// Throws NotMeetClosed / NotJoinClosed naming the first offending pair.
SubspaceLattice build_lattice_from_code(const SubspaceCode& code);

// Throws UnknownElement for indices outside the host.
bool is_sublattice(std::span<const int> subset, const FiniteLattice& host);

struct LawResult {
  bool holds = true;
  std::optional<std::array<int, 3>> witness;
};

// Modular law a ∨ (b ∧ c) = (a ∨ b) ∧ c on triples with a ≤ c.
LawResult check_modular(const FiniteLattice& lat);
// Both distributive laws on all triples. The witness is the first triple
// (a, b, c) with (a ∨ b) ∧ c ≠ (a ∧ c) ∨ (b ∧ c). Throws InternalInconsistency
// if the two laws disagree.
LawResult check_distributive(const FiniteLattice& lat);

std::vector<int> atoms(const FiniteLattice& lat);
// Modular and every element equals the join of the atoms below it. A
// non-modular witness is a triple; an element that is not a join of atoms is
// reported as {x, x, x}.
LawResult check_geometric(const FiniteLattice& lat);

// Length of the longest chain from bottom to top, by longest path over covers.
int height(const FiniteLattice& lat);
// size ≤ 2^height; throws NotDistributive for non-distributive lattices.
CheckReport check_birkhoff_bound(const FiniteLattice& lat);

struct LatticeProfile {
  int size = 0;
  int height = 0;
  std::vector<int> atoms;
  LawResult modular;
  LawResult distributive;
  LawResult geometric;
};

LatticeProfile profile(const FiniteLattice& lat);

// Hasse diagram in Graphviz DOT, one node per element labelled by `labels`.
std::string hasse_dot(const FiniteLattice& lat, std::span<const std::string> labels);

}  // namespace subcode
