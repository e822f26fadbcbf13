#pragma once

#include <span>
#include <vector>

#include "subcode/code.hpp"

namespace subcode {

// Nonzero words Y with no pair Y = Y1 ⊞ Y2 where both summands have smaller
// dimension than Y. Indices into the code, ascending.
std::vector<int> indecomposable_codewords(const SubspaceCode& code,
                                          Precondition pre = Precondition::Enforce);

bool check_pairwise_disjoint(std::span<const int> family, const SubspaceCode& code);

// For a pairwise disjoint family of nonzero words: each member meets the sum
// of the others trivially, the ⊞-sum equals the vector-space sum, dimensions
// add up, and no nonempty subfamily ⊞-sums to {0}.
CheckReport verify_disjoint_family(std::span<const int> family, const SubspaceCode& code);

struct Decomposition {
  int target = 0;
  std::vector<int> parts;       // positions in the indecomposable list
  std::vector<int> part_words;  // the same parts as word indices
};

// Decomposes words of a linear code closed under intersection. Construction
// checks both hypotheses and tabulates the ⊞-sum of every subset of
// indecomposables; each decomposition is then certified unique by exhaustion.
class Decomposer {
 public:
  explicit Decomposer(const SubspaceCode& code);

  const std::vector<int>& indecomposables() const noexcept { return indecomposables_; }
  Decomposition decompose(int word) const;

 private:
  SubspaceCode code_;
  std::vector<int> indecomposables_;
  std::vector<int> subset_sums_;  // ⊞-sum word index per subset mask
};

Decomposition decompose(const SubspaceCode& code, int word);

struct BasisReport {
  std::vector<std::vector<int>> bases;  // word indices, each ascending
  bool unique = false;
};

// Every set of log2(M) indecomposables whose ⊞-span is the whole code.
BasisReport indecomposable_bases(const SubspaceCode& code);

}  // namespace subcode
