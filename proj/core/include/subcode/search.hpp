#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "subcode/code.hpp"

namespace subcode {

enum class BranchOrder {
  MinRemaining,   // pair with the fewest candidates first
  Lexicographic,  // first open pair in index order
  Descending,     // lexicographic pairs, candidates tried high to low
};

struct TableSearchOptions {
  std::size_t max_tables = 0;  // 0: enumerate all
  BranchOrder order = BranchOrder::MinRemaining;
  int parallel_width = 1;
  std::uint64_t node_budget = 0;  // 0: unlimited
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct TableSearchResult {
  std::vector<AdditionTable> tables;  // sorted, distinct
  bool exhausted = true;
  std::uint64_t nodes = 0;
  std::uint64_t prunes = 0;
};

// Every isometric, abelian, self-inverse ⊞ table on `words` with {0} as the
// identity. Entry (i, j) is restricted to words of dimension d(words[i],
// words[j]) before branching; row bijection, isometry and associativity are
// enforced as entries are fixed.
TableSearchResult search_addition_tables(std::span<const Subspace> words, const TableSearchOptions& options = {});

// Convenience form: all tables, no budget. Empty when |words| is not a power of two.
std::vector<AdditionTable> complete_addition_table(std::span<const Subspace> words);

// Code whose words are the vector-space sums of every subset of `blocks`,
// with ⊞ acting as symmetric difference of the subsets. Blocks must be
// nonzero and independent (the dimension of their sum is the sum of their
// dimensions).
SubspaceCode build_direct_sum_code(const Field& field, int n, std::span<const Subspace> blocks);
// Direct sum of the first `lines` coordinate axes (all n by default).
SubspaceCode coordinate_code(const Field& field, int n, int lines = -1);

// Calls `visit` with every family of independent nonzero subspaces of F_q^n,
// each family listed once in canonical order (the empty family included).
void for_each_independent_family(const Field& field, int n,
                                 const std::function<void(std::span<const Subspace>)>& visit);

// {0}, X1 = <e1,e2>, X2 = <e1,e3>, X3 = <e1,e2+e3> over GF(2) with Xi ⊞ Xj = Xk.
SubspaceCode remark_counterexample(const Field& field, int n);

struct SearchConfig {
  int p = 2;
  int m = 1;
  std::vector<int> modulus;
  int n = 2;
  int max_words = 64;
  double time_budget_s = 0.0;     // 0: unlimited
  std::uint64_t node_budget = 0;  // 0: unlimited
  int parallel_width = 1;
  BranchOrder order = BranchOrder::MinRemaining;
  bool seed_direct_sums = true;

  Field make_field() const;
};

struct SearchStats {
  std::uint64_t word_sets = 0;
  std::uint64_t nodes = 0;
  std::uint64_t prunes = 0;
  double wall_ms = 0.0;
};

struct SearchOutcome {
  std::vector<SubspaceCode> codes;  // sorted by size desc, then word list, then table
  int max_size = 0;
  bool exhausted = false;
  SearchStats stats;
};

// Tries every word set of ℙ_q(n) that contains {0} and has power-of-two size
// up to max_words, collecting each isometric table found. Budget-truncated
// runs report exhausted = false.
SearchOutcome search_max_linear_code(const SearchConfig& config);

struct CodeAssessment {
  int size = 0;
  int ambient_dim = 0;
  bool within_power_bound = true;  // size ≤ 2^n
  bool closed = false;             // under intersection
  bool unique_basis = false;
  std::size_t basis_count = 0;
  std::size_t indecomposables = 0;
};

CodeAssessment assess_code(const SubspaceCode& code);

struct ConjectureReport {
  SearchOutcome search;
  std::vector<CodeAssessment> assessments;  // parallel to search.codes
  std::size_t size_bound_violations = 0;    // size > 2^n
  std::size_t closed_without_unique = 0;    // closed but basis not unique
  std::size_t unique_without_closed = 0;    // unique basis, not closed
  std::string coverage;
};

ConjectureReport conjecture_harness(const SearchConfig& config);

}  // namespace subcode
