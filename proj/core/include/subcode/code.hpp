#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "subcode/subspace.hpp"

namespace subcode {

// Square table of word indices: table.at(i, j) is the index of words[i] ⊞ words[j].
class AdditionTable {
 public:
  AdditionTable() = default;
  explicit AdditionTable(int size) : size_(size), data_(static_cast<std::size_t>(size) * size, 0) {}
  explicit AdditionTable(const std::vector<std::vector<int>>& rows);

  int size() const noexcept { return size_; }
  int at(int i, int j) const { return data_[static_cast<std::size_t>(i) * size_ + j]; }
  void set(int i, int j, int value) { data_[static_cast<std::size_t>(i) * size_ + j] = value; }
  std::span<const int> flat() const noexcept { return data_; }
  std::vector<std::vector<int>> rows() const;

  friend bool operator==(const AdditionTable&, const AdditionTable&) = default;
  friend auto operator<=>(const AdditionTable&, const AdditionTable&) = default;

 private:
  int size_ = 0;
  std::vector<int> data_;
};

// A finite set of subspaces of F_q^n with {0} at index 0 and an optional ⊞ table.
class SubspaceCode {
 public:
  SubspaceCode(Field field, int n, std::vector<Subspace> words,
               std::optional<AdditionTable> table = std::nullopt);

  // Sorts words into canonical order ({0} first) and permutes the table to match.
  static SubspaceCode canonical(Field field, int n, std::vector<Subspace> words,
                                std::optional<AdditionTable> table = std::nullopt);

  const Field& field() const noexcept { return field_; }
  int ambient_dim() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(words_.size()); }
  const std::vector<Subspace>& words() const noexcept { return words_; }
  const Subspace& word(int i) const { return words_.at(static_cast<std::size_t>(i)); }

  bool has_table() const noexcept { return table_.has_value(); }
  const AdditionTable& table() const;
  int add(int i, int j) const { return table().at(i, j); }
  SubspaceCode with_table(AdditionTable table) const;
  SubspaceCode without_table() const;

  std::optional<int> index_of(const Subspace& s) const;

 private:
  Field field_;
  int n_;
  std::vector<Subspace> words_;
  std::optional<AdditionTable> table_;
  std::unordered_map<Subspace, int, SubspaceHash> index_;
};

// Dimension data for every word and pair, computed once per code.
struct CodeGeometry {
  int size = 0;
  std::vector<int> dims;
  std::vector<int> meet_dims;  // size * size

  int meet_dim(int i, int j) const { return meet_dims[static_cast<std::size_t>(i) * size + j]; }
  int distance(int i, int j) const { return dims[i] + dims[j] - 2 * meet_dim(i, j); }
  // words[i] ⊆ words[j]
  bool contained(int i, int j) const { return meet_dim(i, j) == dims[i]; }
};

CodeGeometry geometry(const SubspaceCode& code);

struct Violation {
  std::string check;
  std::vector<int> witness;
  std::string detail;
  std::size_t count = 1;
};

// Outcome of a family of checks. Keeps the first witness of each failing
// check and counts further occurrences.
class CheckReport {
 public:
  bool passed() const noexcept { return violations_.empty(); }

  void ran(std::string_view check);
  void fail(std::string_view check, std::vector<int> witness, std::string detail = {});
  void note(std::string text) { notes_.push_back(std::move(text)); }
  void merge(const CheckReport& other);

  const std::vector<std::string>& checks() const noexcept { return checks_; }
  const std::vector<Violation>& violations() const noexcept { return violations_; }
  const std::vector<std::string>& notes() const noexcept { return notes_; }
  const Violation* find(std::string_view check) const;
  bool failed(std::string_view check) const { return find(check) != nullptr; }

 private:
  std::vector<std::string> checks_;
  std::vector<Violation> violations_;
  std::vector<std::string> notes_;
};

// Whether a checker refuses inputs that miss its precondition (throws) or
// records the miss in the report and runs anyway.
enum class Precondition { Enforce, Report };

bool is_power_of_two(std::size_t m) noexcept;
int exact_log2(std::size_t m);

// Group conditions on the table: identity {0}, self-inverse, commutative,
// rows are permutations, associative. Also flags sizes that are not powers of two.
CheckReport is_quasi_linear(const SubspaceCode& code);

// Quasi-linearity plus d(X⊞Y1, X⊞Y2) = d(Y1, Y2) on every triple.
CheckReport is_linear(const SubspaceCode& code);

// Dimension and containment consequences of linearity on every pair.
CheckReport verify_lemma_suite(const SubspaceCode& code, Precondition pre = Precondition::Enforce);

// X∩Y is a word iff X+Y is; when both are, X+Y = (X⊞Y) ⊕ (X∩Y).
CheckReport verify_union_intersection(const SubspaceCode& code,
                                      Precondition pre = Precondition::Enforce);

bool is_closed_under_intersection(const SubspaceCode& code);
bool is_closed_under_sum(const SubspaceCode& code);
// First pair (i, j), i < j, whose intersection is not a word.
std::optional<std::pair<int, int>> first_unclosed_pair(const SubspaceCode& code);
// Both closure predicates, plus their agreement when the code is linear.
CheckReport closure_report(const SubspaceCode& code);

int minimum_distance(const SubspaceCode& code);
bool is_constant_dimension(const SubspaceCode& code, bool ignore_zero = true);

using BitWord = std::vector<bool>;
BitWord parse_bits(std::string_view text);

// x + y = (x ∗ y) + (x ∘ y) and (x ∗ y) ∗ (x + y) = 0 for binary words,
// evaluated through support sets.
CheckReport binary_word_identity_check(const BitWord& x, const BitWord& y);

}  // namespace subcode
