#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "subcode/field.hpp"

namespace subcode {

// Largest ambient dimension accepted anywhere in the toolkit.
inline constexpr int kMaxAmbientDim = 6;
// Largest number of subspaces an enumeration may materialize.
inline constexpr std::uint64_t kMaxEnumeration = 200000;

// A vector of F_q^n as element codes.
using Vector = std::vector<Elem>;

// A subspace of F_q^n held as its reduced row echelon basis. The RREF matrix
// is the identity of the subspace: equal subspaces have identical matrices.
// The zero subspace has an empty basis.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(Field field, int n);
  static Subspace full(Field field, int n);
  // Span of arbitrary generators, canonicalized.
  static Subspace span(Field field, int n, std::span<const Vector> generators);
  // Rows must already be a full-rank RREF matrix; throws NotRref otherwise.
  // Row space of the rows packed back to back in `flat` (length a multiple of n).
  static Subspace span_rows(Field field, int n, std::vector<Elem> flat);
  static Subspace from_rref(Field field, int n, std::span<const Vector> rows);
  // Unit vector e_i (i is 0-based) spans.
  static Subspace coordinate(Field field, int n, std::span<const int> axes);

  const Field& field() const noexcept { return field_; }
  int ambient_dim() const noexcept { return n_; }
  int dim() const noexcept { return k_; }
  bool is_zero() const noexcept { return k_ == 0; }

  std::span<const Elem> row(int i) const {
    return {data_.data() + static_cast<std::size_t>(i) * n_, static_cast<std::size_t>(n_)};
  }
  std::vector<Vector> basis() const;
  std::span<const Elem> flat() const noexcept { return data_; }
  std::vector<int> pivots() const;

  bool contains(std::span<const Elem> v) const;
  bool contains(const Subspace& other) const;

  // All q^dim member vectors in lexicographic order of coefficient tuples.
  std::vector<Vector> members() const;

  // Compact rendering such as "<101,011>" or "<0>" (digits are element codes).
  std::string to_string() const;
  std::size_t hash() const noexcept;

  friend bool operator==(const Subspace& a, const Subspace& b) noexcept {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.data_ == b.data_ && same_field(a.field_, b.field_);
  }
  // Canonical order: by dimension, then lexicographically on the flattened RREF.
  friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) noexcept;

 private:
  Subspace(Field field, int n, int k, std::vector<Elem> data)
      : field_(std::move(field)), n_(n), k_(k), data_(std::move(data)) {}

  Field field_;
  int n_ = 0;
  int k_ = 0;
  std::vector<Elem> data_;
};

struct SubspaceHash {
  std::size_t operator()(const Subspace& s) const noexcept { return s.hash(); }
};

// Row-reduces a rows x cols matrix in place to RREF and returns the rank; the
// nonzero rows end up first.
int row_reduce(const FieldSpec& field, std::vector<Elem>& matrix, int rows, int cols);

bool is_rref(const FieldSpec& field, std::span<const Vector> rows, int n);

Subspace sum(const Subspace& x, const Subspace& y);
Subspace intersect(const Subspace& x, const Subspace& y);
int sum_dim(const Subspace& x, const Subspace& y);
int subspace_distance(const Subspace& x, const Subspace& y);

// Number of k-dimensional subspaces of F_q^n.
std::uint64_t gaussian_binomial(int q, int n, int k);

struct GrassmannianIndex {
  int n = 0;
  int k = 0;
  Field field;
  std::vector<Subspace> elements;
};

GrassmannianIndex enumerate_grassmannian(const Field& field, int n, int k);
std::vector<Subspace> enumerate_projective_space(const Field& field, int n);

}  // namespace subcode
