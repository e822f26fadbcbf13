#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace subcode {

// Element of GF(q) as a dense code in 0..q-1. For m > 1 the base-p digits of
// the code are the polynomial coefficients, low degree first.
using Elem = std::uint8_t;

// Largest field order accepted unless a caller raises the cap explicitly.
inline constexpr int kDefaultMaxFieldOrder = 9;

class FieldSpec {
 public:
  int p() const noexcept { return p_; }
  int m() const noexcept { return m_; }
  int q() const noexcept { return q_; }
  // Monic modulus, low degree first, m + 1 entries. Empty for prime fields.
  const std::vector<int>& modulus() const noexcept { return modulus_; }

  Elem add(Elem a, Elem b) const { return add_[index(a, b)]; }
  Elem mul(Elem a, Elem b) const { return mul_[index(a, b)]; }
  Elem neg(Elem a) const { return neg_[check(a)]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, unsigned e) const;

  bool valid(int code) const noexcept { return code >= 0 && code < q_; }

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) noexcept {
    return a.p_ == b.p_ && a.m_ == b.m_ && a.modulus_ == b.modulus_;
  }

 private:
  friend std::shared_ptr<const FieldSpec> make_field(int, int, std::optional<std::vector<int>>,
                                                     int);
  FieldSpec() = default;

  std::size_t check(Elem a) const {
    if (a >= q_) [[unlikely]]
      invalid(a);
    return a;
  }
  [[noreturn]] static void invalid(Elem a);
  std::size_t index(Elem a, Elem b) const { return check(a) * q_ + check(b); }

  int p_ = 0;
  int m_ = 0;
  int q_ = 0;
  std::vector<int> modulus_;
  std::vector<Elem> add_, mul_, neg_, inv_;
};

// Fields are immutable once built and shared by every value that uses them.
using Field = std::shared_ptr<const FieldSpec>;

bool is_prime(int p) noexcept;

// Trial division by every monic polynomial of degree <= deg/2 over GF(p).
// Coefficients low degree first; the polynomial need not be monic.
bool is_irreducible(int p, const std::vector<int>& coeffs);

// Built-in modulus for GF(p^m), m >= 2. Throws BadParameters if none is known.
std::vector<int> default_modulus(int p, int m);

// Builds and verifies the arithmetic tables of GF(p^m). The modulus defaults
// to default_modulus(p, m) when m > 1 and must be absent or empty when m == 1.
Field make_field(int p, int m = 1, std::optional<std::vector<int>> modulus = std::nullopt,
                 int max_order = kDefaultMaxFieldOrder);

// GF(q) for a prime power q with the default modulus.
Field field_of_order(int q, int max_order = kDefaultMaxFieldOrder);

bool same_field(const Field& a, const Field& b) noexcept;

}  // namespace subcode
