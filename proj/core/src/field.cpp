#include "subcode/field.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "subcode/error.hpp"

namespace subcode {

namespace {

using Poly = std::vector<int>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int mod_inverse(int a, int p) {
  for (int b = 1; b < p; ++b)
    if ((a * b) % p == 1) return b;
  throw Error(ErrorKind::InternalInconsistency, "no inverse mod p");
}

// Remainder of f modulo g over GF(p); g must be nonzero.
Poly poly_mod(Poly f, const Poly& g, int p) {
  trim(f);
  const int dg = static_cast<int>(g.size()) - 1;
  const int lead_inv = mod_inverse(g.back(), p);
  while (static_cast<int>(f.size()) - 1 >= dg) {
    const int shift = static_cast<int>(f.size()) - 1 - dg;
    const int factor = (f.back() * lead_inv) % p;
    for (int i = 0; i <= dg; ++i) {
      f[shift + i] = ((f[shift + i] - factor * g[i]) % p + p) % p;
    }
    trim(f);
  }
  return f;
}

Poly digits(int code, int p, int m) {
  Poly c(m, 0);
  for (int i = 0; i < m; ++i) {
    c[i] = code % p;
    code /= p;
  }
  return c;
}

int from_digits(const Poly& c, int p, int m) {
  int code = 0;
  for (int i = m - 1; i >= 0; --i) code = code * p + (i < static_cast<int>(c.size()) ? c[i] : 0);
  return code;
}

const std::map<std::pair<int, int>, Poly>& builtin_moduli() {
  static const std::map<std::pair<int, int>, Poly> table = {
      {{2, 2}, {1, 1, 1}},        // x^2 + x + 1
      {{2, 3}, {1, 1, 0, 1}},     // x^3 + x + 1
      {{2, 4}, {1, 1, 0, 0, 1}},  // x^4 + x + 1
      {{2, 5}, {1, 0, 1, 0, 0, 1}},
      {{2, 6}, {1, 1, 0, 0, 0, 0, 1}},
      {{3, 2}, {1, 0, 1}},     // x^2 + 1
      {{3, 3}, {1, 2, 0, 1}},  // x^3 + 2x + 1
      {{3, 4}, {2, 0, 0, 1, 1}},
      {{5, 2}, {2, 1, 1}},  // x^2 + x + 2
      {{5, 3}, {1, 1, 0, 1}},
      {{7, 2}, {1, 0, 1}},  // x^2 + 1
      {{7, 3}, {2, 0, 0, 1}},
      {{11, 2}, {1, 0, 1}},
      {{13, 2}, {2, 0, 1}},
  };
  return table;
}

}  // namespace

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::FieldTooLarge: return "FieldTooLarge";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::InvalidElement: return "InvalidElement";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ScaleCap: return "ScaleCap";
    case ErrorKind::NotRref: return "NotRref";
    case ErrorKind::MissingTable: return "MissingTable";
    case ErrorKind::MalformedCode: return "MalformedCode";
    case ErrorKind::NotLinear: return "NotLinear";
    case ErrorKind::TooFewWords: return "TooFewWords";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NotMeetClosed: return "NotMeetClosed";
    case ErrorKind::NotJoinClosed: return "NotJoinClosed";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::NotDistributive: return "NotDistributive";
    case ErrorKind::NotDisjoint: return "NotDisjoint";
    case ErrorKind::NotClosedUnderIntersection: return "NotClosedUnderIntersection";
    case ErrorKind::NoDecomposition: return "NoDecomposition";
    case ErrorKind::BlocksNotDisjoint: return "BlocksNotDisjoint";
    case ErrorKind::BadParameters: return "BadParameters";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::CatalogMismatch: return "CatalogMismatch";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

bool is_prime(int p) noexcept {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

bool is_irreducible(int p, const std::vector<int>& coeffs) {
  Poly f = coeffs;
  for (int& c : f) c = ((c % p) + p) % p;
  trim(f);
  const int deg = static_cast<int>(f.size()) - 1;
  if (deg < 1) return false;
  // Every monic divisor g of degree d, 1 <= d <= deg/2, is enumerated through
  // its d low-order coefficients.
  for (int d = 1; 2 * d <= deg; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int code = 0; code < count; ++code) {
      Poly g = digits(code, p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<int> default_modulus(int p, int m) {
  const auto& table = builtin_moduli();
  auto it = table.find({p, m});
  if (it == table.end()) {
    throw Error(ErrorKind::BadParameters,
                "no built-in modulus for GF(" + std::to_string(p) + "^" + std::to_string(m) + ")");
  }
  return it->second;
}

void FieldSpec::invalid(Elem a) {
  throw Error(ErrorKind::InvalidElement, "element code " + std::to_string(a));
}

Elem FieldSpec::inv(Elem a) const {
  if (check(a) == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  return inv_[a];
}

Elem FieldSpec::pow(Elem a, unsigned e) const {
  Elem result = 1;
  Elem base = a;
  while (e) {
    if (e & 1u) result = mul(result, base);
    base = mul(base, base);
    e >>= 1u;
  }
  return result;
}

Field make_field(int p, int m, std::optional<std::vector<int>> modulus, int max_order) {
  if (!is_prime(p)) throw Error(ErrorKind::NonPrimeCharacteristic, std::to_string(p));
  if (m < 1) throw Error(ErrorKind::BadParameters, "extension degree must be >= 1");
  long long q = 1;
  for (int i = 0; i < m; ++i) {
    q *= p;
    if (q > max_order || q > 255) {
      throw Error(ErrorKind::FieldTooLarge, "GF(" + std::to_string(p) + "^" + std::to_string(m) +
                                                ") exceeds order cap " + std::to_string(max_order));
    }
  }

  Poly mod;
  if (m == 1) {
    if (modulus && !modulus->empty())
      throw Error(ErrorKind::BadParameters, "prime fields take no modulus");
  } else {
    mod = (modulus && !modulus->empty()) ? *modulus : default_modulus(p, m);
    if (static_cast<int>(mod.size()) != m + 1)
      throw Error(ErrorKind::BadParameters, "modulus must have m + 1 coefficients");
    for (int c : mod)
      if (c < 0 || c >= p) throw Error(ErrorKind::BadParameters, "modulus coefficient out of range");
    if (mod.back() != 1) throw Error(ErrorKind::BadParameters, "modulus must be monic");
    if (!is_irreducible(p, mod)) throw Error(ErrorKind::ReducibleModulus, "modulus is reducible");
  }

  std::shared_ptr<FieldSpec> f(new FieldSpec());
  f->p_ = p;
  f->m_ = m;
  f->q_ = static_cast<int>(q);
  f->modulus_ = mod;
  const int n = f->q_;
  f->add_.assign(static_cast<std::size_t>(n) * n, 0);
  f->mul_.assign(static_cast<std::size_t>(n) * n, 0);
  f->neg_.assign(n, 0);
  f->inv_.assign(n, 0);

  for (int a = 0; a < n; ++a) {
    const Poly da = digits(a, p, m);
    for (int b = 0; b < n; ++b) {
      const Poly db = digits(b, p, m);
      Poly s(m);
      for (int i = 0; i < m; ++i) s[i] = (da[i] + db[i]) % p;
      Poly prod(2 * m - 1, 0);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      if (m > 1) prod = poly_mod(prod, mod, p);
      f->add_[a * n + b] = static_cast<Elem>(from_digits(s, p, m));
      f->mul_[a * n + b] = static_cast<Elem>(from_digits(prod, p, m));
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (f->add_[a * n + b] == 0) f->neg_[a] = static_cast<Elem>(b);
      if (f->mul_[a * n + b] == 1) f->inv_[a] = static_cast<Elem>(b);
    }
  }

  // Table verification: identities, inverses, commutativity, associativity,
  // distributivity on every triple.
  for (int a = 0; a < n; ++a) {
    const bool ok = f->add_[a * n] == a && f->mul_[a * n + 1] == a &&
                    f->add_[a * n + f->neg_[a]] == 0 &&
                    (a == 0 || f->mul_[a * n + f->inv_[a]] == 1);
    if (!ok) throw Error(ErrorKind::ReducibleModulus, "field tables failed identity/inverse check");
    for (int b = 0; b < n; ++b) {
      if (f->add_[a * n + b] != f->add_[b * n + a] || f->mul_[a * n + b] != f->mul_[b * n + a])
        throw Error(ErrorKind::InternalInconsistency, "field tables not commutative");
      for (int c = 0; c < n; ++c) {
        const int ab = f->add_[a * n + b], bc = f->add_[b * n + c];
        const int mab = f->mul_[a * n + b], mbc = f->mul_[b * n + c];
        const bool assoc = f->add_[ab * n + c] == f->add_[a * n + bc] &&
                           f->mul_[mab * n + c] == f->mul_[a * n + mbc];
        const bool distrib =
            f->mul_[a * n + bc] == f->add_[f->mul_[a * n + b] * n + f->mul_[a * n + c]];
        if (!assoc || !distrib)
          throw Error(ErrorKind::InternalInconsistency, "field tables violate an axiom");
      }
    }
  }
  return f;
}

Field field_of_order(int q, int max_order) {
  if (q < 2) throw Error(ErrorKind::BadParameters, "field order must be >= 2");
  int p = 2;
  while (q % p != 0) ++p;
  int m = 0;
  int rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++m;
  }
  if (rest != 1) throw Error(ErrorKind::NonPrimeCharacteristic, std::to_string(q) + " is not a prime power");
  return make_field(p, m, std::nullopt, max_order);
}

bool same_field(const Field& a, const Field& b) noexcept {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

}  // namespace subcode
