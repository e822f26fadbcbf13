#include <gtest/gtest.h>

#include "oracles.hpp"
#include "subcode/error.hpp"
#include "subcode/field.hpp"

using namespace subcode;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorKind::InternalInconsistency;
}

// Brute-force irreducibility: no root-free factorisation exists iff the
// polynomial has no factor of degree 1..deg/2; here checked by multiplying
// every pair of monic polynomials whose degrees add up.
bool irreducible_by_products(int p, const std::vector<int>& f) {
  const int deg = static_cast<int>(f.size()) - 1;
  auto all_monic = [p](int d) {
    std::vector<std::vector<int>> out;
    int total = 1;
    for (int i = 0; i < d; ++i) total *= p;
    for (int c = 0; c < total; ++c) {
      std::vector<int> poly(d + 1, 0);
      int x = c;
      for (int i = 0; i < d; ++i) {
        poly[i] = x % p;
        x /= p;
      }
      poly[d] = 1;
      out.push_back(poly);
    }
    return out;
  };
  for (int d = 1; d <= deg / 2; ++d) {
    for (const auto& a : all_monic(d)) {
      for (const auto& b : all_monic(deg - d)) {
        std::vector<int> prod(deg + 1, 0);
        for (int i = 0; i <= d; ++i)
          for (int j = 0; j <= deg - d; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
        if (prod == f) return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST(Field, PrimeFieldArithmetic) {
  const Field f = make_field(5);
  EXPECT_EQ(f->q(), 5);
  EXPECT_EQ(f->add(3, 4), 2);
  EXPECT_EQ(f->mul(3, 4), 2);
  EXPECT_EQ(f->inv(2), 3);
  EXPECT_EQ(f->neg(1), 4);
  EXPECT_EQ(f->sub(1, 3), 3);
  EXPECT_EQ(f->pow(2, 4), 1);
}

TEST(Field, GF4MatchesPolynomialOracle) {
  const Field f = make_field(2, 2);
  const oracle::PolyField ref = oracle::poly_field_for(f);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      EXPECT_EQ(f->add(a, b), ref.add(a, b));
      EXPECT_EQ(f->mul(a, b), ref.mul(a, b));
    }
  // x * x = x + 1 under x^2 + x + 1.
  EXPECT_EQ(f->mul(2, 2), 3);
}

TEST(Field, DefaultModuliAreIrreducible) {
  const std::pair<int, int> cases[] = {{2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 2}, {3, 3}, {3, 4},
                                       {5, 2}, {5, 3}, {7, 2}, {7, 3}, {11, 2}, {13, 2}};
  for (auto [p, m] : cases) {
    const auto mod = default_modulus(p, m);
    ASSERT_EQ(static_cast<int>(mod.size()), m + 1) << p << "^" << m;
    EXPECT_EQ(mod.back(), 1);
    EXPECT_TRUE(irreducible_by_products(p, mod)) << p << "^" << m;
    EXPECT_TRUE(is_irreducible(p, mod));
  }
}

TEST(Field, IrreducibilityAgreesWithProductSearch) {
  for (int p : {2, 3}) {
    for (int deg = 2; deg <= 4; ++deg) {
      int total = 1;
      for (int i = 0; i < deg; ++i) total *= p;
      for (int c = 0; c < total; ++c) {
        std::vector<int> f(deg + 1, 0);
        int x = c;
        for (int i = 0; i < deg; ++i) {
          f[i] = x % p;
          x /= p;
        }
        f[deg] = 1;
        EXPECT_EQ(is_irreducible(p, f), irreducible_by_products(p, f)) << "p=" << p << " code=" << c;
      }
    }
  }
}

TEST(Field, AxiomsHoldExhaustivelyAgainstOracle) {
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    const Field f = field_of_order(q);
    const oracle::PolyField ref = oracle::poly_field_for(f);
    for (int a = 0; a < q; ++a) {
      EXPECT_EQ(f->add(a, 0), a);
      EXPECT_EQ(f->mul(a, 1), a);
      EXPECT_EQ(f->add(a, f->neg(a)), 0);
      if (a != 0) {
        EXPECT_EQ(f->mul(a, f->inv(a)), 1);
        EXPECT_EQ(f->inv(a), ref.inv(a));
      }
      for (int b = 0; b < q; ++b) {
        EXPECT_EQ(f->add(a, b), ref.add(a, b));
        EXPECT_EQ(f->mul(a, b), ref.mul(a, b));
        EXPECT_EQ(f->mul(a, b), f->mul(b, a));
        for (int c = 0; c < q; ++c) {
          EXPECT_EQ(f->mul(a, f->add(b, c)), f->add(f->mul(a, b), f->mul(a, c)));
          EXPECT_EQ(f->mul(f->mul(a, b), c), f->mul(a, f->mul(b, c)));
        }
      }
    }
  }
}

TEST(Field, CustomModulus) {
  // x^2 + x + 2 is irreducible over GF(3); x * x = 2x + 1, code 1 + 2 * 3.
  const Field f = make_field(3, 2, std::vector<int>{2, 1, 1});
  EXPECT_EQ(f->mul(3, 3), 7);
  EXPECT_FALSE(*f == *make_field(3, 2));
}

TEST(Field, Errors) {
  EXPECT_EQ(kind_of([] { make_field(6); }), ErrorKind::NonPrimeCharacteristic);
  EXPECT_EQ(kind_of([] { make_field(2, 2, std::vector<int>{1, 0, 1}); }), ErrorKind::ReducibleModulus);
  EXPECT_EQ(kind_of([] { make_field(11); }), ErrorKind::FieldTooLarge);
  EXPECT_EQ(kind_of([] { make_field(2, 4); }), ErrorKind::FieldTooLarge);
  EXPECT_EQ(kind_of([] { field_of_order(6); }), ErrorKind::NonPrimeCharacteristic);
  const Field f = make_field(3);
  EXPECT_EQ(kind_of([&] { f->inv(0); }), ErrorKind::DivisionByZero);
  EXPECT_EQ(kind_of([&] { f->add(3, 0); }), ErrorKind::InvalidElement);
}

TEST(Field, RaisedCapAllowsLargerFields) {
  const Field f = make_field(2, 4, std::nullopt, 16);
  EXPECT_EQ(f->q(), 16);
  const oracle::PolyField ref = oracle::poly_field_for(f);
  for (int a = 1; a < 16; ++a) EXPECT_EQ(f->mul(a, f->inv(a)), 1) << a;
  for (int a = 0; a < 16; ++a)
    for (int b = 0; b < 16; ++b) EXPECT_EQ(f->mul(a, b), ref.mul(a, b));
}

TEST(Field, ErrorNamesAreStable) {
  EXPECT_EQ(to_string(ErrorKind::ScaleCap), "ScaleCap");
  EXPECT_EQ(to_string(ErrorKind::NotRref), "NotRref");
  const Error e(ErrorKind::ParseError, "bad token");
  EXPECT_STREQ(e.what(), "ParseError: bad token");
}
