#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "lpa/errors.hpp"
#include "lpa/laurent.hpp"

using namespace lpa;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime_field(2);
const FieldSpec F3 = FieldSpec::prime_field(3);
const FieldSpec F5 = FieldSpec::prime_field(5);

LaurentPoly poly(const FieldSpec& f, const std::string& text) {
  return LaurentPoly::from_text(f, text);
}

// Reference irreducibility by trial division over F_p, for cross-checking
// the production test on small inputs. f is a dense coefficient vector
// c[0] + c[1] x + ... with c.back() != 0.
bool trial_division_irreducible(int p, const std::vector<int>& f) {
  int deg = static_cast<int>(f.size()) - 1;
  if (deg < 1) return false;
  auto mod_divides = [&](const std::vector<int>& d) {
    // Long division of f by d over F_p; true when the remainder vanishes.
    std::vector<int> r = f;
    int dd = static_cast<int>(d.size()) - 1;
    // Make the divisor monic (inverse of leading coefficient).
    int lead = d.back() % p;
    int inv = 1;
    for (int i = 1; i < p; ++i)
      if (lead * i % p == 1) inv = i;
    while (static_cast<int>(r.size()) - 1 >= dd) {
      int k = static_cast<int>(r.size()) - 1 - dd;
      int c = r.back() * inv % p;
      for (int i = 0; i <= dd; ++i)
        r[k + i] = ((r[k + i] - c * d[i]) % p + p) % p;
      while (!r.empty() && r.back() == 0) r.pop_back();
      if (r.empty()) return true;
    }
    return false;
  };
  // Enumerate candidate divisors of degree 1..deg/2.
  for (int dd = 1; dd <= deg / 2; ++dd) {
    std::vector<int> d(dd + 1, 0);
    d[dd] = 1;  // monic is enough
    std::int64_t count = 1;
    for (int i = 0; i < dd; ++i) count *= p;
    for (std::int64_t idx = 0; idx < count; ++idx) {
      std::int64_t t = idx;
      for (int i = 0; i < dd; ++i) {
        d[i] = static_cast<int>(t % p);
        t /= p;
      }
      if (mod_divides(d)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("field specs parse and print") {
  CHECK(parse_field("Q") == Q);
  CHECK(parse_field("F2") == F2);
  CHECK(parse_field("F97") == FieldSpec::prime_field(97));
  CHECK(parse_field("symbolic") == FieldSpec::symbolic());
  CHECK(to_string(F3) == "F3");
  CHECK(to_string(Q) == "Q");
  CHECK(to_string(FieldSpec::symbolic()) == "symbolic");

  CHECK_THROWS_AS(parse_field("F4"), Error);     // not prime
  CHECK_THROWS_AS(parse_field("F101"), Error);   // beyond the bound
  CHECK_THROWS_AS(parse_field("GF(2)"), Error);
  CHECK_THROWS_AS(FieldSpec::prime_field(1), Error);
  CHECK_THROWS_AS(FieldSpec::prime_field(-7), Error);
}

TEST_CASE("polynomial text round trip") {
  for (const std::string& s :
       {"x^3+x+1", "x^2+x+1", "x+1", "x", "1", "x^-3+1", "2*x^2+2",
        "x^4-x^2-1", "1/2*x-3", "x^-1", "5", "x^2-1/3"}) {
    LaurentPoly f = poly(Q, s);
    CHECK(poly(Q, f.to_text()) == f);
  }
  CHECK(poly(Q, "x^3+x+1").to_text() == "x^3+x+1");
  CHECK(poly(Q, "1+x+x^3").to_text() == "x^3+x+1");
  CHECK(poly(Q, "x^4-x^2-1").to_text() == "x^4-x^2-1");
  CHECK(poly(Q, "1/2*x-3").to_text() == "1/2*x-3");
  CHECK(poly(Q, "x^-2+x^-5").to_text() == "x^-2+x^-5");
  CHECK(poly(Q, "2/4*x").to_text() == "1/2*x");
  CHECK(poly(Q, "-x").to_text() == "-x");
  CHECK(poly(Q, "x-x").is_zero());

  // Prime-field coefficients are reduced on construction.
  CHECK(poly(F2, "2*x+1").to_text() == "1");
  CHECK(poly(F3, "4*x+5").to_text() == "x+2");
  CHECK(poly(F2, "x+x").is_zero());

  CHECK_THROWS_AS(poly(Q, ""), Error);
  CHECK_THROWS_AS(poly(Q, "x^"), Error);
  CHECK_THROWS_AS(poly(Q, "*x"), Error);
  CHECK_THROWS_AS(poly(Q, "x++1"), Error);
  CHECK_THROWS_AS(poly(Q, "y+1"), Error);
  CHECK_THROWS_AS(poly(Q, "x^1001"), Error);
  CHECK_THROWS_AS(poly(Q, "1/0"), Error);
  CHECK_THROWS_AS(poly(F2, "1/2"), Error);  // 2 is not invertible mod 2
  CHECK_THROWS_AS(LaurentPoly::from_text(FieldSpec::symbolic(), "x"), Error);
}

TEST_CASE("normalization produces monic forms with nonzero constant") {
  CHECK(normalize(poly(Q, "3*x^-2+3*x^-1")).to_text() == "x+1");
  CHECK(normalize(poly(Q, "x")).to_text() == "1");
  CHECK(normalize(poly(Q, "-5*x^7")).to_text() == "1");
  CHECK(normalize(poly(Q, "2*x^2+2*x")).to_text() == "x+1");
  CHECK(normalize(poly(Q, "x^2-1")).to_text() == "x^2-1");
  CHECK(normalize(poly(F3, "2*x^5+x^3")).to_text() == "x^2+2");
  CHECK(normalize(poly(Q, "1/2*x^-1+1/2")).to_text() == "x+1");

  CHECK_THROWS_AS(normalize(poly(Q, "0")), Error);
  try {
    normalize(poly(Q, "x-x"));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroPolynomial);
  }
}

TEST_CASE("associates recognize unit multiples") {
  CHECK(associates(poly(Q, "x+1"), poly(Q, "3*x^-4+3*x^-5")));
  CHECK(associates(poly(Q, "x"), poly(Q, "7")));
  CHECK_FALSE(associates(poly(Q, "x+1"), poly(Q, "x-1")));
  CHECK(associates(poly(F2, "x^2+x+1"), poly(F2, "x^-2+x^-1+1")));
  CHECK_FALSE(associates(poly(F3, "x+1"), poly(F3, "x+2")));

  CHECK_THROWS_AS(associates(poly(Q, "x"), poly(F2, "x")), Error);
  try {
    associates(poly(Q, "x"), poly(F2, "x"));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FieldMismatch);
  }
}

TEST_CASE("irreducibility over the rationals") {
  CHECK(is_irreducible(poly(Q, "x+1")));
  CHECK(is_irreducible(poly(Q, "x^2+1")));
  CHECK(is_irreducible(poly(Q, "x^2-2")));
  CHECK(is_irreducible(poly(Q, "x^3+x+1")));
  CHECK(is_irreducible(poly(Q, "x^3-2")));
  CHECK_FALSE(is_irreducible(poly(Q, "x^2-1")));
  CHECK_FALSE(is_irreducible(poly(Q, "x^2+3*x+2")));
  CHECK_FALSE(is_irreducible(poly(Q, "x^3-x")));        // root 1 after norm
  CHECK_FALSE(is_irreducible(poly(Q, "x^2+2*x+1")));
  CHECK_FALSE(is_irreducible(poly(Q, "4")));            // unit class of 1
  CHECK_FALSE(is_irreducible(poly(Q, "x^9")));          // a unit
  CHECK(is_irreducible(poly(Q, "2*x^3+2*x+2")));        // scalar factor
  CHECK(is_irreducible(poly(Q, "x^-3+x^-2+1")));        // x^3+x+1 reversed? no:
  // x^-3+x^-2+1 normalizes to x^3+x+1.
  CHECK(normalize(poly(Q, "x^-3+x^-2+1")).to_text() == "x^3+x+1");

  CHECK_THROWS_AS(is_irreducible(poly(Q, "x^4+x+1")), Error);
  try {
    is_irreducible(poly(Q, "x^4+x+1"));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnsupportedDegree);
  }
  CHECK_THROWS_AS(is_irreducible(poly(Q, "0")), Error);
}

TEST_CASE("irreducibility over prime fields") {
  CHECK(is_irreducible(poly(F2, "x+1")));
  CHECK(is_irreducible(poly(F2, "x^2+x+1")));
  CHECK_FALSE(is_irreducible(poly(F2, "x^2+1")));  // (x+1)^2
  CHECK(is_irreducible(poly(F2, "x^3+x+1")));
  CHECK(is_irreducible(poly(F2, "x^3+x^2+1")));
  CHECK_FALSE(is_irreducible(poly(F2, "x^3+1")));
  CHECK(is_irreducible(poly(F2, "x^4+x+1")));
  CHECK_FALSE(is_irreducible(poly(F2, "x^4+x^2+1")));
  CHECK(is_irreducible(poly(F2, "x^6+x+1")));
  CHECK(is_irreducible(poly(F3, "x^2+1")));
  CHECK_FALSE(is_irreducible(poly(F3, "x^2+2")));  // (x+1)(x+2)
  CHECK(is_irreducible(poly(F5, "x^2+2")));
  CHECK(is_irreducible(poly(F5, "x^2+x+1")));
  CHECK_FALSE(is_irreducible(poly(F5, "x^2+4")));  // (x+2)(x+3)
  CHECK_FALSE(is_irreducible(poly(F2, "1")));
}

TEST_CASE("production irreducibility matches trial division") {
  for (int p : {2, 3, 5}) {
    FieldSpec fp = FieldSpec::prime_field(p);
    for (int deg = 1; deg <= 4; ++deg) {
      std::int64_t count = 1;
      for (int i = 0; i < deg; ++i) count *= p;
      for (std::int64_t idx = 0; idx < count; ++idx) {
        // Monic with nonzero constant term: the canonical representatives.
        std::vector<int> dense(deg + 1, 0);
        dense[deg] = 1;
        std::int64_t t = idx;
        for (int i = 0; i < deg; ++i) {
          dense[i] = static_cast<int>(t % p);
          t /= p;
        }
        if (dense[0] == 0) continue;
        std::map<int, Rational> coeffs;
        for (int i = 0; i <= deg; ++i)
          if (dense[i] != 0) coeffs[i] = make_rational(dense[i], 1);
        LaurentPoly f(fp, coeffs);
        CHECK(is_irreducible(f) == trial_division_irreducible(p, dense));
      }
    }
  }
}

TEST_CASE("irreducible class enumeration over F2") {
  auto classes = enumerate_irreducible_classes(F2, 3);
  std::vector<std::string> got;
  for (const auto& f : classes) got.push_back(f.to_text());
  std::vector<std::string> expect = {"x+1", "x^2+x+1", "x^3+x+1",
                                     "x^3+x^2+1"};
  CHECK(got == expect);
}

TEST_CASE("irreducible class counts match necklace numbers") {
  // Number of monic irreducibles of degree d over F_p, excluding x itself
  // (x is a unit in the Laurent ring): degree 1 has p-1 classes, higher
  // degrees the usual necklace counts.
  auto count_by_degree = [](const FieldSpec& f, int maxd) {
    std::map<int, int> bydeg;
    for (const auto& g : enumerate_irreducible_classes(f, maxd))
      ++bydeg[g.max_exponent()];
    return bydeg;
  };
  CHECK(count_by_degree(F2, 4) ==
        std::map<int, int>{{1, 1}, {2, 1}, {3, 2}, {4, 3}});
  CHECK(count_by_degree(F3, 4) ==
        std::map<int, int>{{1, 2}, {2, 3}, {3, 8}, {4, 18}});
  CHECK(count_by_degree(F5, 3) ==
        std::map<int, int>{{1, 4}, {2, 10}, {3, 40}});

  auto f3deg1 = enumerate_irreducible_classes(F3, 1);
  REQUIRE(f3deg1.size() == 2);
  CHECK(f3deg1[0].to_text() == "x+1");
  CHECK(f3deg1[1].to_text() == "x+2");
}

TEST_CASE("irreducible class enumeration guards its domain") {
  CHECK_THROWS_AS(enumerate_irreducible_classes(Q, 2), Error);
  CHECK_THROWS_AS(enumerate_irreducible_classes(FieldSpec::symbolic(), 2),
                  Error);
  CHECK_THROWS_AS(enumerate_irreducible_classes(F2, 0), Error);
  CHECK_THROWS_AS(enumerate_irreducible_classes(F2, 9), Error);
  CHECK_THROWS_AS(enumerate_irreducible_classes(FieldSpec::prime_field(97), 8),
                  Error);
  try {
    enumerate_irreducible_classes(FieldSpec::prime_field(97), 8);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CapExceeded);
  }
  try {
    enumerate_irreducible_classes(Q, 2);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OutOfRange);  // infinitely many classes
  }
  try {
    enumerate_irreducible_classes(FieldSpec::symbolic(), 2);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SymbolicField);
  }
}

TEST_CASE("enumerated classes are pairwise non-associate irreducibles") {
  for (const FieldSpec& f : {F2, F3}) {
    auto classes = enumerate_irreducible_classes(f, 3);
    for (std::size_t i = 0; i < classes.size(); ++i) {
      CHECK(is_irreducible(classes[i]));
      CHECK(normalize(classes[i]) == classes[i]);
      for (std::size_t j = i + 1; j < classes.size(); ++j) {
        CHECK_FALSE(associates(classes[i], classes[j]));
      }
    }
  }
}

TEST_CASE("divisibility of unit classes") {
  CHECK(divides(poly(Q, "x+1"), poly(Q, "x^2-1")));
  CHECK(divides(poly(Q, "x-1"), poly(Q, "x^2-1")));
  CHECK_FALSE(divides(poly(Q, "x+2"), poly(Q, "x^2-1")));
  CHECK(divides(poly(Q, "3*x^-1+3"), poly(Q, "x^2-1")));  // unit-class level
  CHECK(divides(poly(F2, "x+1"), poly(F2, "x^2+1")));
  CHECK(divides(poly(Q, "x"), poly(Q, "x+1")));  // x normalizes to the unit 1
  CHECK_FALSE(divides(poly(Q, "x^2+1"), poly(Q, "x+1")));
  CHECK_THROWS_AS(divides(poly(Q, "x"), poly(F2, "x")), Error);
}

TEST_CASE("randomized associate invariance") {
  // Multiplying by random units never changes the normal form, the
  // irreducibility verdict, or associate classes.
  std::mt19937_64 rng(20260814);
  auto roll = [&](std::uint64_t n) { return rng() % n; };
  std::vector<LaurentPoly> base;
  for (const auto& s :
       {"x+1", "x^2+x+1", "x^2+1", "x^3+x+1", "x^2-1", "x^3+x^2+1"}) {
    base.push_back(poly(F3, s));
    base.push_back(poly(Q, s));
  }
  for (int iter = 0; iter < 1000; ++iter) {
    const LaurentPoly& f = base[roll(base.size())];
    int shift = static_cast<int>(roll(9)) - 4;
    long long scalar =
        f.field() == Q ? static_cast<long long>(roll(7)) - 3
                       : static_cast<long long>(1 + roll(2));
    if (scalar == 0) scalar = 2;
    std::map<int, Rational> shifted;
    for (const auto& [e, c] : f.coeffs()) {
      shifted[e + shift] = make_rational(c.num * scalar, c.den);
    }
    LaurentPoly u(f.field(), shifted);
    CHECK(associates(u, f));
    CHECK(normalize(u) == normalize(f));
    CHECK(is_irreducible(u) == is_irreducible(f));
  }
}
