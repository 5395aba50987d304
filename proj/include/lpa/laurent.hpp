#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lpa/errors.hpp"

namespace lpa {

enum class FieldKind { Rationals, PrimeField, Symbolic };

// Coefficient field: the rationals, a prime field F_p (p <= 97), or the
// purely symbolic mode in which polynomial families are tracked as one
// unevaluated representative.
struct FieldSpec {
  FieldKind kind = FieldKind::Symbolic;
  int p = 0;

  static FieldSpec rationals() { return FieldSpec{FieldKind::Rationals, 0}; }
  static FieldSpec prime_field(int p);
  static FieldSpec symbolic() { return FieldSpec{FieldKind::Symbolic, 0}; }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

std::string to_string(const FieldSpec& f);
FieldSpec parse_field(const std::string& text);  // "symbolic" | "Q" | "F<p>"

// Exact fraction; for prime fields the canonical residue is stored with
// denominator 1.
struct Rational {
  long long num = 0;
  long long den = 1;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend auto operator<=>(const Rational&, const Rational&) = default;
};

Rational make_rational(long long num, long long den);

// A Laurent polynomial over a concrete field: finitely many exponents (which
// may be negative) with nonzero coefficients. The symbolic field carries no
// coefficients, so constructing a symbolic polynomial is an error.
class LaurentPoly {
 public:
  LaurentPoly(FieldSpec field, std::map<int, Rational> coeffs);

  // Text form: "+"/"-"-separated monomials such as "x^3+x+1", "3*x^-2",
  // "1/2*x". ParseError on anything else.
  static LaurentPoly from_text(const FieldSpec& field, const std::string& text);

  const FieldSpec& field() const { return field_; }
  const std::map<int, Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int min_exponent() const;  // errors on zero
  int max_exponent() const;

  std::string to_text() const;  // deterministic, descending exponents

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  FieldSpec field_;
  std::map<int, Rational> coeffs_;
};

// Canonical unit-class representative: multiply by a unit (a nonzero scalar
// times a power of x) to get a monic ordinary polynomial with nonzero
// constant term. Units themselves normalize to 1.
LaurentPoly normalize(const LaurentPoly& f);

// Two nonzero polynomials differing by a unit factor.
bool associates(const LaurentPoly& f, const LaurentPoly& g);

// Irreducibility of the class of f in the Laurent ring: the normal form must
// have degree >= 1 and be irreducible as an ordinary polynomial. Over the
// rationals only degrees <= 3 are decided (UnsupportedDegree beyond); over
// prime fields any degree is decided.
bool is_irreducible(const LaurentPoly& f);

// All unit classes of irreducibles over F_p with normal form of degree
// 1..max_degree (1 <= max_degree <= 8), sorted by degree then by the
// descending coefficient vector. Enumeration is bounded; CapExceeded when
// p^max_degree is out of reach.
std::vector<LaurentPoly> enumerate_irreducible_classes(const FieldSpec& field,
                                                       int max_degree);

// Divisibility of unit classes: normalize(f) divides normalize(g).
bool divides(const LaurentPoly& f, const LaurentPoly& g);

}  // namespace lpa
