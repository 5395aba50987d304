#include "lpa/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>

namespace lpa {

namespace {

bool small_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

FieldSpec FieldSpec::prime_field(int p) {
  if (!small_prime(p) || p > 97) {
    fail(ErrorCode::OutOfRange,
         "prime field characteristic must be a prime <= 97, got " +
             std::to_string(p));
  }
  return FieldSpec{FieldKind::PrimeField, p};
}

std::string to_string(const FieldSpec& f) {
  switch (f.kind) {
    case FieldKind::Rationals: return "Q";
    case FieldKind::PrimeField: return "F" + std::to_string(f.p);
    case FieldKind::Symbolic: return "symbolic";
  }
  return "?";
}

FieldSpec parse_field(const std::string& text) {
  if (text == "symbolic") return FieldSpec::symbolic();
  if (text == "Q") return FieldSpec::rationals();
  if (text.size() >= 2 && text[0] == 'F') {
    int p = 0;
    for (std::size_t i = 1; i < text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
        fail(ErrorCode::ParseError, "bad field name: " + text);
      }
      p = p * 10 + (text[i] - '0');
      if (p > 1000) fail(ErrorCode::ParseError, "bad field name: " + text);
    }
    if (!small_prime(p) || p > 97) {
      fail(ErrorCode::ParseError,
           "field characteristic must be a prime <= 97: " + text);
    }
    return FieldSpec::prime_field(p);
  }
  fail(ErrorCode::ParseError, "bad field name: " + text);
}

Rational make_rational(long long num, long long den) {
  if (den == 0) fail(ErrorCode::ParseError, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(std::llabs(num), den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0) den = 1;
  return Rational{num, den};
}

namespace {

long long mod_canon(long long v, int p) {
  long long r = v % p;
  if (r < 0) r += p;
  return r;
}

long long mod_pow(long long base, long long exp, int p) {
  long long result = 1;
  base = mod_canon(base, p);
  while (exp > 0) {
    if (exp & 1) result = (result * base) % p;
    base = (base * base) % p;
    exp >>= 1;
  }
  return result;
}

long long mod_inverse(long long v, int p) {
  v = mod_canon(v, p);
  if (v == 0) fail(ErrorCode::ZeroPolynomial, "division by zero residue");
  return mod_pow(v, p - 2, p);
}

Rational coeff_canon(const FieldSpec& field, const Rational& r) {
  if (field.kind == FieldKind::PrimeField) {
    long long num = mod_canon(r.num, field.p);
    long long den_inv = mod_inverse(r.den, field.p);
    return Rational{(num * den_inv) % field.p, 1};
  }
  return make_rational(r.num, r.den);
}

Rational coeff_add(const FieldSpec& field, const Rational& a,
                   const Rational& b) {
  if (field.kind == FieldKind::PrimeField) {
    return Rational{mod_canon(a.num + b.num, field.p), 1};
  }
  return make_rational(a.num * b.den + b.num * a.den, a.den * b.den);
}

Rational coeff_mul(const FieldSpec& field, const Rational& a,
                   const Rational& b) {
  if (field.kind == FieldKind::PrimeField) {
    return Rational{(a.num * b.num) % field.p, 1};
  }
  return make_rational(a.num * b.num, a.den * b.den);
}

Rational coeff_div(const FieldSpec& field, const Rational& a,
                   const Rational& b) {
  if (field.kind == FieldKind::PrimeField) {
    return Rational{(a.num * mod_inverse(b.num, field.p)) % field.p, 1};
  }
  if (b.num == 0) fail(ErrorCode::ZeroPolynomial, "division by zero");
  return make_rational(a.num * b.den, a.den * b.num);
}

Rational coeff_neg(const FieldSpec& field, const Rational& a) {
  if (field.kind == FieldKind::PrimeField) {
    return Rational{mod_canon(-a.num, field.p), 1};
  }
  return Rational{-a.num, a.den};
}

}  // namespace

LaurentPoly::LaurentPoly(FieldSpec field, std::map<int, Rational> coeffs)
    : field_(field) {
  if (field.kind == FieldKind::Symbolic) {
    fail(ErrorCode::SymbolicField,
         "the symbolic field carries no concrete polynomials");
  }
  for (const auto& [exp, c] : coeffs) {
    Rational canon = coeff_canon(field, c);
    if (canon.num != 0) coeffs_.emplace(exp, canon);
  }
}

int LaurentPoly::min_exponent() const {
  if (coeffs_.empty()) fail(ErrorCode::ZeroPolynomial, "zero polynomial");
  return coeffs_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (coeffs_.empty()) fail(ErrorCode::ZeroPolynomial, "zero polynomial");
  return coeffs_.rbegin()->first;
}

namespace {

struct TextCursor {
  const std::string& s;
  std::size_t i = 0;

  bool done() const { return i >= s.size(); }
  char peek() const { return s[i]; }
  bool eat(char c) {
    if (!done() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
};

long long parse_integer(TextCursor& cur) {
  bool neg = cur.eat('-');
  if (cur.done() || !std::isdigit(static_cast<unsigned char>(cur.peek()))) {
    fail(ErrorCode::ParseError, "expected an integer in polynomial text");
  }
  long long v = 0;
  int digits = 0;
  while (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek()))) {
    v = v * 10 + (cur.peek() - '0');
    if (++digits > 15) {
      fail(ErrorCode::ParseError, "integer too large in polynomial text");
    }
    ++cur.i;
  }
  return neg ? -v : v;
}

}  // namespace

LaurentPoly LaurentPoly::from_text(const FieldSpec& field,
                                   const std::string& text) {
  if (field.kind == FieldKind::Symbolic) {
    fail(ErrorCode::SymbolicField,
         "cannot parse a concrete polynomial over the symbolic field");
  }
  std::string stripped;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) stripped += c;
  }
  if (stripped.empty()) {
    fail(ErrorCode::ParseError, "empty polynomial text");
  }
  TextCursor cur{stripped};
  std::map<int, Rational> coeffs;
  long long sign = 1;
  if (cur.eat('+')) {
    sign = 1;
  } else if (cur.eat('-')) {
    sign = -1;
  }
  while (true) {
    long long num = 1;
    long long den = 1;
    bool have_coeff = false;
    if (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      num = parse_integer(cur);
      have_coeff = true;
      if (cur.eat('/')) den = parse_integer(cur);
    }
    if (cur.eat('*') &&
        (!have_coeff || cur.done() || cur.peek() != 'x')) {
      fail(ErrorCode::ParseError, "'*' must sit between a coefficient and x");
    }
    int exp = 0;
    if (cur.eat('x')) {
      exp = 1;
      if (cur.eat('^')) {
        long long e = parse_integer(cur);
        if (e < -1000 || e > 1000) {
          fail(ErrorCode::ParseError, "exponent out of range");
        }
        exp = static_cast<int>(e);
      }
    } else if (!have_coeff) {
      fail(ErrorCode::ParseError, "expected a monomial");
    }
    Rational term = make_rational(sign * num, den);
    auto it = coeffs.find(exp);
    if (it == coeffs.end()) {
      coeffs.emplace(exp, term);
    } else {
      it->second = make_rational(it->second.num * term.den +
                                     term.num * it->second.den,
                                 it->second.den * term.den);
    }
    if (cur.done()) break;
    if (cur.eat('+')) {
      sign = 1;
    } else if (cur.eat('-')) {
      sign = -1;
    } else {
      fail(ErrorCode::ParseError,
           std::string("unexpected character in polynomial text: ") +
               cur.peek());
    }
  }
  return LaurentPoly(field, std::move(coeffs));
}

std::string LaurentPoly::to_text() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    int exp = it->first;
    Rational c = it->second;
    bool negative = c.num < 0;
    long long num = std::llabs(c.num);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? "-" : "+";
    }
    std::string magnitude = std::to_string(num);
    if (c.den != 1) magnitude += "/" + std::to_string(c.den);
    if (exp == 0) {
      out += magnitude;
      continue;
    }
    if (num != 1 || c.den != 1) out += magnitude + "*";
    out += "x";
    if (exp != 1) out += "^" + std::to_string(exp);
  }
  return out;
}

LaurentPoly normalize(const LaurentPoly& f) {
  if (f.field().kind == FieldKind::Symbolic) {
    fail(ErrorCode::SymbolicField, "cannot normalize a symbolic polynomial");
  }
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "cannot normalize zero");
  int shift = f.min_exponent();
  Rational lead = f.coeffs().rbegin()->second;
  std::map<int, Rational> out;
  for (const auto& [exp, c] : f.coeffs()) {
    out.emplace(exp - shift, coeff_div(f.field(), c, lead));
  }
  return LaurentPoly(f.field(), std::move(out));
}

bool associates(const LaurentPoly& f, const LaurentPoly& g) {
  if (f.field() != g.field()) {
    fail(ErrorCode::FieldMismatch, "polynomials over different fields");
  }
  return normalize(f) == normalize(g);
}

namespace {

// Dense ascending coefficient vector of a normalized polynomial.
std::vector<Rational> to_dense(const LaurentPoly& f) {
  std::vector<Rational> out(static_cast<std::size_t>(f.max_exponent()) + 1,
                            Rational{0, 1});
  for (const auto& [exp, c] : f.coeffs()) {
    out[static_cast<std::size_t>(exp)] = c;
  }
  return out;
}

int dense_degree(const std::vector<Rational>& v) {
  for (std::size_t i = v.size(); i-- > 0;) {
    if (v[i].num != 0) return static_cast<int>(i);
  }
  return -1;
}

// Remainder of a by b over the field; b must be nonzero.
std::vector<Rational> dense_rem(const FieldSpec& field,
                                std::vector<Rational> a,
                                const std::vector<Rational>& b) {
  int db = dense_degree(b);
  Rational lead = b[static_cast<std::size_t>(db)];
  int da = dense_degree(a);
  while (da >= db) {
    Rational factor =
        coeff_div(field, a[static_cast<std::size_t>(da)], lead);
    for (int i = 0; i <= db; ++i) {
      Rational sub = coeff_mul(field, factor, b[static_cast<std::size_t>(i)]);
      a[static_cast<std::size_t>(da - db + i)] =
          coeff_add(field, a[static_cast<std::size_t>(da - db + i)],
                    coeff_neg(field, sub));
    }
    da = dense_degree(a);
  }
  return a;
}

// ---- F_p machinery for irreducibility (ascending int vectors, mod p). ----

using FPoly = std::vector<int>;

int fp_degree(const FPoly& f) {
  for (std::size_t i = f.size(); i-- > 0;) {
    if (f[i] != 0) return static_cast<int>(i);
  }
  return -1;
}

void fp_trim(FPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

FPoly fp_rem(FPoly a, const FPoly& b, int p) {
  int db = fp_degree(b);
  long long lead_inv = mod_inverse(b[static_cast<std::size_t>(db)], p);
  int da = fp_degree(a);
  while (da >= db) {
    long long factor = (a[static_cast<std::size_t>(da)] * lead_inv) % p;
    for (int i = 0; i <= db; ++i) {
      long long v = a[static_cast<std::size_t>(da - db + i)] -
                    factor * b[static_cast<std::size_t>(i)] % p;
      a[static_cast<std::size_t>(da - db + i)] =
          static_cast<int>(mod_canon(v, p));
    }
    da = fp_degree(a);
  }
  fp_trim(a);
  return a;
}

FPoly fp_mulmod(const FPoly& a, const FPoly& b, const FPoly& mod, int p) {
  if (a.empty() || b.empty()) return {};
  FPoly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = static_cast<int>(
          (prod[i + j] + static_cast<long long>(a[i]) * b[j]) % p);
    }
  }
  return fp_rem(std::move(prod), mod, p);
}

// x^(p^k) mod f, by binary powering with the 64-bit exponent p^k.
FPoly fp_frobenius_power(const FPoly& f, int p, int k) {
  std::uint64_t e = 1;
  for (int i = 0; i < k; ++i) e *= static_cast<std::uint64_t>(p);
  FPoly result{1};
  FPoly base = fp_rem(FPoly{0, 1}, f, p);
  while (e > 0) {
    if (e & 1) result = fp_mulmod(result, base, f, p);
    base = fp_mulmod(base, base, f, p);
    e >>= 1;
  }
  return result;
}

FPoly fp_sub(FPoly a, const FPoly& b, int p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) {
    a[i] = static_cast<int>(mod_canon(a[i] - b[i], p));
  }
  fp_trim(a);
  return a;
}

FPoly fp_gcd(FPoly a, FPoly b, int p) {
  fp_trim(a);
  fp_trim(b);
  while (!b.empty()) {
    FPoly r = fp_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Deterministic irreducibility over F_p: f of degree n is irreducible iff
// x^(p^n) = x mod f and gcd(x^(p^(n/q)) - x, f) = 1 for every prime q | n.
bool fp_irreducible(const FPoly& f, int p) {
  int n = fp_degree(f);
  if (n <= 0) return false;
  if (n == 1) return true;
  std::vector<int> prime_divisors;
  int m = n;
  for (int q = 2; q <= m; ++q) {
    if (m % q == 0) {
      prime_divisors.push_back(q);
      while (m % q == 0) m /= q;
    }
  }
  const FPoly x{0, 1};
  for (int q : prime_divisors) {
    FPoly h = fp_frobenius_power(f, p, n / q);
    FPoly g = fp_gcd(fp_sub(std::move(h), x, p), f, p);
    if (fp_degree(g) != 0) return false;
  }
  FPoly h = fp_frobenius_power(f, p, n);
  return fp_sub(std::move(h), x, p).empty();
}

FPoly to_fp(const LaurentPoly& f) {
  // Assumes f normalized over a prime field: exponents 0..deg, residues.
  FPoly out(static_cast<std::size_t>(f.max_exponent()) + 1, 0);
  for (const auto& [exp, c] : f.coeffs()) {
    out[static_cast<std::size_t>(exp)] = static_cast<int>(c.num);
  }
  return out;
}

// Rational-root test for a monic polynomial with rational coefficients of
// degree 2 or 3: irreducible over Q iff it has no rational root.
bool rational_has_root(const std::vector<Rational>& dense) {
  long long scale = 1;
  for (const auto& c : dense) scale = std::lcm(scale, c.den);
  std::vector<long long> a;
  a.reserve(dense.size());
  for (const auto& c : dense) a.push_back(c.num * (scale / c.den));
  long long a0 = std::llabs(a.front());
  long long an = std::llabs(a.back());
  auto divisors = [](long long v) {
    std::vector<long long> out;
    for (long long d = 1; d * d <= v; ++d) {
      if (v % d == 0) {
        out.push_back(d);
        out.push_back(v / d);
      }
    }
    return out;
  };
  for (long long pnum : divisors(a0)) {
    for (long long qden : divisors(an)) {
      for (int sign : {1, -1}) {
        // Evaluate sum a_i (p/q)^i * q^n as integers: sum a_i p^i q^(n-i).
        long long p_signed = sign * pnum;
        long long acc = 0;
        long long n = static_cast<long long>(a.size()) - 1;
        for (std::size_t i = 0; i < a.size(); ++i) {
          long long term = a[i];
          for (std::size_t k = 0; k < i; ++k) term *= p_signed;
          for (long long k = static_cast<long long>(i); k < n; ++k) {
            term *= qden;
          }
          acc += term;
        }
        if (acc == 0) return true;
      }
    }
  }
  return false;
}

}  // namespace

bool is_irreducible(const LaurentPoly& f) {
  LaurentPoly n = normalize(f);
  int deg = n.max_exponent();
  if (deg == 0) return false;  // units are not irreducible
  if (n.field().kind == FieldKind::PrimeField) {
    return fp_irreducible(to_fp(n), n.field().p);
  }
  if (deg == 1) return true;
  if (deg > 3) {
    fail(ErrorCode::UnsupportedDegree,
         "irreducibility over Q is only decided up to degree 3");
  }
  return !rational_has_root(to_dense(n));
}

std::vector<LaurentPoly> enumerate_irreducible_classes(const FieldSpec& field,
                                                       int max_degree) {
  if (field.kind == FieldKind::Symbolic) {
    fail(ErrorCode::SymbolicField,
         "cannot enumerate irreducible classes symbolically");
  }
  if (field.kind == FieldKind::Rationals) {
    fail(ErrorCode::OutOfRange,
         "irreducible classes are enumerated over prime fields only");
  }
  if (max_degree < 1 || max_degree > 8) {
    fail(ErrorCode::OutOfRange, "max_degree must lie in 1..8");
  }
  const int p = field.p;
  std::uint64_t candidates = 0;
  std::uint64_t power = 1;
  for (int d = 1; d <= max_degree; ++d) {
    power *= static_cast<std::uint64_t>(p);
    candidates += power;
    if (candidates > 4000000) {
      fail(ErrorCode::CapExceeded,
           "too many candidate polynomials over " + to_string(field));
    }
  }
  std::vector<LaurentPoly> out;
  for (int d = 1; d <= max_degree; ++d) {
    std::uint64_t total = 1;
    for (int i = 0; i < d; ++i) total *= static_cast<std::uint64_t>(p);
    for (std::uint64_t counter = 0; counter < total; ++counter) {
      // Digits of the counter, most significant first, give the descending
      // coefficient vector below the leading 1 — so output order is the
      // required (degree, coefficient vector) order.
      FPoly poly(static_cast<std::size_t>(d) + 1, 0);
      poly[static_cast<std::size_t>(d)] = 1;
      std::uint64_t rest = counter;
      for (int i = 0; i < d; ++i) {
        poly[static_cast<std::size_t>(i)] = static_cast<int>(rest % p);
        rest /= p;
      }
      if (poly[0] == 0) continue;  // unit-class reps have nonzero constant
      if (!fp_irreducible(poly, p)) continue;
      std::map<int, Rational> coeffs;
      for (int i = 0; i <= d; ++i) {
        if (poly[static_cast<std::size_t>(i)] != 0) {
          coeffs.emplace(i, Rational{poly[static_cast<std::size_t>(i)], 1});
        }
      }
      out.emplace_back(field, std::move(coeffs));
    }
  }
  return out;
}

bool divides(const LaurentPoly& f, const LaurentPoly& g) {
  if (f.field() != g.field()) {
    fail(ErrorCode::FieldMismatch, "polynomials over different fields");
  }
  LaurentPoly nf = normalize(f);
  LaurentPoly ng = normalize(g);
  if (nf.max_exponent() > ng.max_exponent()) return false;
  std::vector<Rational> rem =
      dense_rem(nf.field(), to_dense(ng), to_dense(nf));
  return dense_degree(rem) < 0;
}

}  // namespace lpa
