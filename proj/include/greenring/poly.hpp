#pragma once

// Sparse multivariate polynomials in Y, Z, X1..X{m-1} with exact rational
// coefficients.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <type_traits>
#include <vector>

#include <gmpxx.h>

#include "greenring/error.hpp"

namespace greenring {

using Rational = mpq_class;
using Integer = mpz_class;

struct Monomial {
  std::uint32_t y = 0;
  std::uint32_t z = 0;
  std::vector<std::uint32_t> x;  // x[j-1] is the exponent of X_j

  std::uint64_t x_degree() const;
  bool has_x() const;
  Monomial operator*(const Monomial& o) const;
  bool operator==(const Monomial&) const = default;
};

// Canonical order: descending on (total X-degree, x exponents, z, y).
// Comparator returns true when a precedes b in iteration order.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class Poly {
 public:
  using Terms = std::map<Monomial, Rational, MonomialOrder>;

  explicit Poly(std::size_t x_arity = 0) : arity_(x_arity) {}

  static Poly constant(const Rational& c, std::size_t x_arity = 0);
  static Poly y(std::size_t x_arity = 0) { return monomial(1, 0, x_arity); }
  static Poly z(std::size_t x_arity = 0) { return monomial(0, 1, x_arity); }
  static Poly x(std::size_t index, std::size_t x_arity);
  static Poly monomial(std::uint32_t y_exp, std::uint32_t z_exp, std::size_t x_arity = 0);
  static Poly term(const Monomial& m, const Rational& c, std::size_t x_arity);

  std::size_t arity() const { return arity_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool has_x() const;
  // Highest Z exponent among terms; -1 for the zero polynomial.
  long z_degree() const;
  Rational coeff(const Monomial& m) const;

  // Adds c*m in place; drops the entry when it cancels.
  void add_term(const Monomial& m, const Rational& c);
  // Re-embeds the polynomial into a context with more X variables.
  Poly with_arity(std::size_t x_arity) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  bool operator==(const Poly& o) const { return arity_ == o.arity_ && terms_ == o.terms_; }

  Poly pow(std::uint64_t e) const;

  // Substitutes Y and Z. Throws Unsupported when an X variable occurs.
  template <class Scalar>
  Scalar eval_yz(const Scalar& y_val, const Scalar& z_val) const;

  std::string to_string() const;

 private:
  void check_context(const Poly& o) const;

  std::size_t arity_;
  Terms terms_;
};

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);

// Rational rendered as an integer when integral, "p/q" otherwise.
std::string rational_to_string(const Rational& q);

template <class Scalar>
Scalar Poly::eval_yz(const Scalar& y_val, const Scalar& z_val) const {
  if (has_x()) throw Error(ErrorCode::Unsupported, "eval_yz: polynomial contains X variables");
  auto ipow = [](Scalar base, std::uint32_t e) {
    Scalar r(1);
    while (e) {
      if (e & 1u) r *= base;
      base *= base;
      e >>= 1u;
    }
    return r;
  };
  Scalar sum(0);
  for (const auto& [m, c] : terms_) {
    Scalar term = ipow(y_val, m.y) * ipow(z_val, m.z);
    if constexpr (std::is_same_v<Scalar, Rational>) {
      sum += c * term;
    } else {
      sum += static_cast<Scalar>(c.get_d()) * term;
    }
  }
  return sum;
}

}  // namespace greenring
