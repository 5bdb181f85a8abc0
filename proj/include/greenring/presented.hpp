#pragma once

// Presented rings attached to the Radford Hopf algebra:
//
//   RadfordGreen  Z[Y,Z,X1..X{m-1}] / (Y^n-1, (1+Y-Z)F_n, YX1-X1, ZX1-2X1,
//                                      X1^j - n^{j-1}X_j, X1^m - n^{m-2}(1+..+Y^{n-1})F_n)
//                 (m = 1 gives the Green ring of the Taft algebra)
//   Grothendieck  Z[Y,X1..X{m-1}] / (Y^n-1, YX1-X1, X1^j - n^{j-1}X_j, X1^m - n^{m-1}(1+..+Y^{n-1}))
//   Stable        Z[Y,Z] / (Y^n-1, F_n)
//
// Elements are stored as coefficient vectors over a fixed normal-form basis.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "greenring/poly.hpp"

namespace greenring {

enum class RingKind { RadfordGreen, Grothendieck, Stable };

std::string to_string(RingKind kind);

struct BasisLabel {
  enum class Type { Mono, Xgen, StableF };

  Type type = Type::Mono;
  std::uint32_t y = 0;      // Y exponent (Mono, StableF)
  std::uint32_t z = 0;      // Z exponent (Mono)
  std::uint32_t index = 0;  // X index (Xgen) or Dickson index (StableF)

  static BasisLabel mono(std::uint32_t y_exp, std::uint32_t z_exp) { return {Type::Mono, y_exp, z_exp, 0}; }
  static BasisLabel xgen(std::uint32_t j) { return {Type::Xgen, 0, 0, j}; }
  static BasisLabel stable_f(std::uint32_t y_exp, std::uint32_t f_index) { return {Type::StableF, y_exp, 0, f_index}; }

  std::string to_string() const;
  bool operator==(const BasisLabel&) const = default;
};

class RingSpec;
using RingSpecPtr = std::shared_ptr<const RingSpec>;

class RingSpec {
 public:
  // n >= 2, m >= 1. m is ignored for Stable.
  static RingSpecPtr make(RingKind kind, int n, int m = 1);

  RingKind kind() const { return kind_; }
  int n() const { return n_; }
  int m() const { return m_; }
  std::size_t x_arity() const { return x_arity_; }
  std::size_t rank() const { return labels_.size(); }
  const std::vector<BasisLabel>& labels() const { return labels_; }
  const BasisLabel& label(std::size_t i) const { return labels_.at(i); }
  std::optional<std::size_t> index_of(const BasisLabel& l) const;
  std::size_t unit_index() const { return 0; }
  bool same_ring(const RingSpec& o) const { return kind_ == o.kind_ && n_ == o.n_ && m_ == o.m_; }
  std::string describe() const;

  // Internal reduction data, exposed for the reduction routines.
  struct Rewrite {
    std::size_t z_dim = 1;                 // Z exponents kept in monomial coordinates
    std::vector<Rational> top;             // monomial coordinates of Z^{z_dim}
    std::vector<Rational> x_power_m;       // basis coordinates of X1^m (non-Stable, m >= 2)
    std::vector<std::vector<Rational>> z_powers;  // cached monomial coordinates of Z^b
    Integer fn_at_one_two;                 // F_n(1, 2), verified at construction
    // Stable only: columns are basis coordinates of each monomial y^i z^j.
    std::vector<std::vector<Rational>> mono_to_f;
    std::vector<std::vector<Rational>> f_to_mono;
  };
  const Rewrite& rewrite() const { return rewrite_; }

 private:
  RingSpec(RingKind kind, int n, int m);

  RingKind kind_;
  int n_;
  int m_;
  std::size_t x_arity_;
  std::vector<BasisLabel> labels_;
  Rewrite rewrite_;
};

class RingElement {
 public:
  explicit RingElement(RingSpecPtr spec);
  RingElement(RingSpecPtr spec, std::vector<Rational> coeffs);

  static RingElement basis(RingSpecPtr spec, std::size_t index);
  static RingElement constant(RingSpecPtr spec, const Rational& c);

  const RingSpecPtr& spec() const { return spec_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }
  Rational coeff(const BasisLabel& l) const;
  bool is_zero() const;
  bool is_integral() const;
  // Throws Integrality naming `where` when a coefficient is not an integer.
  const RingElement& assert_integral(const char* where) const;
  std::vector<Integer> integer_coeffs() const;

  RingElement operator-() const;
  RingElement& operator+=(const RingElement& o);
  RingElement& operator-=(const RingElement& o);
  RingElement& operator*=(const Rational& c);
  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator*(RingElement a, const Rational& c) { return a *= c; }
  friend RingElement operator*(const Rational& c, RingElement a) { return a *= c; }
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  bool operator==(const RingElement& o) const;

  RingElement pow(std::uint64_t e) const;

  // Polynomial whose reduction is this element.
  Poly representative() const;
  std::string to_string() const;

 private:
  void check_same(const RingElement& o) const;

  RingSpecPtr spec_;
  std::vector<Rational> coeffs_;
};

RingSpecPtr make_ring(RingKind kind, int n, int m = 1);

// Normal form of p in the ring. p must carry spec.x_arity() X variables.
RingElement reduce(const RingSpecPtr& spec, const Poly& p);

RingElement ring_mul(const RingElement& a, const RingElement& b);

// y^i F_j * y^k F_l in the stable ring by the closed product formula.
RingElement stable_mul_closed(const RingSpecPtr& spec, int i, int j, int k, int l);

// Monomial coordinates of the stable ring: index z*n + y for y^y z^z, z <= n-2.
struct StableMonomial {
  std::uint32_t y;
  std::uint32_t z;
  std::string to_string() const;
};

// y^i z^j expressed in the y^i F_j basis.
RingElement to_f_basis(const RingSpecPtr& spec, int i, int j);
// Coordinates over {y^i z^j} (indexed z*n + y) of a stable element.
std::vector<Rational> to_monomial_basis(const RingElement& e);
std::string render_monomial_coords(int n, const std::vector<Rational>& coords);

// The relations that define the ring, as polynomials (all reduce to zero).
std::vector<Poly> defining_relations(const RingSpec& spec);

// Ring homomorphism between presented rings determined by images of the
// generators Y, Z, X1..X{m-1}. Construction checks that every defining
// relation of the source maps to zero.
class PresentedHom {
 public:
  PresentedHom(RingSpecPtr source, RingSpecPtr target, RingElement y_image, RingElement z_image,
               std::vector<RingElement> x_images);

  const RingSpecPtr& source() const { return source_; }
  const RingSpecPtr& target() const { return target_; }
  RingElement apply(const RingElement& a) const;
  RingElement apply_poly(const Poly& p) const;

 private:
  RingSpecPtr source_;
  RingSpecPtr target_;
  RingElement y_image_;
  RingElement z_image_;
  std::vector<RingElement> x_images_;
};

// Y -> y, Z -> z, X_j -> 0 onto Stable(n).
PresentedHom stable_projection(const RingSpecPtr& radford);
// Y -> Y, Z -> 1 + Y, X_j -> X_j onto Grothendieck(n, m).
PresentedHom grothendieck_projection(const RingSpecPtr& radford);

// Normal forms of y^i F_n (i = 0..n-1) followed by X_1..X_{m-1}.
std::vector<RingElement> projective_kernel_basis(const RingSpecPtr& radford);

}  // namespace greenring
