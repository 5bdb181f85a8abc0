#include "greenring/presented.hpp"

#include <algorithm>
#include <map>

#include "greenring/dickson.hpp"

namespace greenring {

std::string to_string(RingKind kind) {
  switch (kind) {
    case RingKind::RadfordGreen: return "RadfordGreen";
    case RingKind::Grothendieck: return "Grothendieck";
    case RingKind::Stable: return "Stable";
  }
  return "?";
}

namespace {

std::string power_str(const char* var, std::uint32_t e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return std::string(var) + "^" + std::to_string(e);
}

std::string join_factors(std::initializer_list<std::string> parts) {
  std::string out;
  for (const auto& p : parts) {
    if (p.empty()) continue;
    if (!out.empty()) out += '*';
    out += p;
  }
  return out.empty() ? "1" : out;
}

Integer ipow(long base, unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), e);
  return r;
}

using Coords = std::vector<Rational>;

void axpy(Coords& acc, const Rational& c, const Coords& v) {
  if (c == 0) return;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) acc[i] += c * v[i];
  }
}

// Multiplies by Y^shift in monomial coordinates (index z*n + y).
Coords shift_y(const Coords& v, int n, std::uint64_t shift) {
  Coords out(v.size());
  const auto s = static_cast<std::size_t>(shift % static_cast<std::uint64_t>(n));
  for (std::size_t idx = 0; idx < v.size(); ++idx) {
    if (v[idx] == 0) continue;
    const std::size_t z = idx / n, y = idx % n;
    out[z * n + (y + s) % n] = v[idx];
  }
  return out;
}

// Monomial coordinates of a polynomial in Y, Z whose Z-degree is below z_dim.
Coords poly_to_mono_coords(const Poly& p, int n, std::size_t z_dim) {
  Coords out(static_cast<std::size_t>(n) * z_dim);
  for (const auto& [m, c] : p.terms()) {
    if (m.z >= z_dim || m.has_x()) throw Error(ErrorCode::Presentation, "rewrite target not in normal form");
    out[m.z * n + m.y % n] += c;
  }
  return out;
}

Coords mul_z(const Coords& v, int n, const RingSpec::Rewrite& rw) {
  Coords out(v.size());
  const std::size_t top_row = rw.z_dim - 1;
  for (std::size_t idx = 0; idx < v.size(); ++idx) {
    if (v[idx] == 0) continue;
    const std::size_t z = idx / n, y = idx % n;
    if (z < top_row) {
      out[(z + 1) * n + y] += v[idx];
    } else {
      axpy(out, v[idx], shift_y(rw.top, n, y));
    }
  }
  return out;
}

Coords z_power(const RingSpec& spec, std::uint64_t b) {
  const auto& rw = spec.rewrite();
  if (b < rw.z_powers.size()) return rw.z_powers[b];
  Coords v = rw.z_powers.back();
  for (std::uint64_t e = rw.z_powers.size() - 1; e < b; ++e) v = mul_z(v, spec.n(), rw);
  return v;
}

}  // namespace

std::string BasisLabel::to_string() const {
  switch (type) {
    case Type::Mono: return join_factors({power_str("Y", y), power_str("Z", z)});
    case Type::Xgen: return "X" + std::to_string(index);
    case Type::StableF: {
      std::string f = "F_" + std::to_string(index);
      return y == 0 ? f : power_str("y", y) + "*" + f;
    }
  }
  return "?";
}

std::string StableMonomial::to_string() const {
  return join_factors({power_str("y", y), power_str("z", z)});
}

RingSpec::RingSpec(RingKind kind, int n, int m) : kind_(kind), n_(n), m_(kind == RingKind::Stable ? 1 : m) {
  x_arity_ = kind_ == RingKind::Stable ? 0 : static_cast<std::size_t>(m_ - 1);

  const Poly fn = dickson_f(n_);
  rewrite_.fn_at_one_two = fn.eval_yz<Rational>(1, 2).get_num();
  if (rewrite_.fn_at_one_two != n_) {
    throw Error(ErrorCode::Presentation, "F_n(1,2) = " + rewrite_.fn_at_one_two.get_str() + " differs from n");
  }

  const auto un = static_cast<std::uint32_t>(n_);
  switch (kind_) {
    case RingKind::RadfordGreen: {
      for (std::uint32_t z = 0; z < un; ++z)
        for (std::uint32_t y = 0; y < un; ++y) labels_.push_back(BasisLabel::mono(y, z));
      rewrite_.z_dim = un;
      // Z^n = Z^n + (1 + Y - Z) F_n, whose right side has Z-degree below n.
      const Poly top = Poly::monomial(0, un) + (Poly::constant(1) + Poly::y() - Poly::z()) * fn;
      rewrite_.top = poly_to_mono_coords(top, n_, un);
      break;
    }
    case RingKind::Grothendieck:
      for (std::uint32_t y = 0; y < un; ++y) labels_.push_back(BasisLabel::mono(y, 0));
      rewrite_.z_dim = 1;
      break;
    case RingKind::Stable: {
      for (std::uint32_t f = 1; f < un; ++f)
        for (std::uint32_t y = 0; y < un; ++y) labels_.push_back(BasisLabel::stable_f(y, f));
      rewrite_.z_dim = un - 1;
      rewrite_.top = poly_to_mono_coords(Poly::monomial(0, un - 1) - fn, n_, un - 1);
      break;
    }
  }
  for (std::uint32_t j = 1; j <= x_arity_; ++j) labels_.push_back(BasisLabel::xgen(j));

  const std::size_t mono_dim = static_cast<std::size_t>(n_) * rewrite_.z_dim;
  Coords one(mono_dim);
  one[0] = 1;
  rewrite_.z_powers.push_back(one);
  if (kind_ != RingKind::Grothendieck) {
    for (std::size_t b = 1; b <= 2 * rewrite_.z_dim; ++b)
      rewrite_.z_powers.push_back(mul_z(rewrite_.z_powers.back(), n_, rewrite_));
  }

  if (x_arity_ > 0) {
    // X1^m in basis coordinates.
    Coords sum_y(mono_dim);
    for (int i = 0; i < n_; ++i) sum_y[i] = 1;
    Coords rhs = sum_y;
    Integer scale = ipow(n_, static_cast<unsigned long>(m_ - 1));
    if (kind_ == RingKind::RadfordGreen) {
      rhs = Coords(mono_dim);
      for (int i = 0; i < n_; ++i) axpy(rhs, 1, shift_y(poly_to_mono_coords(fn, n_, rewrite_.z_dim), n_, i));
      scale = ipow(n_, static_cast<unsigned long>(m_ - 2));
    }
    rewrite_.x_power_m.assign(labels_.size(), 0);
    for (std::size_t i = 0; i < mono_dim; ++i) rewrite_.x_power_m[i] = Rational(scale) * rhs[i];
  }

  if (kind_ == RingKind::Stable) {
    const std::size_t r = labels_.size();
    rewrite_.mono_to_f.assign(r, Coords(r));
    rewrite_.f_to_mono.assign(r, Coords(r));
    for (std::uint32_t j = 0; j + 1 < un; ++j) {
      const auto inverse = monomial_to_f_basis(static_cast<int>(j));
      for (std::uint32_t i = 0; i < un; ++i) {
        auto& col = rewrite_.mono_to_f[j * un + i];
        for (const auto& t : inverse) col[(t.f_index - 1) * un + (i + t.y_exp) % un] += Rational(t.coeff);
      }
    }
    for (std::uint32_t f = 1; f < un; ++f) {
      const Coords fj = poly_to_mono_coords(dickson_f(static_cast<int>(f)), n_, rewrite_.z_dim);
      for (std::uint32_t i = 0; i < un; ++i) rewrite_.f_to_mono[(f - 1) * un + i] = shift_y(fj, n_, i);
    }
  }
}

RingSpecPtr RingSpec::make(RingKind kind, int n, int m) {
  if (n < 2) throw Error(ErrorCode::Domain, "n must be >= 2, got " + std::to_string(n));
  if (m < 1) throw Error(ErrorCode::Domain, "m must be >= 1, got " + std::to_string(m));
  return RingSpecPtr(new RingSpec(kind, n, m));
}

RingSpecPtr make_ring(RingKind kind, int n, int m) { return RingSpec::make(kind, n, m); }

std::optional<std::size_t> RingSpec::index_of(const BasisLabel& l) const {
  auto it = std::find(labels_.begin(), labels_.end(), l);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::string RingSpec::describe() const {
  std::string s = to_string(kind_) + "(n=" + std::to_string(n_);
  if (kind_ != RingKind::Stable) s += ", m=" + std::to_string(m_);
  return s + ")";
}

// ---------------------------------------------------------------------------
// RingElement

RingElement::RingElement(RingSpecPtr spec) : spec_(std::move(spec)), coeffs_(spec_->rank()) {}

RingElement::RingElement(RingSpecPtr spec, std::vector<Rational> coeffs)
    : spec_(std::move(spec)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != spec_->rank()) throw Error(ErrorCode::Context, "coefficient vector has wrong length");
}

RingElement RingElement::basis(RingSpecPtr spec, std::size_t index) {
  RingElement e(std::move(spec));
  e.coeffs_.at(index) = 1;
  return e;
}

RingElement RingElement::constant(RingSpecPtr spec, const Rational& c) {
  RingElement e(std::move(spec));
  e.coeffs_[0] = c;
  return e;
}

Rational RingElement::coeff(const BasisLabel& l) const {
  auto idx = spec_->index_of(l);
  if (!idx) throw Error(ErrorCode::Context, "label " + l.to_string() + " not in " + spec_->describe());
  return coeffs_[*idx];
}

bool RingElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool RingElement::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.get_den() == 1; });
}

const RingElement& RingElement::assert_integral(const char* where) const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].get_den() != 1) {
      throw Error(ErrorCode::Integrality, std::string(where) + ": coefficient " + rational_to_string(coeffs_[i]) +
                                              " of " + spec_->label(i).to_string() + " is not an integer");
    }
  }
  return *this;
}

std::vector<Integer> RingElement::integer_coeffs() const {
  assert_integral("integer_coeffs");
  std::vector<Integer> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.get_num());
  return out;
}

void RingElement::check_same(const RingElement& o) const {
  if (!spec_->same_ring(*o.spec_)) {
    throw Error(ErrorCode::Context, "ring mismatch: " + spec_->describe() + " vs " + o.spec_->describe());
  }
}

RingElement RingElement::operator-() const {
  RingElement r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

RingElement& RingElement::operator+=(const RingElement& o) {
  check_same(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
  check_same(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

RingElement& RingElement::operator*=(const Rational& c) {
  for (auto& v : coeffs_) v *= c;
  return *this;
}

RingElement operator*(const RingElement& a, const RingElement& b) { return ring_mul(a, b); }

bool RingElement::operator==(const RingElement& o) const {
  return spec_->same_ring(*o.spec_) && coeffs_ == o.coeffs_;
}

RingElement RingElement::pow(std::uint64_t e) const {
  RingElement result = constant(spec_, 1);
  RingElement base = *this;
  while (e) {
    if (e & 1u) result = ring_mul(result, base);
    e >>= 1u;
    if (e) base = ring_mul(base, base);
  }
  return result;
}

Poly RingElement::representative() const {
  const std::size_t arity = spec_->x_arity();
  Poly p(arity);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    const auto& l = spec_->label(i);
    switch (l.type) {
      case BasisLabel::Type::Mono: p += Poly::monomial(l.y, l.z, arity) * coeffs_[i]; break;
      case BasisLabel::Type::Xgen: p += Poly::x(l.index, arity) * coeffs_[i]; break;
      case BasisLabel::Type::StableF:
        p += Poly::monomial(l.y, 0) * dickson_f(static_cast<int>(l.index)) * coeffs_[i];
        break;
    }
  }
  return p;
}

namespace {

std::string render_terms(const std::vector<std::pair<std::string, Rational>>& terms) {
  std::string out;
  for (const auto& [label, c] : terms) {
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (label == "1") {
      out += rational_to_string(mag);
    } else if (mag == 1) {
      out += label;
    } else {
      out += rational_to_string(mag) + "*" + label;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string RingElement::to_string() const {
  std::vector<std::pair<std::string, Rational>> terms;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) terms.emplace_back(spec_->label(i).to_string(), coeffs_[i]);
  return render_terms(terms);
}

std::string render_monomial_coords(int n, const std::vector<Rational>& coords) {
  std::vector<std::pair<std::string, Rational>> terms;
  for (std::size_t idx = 0; idx < coords.size(); ++idx) {
    StableMonomial m{static_cast<std::uint32_t>(idx % n), static_cast<std::uint32_t>(idx / n)};
    terms.emplace_back(m.to_string(), coords[idx]);
  }
  return render_terms(terms);
}

// ---------------------------------------------------------------------------
// Reduction and multiplication

RingElement reduce(const RingSpecPtr& spec, const Poly& p) {
  if (p.arity() != spec->x_arity()) {
    throw Error(ErrorCode::Context, "polynomial has " + std::to_string(p.arity()) + " X variables, " +
                                        spec->describe() + " expects " + std::to_string(spec->x_arity()));
  }
  const int n = spec->n();
  const auto& rw = spec->rewrite();
  const std::size_t mono_dim = static_cast<std::size_t>(n) * rw.z_dim;
  Coords mono(mono_dim);
  Coords basis(spec->rank());
  const std::size_t x_offset = spec->rank() - spec->x_arity();

  // X1^m * X1 = c X1 with c the value of the X1^m rule at Y = 1, Z = 2.
  Rational collapse = 0;
  if (spec->x_arity() > 0) {
    for (std::size_t idx = 0; idx < mono_dim; ++idx) {
      Integer two_pow;
      mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, idx / n);
      collapse += rw.x_power_m[idx] * Rational(two_pow);
    }
  }

  for (const auto& [m, c] : p.terms()) {
    if (spec->kind() == RingKind::Grothendieck && m.z > 0) {
      throw Error(ErrorCode::Context, "Z is not a generator of " + spec->describe());
    }
    if (!m.has_x()) {
      axpy(mono, c, shift_y(z_power(*spec, m.z), n, m.y));
      continue;
    }
    // Substitute X_j = X1^j / n^{j-1}; Y and Z act on X1 as 1 and 2.
    std::uint64_t e = 0;
    Rational factor = c;
    for (std::size_t j = 1; j <= m.x.size(); ++j) {
      const std::uint32_t xe = m.x[j - 1];
      if (xe == 0) continue;
      e += static_cast<std::uint64_t>(j) * xe;
      factor /= Rational(ipow(n, static_cast<unsigned long>((j - 1) * xe)));
    }
    if (m.z > 0) factor *= Rational(ipow(2, m.z));
    const auto big_m = static_cast<std::uint64_t>(spec->m());
    while (e > big_m) {
      factor *= collapse;
      e -= big_m;
    }
    if (e == big_m) {
      axpy(basis, factor, rw.x_power_m);
    } else {
      basis[x_offset + e - 1] += factor * Rational(ipow(n, static_cast<unsigned long>(e - 1)));
    }
  }

  if (spec->kind() == RingKind::Stable) {
    for (std::size_t idx = 0; idx < mono_dim; ++idx) axpy(basis, mono[idx], rw.mono_to_f[idx]);
  } else {
    for (std::size_t idx = 0; idx < mono_dim; ++idx) basis[idx] += mono[idx];
  }
  RingElement out(spec, std::move(basis));
  out.assert_integral("reduce");
  return out;
}

RingElement stable_mul_closed(const RingSpecPtr& spec, int i, int j, int k, int l) {
  if (spec->kind() != RingKind::Stable) throw Error(ErrorCode::Context, "stable_mul_closed needs a Stable ring");
  const int n = spec->n();
  if (i < 0 || i >= n || k < 0 || k >= n || j < 1 || j >= n || l < 1 || l >= n) {
    throw Error(ErrorCode::Domain, "stable_mul_closed: index out of range");
  }
  const int zeta = (j + l - 1 < n) ? 0 : j + l - n;
  const int t_max = std::min(j, l) - 1;
  if (zeta > t_max) throw Error(ErrorCode::Presentation, "stable_mul_closed: empty product range");
  RingElement out(spec);
  const auto un = static_cast<std::size_t>(n);
  std::vector<Rational> c(spec->rank());
  for (int t = zeta; t <= t_max; ++t) {
    const std::size_t y = static_cast<std::size_t>(i + k + t) % un;
    const std::size_t f = static_cast<std::size_t>(j + l - 1 - 2 * t);
    c[(f - 1) * un + y] += 1;
  }
  return RingElement(spec, std::move(c));
}

RingElement ring_mul(const RingElement& a, const RingElement& b) {
  if (!a.spec()->same_ring(*b.spec())) {
    throw Error(ErrorCode::Context, "ring mismatch: " + a.spec()->describe() + " vs " + b.spec()->describe());
  }
  const auto& spec = a.spec();
  if (spec->kind() != RingKind::Stable) return reduce(spec, a.representative() * b.representative());

  const std::size_t un = static_cast<std::size_t>(spec->n());
  std::vector<Rational> c(spec->rank());
  for (std::size_t p = 0; p < c.size(); ++p) {
    if (a[p] == 0) continue;
    for (std::size_t q = 0; q < c.size(); ++q) {
      if (b[q] == 0) continue;
      const Rational w = a[p] * b[q];
      const auto prod = stable_mul_closed(spec, static_cast<int>(p % un), static_cast<int>(p / un + 1),
                                          static_cast<int>(q % un), static_cast<int>(q / un + 1));
      axpy(c, w, prod.coeffs());
    }
  }
  RingElement out(spec, std::move(c));
  out.assert_integral("ring_mul");
  return out;
}

RingElement to_f_basis(const RingSpecPtr& spec, int i, int j) {
  if (spec->kind() != RingKind::Stable) throw Error(ErrorCode::Context, "to_f_basis needs a Stable ring");
  const int n = spec->n();
  if (i < 0 || i >= n || j < 0 || j > n - 2) {
    throw Error(ErrorCode::Domain, "to_f_basis: y^" + std::to_string(i) + " z^" + std::to_string(j) +
                                       " is not a monomial basis label");
  }
  return RingElement(spec, spec->rewrite().mono_to_f[static_cast<std::size_t>(j) * n + i]);
}

std::vector<Rational> to_monomial_basis(const RingElement& e) {
  if (e.spec()->kind() != RingKind::Stable) throw Error(ErrorCode::Context, "to_monomial_basis needs a Stable ring");
  Coords out(e.spec()->rank());
  for (std::size_t idx = 0; idx < out.size(); ++idx) axpy(out, e[idx], e.spec()->rewrite().f_to_mono[idx]);
  return out;
}

std::vector<Poly> defining_relations(const RingSpec& spec) {
  const std::size_t a = spec.x_arity();
  const int n = spec.n();
  const auto un = static_cast<std::uint32_t>(n);
  const Poly one = Poly::constant(1, a);
  const Poly y = Poly::y(a), z = Poly::z(a);
  const Poly fn = dickson_f(n).with_arity(a);
  Poly sum_y(a);
  for (std::uint32_t i = 0; i < un; ++i) sum_y += Poly::monomial(i, 0, a);

  std::vector<Poly> rels{Poly::monomial(un, 0, a) - one};
  switch (spec.kind()) {
    case RingKind::Stable: rels.push_back(fn); return rels;
    case RingKind::RadfordGreen: rels.push_back((one + y - z) * fn); break;
    case RingKind::Grothendieck: break;
  }
  if (a == 0) return rels;
  const Poly x1 = Poly::x(1, a);
  rels.push_back(y * x1 - x1);
  if (spec.kind() == RingKind::RadfordGreen) rels.push_back(z * x1 - Rational(2) * x1);
  for (std::size_t j = 2; j <= a; ++j)
    rels.push_back(x1.pow(j) - Rational(ipow(n, static_cast<unsigned long>(j - 1))) * Poly::x(j, a));
  const auto m = static_cast<unsigned long>(spec.m());
  if (spec.kind() == RingKind::RadfordGreen) {
    rels.push_back(x1.pow(m) - Rational(ipow(n, m - 2)) * sum_y * fn);
  } else {
    rels.push_back(x1.pow(m) - Rational(ipow(n, m - 1)) * sum_y);
  }
  return rels;
}

// ---------------------------------------------------------------------------
// Homomorphisms

PresentedHom::PresentedHom(RingSpecPtr source, RingSpecPtr target, RingElement y_image, RingElement z_image,
                           std::vector<RingElement> x_images)
    : source_(std::move(source)),
      target_(std::move(target)),
      y_image_(std::move(y_image)),
      z_image_(std::move(z_image)),
      x_images_(std::move(x_images)) {
  if (x_images_.size() != source_->x_arity()) throw Error(ErrorCode::Context, "wrong number of X images");
  auto check = [&](const RingElement& e) {
    if (!e.spec()->same_ring(*target_)) throw Error(ErrorCode::Context, "generator image outside target ring");
  };
  check(y_image_);
  check(z_image_);
  for (const auto& x : x_images_) check(x);
  for (const auto& rel : defining_relations(*source_)) {
    const RingElement img = apply_poly(rel);
    if (!img.is_zero()) {
      throw Error(ErrorCode::Presentation, "relation " + rel.to_string() + " maps to " + img.to_string() +
                                               " in " + target_->describe());
    }
  }
}

RingElement PresentedHom::apply_poly(const Poly& p) const {
  if (p.arity() != source_->x_arity()) throw Error(ErrorCode::Context, "polynomial arity does not match source");
  std::map<std::pair<std::size_t, std::uint64_t>, RingElement> powers;
  auto power = [&](std::size_t gen, std::uint64_t e) -> const RingElement& {
    auto key = std::make_pair(gen, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    const RingElement& base = gen == 0 ? y_image_ : gen == 1 ? z_image_ : x_images_[gen - 2];
    return powers.emplace(key, base.pow(e)).first->second;
  };

  RingElement acc(target_);
  for (const auto& [m, c] : p.terms()) {
    RingElement term = RingElement::constant(target_, c);
    if (m.y) term = ring_mul(term, power(0, m.y));
    if (m.z) term = ring_mul(term, power(1, m.z));
    for (std::size_t j = 0; j < m.x.size(); ++j)
      if (m.x[j]) term = ring_mul(term, power(j + 2, m.x[j]));
    acc += term;
  }
  return acc;
}

RingElement PresentedHom::apply(const RingElement& a) const {
  if (!a.spec()->same_ring(*source_)) throw Error(ErrorCode::Context, "element not in the homomorphism source");
  return apply_poly(a.representative());
}

namespace {

void require_radford(const RingSpecPtr& spec, const char* who) {
  if (spec->kind() != RingKind::RadfordGreen) {
    throw Error(ErrorCode::Context, std::string(who) + " needs a RadfordGreen ring, got " + spec->describe());
  }
}

}  // namespace

PresentedHom stable_projection(const RingSpecPtr& radford) {
  require_radford(radford, "stable_projection");
  auto target = make_ring(RingKind::Stable, radford->n());
  std::vector<RingElement> xs(radford->x_arity(), RingElement(target));
  return PresentedHom(radford, target, reduce(target, Poly::y()), reduce(target, Poly::z()), std::move(xs));
}

PresentedHom grothendieck_projection(const RingSpecPtr& radford) {
  require_radford(radford, "grothendieck_projection");
  auto target = make_ring(RingKind::Grothendieck, radford->n(), radford->m());
  const std::size_t a = target->x_arity();
  std::vector<RingElement> xs;
  for (std::size_t j = 1; j <= a; ++j) xs.push_back(reduce(target, Poly::x(j, a)));
  RingElement y = reduce(target, Poly::y(a));
  RingElement z = RingElement::constant(target, 1) + y;
  return PresentedHom(radford, target, y, z, std::move(xs));
}

std::vector<RingElement> projective_kernel_basis(const RingSpecPtr& radford) {
  require_radford(radford, "projective_kernel_basis");
  const std::size_t a = radford->x_arity();
  const Poly fn = dickson_f(radford->n()).with_arity(a);
  std::vector<RingElement> out;
  for (int i = 0; i < radford->n(); ++i)
    out.push_back(reduce(radford, Poly::monomial(static_cast<std::uint32_t>(i), 0, a) * fn));
  for (std::size_t j = 1; j <= a; ++j) out.push_back(reduce(radford, Poly::x(j, a)));
  return out;
}

}  // namespace greenring
