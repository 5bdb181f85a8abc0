#pragma once

// Shared test helpers: seeded generators and reference implementations that
// recompute results along a different path from the library.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "greenring/dickson.hpp"
#include "greenring/presented.hpp"

namespace gt {

using greenring::Integer;
using greenring::Monomial;
using greenring::Poly;
using greenring::Rational;
using greenring::RingElement;
using greenring::RingKind;
using greenring::RingSpecPtr;

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240917);
  return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline Poly random_poly(std::size_t arity, int max_terms = 8, int max_exp = 10, int max_coeff = 9) {
  Poly p(arity);
  const int terms = uniform(0, max_terms);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    m.y = static_cast<std::uint32_t>(uniform(0, max_exp));
    m.z = static_cast<std::uint32_t>(uniform(0, max_exp));
    m.x.assign(arity, 0);
    for (auto& e : m.x) e = uniform(0, 3) == 0 ? static_cast<std::uint32_t>(uniform(1, 3)) : 0;
    Rational c(uniform(-max_coeff, max_coeff), uniform(1, 3));
    c.canonicalize();
    p.add_term(m, c);
  }
  return p;
}

// Integer combination of at most `terms` basis elements, coefficients in [-5, 5].
inline RingElement random_element(const RingSpecPtr& spec, int terms = 6) {
  std::vector<Rational> c(spec->rank());
  const int k = uniform(0, terms);
  for (int t = 0; t < k; ++t) c[uniform(0, static_cast<int>(spec->rank()) - 1)] += uniform(-5, 5);
  return RingElement(spec, c);
}

// ---------------------------------------------------------------------------
// Reference Dickson polynomials: explicit coefficient tables c[y][z].

using Table = std::map<std::pair<unsigned, unsigned>, Integer>;

inline Table dickson_table(int k) {
  Table prev{{{0, 0}, 1}};
  if (k == 1) return prev;
  Table cur{{{0, 1}, 1}};
  for (int i = 3; i <= k; ++i) {
    Table next;
    for (const auto& [yz, c] : cur) next[{yz.first, yz.second + 1}] += c;
    for (const auto& [yz, c] : prev) next[{yz.first + 1, yz.second}] -= c;
    prev = cur;
    cur.clear();
    for (const auto& [yz, c] : next)
      if (c != 0) cur[yz] = c;
  }
  return cur;
}

inline Poly table_poly(const Table& t, std::size_t arity = 0) {
  Poly p(arity);
  for (const auto& [yz, c] : t) p += Poly::term(Monomial{yz.first, yz.second, std::vector<std::uint32_t>(arity)}, c, arity);
  return p;
}

inline Integer table_at_one_two(const Table& t) {
  Integer s = 0;
  for (const auto& [yz, c] : t) s += c * (Integer(1) << yz.second);
  return s;
}

// ---------------------------------------------------------------------------
// Reference reduction by term-at-a-time division against the relations,
// with X products folded pairwise. Returns basis coordinates in the library's
// label order, which the reference recomputes from the enumeration rules.

class ReferenceRing {
 public:
  ReferenceRing(RingKind kind, int n, int m) : kind_(kind), n_(n), m_(kind == RingKind::Stable ? 1 : m) {
    fn_ = table_poly(dickson_table(n_));
    if (kind_ == RingKind::RadfordGreen) {
      rel_ = (Poly::constant(1) + Poly::y() - Poly::z()) * fn_;  // top term -Z^n
      rel_top_ = static_cast<std::uint32_t>(n_);
      rel_sign_ = -1;
    } else if (kind_ == RingKind::Stable) {
      rel_ = fn_;  // top term +Z^{n-1}
      rel_top_ = static_cast<std::uint32_t>(n_ - 1);
      rel_sign_ = 1;
    }
    Poly sum_y;
    for (int i = 0; i < n_; ++i) sum_y += Poly::monomial(static_cast<std::uint32_t>(i), 0);
    if (kind_ == RingKind::RadfordGreen) {
      x_top_ = sum_y * fn_;
      x_top_scale_ = Integer(1);
      for (int i = 0; i < m_ - 2; ++i) x_top_scale_ *= n_;
    } else {
      x_top_ = sum_y;
      x_top_scale_ = Integer(1);
      for (int i = 0; i < m_ - 1; ++i) x_top_scale_ *= n_;
    }
    if (kind_ == RingKind::Stable) {
      for (unsigned f = 1; f < static_cast<unsigned>(n_); ++f)
        for (unsigned y = 0; y < static_cast<unsigned>(n_); ++y) index_[{0, y, f}] = rank_++;
    } else {
      const unsigned zmax = kind_ == RingKind::Grothendieck ? 1 : static_cast<unsigned>(n_);
      for (unsigned z = 0; z < zmax; ++z)
        for (unsigned y = 0; y < static_cast<unsigned>(n_); ++y) index_[{0, y, z}] = rank_++;
      for (int j = 1; j < m_; ++j) index_[{1, 0, static_cast<unsigned>(j)}] = rank_++;
    }
  }

  std::size_t rank() const { return rank_; }

  std::vector<Rational> reduce(const Poly& p) const {
    std::vector<Rational> out(rank_);
    Poly pure;  // Y, Z part
    for (const auto& [mono, c] : p.terms()) {
      std::vector<std::uint32_t> xs;
      for (std::size_t j = 0; j < mono.x.size(); ++j)
        for (std::uint32_t e = 0; e < mono.x[j]; ++e) xs.push_back(static_cast<std::uint32_t>(j + 1));
      const Poly yz = Poly::monomial(mono.y, mono.z);
      if (xs.empty()) {
        pure += yz * c;
        continue;
      }
      // Fold X factors: state is either c*X_e or a pure polynomial.
      Rational coeff = c;
      std::uint32_t e = xs[0];
      std::optional<Poly> collapsed;
      for (std::size_t t = 1; t < xs.size(); ++t) {
        const std::uint32_t k = xs[t];
        if (collapsed) {
          coeff *= collapsed->eval_yz<Rational>(1, 2);
          collapsed.reset();
          e = k;
        } else if (e + k < static_cast<std::uint32_t>(m_)) {
          coeff *= n_;
          e += k;
        } else if (e + k == static_cast<std::uint32_t>(m_)) {
          collapsed = x_top_ * Rational(x_top_scale_);
          // X_e X_k = X1^m / n^{m-2}
          Integer d = 1;
          for (int i = 0; i < m_ - 2; ++i) d *= n_;
          coeff /= d;
        } else {
          const Rational at = (x_top_ * Rational(x_top_scale_)).eval_yz<Rational>(1, 2);
          // X1^{e+k} = X1^{e+k-m} X1^m, then divide by n^{e+k-2}, re-extract X_r.
          const std::uint32_t r = e + k - static_cast<std::uint32_t>(m_);
          Integer num = 1, den = 1;
          for (std::uint32_t i = 0; i + 1 < r; ++i) num *= n_;
          for (std::uint32_t i = 0; i + 2 < e + k; ++i) den *= n_;
          coeff *= at * Rational(num) / Rational(den);
          e = r;
        }
      }
      if (collapsed) {
        pure += *collapsed * yz * coeff;
      } else {
        const Rational z_factor = yz.eval_yz<Rational>(1, 2);
        out[index_.at({1, 0, e})] += coeff * z_factor;
      }
    }
    const auto mono = reduce_pure(pure);
    if (kind_ == RingKind::Stable) {
      for (const auto& [i, c] : to_f(mono)) out[i] += c;
    } else {
      for (const auto& [yz, c] : mono) out[index_.at({0, yz.first, yz.second})] += c;
    }
    return out;
  }

 private:
  using Coeffs = std::map<std::pair<unsigned, unsigned>, Rational>;

  // Division by the monic relation, highest Z first; Y exponents mod n.
  Coeffs reduce_pure(const Poly& p) const {
    Coeffs work;
    for (const auto& [mono, c] : p.terms()) {
      if (kind_ == RingKind::Grothendieck && mono.z > 0) throw std::logic_error("Z in Grothendieck reference");
      work[{mono.y % n_, mono.z}] += c;
    }
    while (true) {
      auto top = work.end();
      for (auto it = work.begin(); it != work.end(); ++it)
        if (it->second != 0 && it->first.second >= rel_top_ && kind_ != RingKind::Grothendieck &&
            (top == work.end() || it->first.second > top->first.second))
          top = it;
      if (top == work.end()) break;
      const auto [y, z] = top->first;
      const Rational c = top->second;
      const Poly shifted = Poly::monomial(y, z - rel_top_) * rel_ * Rational(-rel_sign_) * c;
      for (const auto& [mono, d] : shifted.terms()) work[{mono.y % n_, mono.z}] += d;
    }
    Coeffs out;
    for (const auto& [yz, c] : work)
      if (c != 0) out[yz] = c;
    return out;
  }

  // Triangular peel: F_{j+1} has leading term Z^j.
  std::map<std::size_t, Rational> to_f(Coeffs work) const {
    std::map<std::size_t, Rational> out;
    while (true) {
      auto top = work.end();
      for (auto it = work.begin(); it != work.end(); ++it)
        if (it->second != 0 && (top == work.end() || it->first.second > top->first.second)) top = it;
      if (top == work.end()) break;
      const auto [y, z] = top->first;
      const Rational c = top->second;
      out[index_.at({0, y, z + 1})] += c;
      const Poly f = table_poly(dickson_table(static_cast<int>(z) + 1)) * Poly::monomial(y, 0);
      for (const auto& [mono, d] : f.terms()) work[{mono.y % n_, mono.z}] -= c * d;
    }
    return out;
  }

  RingKind kind_;
  int n_, m_;
  Poly fn_, rel_, x_top_;
  std::uint32_t rel_top_ = 0;
  int rel_sign_ = 1;
  Integer x_top_scale_;
  std::map<std::tuple<int, unsigned, unsigned>, std::size_t> index_;
  std::size_t rank_ = 0;
};

// Polynomial with X arity matching the spec.
inline Poly embed(const Poly& p, const RingSpecPtr& spec) { return p.with_arity(spec->x_arity()); }

// y^i F_j as a polynomial in Y, Z.
inline Poly stable_rep(unsigned i, int j) { return Poly::monomial(i, 0) * table_poly(dickson_table(j)); }

}  // namespace gt
