#include "greenring/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace greenring {

std::uint64_t Monomial::x_degree() const {
  return std::accumulate(x.begin(), x.end(), std::uint64_t{0});
}

bool Monomial::has_x() const {
  return std::any_of(x.begin(), x.end(), [](std::uint32_t e) { return e != 0; });
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r{y + o.y, z + o.z, x};
  for (std::size_t i = 0; i < r.x.size(); ++i) r.x[i] += o.x[i];
  return r;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  const auto da = a.x_degree(), db = b.x_degree();
  if (da != db) return da > db;
  if (a.x != b.x) return a.x > b.x;
  if (a.z != b.z) return a.z > b.z;
  return a.y > b.y;
}

Poly Poly::constant(const Rational& c, std::size_t x_arity) {
  Poly p(x_arity);
  p.add_term(Monomial{0, 0, std::vector<std::uint32_t>(x_arity, 0)}, c);
  return p;
}

Poly Poly::monomial(std::uint32_t y_exp, std::uint32_t z_exp, std::size_t x_arity) {
  Poly p(x_arity);
  p.add_term(Monomial{y_exp, z_exp, std::vector<std::uint32_t>(x_arity, 0)}, 1);
  return p;
}

Poly Poly::x(std::size_t index, std::size_t x_arity) {
  if (index < 1 || index > x_arity) {
    throw Error(ErrorCode::Context, "X" + std::to_string(index) + " not in a context with " +
                                        std::to_string(x_arity) + " X variables");
  }
  Monomial m{0, 0, std::vector<std::uint32_t>(x_arity, 0)};
  m.x[index - 1] = 1;
  return term(m, 1, x_arity);
}

Poly Poly::term(const Monomial& m, const Rational& c, std::size_t x_arity) {
  if (m.x.size() != x_arity) throw Error(ErrorCode::Context, "monomial arity mismatch");
  Poly p(x_arity);
  p.add_term(m, c);
  return p;
}

bool Poly::has_x() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.has_x(); });
}

long Poly::z_degree() const {
  long d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<long>(m.z));
  return d;
}

Rational Poly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::with_arity(std::size_t x_arity) const {
  if (x_arity < arity_) throw Error(ErrorCode::Context, "cannot shrink polynomial arity");
  Poly r(x_arity);
  for (const auto& [m, c] : terms_) {
    Monomial mm = m;
    mm.x.resize(x_arity, 0);
    r.terms_.emplace(std::move(mm), c);
  }
  return r;
}

void Poly::check_context(const Poly& o) const {
  if (arity_ != o.arity_) {
    throw Error(ErrorCode::Context, "polynomial arity mismatch: " + std::to_string(arity_) +
                                        " vs " + std::to_string(o.arity_));
  }
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  check_context(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_context(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_context(b);
  Poly r(a.arity_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  }
  return r;
}

Poly Poly::pow(std::uint64_t e) const {
  Poly result = constant(1, arity_);
  Poly base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

Poly poly_add(const Poly& a, const Poly& b) { return a + b; }
Poly poly_mul(const Poly& a, const Poly& b) { return a * b; }

std::string rational_to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

void append_power(std::string& out, const std::string& var, std::uint32_t e) {
  if (e == 0) return;
  if (!out.empty()) out += '*';
  out += var;
  if (e > 1) out += '^' + std::to_string(e);
}

}  // namespace

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string vars;
    append_power(vars, "Y", m.y);
    append_power(vars, "Z", m.z);
    for (std::size_t j = 0; j < m.x.size(); ++j) append_power(vars, "X" + std::to_string(j + 1), m.x[j]);

    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    if (vars.empty()) {
      out += rational_to_string(mag);
    } else if (mag == 1) {
      out += vars;
    } else {
      out += rational_to_string(mag) + '*' + vars;
    }
  }
  return out;
}

}  // namespace greenring
