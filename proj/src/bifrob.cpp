#include "greenring/bifrob.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "greenring/dickson.hpp"

namespace greenring {

namespace {

constexpr std::size_t kMaxViolations = 8;

class Check {
 public:
  Check(std::string name, bool exact, double tol) : tol_(tol) {
    result_.name = std::move(name);
    result_.exact = exact;
  }

  // Numeric residual; fails above tolerance.
  void residual(double r, const std::string& where) {
    result_.worst_residual = std::max(result_.worst_residual, r);
    if (!(r < tol_)) fail(where + " (residual " + fmt(r) + ")");
  }

  // Exact comparison; residual counts mismatches.
  void expect(bool ok, const std::string& where) {
    if (ok) return;
    result_.worst_residual += 1;
    fail(where);
  }

  CheckResult done() { return std::move(result_); }

 private:
  static std::string fmt(double v) {
    std::ostringstream os;
    os.precision(3);
    os << v;
    return os.str();
  }

  void fail(const std::string& what) {
    result_.passed = false;
    if (result_.violations.size() < kMaxViolations) result_.violations.push_back(what);
  }

  double tol_;
  CheckResult result_;
};

// Sparse tensor over basis indices.
using Tensor2 = std::map<std::pair<std::size_t, std::size_t>, double>;
using Tensor3 = std::map<std::tuple<std::size_t, std::size_t, std::size_t>, double>;

double max_diff(const std::map<std::size_t, double>& a, const std::map<std::size_t, double>& b) {
  double worst = 0;
  for (const auto& [k, v] : a) worst = std::max(worst, std::abs(v - (b.count(k) ? b.at(k) : 0.0)));
  for (const auto& [k, v] : b)
    if (!a.count(k)) worst = std::max(worst, std::abs(v));
  return worst;
}

template <class Map>
double max_diff_map(const Map& a, const Map& b) {
  double worst = 0;
  for (const auto& [k, v] : a) {
    auto it = b.find(k);
    worst = std::max(worst, std::abs(v - (it == b.end() ? 0.0 : it->second)));
  }
  for (const auto& [k, v] : b)
    if (!a.count(k)) worst = std::max(worst, std::abs(v));
  return worst;
}

void check_stable_indices(int n, int i, int j, const char* who) {
  if (n < 2 || i < 0 || i >= n || j < 0 || j > n - 2) {
    throw Error(ErrorCode::Domain, std::string(who) + ": (n=" + std::to_string(n) + ", i=" + std::to_string(i) +
                                       ", j=" + std::to_string(j) + ") out of range");
  }
}

// C(j,k) (j+1-2k)/(j+1-k), asserted integral.
Integer inverse_coeff(int j, int k) {
  Rational c(binomial(j, k) * (j + 1 - 2 * k), Integer(j + 1 - k));
  c.canonicalize();
  if (c.get_den() != 1) throw Error(ErrorCode::Integrality, "inverse Dickson coefficient not integral");
  return c.get_num();
}

std::uint32_t mod_n(long v, int n) { return static_cast<std::uint32_t>(((v % n) + n) % n); }

}  // namespace

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

double GroupLikeData::p_constant(std::size_t i, std::size_t j, std::size_t k) const {
  for (const auto& [kk, v] : p[i * ring.rank() + j])
    if (kk == k) return v;
  return 0.0;
}

GroupLikeData grouplike_build(const BasedRing& r, const std::vector<double>& fpdims, double tol) {
  if (!r.involution()) throw Error(ErrorCode::Precondition, "group-like structure needs a detected involution");
  if (fpdims.size() != r.rank()) throw Error(ErrorCode::Context, "FPdim vector has wrong length");
  for (std::size_t i = 0; i < fpdims.size(); ++i) {
    if (fpdims[i] < 1.0 - tol) throw Error(ErrorCode::Precondition, "FPdim(" + r.labels()[i] + ") below 1");
  }
  GroupLikeData g{r, fpdims, {}, {}, *r.involution()};
  const std::size_t n = r.rank();
  g.counit.resize(n);
  for (std::size_t i = 0; i < n; ++i) g.counit[i] = fpdims[i] * fpdims[i];
  g.p.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& e : r.product(i, j))
        g.p[i * n + j].emplace_back(e.k, fpdims[i] * fpdims[j] * static_cast<double>(e.value) / fpdims[e.k]);
  return g;
}

VerificationReport grouplike_verify(const GroupLikeData& g, double tol) {
  const BasedRing& r = g.ring;
  const std::size_t n = r.rank();
  const std::size_t u = r.unit_index();
  const auto& sigma = g.involution;
  const auto& L = r.labels();
  VerificationReport rep{"group-like", {}};

  Check unit("unit-basis", false, tol);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      unit.residual(std::abs(g.p_constant(u, j, k) - (j == k ? 1.0 : 0.0)), "p_{1," + L[j] + "}^" + L[k]);
  rep.checks.push_back(unit.done());

  Check g1("G1", false, tol);
  for (std::size_t i = 0; i < n; ++i) {
    g1.residual(std::abs(g.counit[i] - g.counit[sigma[i]]), "eps(" + L[i] + ") vs eps(" + L[sigma[i]] + ")");
    if (!(std::abs(g.counit[i]) > tol)) g1.residual(INFINITY, "eps(" + L[i] + ") vanishes");
  }
  rep.checks.push_back(g1.done());

  Check g2("G2", false, tol);
  std::vector<double> lhs(n), rhs(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::fill(lhs.begin(), lhs.end(), 0.0);
      std::fill(rhs.begin(), rhs.end(), 0.0);
      for (const auto& [k, v] : g.p[i * n + j]) lhs[k] = v;
      for (const auto& [k, v] : g.p[sigma[j] * n + sigma[i]]) rhs[sigma[k]] = v;
      for (std::size_t k = 0; k < n; ++k)
        g2.residual(std::abs(lhs[k] - rhs[k]), "p_{" + L[i] + "," + L[j] + "}^" + L[k]);
    }
  rep.checks.push_back(g2.done());

  Check g3("G3", false, tol);
  Check g3_exact("G3-support", true, tol);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double expected = (i == sigma[j]) ? g.counit[i] : 0.0;
      g3.residual(std::abs(g.p_constant(i, j, u) - expected), "p_{" + L[i] + "," + L[j] + "}^1");
      g3_exact.expect((r.constant(i, j, u) != 0) == (j == sigma[i]),
                      "unit coefficient of " + L[i] + "*" + L[j]);
    }
  rep.checks.push_back(g3.done());
  rep.checks.push_back(g3_exact.done());
  return rep;
}

BiFrobeniusData bifrob_build(const GroupLikeData& g, std::optional<int> stable_n) {
  const BasedRing& r = g.ring;
  const std::size_t n = r.rank();
  BiFrobeniusData b{g, std::vector<Rational>(n), std::vector<double>(n), IntMatrix(n, IntVector(n)),
                    std::vector<double>(n), stable_n};
  b.phi[r.unit_index()] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    b.t_canonical[i] = g.fpdims[i];
    b.delta_weights[i] = 1.0 / g.fpdims[i];
  }
  // Delta(t) = sum_a b_a (x) b_a, so S(b_c) = sum_a phi(b_a b_c) b_a.
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c) {
      Rational v = 0;
      for (const auto& e : r.product(a, c)) v += b.phi[e.k] * e.value;
      if (v.get_den() != 1) throw Error(ErrorCode::Integrality, "antipode entry is not an integer");
      b.antipode[a][c] = v.get_num();
    }
  if (stable_n && static_cast<std::size_t>(*stable_n) * (*stable_n - 1) != n) {
    throw Error(ErrorCode::Context, "ring rank does not match Stable(" + std::to_string(*stable_n) + ")");
  }
  return b;
}

VerificationReport bifrob_verify(const BiFrobeniusData& b, double tol) {
  const GroupLikeData& g = b.grouplike;
  const BasedRing& r = g.ring;
  const std::size_t n = r.rank();
  const std::size_t u = r.unit_index();
  const auto& L = r.labels();
  const auto& S = b.antipode;
  VerificationReport rep{"bi-Frobenius", {}};

  auto apply_s = [&](const IntVector& v) {
    IntVector out(n);
    for (std::size_t c = 0; c < n; ++c) {
      if (v[c] == 0) continue;
      for (std::size_t a = 0; a < n; ++a)
        if (S[a][c] != 0) out[a] += S[a][c] * v[c];
    }
    return out;
  };
  auto phi = [&](const IntVector& v) {
    Rational s = 0;
    for (std::size_t k = 0; k < n; ++k)
      if (v[k] != 0) s += b.phi[k] * Rational(v[k]);
    return s;
  };

  Check phi_check("phi-unit-functional", true, tol);
  for (std::size_t i = 0; i < n; ++i) phi_check.expect(b.phi[i] == (i == u ? 1 : 0), "phi(" + L[i] + ")");
  rep.checks.push_back(phi_check.done());

  Check closed("antipode-closed-form", true, tol);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t expected_row = g.involution[c];
    if (b.stable_n) {
      const int sn = *b.stable_n;
      const int k = static_cast<int>(c % sn), l = static_cast<int>(c / sn) + 1;
      expected_row = mod_n(1 - k - l, sn) + static_cast<std::size_t>(l - 1) * sn;
    }
    for (std::size_t a = 0; a < n; ++a)
      closed.expect(S[a][c] == (a == expected_row ? 1 : 0), "S(" + L[c] + ") coefficient of " + L[a]);
  }
  rep.checks.push_back(closed.done());

  Check invol("antipode-involutive", true, tol);
  for (std::size_t c = 0; c < n; ++c) {
    const IntVector twice = apply_s(apply_s(r.basis_vector(c)));
    invol.expect(twice == r.basis_vector(c), "S(S(" + L[c] + "))");
  }
  rep.checks.push_back(invol.done());

  Check anti("antipode-anti-multiplicative", true, tol);
  std::vector<IntVector> s_cols(n);
  for (std::size_t c = 0; c < n; ++c) s_cols[c] = apply_s(r.basis_vector(c));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      IntVector prod(n);
      for (const auto& e : r.product(i, j)) prod[e.k] += e.value;
      anti.expect(apply_s(prod) == r.mul(s_cols[j], s_cols[i]), "S(" + L[i] + "*" + L[j] + ")");
    }
  rep.checks.push_back(anti.done());

  Check dual("frobenius-dual-bases", true, tol);
  for (std::size_t p = 0; p < n; ++p) {
    std::vector<Rational> rebuilt(n);
    for (std::size_t i = 0; i < n; ++i) {
      IntVector prod(n);
      for (const auto& e : r.product(p, g.involution[i])) prod[e.k] += e.value;
      rebuilt[i] = phi(prod);
    }
    for (std::size_t i = 0; i < n; ++i)
      dual.expect(rebuilt[i] == (i == p ? 1 : 0), "reconstruction of " + L[p] + " at " + L[i]);
  }
  rep.checks.push_back(dual.done());

  // Coalgebra on the rescaled basis x_i = FPdim_i b_i: Delta(x_i) = c_i x_i (x) x_i.
  std::vector<double> coef(n);
  for (std::size_t i = 0; i < n; ++i) coef[i] = g.fpdims[i] * b.delta_weights[i] / (g.fpdims[i] * g.fpdims[i]);
  auto delta = [&](std::size_t i) { return Tensor2{{{i, i}, coef[i]}}; };

  Check counit("counit", false, tol);
  for (std::size_t i = 0; i < n; ++i) {
    std::map<std::size_t, double> left, right, id{{i, 1.0}};
    for (const auto& [ab, w] : delta(i)) {
      left[ab.second] += g.counit[ab.first] * w;
      right[ab.first] += g.counit[ab.second] * w;
    }
    counit.residual(std::max(max_diff(left, id), max_diff(right, id)), "counit on x_" + L[i]);
  }
  rep.checks.push_back(counit.done());

  Check coassoc("coassociativity", false, tol);
  for (std::size_t i = 0; i < n; ++i) {
    Tensor3 lhs, rhs;
    for (const auto& [ab, w] : delta(i)) {
      for (const auto& [cd, w2] : delta(ab.first)) lhs[{cd.first, cd.second, ab.second}] += w * w2;
      for (const auto& [cd, w2] : delta(ab.second)) rhs[{ab.first, cd.first, cd.second}] += w * w2;
    }
    coassoc.residual(max_diff_map(lhs, rhs), "coassociativity on x_" + L[i]);
  }
  rep.checks.push_back(coassoc.done());

  Check eps_s("counit-antipode", false, tol);
  for (std::size_t c = 0; c < n; ++c)
    eps_s.residual(std::abs(fpdim_of(g.fpdims, s_cols[c]) - g.fpdims[c]), "eps(S(" + L[c] + "))");
  rep.checks.push_back(eps_s.done());

  Check anti_co("antipode-anti-coalgebra", false, tol);
  for (std::size_t c = 0; c < n; ++c) {
    Tensor2 lhs, rhs;
    for (std::size_t a = 0; a < n; ++a)
      if (s_cols[c][a] != 0) lhs[{a, a}] += s_cols[c][a].get_d() * b.delta_weights[a];
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t d = 0; d < n; ++d)
        if (s_cols[c][a] != 0 && s_cols[c][d] != 0)
          rhs[{d, a}] += b.delta_weights[c] * s_cols[c][a].get_d() * s_cols[c][d].get_d();
    anti_co.residual(max_diff_map(lhs, rhs), "Delta(S(" + L[c] + "))");
  }
  rep.checks.push_back(anti_co.done());

  Check integral("integral", false, tol);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> left(n), right(n);
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& e : r.product(i, j)) left[e.k] += static_cast<double>(e.value) * b.t_canonical[j];
      for (const auto& e : r.product(j, i)) right[e.k] += static_cast<double>(e.value) * b.t_canonical[j];
    }
    double worst = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const double expected = g.fpdims[i] * b.t_canonical[k];
      worst = std::max({worst, std::abs(left[k] - expected), std::abs(right[k] - expected)});
    }
    integral.residual(worst, L[i] + "*t");
  }
  rep.checks.push_back(integral.done());
  return rep;
}

VerificationReport fusion_verify(const BasedRing& r) {
  VerificationReport rep{"fusion", {}};
  Check unit("unit", true, 0);
  for (const auto& v : check_unit(r)) unit.expect(false, v.detail);
  rep.checks.push_back(unit.done());

  Check assoc("associativity", true, 0);
  for (const auto& v : check_associativity(r)) assoc.expect(false, v.detail);
  rep.checks.push_back(assoc.done());

  Check nonneg("nonnegative", true, 0);
  for (const auto& c : r.constants())
    nonneg.expect(c.value >= 0, "N_{" + r.labels()[c.i] + "," + r.labels()[c.j] + "}^" + r.labels()[c.k]);
  rep.checks.push_back(nonneg.done());

  Check duality("duality", true, 0);
  try {
    const auto sigma = detect_involution(r);
    if (r.involution()) duality.expect(*r.involution() == sigma, "stored involution differs from detected one");
  } catch (const Error& e) {
    duality.expect(false, e.what());
  }
  rep.checks.push_back(duality.done());

  Check trans("transitive", true, 0);
  const auto t = check_transitive(r);
  if (!t.transitive) {
    trans.expect(false, "no " + t.side + " witness for (" + r.labels()[t.failing->first] + ", " +
                            r.labels()[t.failing->second] + ")");
  }
  rep.checks.push_back(trans.done());
  return rep;
}

Rational stable_phi_monomial(int n, int i, int j) {
  check_stable_indices(n, i, j, "stable_phi_monomial");
  if (j % 2 != 0 || (i + j / 2) % n != 0) return 0;
  Rational v(binomial(j, j / 2) * 2, Integer(j + 2));
  v.canonicalize();
  return v;
}

std::vector<LabeledCoeff> stable_antipode_monomial(int n, int i, int j) {
  check_stable_indices(n, i, j, "stable_antipode_monomial");
  std::vector<LabeledCoeff> out;
  for (int k = 0; k <= j / 2; ++k)
    out.push_back({BasisLabel::stable_f(mod_n(k - i - j, n), static_cast<std::uint32_t>(j + 1 - 2 * k)),
                   inverse_coeff(j, k)});
  return out;
}

std::vector<DeltaTerm> delta_monomial(int n, int i, int j) {
  check_stable_indices(n, i, j, "delta_monomial");
  const auto q = q_values(n);
  std::vector<DeltaTerm> out;
  for (int k = 0; k <= j / 2; ++k) {
    const int f = j + 1 - 2 * k;
    out.push_back({BasisLabel::stable_f(mod_n(i + k, n), static_cast<std::uint32_t>(f)),
                   inverse_coeff(j, k).get_d() / q[f - 1]});
  }
  return out;
}

}  // namespace greenring
