#include <cmath>

#include "doctest.h"
#include "greenring/bifrob.hpp"
#include "greenring/dickson.hpp"
#include "support.hpp"

using namespace greenring;

namespace {

BasedRing stable_with_duality(int n) {
  const BasedRing r = based_from_presented(RingSpec::make(RingKind::Stable, n));
  return r.with_involution(detect_involution(r));
}

GroupLikeData grouplike(int n) {
  const BasedRing r = stable_with_duality(n);
  return grouplike_build(r, fpdim(r));
}

// Index of y^i F_j in the stable basis order.
std::size_t sidx(int n, int i, int j) {
  return static_cast<std::size_t>(j - 1) * n + static_cast<std::size_t>(((i % n) + n) % n);
}

const CheckResult& find(const VerificationReport& rep, const std::string& name) {
  for (const auto& c : rep.checks)
    if (c.name == name) return c;
  FAIL("missing check " << name);
  return rep.checks.front();
}

}  // namespace

TEST_CASE("group-like constants") {
  const auto g4 = grouplike(4);
  // x = sqrt2 F_2, x*x = 2 x_{F_3} + 2 x_{y F_1}
  CHECK(std::abs(g4.p_constant(sidx(4, 0, 2), sidx(4, 0, 2), sidx(4, 0, 3)) - 2.0) < 1e-12);
  CHECK(std::abs(g4.p_constant(sidx(4, 0, 2), sidx(4, 0, 2), sidx(4, 1, 1)) - 2.0) < 1e-12);
  CHECK(g4.p_constant(sidx(4, 0, 2), sidx(4, 0, 2), 0) == 0.0);
  for (std::size_t j = 0; j < g4.ring.rank(); ++j)
    for (std::size_t k = 0; k < g4.ring.rank(); ++k) CHECK(g4.p_constant(0, j, k) == doctest::Approx(j == k ? 1.0 : 0.0));

  const auto g3 = grouplike(3);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j)
      for (std::size_t k = 0; k < 6; ++k)
        CHECK(std::abs(g3.p_constant(i, j, k) - static_cast<double>(g3.ring.constant(i, j, k))) < 1e-9);

  // Against q values rather than the power iteration.
  for (int n = 2; n <= 8; ++n) {
    const auto g = grouplike(n);
    const std::size_t r = g.ring.rank();
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        for (const auto& e : g.ring.product(i, j)) {
          const double qi = q_eval(n, static_cast<int>(i / n) + 1), qj = q_eval(n, static_cast<int>(j / n) + 1),
                       qk = q_eval(n, static_cast<int>(e.k / n) + 1);
          CHECK(std::abs(g.p_constant(i, j, e.k) - qi * qj * static_cast<double>(e.value) / qk) < 1e-9);
        }
  }
}

TEST_CASE("counit values") {
  const auto g4 = grouplike(4);
  // epsilon(x_i) = FPdim(x_i) = FPdim(b_i)^2
  CHECK(std::abs(g4.counit[sidx(4, 0, 2)] - 2.0) < 1e-9);
  CHECK(std::abs(g4.counit[sidx(4, 3, 2)] - 2.0) < 1e-9);
  CHECK(std::abs(g4.counit[0] - 1.0) < 1e-12);
  CHECK(g4.involution[sidx(4, 0, 2)] == sidx(4, 3, 2));
}

TEST_CASE("group-like build preconditions") {
  const BasedRing bare = based_from_presented(RingSpec::make(RingKind::Stable, 4));
  try {
    (void)grouplike_build(bare, fpdim(bare));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Precondition);
  }
  const BasedRing r = stable_with_duality(4);
  std::vector<double> low(r.rank(), 1.0);
  low[3] = 0.5;
  CHECK_THROWS_AS((void)grouplike_build(r, low), Error);
}

TEST_CASE("group-like axioms hold for stable rings") {
  for (int n = 2; n <= 8; ++n) {
    CAPTURE(n);
    const auto rep = grouplike_verify(grouplike(n), 1e-9);
    CHECK(rep.passed());
    for (const auto& c : rep.checks) {
      CAPTURE(c.name);
      CHECK(c.passed);
      CHECK(c.worst_residual < 1e-9);
      if (c.exact) CHECK(c.worst_residual == 0.0);
    }
  }
}

TEST_CASE("group-like verification reports violations") {
  auto g = grouplike(4);
  g.counit[sidx(4, 0, 2)] += 1e-3;
  const auto rep = grouplike_verify(g, 1e-9);
  CHECK_FALSE(rep.passed());
  CHECK_FALSE(find(rep, "G1").passed);
  CHECK_FALSE(find(rep, "G1").violations.empty());
  CHECK(find(rep, "G1").worst_residual == doctest::Approx(1e-3));
}

TEST_CASE("bi-Frobenius data") {
  const auto b3 = bifrob_build(grouplike(3), 3);
  // S(F_2) = y^2 F_2 at n = 3
  for (std::size_t a = 0; a < 6; ++a) CHECK(b3.antipode[a][sidx(3, 0, 2)] == (a == sidx(3, 2, 2) ? 1 : 0));
  for (std::size_t a = 0; a < 6; ++a) CHECK(b3.antipode[a][0] == (a == 0 ? 1 : 0));
  const auto b4 = bifrob_build(grouplike(4), 4);
  CHECK(b4.phi[sidx(4, 3, 3)] == 0);
  CHECK(b4.phi[0] == 1);
  for (std::size_t i = 0; i < 12; ++i) CHECK(b4.delta_weights[i] == doctest::Approx(1.0 / q_eval(4, static_cast<int>(i / 4) + 1)));
  CHECK_THROWS_AS((void)bifrob_build(grouplike(4), 5), Error);
}

TEST_CASE("antipode matches the closed form") {
  for (int n = 2; n <= 8; ++n) {
    const auto b = bifrob_build(grouplike(n), n);
    const std::size_t r = b.antipode.size();
    for (int k = 0; k < n; ++k)
      for (int l = 1; l < n; ++l) {
        const std::size_t want = sidx(n, 1 - k - l, l);
        for (std::size_t a = 0; a < r; ++a) CHECK(b.antipode[a][sidx(n, k, l)] == (a == want ? 1 : 0));
      }
  }
}

TEST_CASE("antipode is an involutive ring map and dual bases reconstruct") {
  for (int n = 2; n <= 8; ++n) {
    const auto b = bifrob_build(grouplike(n), n);
    const BasedRing& ring = b.grouplike.ring;
    const std::size_t r = ring.rank();
    auto S = [&](const IntVector& v) {
      IntVector out(r);
      for (std::size_t c = 0; c < r; ++c)
        for (std::size_t a = 0; a < r; ++a) out[a] += b.antipode[a][c] * v[c];
      return out;
    };
    auto phi = [&](const IntVector& v) {
      Rational s = 0;
      for (std::size_t i = 0; i < r; ++i) s += b.phi[i] * Rational(v[i]);
      return s;
    };
    for (std::size_t i = 0; i < r; ++i) {
      const auto bi = ring.basis_vector(i);
      CHECK(S(S(bi)) == bi);
      for (std::size_t j = 0; j < r; ++j) {
        const auto bj = ring.basis_vector(j);
        CHECK(S(ring.mul(bi, bj)) == ring.mul(S(bj), S(bi)));
      }
      // x = sum_{(k,l)} phi(x d_{k,l}) y^k F_l with d_{k,l} = y^{1-k-l} F_l
      IntVector rebuilt(r);
      for (int k = 0; k < n; ++k)
        for (int l = 1; l < n; ++l) {
          const Rational c = phi(ring.mul(bi, ring.basis_vector(sidx(n, 1 - k - l, l))));
          REQUIRE(c.get_den() == 1);
          rebuilt[sidx(n, k, l)] += c.get_num();
        }
      CHECK(rebuilt == bi);
    }
    // phi(F_2 * y^{n-1} F_2) = 1
    if (n >= 3) CHECK(phi(ring.mul(ring.basis_vector(sidx(n, 0, 2)), ring.basis_vector(sidx(n, n - 1, 2)))) == 1);
  }
}

TEST_CASE("bi-Frobenius axioms hold for stable rings") {
  for (int n = 2; n <= 8; ++n) {
    CAPTURE(n);
    const auto rep = bifrob_verify(bifrob_build(grouplike(n), n), 1e-9);
    CHECK(rep.passed());
    for (const auto& c : rep.checks) {
      CAPTURE(c.name);
      CHECK(c.passed);
      CHECK(c.worst_residual < 1e-9);
      if (c.exact) CHECK(c.worst_residual == 0.0);
    }
    for (const char* name : {"antipode-closed-form", "antipode-involutive", "antipode-anti-multiplicative",
                             "frobenius-dual-bases", "phi-unit-functional"})
      CHECK(find(rep, name).exact);
  }
}

TEST_CASE("bi-Frobenius verification without the stable closed form") {
  const auto rep = bifrob_verify(bifrob_build(grouplike(5)), 1e-9);
  CHECK(rep.passed());
}

TEST_CASE("bi-Frobenius verification reports violations") {
  auto b = bifrob_build(grouplike(4), 4);
  std::swap(b.antipode[1], b.antipode[2]);
  const auto rep = bifrob_verify(b, 1e-9);
  CHECK_FALSE(rep.passed());
  CHECK_FALSE(find(rep, "antipode-closed-form").passed);
}

TEST_CASE("fusion verification") {
  for (int n = 2; n <= 6; ++n) CHECK(fusion_verify(stable_with_duality(n)).passed());
  const BasedRing toy({"1", "e"}, 0, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}});
  const auto rep = fusion_verify(toy);
  CHECK_FALSE(rep.passed());
  CHECK_FALSE(find(rep, "duality").passed);
  CHECK_FALSE(find(rep, "transitive").passed);
  CHECK(find(rep, "associativity").passed);
  const BasedRing neg({"1", "a"}, 0, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, -1}});
  CHECK_FALSE(find(fusion_verify(neg), "nonnegative").passed);
}

TEST_CASE("monomial phi") {
  CHECK(stable_phi_monomial(5, 0, 0) == 1);
  CHECK(stable_phi_monomial(3, 0, 0) == 1);
  CHECK(stable_phi_monomial(3, 0, 1) == 0);
  CHECK(stable_phi_monomial(5, 4, 2) == 1);
  CHECK_THROWS_AS((void)stable_phi_monomial(4, 0, 3), Error);
  CHECK_THROWS_AS((void)stable_phi_monomial(4, 4, 0), Error);
  // n = 3: z^2 = y, phi(y) = 0
  const auto s3 = RingSpec::make(RingKind::Stable, 3);
  CHECK(to_f_basis(s3, 0, 1).to_string() == "F_2");
  for (int n = 2; n <= 8; ++n) {
    const auto s = RingSpec::make(RingKind::Stable, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j <= n - 2; ++j) CHECK(stable_phi_monomial(n, i, j) == to_f_basis(s, i, j)[0]);
  }
}

TEST_CASE("monomial antipode") {
  const auto unit = stable_antipode_monomial(4, 0, 0);
  REQUIRE(unit.size() == 1);
  CHECK(unit[0].label == BasisLabel::stable_f(0, 1));
  CHECK(unit[0].coeff == 1);
  const auto z = stable_antipode_monomial(4, 0, 1);
  REQUIRE(z.size() == 1);
  CHECK(z[0].label == BasisLabel::stable_f(3, 2));
  for (int n = 2; n <= 8; ++n) {
    const auto spec = RingSpec::make(RingKind::Stable, n);
    const auto b = bifrob_build(grouplike(n), n);
    const std::size_t r = spec->rank();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j <= n - 2; ++j) {
        const auto f = to_f_basis(spec, i, j);
        std::vector<Rational> via_matrix(r);
        for (std::size_t c = 0; c < r; ++c)
          for (std::size_t a = 0; a < r; ++a) via_matrix[a] += Rational(b.antipode[a][c]) * f[c];
        std::vector<Rational> closed(r);
        for (const auto& t : stable_antipode_monomial(n, i, j)) closed[*spec->index_of(t.label)] += Rational(t.coeff);
        CHECK(closed == via_matrix);
      }
  }
}

TEST_CASE("monomial coproduct") {
  const auto one = delta_monomial(4, 0, 0);
  REQUIRE(one.size() == 1);
  CHECK(one[0].label == BasisLabel::stable_f(0, 1));
  CHECK(one[0].weight == doctest::Approx(1.0));
  const auto z2 = delta_monomial(4, 0, 2);
  REQUIRE(z2.size() == 2);
  CHECK(z2[0].label == BasisLabel::stable_f(0, 3));
  CHECK(std::abs(z2[0].weight - 1.0) < 1e-12);
  CHECK(z2[1].label == BasisLabel::stable_f(1, 1));
  CHECK(std::abs(z2[1].weight - 1.0) < 1e-12);
  for (int n = 2; n <= 8; ++n) {
    const auto spec = RingSpec::make(RingKind::Stable, n);
    const auto b = bifrob_build(grouplike(n), n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j <= n - 2; ++j) {
        // Counit on one leg recovers the F-basis coordinates.
        const auto f = to_f_basis(spec, i, j);
        std::vector<double> got(spec->rank());
        for (const auto& t : delta_monomial(n, i, j)) {
          const std::size_t idx = *spec->index_of(t.label);
          got[idx] += t.weight * q_eval(n, static_cast<int>(t.label.index));
        }
        for (std::size_t k = 0; k < spec->rank(); ++k) CHECK(std::abs(got[k] - f[k].get_d()) < 1e-9);
        // Same as expanding Delta over the F-basis coordinates.
        std::vector<double> via_f(spec->rank());
        for (std::size_t k = 0; k < spec->rank(); ++k) via_f[k] = f[k].get_d() * b.delta_weights[k];
        std::vector<double> closed(spec->rank());
        for (const auto& t : delta_monomial(n, i, j)) closed[*spec->index_of(t.label)] += t.weight;
        for (std::size_t k = 0; k < spec->rank(); ++k) CHECK(std::abs(closed[k] - via_f[k]) < 1e-9);
      }
  }
}
