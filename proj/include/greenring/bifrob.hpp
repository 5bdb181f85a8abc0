#pragma once

// Group-like algebra and bi-Frobenius structure on the complexification of a
// based ring with duality. Integer-valued data (phi, the antipode, the dual
// bases, the support of p_{ij}^0) is exact; anything that involves the
// Frobenius-Perron dimensions is double precision.

#include <optional>
#include <string>
#include <vector>

#include "greenring/based.hpp"

namespace greenring {

struct GroupLikeData {
  BasedRing ring;
  std::vector<double> fpdims;            // FPdim of the canonical basis b_i
  std::vector<double> counit;            // epsilon(x_i) = FPdim(x_i) = fpdims[i]^2, x_i = fpdims[i] b_i
  std::vector<std::vector<std::pair<std::size_t, double>>> p;  // p[i*rank+j] = {(k, p_ij^k)}
  std::vector<std::size_t> involution;

  double p_constant(std::size_t i, std::size_t j, std::size_t k) const;
};

// Requires a detected involution and fpdims >= 1 - tol.
GroupLikeData grouplike_build(const BasedRing& r, const std::vector<double>& fpdims, double tol = 1e-9);

struct CheckResult {
  std::string name;
  bool exact = false;  // integer-track check (residual is 0 or a count of mismatches)
  bool passed = true;
  double worst_residual = 0.0;
  std::vector<std::string> violations;  // capped sample
};

struct VerificationReport {
  std::string subject;
  std::vector<CheckResult> checks;
  bool passed() const;
};

VerificationReport grouplike_verify(const GroupLikeData& g, double tol = 1e-9);

struct BiFrobeniusData {
  GroupLikeData grouplike;
  std::vector<Rational> phi;         // phi(b_i)
  std::vector<double> t_canonical;   // t = sum_i x_i written over the canonical basis
  IntMatrix antipode;                // antipode[a][b]: coefficient of b_a in S(b_b)
  std::vector<double> delta_weights; // Delta(b_i) = delta_weights[i] b_i (x) b_i
  std::optional<int> stable_n;       // set when the ring is Stable(n) in its F-basis order
};

// Antipode from the integrals: S(b_b) = sum_a phi(b_a b_b) b_a.
BiFrobeniusData bifrob_build(const GroupLikeData& g, std::optional<int> stable_n = std::nullopt);
VerificationReport bifrob_verify(const BiFrobeniusData& b, double tol = 1e-9);

// Fusion-ring checks: unit, associativity, nonnegativity, duality, transitivity.
VerificationReport fusion_verify(const BasedRing& r);

// Closed forms in the monomial basis {y^i z^j} of Stable(n).
Rational stable_phi_monomial(int n, int i, int j);

struct LabeledCoeff {
  BasisLabel label;
  Integer coeff;
};
std::vector<LabeledCoeff> stable_antipode_monomial(int n, int i, int j);

struct DeltaTerm {
  BasisLabel label;  // Delta contributes weight * (label (x) label)
  double weight;
};
std::vector<DeltaTerm> delta_monomial(int n, int i, int j);

}  // namespace greenring
