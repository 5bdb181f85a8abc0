#pragma once

// Finite-rank based rings given by integer structure constants
//   b_i b_j = sum_k N_{ij}^k b_k.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "greenring/presented.hpp"

namespace greenring {

using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;  // row-major

struct StructureEntry {
  std::size_t k;
  std::int64_t value;
};

class BasedRing {
 public:
  struct Constant {
    std::size_t i, j, k;
    std::int64_t value;
    bool operator==(const Constant&) const = default;
  };

  // Checks indices, duplicates and zero values only. Use validate() for the
  // algebraic axioms.
  BasedRing(std::vector<std::string> labels, std::size_t unit, const std::vector<Constant>& constants,
            std::optional<std::vector<std::size_t>> involution = std::nullopt);

  std::size_t rank() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t unit_index() const { return unit_; }
  const std::optional<std::vector<std::size_t>>& involution() const { return involution_; }
  BasedRing with_involution(std::vector<std::size_t> sigma) const;

  const std::vector<StructureEntry>& product(std::size_t i, std::size_t j) const { return table_[i * rank() + j]; }
  std::int64_t constant(std::size_t i, std::size_t j, std::size_t k) const;
  // All constants sorted by (i, j, k).
  std::vector<Constant> constants() const;
  bool nonnegative() const;

  IntVector basis_vector(std::size_t i) const;
  IntVector mul(const IntVector& x, const IntVector& y) const;

 private:
  std::vector<std::string> labels_;
  std::size_t unit_;
  std::vector<std::vector<StructureEntry>> table_;
  std::optional<std::vector<std::size_t>> involution_;
};

struct AxiomViolation {
  std::string axiom;
  std::string detail;
};

std::vector<AxiomViolation> check_unit(const BasedRing& r);
// Exhaustive up to rank 64, otherwise 1000 sampled quadruples.
std::vector<AxiomViolation> check_associativity(const BasedRing& r, std::size_t max_reported = 16);
// Throws Precondition when the unit or associativity axioms fail.
void validate(const BasedRing& r);

BasedRing based_from_presented(const RingSpecPtr& spec);

// Coefficient of the unit basis element in x*y.
Integer unit_coeff_form(const BasedRing& r, const IntVector& x, const IntVector& y);

struct FormReport {
  IntMatrix gram;
  std::vector<IntVector> left_radical;   // v^T G = 0
  std::vector<IntVector> right_radical;  // G v = 0
  bool nondegenerate = false;
};

FormReport gram_and_radicals(const BasedRing& r);

// Basis of the saturated lattice {v in Z^cols : A v = 0}, in Hermite normal form.
std::vector<IntVector> integer_kernel(const IntMatrix& a, std::size_t cols);

// Unique j with N_{ij}^{unit} = 1 for each i; throws Precondition otherwise.
std::vector<std::size_t> detect_involution(const BasedRing& r);

// Perron-Frobenius dimension of every basis element.
std::vector<double> fpdim(const BasedRing& r, double tol = 1e-9);
double fpdim_of(const std::vector<double>& dims, const IntVector& v);

struct TransitivityReport {
  bool transitive = true;
  // First failing (i, j): no k with N_{jk}^i > 0 ("right") or no l with N_{lj}^i > 0 ("left").
  std::optional<std::pair<std::size_t, std::size_t>> failing;
  std::string side;
};

TransitivityReport check_transitive(const BasedRing& r);

}  // namespace greenring
