#include "greenring/based.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

#include "greenring/parallel.hpp"

namespace greenring {

BasedRing::BasedRing(std::vector<std::string> labels, std::size_t unit, const std::vector<Constant>& constants,
                     std::optional<std::vector<std::size_t>> involution)
    : labels_(std::move(labels)), unit_(unit), table_(labels_.size() * labels_.size()) {
  const std::size_t r = labels_.size();
  if (r == 0) throw Error(ErrorCode::Format, "based ring needs at least one basis element");
  if (unit_ >= r) throw Error(ErrorCode::Format, "unit index " + std::to_string(unit_) + " out of range");
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
  for (const auto& c : constants) {
    if (c.i >= r || c.j >= r || c.k >= r) throw Error(ErrorCode::Format, "structure constant index out of range");
    if (c.value == 0) throw Error(ErrorCode::Format, "structure constants must be nonzero");
    if (!seen.emplace(c.i, c.j, c.k).second) {
      throw Error(ErrorCode::Format, "duplicate structure constant (" + std::to_string(c.i) + ", " +
                                         std::to_string(c.j) + ", " + std::to_string(c.k) + ")");
    }
    table_[c.i * r + c.j].push_back({c.k, c.value});
  }
  for (auto& cell : table_) {
    std::sort(cell.begin(), cell.end(), [](const auto& a, const auto& b) { return a.k < b.k; });
  }
  if (involution) *this = with_involution(std::move(*involution));
}

BasedRing BasedRing::with_involution(std::vector<std::size_t> sigma) const {
  if (sigma.size() != rank()) throw Error(ErrorCode::Format, "involution has wrong length");
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (sigma[i] >= rank()) throw Error(ErrorCode::Format, "involution index out of range");
    if (sigma[sigma[i]] != i) {
      throw Error(ErrorCode::Precondition, "involution does not square to the identity at " + labels_[i]);
    }
  }
  BasedRing copy = *this;
  copy.involution_ = std::move(sigma);
  return copy;
}

std::int64_t BasedRing::constant(std::size_t i, std::size_t j, std::size_t k) const {
  for (const auto& e : product(i, j))
    if (e.k == k) return e.value;
  return 0;
}

std::vector<BasedRing::Constant> BasedRing::constants() const {
  std::vector<Constant> out;
  const std::size_t r = rank();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (const auto& e : product(i, j)) out.push_back({i, j, e.k, e.value});
  return out;
}

bool BasedRing::nonnegative() const {
  return std::all_of(table_.begin(), table_.end(), [](const auto& cell) {
    return std::all_of(cell.begin(), cell.end(), [](const StructureEntry& e) { return e.value >= 0; });
  });
}

IntVector BasedRing::basis_vector(std::size_t i) const {
  IntVector v(rank());
  v.at(i) = 1;
  return v;
}

IntVector BasedRing::mul(const IntVector& x, const IntVector& y) const {
  const std::size_t r = rank();
  if (x.size() != r || y.size() != r) throw Error(ErrorCode::Context, "vector length does not match ring rank");
  IntVector out(r);
  for (std::size_t i = 0; i < r; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < r; ++j) {
      if (y[j] == 0) continue;
      const Integer w = x[i] * y[j];
      for (const auto& e : product(i, j)) out[e.k] += w * e.value;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Axioms

std::vector<AxiomViolation> check_unit(const BasedRing& r) {
  std::vector<AxiomViolation> out;
  const std::size_t u = r.unit_index();
  for (std::size_t j = 0; j < r.rank(); ++j) {
    for (int side = 0; side < 2; ++side) {
      const auto& cell = side == 0 ? r.product(u, j) : r.product(j, u);
      if (cell.size() != 1 || cell[0].k != j || cell[0].value != 1) {
        out.push_back({"unit", std::string(side == 0 ? "1*" : "") + r.labels()[j] + (side == 0 ? "" : "*1") +
                                   " != " + r.labels()[j]});
      }
    }
  }
  return out;
}

namespace {

// (b_i b_j) b_k and b_i (b_j b_k) as dense vectors.
void triple_products(const BasedRing& r, std::size_t i, std::size_t j, std::size_t k, std::vector<Integer>& left,
                     std::vector<Integer>& right) {
  std::fill(left.begin(), left.end(), 0);
  std::fill(right.begin(), right.end(), 0);
  for (const auto& e1 : r.product(i, j))
    for (const auto& e2 : r.product(e1.k, k)) left[e2.k] += Integer(e1.value) * e2.value;
  for (const auto& e1 : r.product(j, k))
    for (const auto& e2 : r.product(i, e1.k)) right[e2.k] += Integer(e1.value) * e2.value;
}

}  // namespace

std::vector<AxiomViolation> check_associativity(const BasedRing& r, std::size_t max_reported) {
  const std::size_t n = r.rank();
  std::vector<AxiomViolation> out;
  auto report = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l, const Integer& a, const Integer& b) {
    if (out.size() >= max_reported) return;
    out.push_back({"associativity", "(" + r.labels()[i] + "*" + r.labels()[j] + ")*" + r.labels()[k] + " has " +
                                        a.get_str() + " of " + r.labels()[l] + ", " + r.labels()[i] + "*(" +
                                        r.labels()[j] + "*" + r.labels()[k] + ") has " + b.get_str()});
  };
  std::vector<Integer> left(n), right(n);
  if (n <= 64) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          triple_products(r, i, j, k, left, right);
          for (std::size_t l = 0; l < n; ++l)
            if (left[l] != right[l]) report(i, j, k, l, left[l], right[l]);
        }
    return out;
  }
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (int s = 0; s < 1000; ++s) {
    const std::size_t i = pick(rng), j = pick(rng), k = pick(rng), l = pick(rng);
    triple_products(r, i, j, k, left, right);
    if (left[l] != right[l]) report(i, j, k, l, left[l], right[l]);
  }
  return out;
}

void validate(const BasedRing& r) {
  auto v = check_unit(r);
  auto a = check_associativity(r, 1);
  v.insert(v.end(), a.begin(), a.end());
  if (!v.empty()) throw Error(ErrorCode::Precondition, "based ring axiom fails: " + v.front().detail);
}

BasedRing based_from_presented(const RingSpecPtr& spec) {
  const std::size_t r = spec->rank();
  std::vector<std::string> labels;
  for (const auto& l : spec->labels()) labels.push_back(l.to_string());
  std::vector<BasedRing::Constant> constants;
  for (std::size_t i = 0; i < r; ++i) {
    const auto bi = RingElement::basis(spec, i);
    for (std::size_t j = 0; j < r; ++j) {
      const auto prod = ring_mul(bi, RingElement::basis(spec, j)).integer_coeffs();
      for (std::size_t k = 0; k < r; ++k) {
        if (prod[k] == 0) continue;
        if (!prod[k].fits_slong_p()) throw Error(ErrorCode::Integrality, "structure constant exceeds 64 bits");
        constants.push_back({i, j, k, prod[k].get_si()});
      }
    }
  }
  BasedRing ring(std::move(labels), spec->unit_index(), constants);
  validate(ring);
  return ring;
}

Integer unit_coeff_form(const BasedRing& r, const IntVector& x, const IntVector& y) {
  return r.mul(x, y)[r.unit_index()];
}

// ---------------------------------------------------------------------------
// Integer kernels

namespace {

void hermite_rows(std::vector<IntVector>& rows, std::size_t cols) {
  std::size_t top = 0;
  for (std::size_t c = 0; c < cols && top < rows.size(); ++c) {
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t r = top; r < rows.size(); ++r) {
        if (rows[r][c] == 0) continue;
        if (best == rows.size() || abs(rows[r][c]) < abs(rows[best][c])) best = r;
      }
      if (best == rows.size()) break;
      std::swap(rows[top], rows[best]);
      bool clean = true;
      for (std::size_t r = top + 1; r < rows.size(); ++r) {
        if (rows[r][c] == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), rows[r][c].get_mpz_t(), rows[top][c].get_mpz_t());
        for (std::size_t k = 0; k < cols; ++k) rows[r][k] -= q * rows[top][k];
        if (rows[r][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (rows[top][c] == 0) continue;
    if (rows[top][c] < 0)
      for (auto& v : rows[top]) v = -v;
    for (std::size_t r = 0; r < top; ++r) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), rows[r][c].get_mpz_t(), rows[top][c].get_mpz_t());
      if (q != 0)
        for (std::size_t k = 0; k < cols; ++k) rows[r][k] -= q * rows[top][k];
    }
    ++top;
  }
}

}  // namespace

std::vector<IntVector> integer_kernel(const IntMatrix& a, std::size_t cols) {
  // Unimodular column operations bring A to column echelon form; the columns of
  // the transform that meet zero columns span ker(A) over Z.
  std::vector<IntVector> m(cols, IntVector(a.size()));  // column-major copy of A
  std::vector<IntVector> u(cols, IntVector(cols));
  for (std::size_t c = 0; c < cols; ++c) {
    u[c][c] = 1;
    for (std::size_t r = 0; r < a.size(); ++r) m[c][r] = a[r].at(c);
  }
  std::size_t pivot = 0;
  for (std::size_t row = 0; row < a.size() && pivot < cols; ++row) {
    while (true) {
      std::size_t best = cols;
      for (std::size_t c = pivot; c < cols; ++c) {
        if (m[c][row] == 0) continue;
        if (best == cols || abs(m[c][row]) < abs(m[best][row])) best = c;
      }
      if (best == cols) break;
      std::swap(m[pivot], m[best]);
      std::swap(u[pivot], u[best]);
      bool clean = true;
      for (std::size_t c = pivot + 1; c < cols; ++c) {
        if (m[c][row] == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), m[c][row].get_mpz_t(), m[pivot][row].get_mpz_t());
        for (std::size_t r = 0; r < a.size(); ++r) m[c][r] -= q * m[pivot][r];
        for (std::size_t r = 0; r < cols; ++r) u[c][r] -= q * u[pivot][r];
        if (m[c][row] != 0) clean = false;
      }
      if (clean) {
        ++pivot;
        break;
      }
    }
  }
  std::vector<IntVector> kernel(u.begin() + static_cast<std::ptrdiff_t>(pivot), u.end());
  hermite_rows(kernel, cols);
  return kernel;
}

FormReport gram_and_radicals(const BasedRing& r) {
  const std::size_t n = r.rank();
  FormReport rep;
  rep.gram.assign(n, IntVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rep.gram[i][j] = r.constant(i, j, r.unit_index());
  IntMatrix transpose(n, IntVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) transpose[j][i] = rep.gram[i][j];
  rep.left_radical = integer_kernel(transpose, n);
  rep.right_radical = integer_kernel(rep.gram, n);
  rep.nondegenerate = rep.left_radical.empty() && rep.right_radical.empty();
  return rep;
}

std::vector<std::size_t> detect_involution(const BasedRing& r) {
  const std::size_t n = r.rank();
  std::vector<std::size_t> sigma(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> candidates;
    for (std::size_t j = 0; j < n; ++j) {
      const auto c = r.constant(i, j, r.unit_index());
      if (c == 0) continue;
      if (c != 1) {
        throw Error(ErrorCode::Precondition, "unit multiplicity " + std::to_string(c) + " in " + r.labels()[i] +
                                                 "*" + r.labels()[j]);
      }
      candidates.push_back(j);
    }
    if (candidates.size() != 1) {
      throw Error(ErrorCode::Precondition, std::to_string(candidates.size()) + " dual candidates for " +
                                               r.labels()[i] + " (need exactly one)");
    }
    sigma[i] = candidates.front();
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (sigma[sigma[i]] != i) {
      throw Error(ErrorCode::Precondition, "duality is not an involution at " + r.labels()[i]);
    }
  }
  return sigma;
}

// ---------------------------------------------------------------------------
// Frobenius-Perron dimensions

namespace {

constexpr double kRayleighTol = 1e-12;
constexpr int kMaxIterations = 100000;

// Dominant eigenvalue of L_i + I, L_i the left multiplication by b_i.
double perron_root(const BasedRing& r, std::size_t i) {
  const std::size_t n = r.rank();
  std::vector<double> v(n, 1.0), w(n);
  double prev = NAN;
  for (int iter = 1; iter <= kMaxIterations; ++iter) {
    w = v;
    for (std::size_t j = 0; j < n; ++j) {
      if (v[j] == 0.0) continue;
      for (const auto& e : r.product(i, j)) w[e.k] += static_cast<double>(e.value) * v[j];
    }
    double vw = 0, vv = 0, ww = 0;
    for (std::size_t k = 0; k < n; ++k) {
      vw += v[k] * w[k];
      vv += v[k] * v[k];
      ww += w[k] * w[k];
    }
    const double rayleigh = vw / vv;
    const double norm = std::sqrt(ww);
    if (norm == 0.0) return 0.0;
    for (std::size_t k = 0; k < n; ++k) v[k] = w[k] / norm;
    if (std::abs(rayleigh - prev) < kRayleighTol) return rayleigh;
    prev = rayleigh;
  }
  throw Error(ErrorCode::Numeric, "power iteration for " + r.labels()[i] + " did not converge in " +
                                      std::to_string(kMaxIterations) + " iterations");
}

}  // namespace

std::vector<double> fpdim(const BasedRing& r, double tol) {
  if (!r.nonnegative()) throw Error(ErrorCode::Precondition, "FPdim needs nonnegative structure constants");
  std::vector<double> dims(r.rank());
  parallel_for(r.rank(), [&](std::size_t i) { dims[i] = perron_root(r, i) - 1.0; });
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (dims[i] < 1.0 - tol) {
      throw Error(ErrorCode::Precondition, "FPdim(" + r.labels()[i] + ") = " + std::to_string(dims[i]) +
                                               " < 1: not a transitive fusion ring");
    }
  }
  return dims;
}

double fpdim_of(const std::vector<double>& dims, const IntVector& v) {
  double s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += v[i].get_d() * dims.at(i);
  return s;
}

TransitivityReport check_transitive(const BasedRing& r) {
  const std::size_t n = r.rank();
  // reach_right[j][i]: some b_j b_k contains b_i; reach_left[j][i]: some b_l b_j does.
  std::vector<std::vector<char>> reach_right(n, std::vector<char>(n, 0)), reach_left = reach_right;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (const auto& e : r.product(a, b)) {
        if (e.value <= 0) continue;
        reach_right[a][e.k] = 1;
        reach_left[b][e.k] = 1;
      }
  TransitivityReport rep;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!reach_right[j][i]) rep.side = "right";
      else if (!reach_left[j][i]) rep.side = "left";
      else continue;
      rep.transitive = false;
      rep.failing = std::make_pair(i, j);
      return rep;
    }
  return rep;
}

}  // namespace greenring
