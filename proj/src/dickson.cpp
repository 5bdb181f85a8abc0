#include "greenring/dickson.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <shared_mutex>

namespace greenring {

namespace {

class DicksonCache {
 public:
  DicksonCache() {
    table_.emplace_back(Poly());  // index 0 unused
    table_.push_back(Poly::constant(1));
    table_.push_back(Poly::z());
  }

  Poly get(int k) {
    {
      std::shared_lock lock(mutex_);
      if (static_cast<std::size_t>(k) < table_.size()) return table_[k];
    }
    std::unique_lock lock(mutex_);
    while (table_.size() <= static_cast<std::size_t>(k)) {
      const std::size_t i = table_.size();
      table_.push_back(Poly::z() * table_[i - 1] - Poly::y() * table_[i - 2]);
    }
    return table_[k];
  }

 private:
  std::shared_mutex mutex_;
  std::vector<Poly> table_;
};

DicksonCache& cache() {
  static DicksonCache instance;
  return instance;
}

void check_index(int k, const char* who) {
  if (k < 1) throw Error(ErrorCode::Domain, std::string(who) + ": index must be >= 1, got " + std::to_string(k));
}

}  // namespace

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Poly dickson_f(int k) {
  check_index(k, "dickson_f");
  return cache().get(k);
}

Poly dickson_closed(int k) {
  check_index(k, "dickson_closed");
  Poly p;
  for (int i = 0; i <= (k - 1) / 2; ++i) {
    Integer c = binomial(k - 1 - i, i);
    if (i % 2) c = -c;
    p.add_term(Monomial{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(k - 1 - 2 * i), {}}, Rational(c));
  }
  return p;
}

std::vector<InverseTerm> monomial_to_f_basis(int j) {
  if (j < 0) throw Error(ErrorCode::Domain, "monomial_to_f_basis: negative exponent");
  std::vector<InverseTerm> out;
  for (int k = 0; k <= j / 2; ++k) {
    Rational c(binomial(j, k) * (j + 1 - 2 * k), Integer(j + 1 - k));
    c.canonicalize();
    if (c.get_den() != 1) {
      throw Error(ErrorCode::Integrality, "inverse Dickson coefficient " + rational_to_string(c) +
                                              " is not integral (j=" + std::to_string(j) + ", k=" +
                                              std::to_string(k) + ")");
    }
    out.push_back({j + 1 - 2 * k, static_cast<std::uint32_t>(k), c.get_num()});
  }
  return out;
}

Poly expand_inverse(const std::vector<InverseTerm>& terms) {
  Poly p;
  for (const auto& t : terms) p += Poly::monomial(t.y_exp, 0) * dickson_f(t.f_index) * Rational(t.coeff);
  return p;
}

std::vector<double> q_values(int n) {
  if (n < 2) throw Error(ErrorCode::Domain, "q_values: n must be >= 2");
  const double c = 2.0 * std::cos(std::numbers::pi / n);
  std::vector<double> q(static_cast<std::size_t>(n));
  q[0] = 1.0;
  q[1] = c;
  for (int j = 3; j <= n; ++j) q[j - 1] = c * q[j - 2] - q[j - 3];
  return q;
}

double q_eval(int n, int j) {
  if (n < 2) throw Error(ErrorCode::Domain, "q_eval: n must be >= 2");
  if (j < 1 || j > n) {
    throw Error(ErrorCode::Domain, "q_eval: j=" + std::to_string(j) + " outside 1.." + std::to_string(n));
  }
  return q_values(n)[j - 1];
}

}  // namespace greenring
