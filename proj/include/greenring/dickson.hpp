#pragma once

// Dickson polynomials of the second type F_k(Y, Z):
//   F_1 = 1, F_2 = Z, F_k = Z F_{k-1} - Y F_{k-2}.

#include <cstdint>
#include <vector>

#include "greenring/poly.hpp"

namespace greenring {

// F_k by the three-term recursion. Memoized in a process-wide cache.
Poly dickson_f(int k);

// F_k from the binomial closed form
//   sum_i (-1)^i C(k-1-i, i) Y^i Z^{k-1-2i}.
Poly dickson_closed(int k);

// One term c * Y^y_exp * F_f_index of the inverse expansion of Z^j.
struct InverseTerm {
  int f_index;
  std::uint32_t y_exp;
  Integer coeff;
};

// Z^j = sum_k C(j,k) (j+1-2k)/(j+1-k) Y^k F_{j+1-2k}, k = 0..floor(j/2).
// Throws Integrality if a coefficient fails to be an integer.
std::vector<InverseTerm> monomial_to_f_basis(int j);

// Expands an inverse expansion back into a polynomial in Y, Z.
Poly expand_inverse(const std::vector<InverseTerm>& terms);

// q_j = F_j(1, 2cos(pi/n)) via the scalar recursion, 1 <= j <= n.
double q_eval(int n, int j);
// q_1..q_n as a vector indexed from 0 (result[j-1] = q_j).
std::vector<double> q_values(int n);

Integer binomial(long n, long k);

}  // namespace greenring
