#pragma once

#include <vector>

#include "pflab/partitions.hpp"
#include "pflab/poly.hpp"
#include "pflab/variables.hpp"

namespace pflab {

class IndexSet;

// An ordered block of distinct variables, e.g. (x_1,...,x_n).
using VarBlock = std::vector<VarId>;

// (x_1,...,x_n) and (y_1,...,y_n) from the shared registry.
VarBlock x_block(int n);
VarBlock y_block(int n);

// Delta(x) = prod_{i<j} (x_i - x_j). Empty or singleton block gives 1.
Poly vandermonde(const VarBlock& x);

// det(x_i^{lambda_j + n - j}) / Delta(x). Returns 0 when the partition has
// more parts than there are variables; the division is exact otherwise.
Poly schur(const Partition& lambda, const VarBlock& x);

// Sum of all monomials of total degree k. Negative k gives 0, h_0 = 1.
Poly complete_homogeneous(long k, const VarBlock& x);

// Factors attached to an index subset I of the variable block:
//   delta = prod_{i<j in I} (x_i - x_j)
//   j     = prod_{i<j in I} (a + b(x_i + x_j) + c x_i x_j)
//   y     = prod_{i in I} y_i
// Products over fewer than two indices are 1.
struct SubsetFactors {
  Poly delta;
  Poly j;
  Poly y;
};
SubsetFactors sundquist_factors(const IndexSet& i, const VarBlock& x,
                                const VarBlock& y, const Poly& a, const Poly& b,
                                const Poly& c);

// a_{alpha,beta}(x,y) = sum over sigma in S_{2n} of
//   eps(sigma) x_{sigma(1)}^{alpha_1} y_{sigma(1)} ... x_{sigma(n)}^{alpha_n}
//   y_{sigma(n)} x_{sigma(n+1)}^{beta_1} ... x_{sigma(2n)}^{beta_n},
// sigma permuting the x- and y-indices jointly. alpha and beta are
// compositions of length n; the blocks must both have 2n variables.
Poly alternant(const std::vector<long>& alpha, const std::vector<long>& beta,
               const VarBlock& x, const VarBlock& y);

} // namespace pflab
