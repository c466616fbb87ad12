#include "pflab/symfun.hpp"

#include <algorithm>
#include <numeric>

#include "pflab/errors.hpp"
#include "pflab/linalg.hpp"
#include "pflab/matchings.hpp"
#include "pflab/matrix.hpp"

namespace pflab {

VarBlock x_block(int n) {
  VarBlock out;
  for (int i = 1; i <= n; ++i) out.push_back(vars::x(i));
  return out;
}

VarBlock y_block(int n) {
  VarBlock out;
  for (int i = 1; i <= n; ++i) out.push_back(vars::y(i));
  return out;
}

Poly vandermonde(const VarBlock& x) {
  Poly out = Poly::one();
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      out *= Poly::variable(x[i]) - Poly::variable(x[j]);
  return out;
}

Poly schur(const Partition& lambda, const VarBlock& x) {
  const int n = static_cast<int>(x.size());
  if (lambda.length() > n) return Poly::zero();
  if (n == 0) return Poly::one();

  Matrix<Poly> alt(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      alt.set(i, j,
              Poly::term(BigRational(1),
                         Monomial::var(x[i - 1],
                                       lambda.part(j) + n - j)));
  return poly_exact_div(det(alt), vandermonde(x));
}

namespace {

void monomials_of_degree(const VarBlock& x, std::size_t from, long k,
                         Monomial acc, Poly& out) {
  if (k == 0) {
    out += Poly::term(BigRational(1), acc);
    return;
  }
  if (from == x.size()) return;
  if (from + 1 == x.size()) {
    out += Poly::term(BigRational(1), acc * Monomial::var(x[from], k));
    return;
  }
  for (long e = 0; e <= k; ++e)
    monomials_of_degree(x, from + 1, k - e, e == 0 ? acc : acc * Monomial::var(x[from], e),
                        out);
}

} // namespace

Poly complete_homogeneous(long k, const VarBlock& x) {
  if (k < 0) return Poly::zero();
  if (k == 0) return Poly::one();
  if (x.empty()) return Poly::zero();
  Poly out;
  monomials_of_degree(x, 0, k, Monomial::one(), out);
  return out;
}

SubsetFactors sundquist_factors(const IndexSet& i, const VarBlock& x,
                                const VarBlock& y, const Poly& a, const Poly& b,
                                const Poly& c) {
  const auto picked = i.elems();
  for (int v : picked)
    if (v > static_cast<int>(x.size()) || v > static_cast<int>(y.size()))
      throw IndexOutOfRange("subset index " + std::to_string(v) +
                            " beyond the variable block");

  SubsetFactors out{Poly::one(), Poly::one(), Poly::one()};
  for (std::size_t s = 0; s < picked.size(); ++s) {
    const Poly xi = Poly::variable(x[picked[s] - 1]);
    out.y *= Poly::variable(y[picked[s] - 1]);
    for (std::size_t t = s + 1; t < picked.size(); ++t) {
      const Poly xj = Poly::variable(x[picked[t] - 1]);
      out.delta *= xi - xj;
      out.j *= a + b * (xi + xj) + c * xi * xj;
    }
  }
  return out;
}

Poly alternant(const std::vector<long>& alpha, const std::vector<long>& beta,
               const VarBlock& x, const VarBlock& y) {
  const std::size_t n = alpha.size();
  if (beta.size() != n)
    throw LengthMismatch("compositions differ in length: " + std::to_string(n) +
                         " vs " + std::to_string(beta.size()));
  if (x.size() != 2 * n || y.size() != 2 * n)
    throw LengthMismatch("variable blocks must have length 2n = " +
                         std::to_string(2 * n));
  for (long e : alpha)
    if (e < 0) throw Error("negative exponent in composition");
  for (long e : beta)
    if (e < 0) throw Error("negative exponent in composition");

  std::vector<int> sigma(2 * n);
  std::iota(sigma.begin(), sigma.end(), 1);
  Poly out;
  do {
    Monomial mono;
    for (std::size_t k = 0; k < n; ++k) {
      if (alpha[k] != 0) mono = mono * Monomial::var(x[sigma[k] - 1], alpha[k]);
      mono = mono * Monomial::var(y[sigma[k] - 1]);
    }
    for (std::size_t k = 0; k < n; ++k)
      if (beta[k] != 0) mono = mono * Monomial::var(x[sigma[n + k] - 1], beta[k]);
    out += Poly::term(BigRational(permutation_sign(sigma)), mono);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

} // namespace pflab
