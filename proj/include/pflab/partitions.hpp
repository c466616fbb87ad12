#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pflab/rational.hpp"

namespace pflab {

// Integer partition with weakly decreasing positive parts. Rows and columns
// are 1-based throughout, matching the index conventions of the matrix side.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<long> parts);

  static Partition parse(const std::string& text); // "[4,3,1,1]", "[]"

  long size() const;               // number of cells
  int length() const { return static_cast<int>(m_parts.size()); }
  long part(int i) const;          // 1-based; 0 beyond the length
  const std::vector<long>& parts() const { return m_parts; }
  bool contains(int i, int j) const { return i >= 1 && j >= 1 && j <= part(i); }
  std::vector<std::pair<int, int>> cells() const;

  Partition conjugate() const;

  std::string to_string() const;

  bool operator==(const Partition& o) const { return m_parts == o.m_parts; }
  bool operator!=(const Partition& o) const { return !(*this == o); }

private:
  std::vector<long> m_parts;
};

// Ordinary hook length of the cell (i,j) of lambda. Throws
// CellOutsidePartition when the cell is not in the diagram.
long hook(const Partition& lambda, int i, int j);

// Generalized two-shape hook lambda_i + mu'_j - i - j + 1 for a cell of
// lambda; may be zero or negative.
long hook_two(const Partition& lambda, const Partition& mu, int i, int j);

// n(lambda) = sum_i (i-1) * lambda_i.
long n_stat(const Partition& lambda);

// Two-shape statistic: sum over cells (i,j) of lambda minus mu of
// (lambda'_j - i). Column by column this is C(lambda'_j - mu'_j, 2), which is
// also what the mu' form sum (i - mu'_j - 1) collapses to.
long n_two(const Partition& lambda, const Partition& mu);

// Cells of lambda that are not cells of mu.
long diagram_difference(const Partition& lambda, const Partition& mu);

struct PqStats {
  long p = 0;
  long q = 0;
  long lambda_minus_mu = 0;
  long mu_minus_lambda = 0;
};

// Exponent bookkeeping for the pair (lambda, mu) padded to n rows:
// with k_i = lambda_i + n - i, l_j = mu_j + n - j,
// n_i = #{r : mu_r > lambda_i} and m_j = #{r : lambda_r >= mu_j},
//   P = 2 * (sum_i n_i k_i + sum_j m_j l_j)
//   Q = 2 * (sum over rows with lambda_i >= mu_i of C(i - n_i, 2)
//          + sum over rows with lambda_i <  mu_i of C(i - m_i, 2)).
// These satisfy |lambda-mu| + |mu-lambda| + 2n(lambda,mu) + 2n(mu,lambda)
//   + P - Q = sum (2i-1) k_i + sum (2j-1) l_j.
PqStats pq_stats(const Partition& lambda, const Partition& mu, int n);

// All partitions with |lambda| <= max_size, optionally bounded part size and
// length (-1 means unbounded). Order: by size, then by parts
// lexicographically descending, e.g. [], [1], [2], [1,1], [3], [2,1], [1,1,1].
std::vector<Partition> enumerate_partitions(long max_size, long max_part = -1,
                                            int max_length = -1);

} // namespace pflab
