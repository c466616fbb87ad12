#include "pflab/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "pflab/errors.hpp"

namespace pflab {

Partition::Partition(std::vector<long> parts) : m_parts(std::move(parts)) {
  while (!m_parts.empty() && m_parts.back() == 0) m_parts.pop_back();
  for (std::size_t i = 0; i < m_parts.size(); ++i) {
    if (m_parts[i] <= 0) throw Error("partition parts must be positive");
    if (i > 0 && m_parts[i - 1] < m_parts[i])
      throw Error("partition parts must be weakly decreasing");
  }
}

Partition Partition::parse(const std::string& text) {
  std::size_t pos = 0;
  const auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos == text.size() || text[pos] != '[')
    throw ParseError("partition literal must start with '['");
  ++pos;
  std::vector<long> parts;
  skip_ws();
  if (pos < text.size() && text[pos] == ']') {
    ++pos;
  } else {
    while (true) {
      skip_ws();
      const std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start) throw ParseError("expected a part in partition literal");
      parts.push_back(std::stol(text.substr(start, pos - start)));
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ']') {
        ++pos;
        break;
      }
      throw ParseError("expected ',' or ']' in partition literal");
    }
  }
  skip_ws();
  if (pos != text.size()) throw ParseError("trailing characters after partition literal");
  try {
    return Partition(std::move(parts));
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

long Partition::size() const {
  long total = 0;
  for (long p : m_parts) total += p;
  return total;
}

long Partition::part(int i) const {
  if (i < 1) throw IndexOutOfRange("partition rows are 1-based");
  return i <= length() ? m_parts[i - 1] : 0;
}

std::vector<std::pair<int, int>> Partition::cells() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= length(); ++i)
    for (int j = 1; j <= m_parts[i - 1]; ++j) out.emplace_back(i, j);
  return out;
}

Partition Partition::conjugate() const {
  std::vector<long> cols;
  const long width = m_parts.empty() ? 0 : m_parts.front();
  cols.reserve(static_cast<std::size_t>(width));
  for (long j = 1; j <= width; ++j) {
    long height = 0;
    for (long p : m_parts)
      if (p >= j) ++height;
    cols.push_back(height);
  }
  return Partition(std::move(cols));
}

std::string Partition::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < m_parts.size(); ++i) {
    if (i > 0) out << ',';
    out << m_parts[i];
  }
  out << ']';
  return out.str();
}

long hook(const Partition& lambda, int i, int j) {
  if (!lambda.contains(i, j))
    throw CellOutsidePartition("hook cell outside the diagram");
  return lambda.part(i) - j + lambda.conjugate().part(j) - i + 1;
}

long hook_two(const Partition& lambda, const Partition& mu, int i, int j) {
  if (!lambda.contains(i, j))
    throw CellOutsidePartition("hook cell outside the diagram");
  return lambda.part(i) + mu.conjugate().part(j) - i - j + 1;
}

long n_stat(const Partition& lambda) {
  long total = 0;
  for (int i = 1; i <= lambda.length(); ++i)
    total += static_cast<long>(i - 1) * lambda.part(i);
  return total;
}

long n_two(const Partition& lambda, const Partition& mu) {
  const Partition lc = lambda.conjugate();
  long total = 0;
  for (const auto& [i, j] : lambda.cells())
    if (!mu.contains(i, j)) total += lc.part(j) - i;
  return total;
}

long diagram_difference(const Partition& lambda, const Partition& mu) {
  long count = 0;
  for (const auto& [i, j] : lambda.cells())
    if (!mu.contains(i, j)) ++count;
  return count;
}

PqStats pq_stats(const Partition& lambda, const Partition& mu, int n) {
  if (lambda.length() > n || mu.length() > n)
    throw LengthExceedsN("partition longer than the padding length");
  PqStats out;
  out.lambda_minus_mu = diagram_difference(lambda, mu);
  out.mu_minus_lambda = diagram_difference(mu, lambda);

  std::vector<long> k(n), l(n), cnt_above(n), cnt_atmost(n);
  for (int i = 1; i <= n; ++i) {
    k[i - 1] = lambda.part(i) + n - i;
    l[i - 1] = mu.part(i) + n - i;
    long above = 0, atmost = 0;
    for (int r = 1; r <= n; ++r) {
      if (mu.part(r) > lambda.part(i)) ++above;    // n_i
      if (lambda.part(r) >= mu.part(i)) ++atmost;  // m_i
    }
    cnt_above[i - 1] = above;
    cnt_atmost[i - 1] = atmost;
  }

  long p_half = 0;
  for (int i = 0; i < n; ++i) p_half += cnt_above[i] * k[i] + cnt_atmost[i] * l[i];

  const auto choose2 = [](long x) { return x * (x - 1) / 2; };
  long q_half = 0;
  for (int i = 1; i <= n; ++i) {
    if (lambda.part(i) >= mu.part(i))
      q_half += choose2(i - cnt_above[i - 1]);
    else
      q_half += choose2(i - cnt_atmost[i - 1]);
  }

  out.p = 2 * p_half;
  out.q = 2 * q_half;
  return out;
}

namespace {

void emit_partitions_of(long remaining, long max_first, int slots_left,
                        std::vector<long>& current, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(current));
    return;
  }
  if (slots_left == 0) return;
  for (long p = std::min(remaining, max_first); p >= 1; --p) {
    current.push_back(p);
    emit_partitions_of(remaining - p, p, slots_left - 1, current, out);
    current.pop_back();
  }
}

} // namespace

std::vector<Partition> enumerate_partitions(long max_size, long max_part, int max_length) {
  std::vector<Partition> out;
  for (long s = 0; s <= max_size; ++s) {
    std::vector<long> current;
    const long cap = max_part < 0 ? s : std::min(max_part, s);
    const int slots = max_length < 0 ? static_cast<int>(s) : max_length;
    emit_partitions_of(s, cap, slots, current, out);
  }
  return out;
}

} // namespace pflab
