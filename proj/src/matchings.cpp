#include "pflab/matchings.hpp"

#include <algorithm>
#include <set>

#include "pflab/errors.hpp"

namespace pflab {

namespace {

void extend_matching(int n, std::vector<bool>& used, PerfectMatching& current,
                     std::vector<PerfectMatching>& out) {
  int a = 0;
  for (int v = 1; v <= n; ++v) {
    if (!used[v]) {
      a = v;
      break;
    }
  }
  if (a == 0) {
    out.push_back(current);
    return;
  }
  used[a] = true;
  for (int b = a + 1; b <= n; ++b) {
    if (used[b]) continue;
    used[b] = true;
    current.emplace_back(a, b);
    extend_matching(n, used, current, out);
    current.pop_back();
    used[b] = false;
  }
  used[a] = false;
}

} // namespace

std::vector<PerfectMatching> enumerate_matchings(int n) {
  if (n < 0 || n % 2 != 0) throw OddSize("perfect matchings need an even vertex count");
  std::vector<PerfectMatching> out;
  std::vector<bool> used(n + 1, false);
  PerfectMatching current;
  extend_matching(n, used, current, out);
  return out;
}

int matching_sign(const PerfectMatching& matching) {
  const int n = static_cast<int>(2 * matching.size());
  std::vector<std::pair<int, int>> arcs;
  arcs.reserve(matching.size());
  std::vector<bool> seen(n + 1, false);
  for (auto [a, b] : matching) {
    if (a > b) std::swap(a, b);
    if (a < 1 || b > n || a == b) throw NotAMatching("vertex outside {1..2k}");
    if (seen[a] || seen[b]) throw NotAMatching("repeated vertex");
    seen[a] = seen[b] = true;
    arcs.emplace_back(a, b);
  }
  std::sort(arcs.begin(), arcs.end());
  long crossings = 0;
  for (std::size_t s = 0; s < arcs.size(); ++s)
    for (std::size_t t = s + 1; t < arcs.size(); ++t)
      if (arcs[t].first < arcs[s].second && arcs[s].second < arcs[t].second) ++crossings;
  return crossings % 2 == 0 ? 1 : -1;
}

int permutation_sign(const std::vector<int>& word) {
  long inversions = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    for (std::size_t j = i + 1; j < word.size(); ++j) {
      if (word[i] == word[j]) throw Error("permutation word has a repeated value");
      if (word[i] > word[j]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

int shuffle_sign(const std::vector<int>& subset, const std::vector<int>& universe) {
  const std::set<int> all(universe.begin(), universe.end());
  std::set<int> inside;
  for (int i : subset) {
    if (all.count(i) == 0 || !inside.insert(i).second)
      throw NotASubset("shuffle subset must pick distinct elements of the universe");
  }
  long s = 0;
  for (int i : inside)
    for (int j : all)
      if (inside.count(j) == 0 && j < i) ++s;
  return s % 2 == 0 ? 1 : -1;
}

int shuffle_sign(const std::vector<int>& subset, int n) {
  std::vector<int> universe(n);
  for (int v = 1; v <= n; ++v) universe[v - 1] = v;
  return shuffle_sign(subset, universe);
}

} // namespace pflab
