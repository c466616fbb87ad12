#pragma once

#include <utility>
#include <vector>

namespace pflab {

// A perfect matching of {1..2k} as a list of vertex pairs.
using PerfectMatching = std::vector<std::pair<int, int>>;

// All perfect matchings of {1..n}, n even. Deterministic order: the smallest
// free vertex is paired with each larger free vertex in increasing order,
// recursively. Count is (n-1)!!.
std::vector<PerfectMatching> enumerate_matchings(int n);

// Sign of a perfect matching: parity of the number of crossing pairs,
// i.e. pairs (a,b), (c,d) with a < c < b < d. This equals the sign of the
// permutation (a1,b1,a2,b2,...) written with each pair ascending and the
// pairs sorted by smaller endpoint.
int matching_sign(const PerfectMatching& matching);

// Sign of a sequence of distinct integers by inversion parity.
int permutation_sign(const std::vector<int>& word);

// Sign (-1)^s of the shuffle sorting the word (subset ascending, complement
// ascending) back into ascending order; s counts pairs i in the subset,
// j outside with j < i.
int shuffle_sign(const std::vector<int>& subset, const std::vector<int>& universe);
int shuffle_sign(const std::vector<int>& subset, int n); // universe {1,...,n}

} // namespace pflab
