#pragma once

// Shared machinery for the identity verifiers: deterministic randomness, the
// one-failure-per-run comparison session, and the stock random instances.
// Everything here is internal to the identities translation units.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pflab/identities.hpp"
#include "pflab/linalg.hpp"
#include "pflab/matrix.hpp"
#include "pflab/poly.hpp"
#include "pflab/ratfun.hpp"
#include "pflab/rational.hpp"

namespace pflab::detail {

// splitmix64, same stream as the test-side generator so a seed means the same
// instance everywhere. std::uniform_* would not be portable across standard
// libraries, and the golden reports must be byte stable.
struct Rand {
  std::uint64_t state;

  explicit Rand(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [lo, hi] by rejection; no modulo bias.
  long range(long lo, long hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return lo + static_cast<long>(v % span);
  }
};

// Per-verifier stream: the suite seed mixed with the id, so the instances a
// verifier sees do not depend on which other ids run alongside it.
std::uint64_t stream_seed(std::uint64_t seed, const std::string& id);

// Collects the first failing comparison of a verifier run. Every comparison
// funnels through check(); the mutation hook lives here so each verifier is
// perturbable the same way: on the first comparison with a nonzero side, one
// sign of the right-hand side is flipped (of the left if the right is zero).
class Session {
public:
  explicit Session(bool mutate) : m_mutate(mutate) {}

  void check(const Poly& lhs, const Poly& rhs);
  void check(const BigRational& lhs, const BigRational& rhs);
  // Cross-multiplied: num_l*den_r vs num_r*den_l as polynomials.
  void check(const RationalFunction& lhs, const RationalFunction& rhs);
  void check_count(long lhs, long rhs);

  bool failed() const { return m_failed; }
  const std::optional<Witness>& witness() const { return m_witness; }

private:
  void compare(const Poly& lhs, const Poly& rhs);

  bool m_mutate;
  bool m_mutation_spent = false;
  bool m_failed = false;
  std::optional<Witness> m_witness;
};

using VerifierFn = void (*)(Session&, const IdentityParams&, Rand&);

// Skipped runs raise this instead of threading a status through every
// verifier; run_identity translates it into VerifyStatus::skipped.
struct SkipRun {
  std::string reason;
};

// Random integer instances, entries in [-3, 3]; the nonsingular variant
// redraws until the Pfaffian is nonzero.
Matrix<BigRational> rand_matrix(Rand& rng, int rows, int cols);
SkewMatrix<BigRational> rand_skew(Rand& rng, int n);
SkewMatrix<BigRational> rand_skew_nonsingular(Rand& rng, int n);

Poly cpoly(const BigRational& c);
Matrix<Poly> to_poly(const Matrix<BigRational>& m);

// Verifier entry points, grouped by translation unit.
void verify_pf_square(Session& s, const IdentityParams& p, Rand& rng);
void verify_pf_permutation(Session& s, const IdentityParams& p, Rand& rng);
void verify_pf_transform(Session& s, const IdentityParams& p, Rand& rng);
void verify_pf_expansion(Session& s, const IdentityParams& p, Rand& rng);
void verify_pf_memo(Session& s, const IdentityParams& p, Rand& rng);
void verify_pf_matching_sign(Session& s, const IdentityParams& p, Rand& rng);
void verify_pf_examples(Session& s, const IdentityParams& p, Rand& rng);
void verify_jacobi_det(Session& s, const IdentityParams& p, Rand& rng);
void verify_jacobi_pf(Session& s, const IdentityParams& p, Rand& rng);
void verify_plucker(Session& s, const IdentityParams& p, Rand& rng);
void verify_basic_identity(Session& s, const IdentityParams& p, Rand& rng);
void verify_pf_lem3(Session& s, const IdentityParams& p, Rand& rng);
void verify_pfeval(Session& s, const IdentityParams& p, Rand& rng);
void verify_schur_sum(Session& s, const IdentityParams& p, Rand& rng);

void verify_msf_main(Session& s, const IdentityParams& p, Rand& rng);
void verify_cauchy_binet(Session& s, const IdentityParams& p, Rand& rng);
void verify_cauchy_binet_gen(Session& s, const IdentityParams& p, Rand& rng);
void verify_msf2(Session& s, const IdentityParams& p, Rand& rng);
void verify_msf3(Session& s, const IdentityParams& p, Rand& rng);
void verify_msf4_cor_odd(Session& s, const IdentityParams& p, Rand& rng);
void verify_msf4_cor_even(Session& s, const IdentityParams& p, Rand& rng);
void verify_msf4_thm(Session& s, const IdentityParams& p, Rand& rng);
void verify_msf4_augmented(Session& s, const IdentityParams& p, Rand& rng);

void verify_lgv_lemma(Session& s, const IdentityParams& p, Rand& rng);
void verify_lgv_msf(Session& s, const IdentityParams& p, Rand& rng);
void verify_lgv_msf2(Session& s, const IdentityParams& p, Rand& rng);
void verify_lgv_msf3(Session& s, const IdentityParams& p, Rand& rng);
void verify_lgv_msf4(Session& s, const IdentityParams& p, Rand& rng);
void verify_lgv_grid_h(Session& s, const IdentityParams& p, Rand& rng);

void verify_q_binomial(Session& s, const IdentityParams& p, Rand& rng);
void verify_q_kernel(Session& s, const IdentityParams& p, Rand& rng);
void verify_q_kernel_sq(Session& s, const IdentityParams& p, Rand& rng);
void verify_q_key_id(Session& s, const IdentityParams& p, Rand& rng);
void verify_q_macd(Session& s, const IdentityParams& p, Rand& rng);
void verify_kawanaka(Session& s, const IdentityParams& p, Rand& rng);
void verify_ours(Session& s, const IdentityParams& p, Rand& rng);
void verify_gh_lemmas(Session& s, const IdentityParams& p, Rand& rng);

void verify_coeff_lemma(Session& s, const IdentityParams& p, Rand& rng);
void verify_id_strange(Session& s, const IdentityParams& p, Rand& rng);
void verify_det_kawanaka(Session& s, const IdentityParams& p, Rand& rng);

void verify_sundquist(Session& s, const IdentityParams& p, Rand& rng);

} // namespace pflab::detail
