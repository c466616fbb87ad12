#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pflab {

// Knobs shared by every verifier. The truncation caps feed the q-series
// checks; n scales the verifiers that have a size parameter; trials counts
// random instances where randomization is used at all. mutate is a test hook:
// it flips one sign in the first computed comparison so the harness can be
// shown to detect a false identity, not only confirm true ones.
struct IdentityParams {
  int n = 2;
  long q_cap = 8;
  long x_cap = 4;
  long y_cap = 4;
  std::uint64_t seed = 1;
  int trials = 20;
  bool mutate = false;
};

enum class VerifyStatus { pass, fail, skipped };

// A failed comparison pinned to a single monomial together with the two
// coefficients that disagree there.
struct Witness {
  std::string monomial;
  std::string lhs;
  std::string rhs;
};

struct VerificationReport {
  std::string id;
  IdentityParams params;
  VerifyStatus status = VerifyStatus::pass;
  std::optional<Witness> witness;
  long long ms = 0;
};

// Catalog entry: what the verifier checks, stated mathematically, plus the
// parameter defaults it consults (name, value) in display order.
struct IdentityInfo {
  std::string id;
  std::string statement;
  std::vector<std::pair<std::string, std::string>> defaults;
};

const std::vector<IdentityInfo>& identity_catalog();
bool identity_known(const std::string& id);
std::vector<std::string> identity_ids();

// Runs one verifier. Throws UnknownIdentity for an id outside the catalog.
VerificationReport run_identity(const std::string& id, const IdentityParams& p);

// Runs the listed verifiers and returns reports in input order. Every id is
// validated before anything runs. jobs > 1 distributes the verifiers over a
// worker pool; the reports are identical to a sequential run apart from the
// elapsed-time fields.
std::vector<VerificationReport> run_suite(const std::vector<std::string>& ids,
                                          const IdentityParams& p, int jobs = 1);

// JSON array of report objects with keys id, params, status, witness, ms in
// that order. Deterministic for fixed inputs apart from ms.
std::string reports_to_json(const std::vector<VerificationReport>& reports);

} // namespace pflab
