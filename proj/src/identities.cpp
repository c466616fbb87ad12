#include "pflab/identities.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>

#include "json.hpp"
#include "pflab/errors.hpp"
#include "verify_impl.hpp"

namespace pflab {

namespace detail {

std::uint64_t stream_seed(std::uint64_t seed, const std::string& id) {
  // FNV-1a over the id, folded into the suite seed and whitened once, so a
  // verifier's instance stream is independent of the rest of the run list.
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : id) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  Rand mix(seed ^ h);
  return mix.next();
}

void Session::compare(const Poly& lhs, const Poly& rhs) {
  if (m_failed) return;
  const Poly diff = lhs - rhs;
  if (diff.is_zero()) return;
  m_failed = true;
  // terms() iterates in descending graded order; take the smallest monomial
  // so the witness is the low-degree end of the disagreement.
  const Monomial mono = diff.terms().rbegin()->first;
  Witness w;
  w.monomial = mono.is_one() ? "1" : Poly::term(BigRational(1), mono).to_string();
  w.lhs = rat_to_string(lhs.coefficient(mono));
  w.rhs = rat_to_string(rhs.coefficient(mono));
  m_witness = w;
}

void Session::check(const Poly& lhs, const Poly& rhs) {
  if (m_mutate && !m_mutation_spent) {
    if (!rhs.is_zero()) {
      Poly flipped = rhs;
      flipped.add_term(rhs.leading_monomial(), BigRational(-2) * rhs.leading_coefficient());
      m_mutation_spent = true;
      compare(lhs, flipped);
      return;
    }
    if (!lhs.is_zero()) {
      Poly flipped = lhs;
      flipped.add_term(lhs.leading_monomial(), BigRational(-2) * lhs.leading_coefficient());
      m_mutation_spent = true;
      compare(flipped, rhs);
      return;
    }
    return; // both sides zero: nothing to flip yet
  }
  compare(lhs, rhs);
}

void Session::check(const BigRational& lhs, const BigRational& rhs) {
  check(Poly::constant(lhs), Poly::constant(rhs));
}

void Session::check(const RationalFunction& lhs, const RationalFunction& rhs) {
  check(lhs.num() * rhs.den(), rhs.num() * lhs.den());
}

void Session::check_count(long lhs, long rhs) {
  check(Poly::constant(BigRational(lhs)), Poly::constant(BigRational(rhs)));
}

Matrix<BigRational> rand_matrix(Rand& rng, int rows, int cols) {
  Matrix<BigRational> m(rows, cols);
  for (int i = 1; i <= rows; ++i)
    for (int j = 1; j <= cols; ++j) m.set(i, j, BigRational(rng.range(-3, 3)));
  return m;
}

SkewMatrix<BigRational> rand_skew(Rand& rng, int n) {
  SkewMatrix<BigRational> a(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) a.set_upper(i, j, BigRational(rng.range(-3, 3)));
  return a;
}

SkewMatrix<BigRational> rand_skew_nonsingular(Rand& rng, int n) {
  for (;;) {
    SkewMatrix<BigRational> a = rand_skew(rng, n);
    if (!(pfaffian(a) == BigRational(0))) return a;
  }
}

Poly cpoly(const BigRational& c) { return Poly::constant(c); }

Matrix<Poly> to_poly(const Matrix<BigRational>& m) {
  Matrix<Poly> out(m.rows(), m.cols());
  for (int i = 1; i <= m.rows(); ++i)
    for (int j = 1; j <= m.cols(); ++j) out.set(i, j, Poly::constant(m.at(i, j)));
  return out;
}

} // namespace detail

namespace {

struct Entry {
  const char* id;
  const char* statement;
  std::vector<std::pair<std::string, std::string>> defaults;
  detail::VerifierFn fn;
};

using KV = std::vector<std::pair<std::string, std::string>>;

KV d_rng() { return {{"trials", "20"}, {"seed", "1"}}; }
KV d_none() { return {}; }
KV d_caps() { return {{"q-cap", "8"}, {"x-cap", "4"}}; }
KV d_caps_xy() { return {{"q-cap", "8"}, {"x-cap", "4"}, {"y-cap", "4"}}; }
KV d_n_caps() { return {{"n", "2"}, {"q-cap", "8"}, {"x-cap", "4"}}; }

const std::vector<Entry>& table() {
  static const std::vector<Entry> entries = {
      {"pf.square",
       "Pf(A)^2 = det(A) on random integer skew matrices of sizes 2..10; odd sizes have "
       "det(A) = 0.",
       d_rng(), detail::verify_pf_square},
      {"pf.permutation",
       "Relabeling a skew matrix by a permutation multiplies the Pfaffian by the "
       "permutation sign.",
       d_rng(), detail::verify_pf_permutation},
      {"pf.transform", "Pf(T A tT) = det(T) Pf(A) for square T.", d_rng(),
       detail::verify_pf_transform},
      {"pf.expansion",
       "First-row expansion Pf(A) = sum_j (-1)^j a_1j Pf(A del 1,j) and the copfaffian "
       "law tG A = Pf(A) E.",
       d_rng(), detail::verify_pf_expansion},
      {"pf.memo-vs-comb",
       "Matching-sum, elimination, and mask-memoized sub-Pfaffian evaluations agree on "
       "random instances.",
       d_rng(), detail::verify_pf_memo},
      {"pf.matching-sign",
       "Crossing-number parity of a perfect matching equals the sign of its word as a "
       "permutation; exhaustive through size 6 (945 matchings), and the signs sum to 1.",
       d_none(), detail::verify_pf_matching_sign},
      {"pf.examples",
       "Closed forms: the symbolic 4x4 Pfaffian a12*a34 - a13*a24 + a14*a23, rank-one "
       "Pf(x_i y_j), staircase matrices P_n(s,t) with copfaffians and principal minors, "
       "unit-Pfaffian reversal blocks.",
       d_none(), detail::verify_pf_examples},
      {"jacobi.det",
       "An r-minor of the cofactor-transpose matrix equals +/- det(A)^(r-1) times the "
       "complementary minor of A; all (I, J) with r <= 3 on random 6x6.",
       d_rng(), detail::verify_jacobi_det},
      {"jacobi.pf",
       "Pf of an even principal minor of the copfaffian matrix equals +/- Pf(A)^(r-1) "
       "times the complementary sub-Pfaffian; the copfaffian of the copfaffian is "
       "Pf(A)^(m-2) A.",
       d_rng(), detail::verify_jacobi_pf},
      {"plucker",
       "Alternating exchange of one index between an odd subset and its complement, "
       "with sequence-indexed sub-Pfaffians on both sides.",
       d_rng(), detail::verify_plucker},
      {"basic-identity",
       "Pf(c) Pf(a1..a2k c) expanded as an alternating sum of overlapping sub-Pfaffian "
       "products pairing a1 with each later a_j.",
       d_rng(), detail::verify_basic_identity},
      {"pf-lem3",
       "Three block-Pfaffian layouts of the same two-sided kernel (compressed, expanded "
       "with J tBhat J, reflected with Bhat) agree.",
       d_rng(), detail::verify_pf_lem3},
      {"pfeval.closed-forms",
       "Evaluations: Pf[(x_i-x_j)/(x_i+x_j)], Pf[(x_i-x_j)/(1-x_i x_j)], the "
       "t-deformed Pf[(x_j-x_i)/(1-t x_i x_j)] with prefactor t^(r(r-1)), the "
       "split-power Vandermonde Pfaffian, and both Cauchy determinants; symbolic at "
       "sizes 2 and 4, exact rational sample points at size 6.",
       d_rng(), detail::verify_pfeval},
      {"schur.sum",
       "Delta(x) sum_lambda Pf(alpha_{l_p l_q}) s_lambda(x) = Pf(beta) with beta_ij = "
       "sum_{k<l} alpha_kl (x_i^k x_j^l - x_i^l x_j^k), exact in the alpha symbols with "
       "index cap L; n = 2 runs L in {2,3}, n = 4 runs L = 5.",
       {{"n", "2"}}, detail::verify_schur_sum},

      {"msf.main",
       "sum_I Pf(A^I_I) det(T_I) over column m-subsets = Pf(T A tT), two copfaffian "
       "block forms, the odd-N first equality, and det(T) = Pf(T K tT).",
       d_rng(), detail::verify_msf_main},
      {"msf.cauchy-binet", "sum_K det(X_K) det(Y_K) = det(X tY).", d_rng(),
       detail::verify_cauchy_binet},
      {"msf.cauchy-binet-gen",
       "sum_{I,J} det(A^I_J) det(X_I) det(Y_J) = det(X A tY) for arbitrary square A.",
       d_rng(), detail::verify_cauchy_binet_gen},
      {"msf.msf2",
       "Minor summation with a forced leading column block: the (m-n)-subset sum equals "
       "both the compressed and the expanded block-Pfaffian form.",
       d_rng(), detail::verify_msf2},
      {"msf.msf3",
       "Two-sided minor summation with marker z: sum_r z^(2r) sum_{I,J} Pf(A^I) Pf(B^J) "
       "det(T^I_J) equals four block-Pfaffian forms, one denominator-free.",
       d_rng(), detail::verify_msf3},
      {"msf4.cor-odd",
       "Bordered two-sided summation, odd M: even plus odd z-parities (odd terms adjoin "
       "the 0th row of A and B) = Pf(A) Pf(Ahat/Pf(A) + Q).",
       d_rng(), detail::verify_msf4_cor_odd},
      {"msf4.cor-even",
       "Bordered two-sided summation, even M: the same parity sums with A padded to "
       "size M+2 and the padding row of Q zero.",
       d_rng(), detail::verify_msf4_cor_even},
      {"msf4.thm",
       "Two-sided minor summation with forced rows R0 and columns S0: sum_r z^r "
       "sum_{I,J} Pf(A^I) Pf(B^J) det(T^{R0+I}_{S0+J}) = Pf(A) Pf(B) times the "
       "four-block Pfaffian.",
       d_rng(), detail::verify_msf4_thm},
      {"msf4.cor-augmented",
       "Forced rows/columns with bordered A and B: both z-parities (odd terms adjoin "
       "the border indices of A and B) equal Pf(A) times the bordered block Pfaffian in "
       "Q11, Q12, Q22.",
       d_rng(), detail::verify_msf4_augmented},

      {"lgv.lemma",
       "The signed sum over path tuples equals det of the path matrix on random acyclic "
       "digraphs; with compatible endpoints the non-intersecting sum is that "
       "determinant.",
       d_rng(), detail::verify_lgv_lemma},
      {"lgv.lmsf",
       "sum_I Pf(A_I) F0(u, v_I) over sink m-subsets of a grid = Pf(A) times the block "
       "Pfaffian of path sums and the copfaffian block, also for permuted sources via "
       "the signed sum.",
       d_rng(), detail::verify_lgv_msf},
      {"lgv.lmsf2",
       "Lattice minor summation with forced sinks: the subset selection runs over the "
       "free sink pool only.",
       d_rng(), detail::verify_lgv_msf2},
      {"lgv.lmsf3",
       "Two-sided lattice minor summation with marker z over source and sink pools.",
       d_rng(), detail::verify_lgv_msf3},
      {"lgv.lmsf4",
       "Two-sided lattice summation with forced sources and sinks ahead of the free "
       "pools.",
       d_rng(), detail::verify_lgv_msf4},
      {"lgv.grid-h",
       "On the row-weighted grid of height 6 every bottom-to-top path sum is the "
       "complete homogeneous polynomial h_(j-i)(x_1..x_6).",
       d_none(), detail::verify_lgv_grid_h},

      {"q.binomial",
       "sum_n (a;q)_n/(q;q)_n x^n = (ax;q)_inf/(x;q)_inf as truncated series with a "
       "symbolic.",
       d_caps(), detail::verify_q_binomial},
      {"q.kernel-two-variable",
       "sum_{k,l} (-q;q)_k(-q;q)_l/((q;q)_k(q;q)_l) (q^l-q^k)/(q^k+q^l) x^k y^l = "
       "(-qx;q)_inf/(x;q)_inf (-qy;q)_inf/(y;q)_inf (x-y)/(1-xy), with the one-variable "
       "slices and antisymmetry.",
       d_caps_xy(), detail::verify_q_kernel},
      {"q.kernel-two-variable-sq",
       "sum_{k,l} (-q^2;q^2)_k(-q^2;q^2)_l/((q^2;q^2)_k(q^2;q^2)_l) 2 x^k y^l / "
       "(q^(k-l)+q^(l-k)) = (-qx;q^2)_inf/(qx;q^2)_inf (-qy;q^2)_inf/(qy;q^2)_inf "
       "1/(1-xy).",
       d_caps_xy(), detail::verify_q_kernel_sq},
      {"q.key-id",
       "prod_cells (1+q^h)/(1-q^h) = prod_i (-q;q)_{l_i}/(q;q)_{l_i} prod_{i<j} "
       "(1-q^(l_i-l_j))/(1+q^(l_i-l_j)); cleared to polynomials, exhaustive over "
       "|lambda| <= 8.",
       d_none(), detail::verify_q_key_id},
      {"q.macdonald-hook",
       "prod_cells (1-q^h) = prod_i (q;q)_{l_i} / prod_{i<j} (1-q^(l_i-l_j)) and the "
       "companion with all signs flipped to +; cleared, exhaustive over |lambda| <= 8.",
       d_none(), detail::verify_q_macd},
      {"kawanaka.littlewood",
       "sum_lambda prod_cells (1+q^h)/(1-q^h) s_lambda(x) = prod_i "
       "(-x_i q;q)_inf/(x_i;q)_inf prod_{i<j} 1/(1-x_i x_j), truncated, for sizes "
       "1..n.",
       d_n_caps(), detail::verify_kawanaka},
      {"kawanaka.schur-pochhammer",
       "sum_lambda q^n(lambda) prod_i (a;q)_(lambda_i+n-i) / prod_cells (1-q^h) "
       "s_lambda(x) = prod_{i<n} (a;q)_i prod_i (a q^(n-1) x_i;q)_inf/(x_i;q)_inf with "
       "a symbolic, sizes 1..min(n,3).",
       d_n_caps(), detail::verify_ours},
      {"q.gh-lemmas",
       "Pf[g_n(x_i,x_j)] = q^(n(n-1)(n-2)/6) prod_k (a;q)_k prod_{i<j}(x_i-x_j), det of "
       "the coefficient array of h_n = (qt)^(n(n-1)(n-2)/6) prod (a;q)_i prod (b;t)_j; "
       "h at b=a, t=q degenerates to g, whose coefficient array is skew with det = "
       "Pf^2. Exact, n in {2,4}.",
       d_none(), detail::verify_gh_lemmas},

      {"qcauchy.coeff-lemma",
       "det(a_{k_i l_j}) = q^(|lambda-mu|+|mu-lambda|) J_{lambda mu}(q^2) for the "
       "kernel a_kl with 2 q^(k+l)/(q^2k+q^2l), cleared of hook denominators; "
       "exhaustive over parts <= 2 at n = 2 plus the (4,3,1,1)/(3,3) spot case.",
       {{"q-cap", "8"}}, detail::verify_coeff_lemma},
      {"qcauchy.id-strange",
       "|lambda-mu| + |mu-lambda| + 2n(lambda,mu) + 2n(mu,lambda) + P - Q = sum_i "
       "(2i-1)(k_i + l_i), exhaustive over parts <= 3, n <= 4.",
       d_none(), detail::verify_id_strange},
      {"qcauchy.det-kawanaka",
       "sum_{lambda,mu} q^(|lambda-mu|+|mu-lambda|) J_{lambda mu}(q^2) s_lambda(x) "
       "s_mu(y) = prod_i (-qx_i;q^2)_inf/(qx_i;q^2)_inf prod_j (-qy_j;q^2)_inf/"
       "(qy_j;q^2)_inf prod_{i,j} 1/(1-x_i y_j), truncated, two x and two y variables.",
       d_caps_xy(), detail::verify_det_kawanaka},

      {"sundquist.variant",
       "Pf[(y_i-y_j)/(a+b(x_i+x_j)+c x_i x_j)] times prod of the denominators = "
       "(ac-b^2)^(r(r-1)/2) sum_I +/- y_I Delta_I Delta_Ibar J_I J_Ibar on 4 points "
       "with a, b, c symbolic; y_I-coefficient extraction, the ac = b^2 collapse, the "
       "even-size all-ones vanishing sum, and the Frobenius-pair alternant expansion at "
       "a = c = 1, b = 0.",
       d_none(), detail::verify_sundquist},
  };
  return entries;
}

const Entry* find_entry(const std::string& id) {
  for (const Entry& e : table())
    if (id == e.id) return &e;
  return nullptr;
}

} // namespace

const std::vector<IdentityInfo>& identity_catalog() {
  static const std::vector<IdentityInfo> infos = [] {
    std::vector<IdentityInfo> out;
    for (const Entry& e : table()) out.push_back({e.id, e.statement, e.defaults});
    return out;
  }();
  return infos;
}

bool identity_known(const std::string& id) { return find_entry(id) != nullptr; }

std::vector<std::string> identity_ids() {
  std::vector<std::string> out;
  for (const Entry& e : table()) out.emplace_back(e.id);
  return out;
}

VerificationReport run_identity(const std::string& id, const IdentityParams& p) {
  const Entry* e = find_entry(id);
  if (e == nullptr) throw UnknownIdentity("unknown identity id: " + id);

  VerificationReport rep;
  rep.id = id;
  rep.params = p;

  const auto start = std::chrono::steady_clock::now();
  detail::Session session(p.mutate);
  detail::Rand rng(detail::stream_seed(p.seed, id));
  try {
    e->fn(session, p, rng);
    rep.status = session.failed() ? VerifyStatus::fail : VerifyStatus::pass;
    rep.witness = session.witness();
  } catch (const detail::SkipRun&) {
    rep.status = VerifyStatus::skipped;
  }
  rep.ms = std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
               .count();
  return rep;
}

std::vector<VerificationReport> run_suite(const std::vector<std::string>& ids,
                                          const IdentityParams& p, int jobs) {
  for (const std::string& id : ids)
    if (!identity_known(id)) throw UnknownIdentity("unknown identity id: " + id);

  std::vector<VerificationReport> reports(ids.size());
  if (ids.empty()) return reports;

  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(ids.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < ids.size(); ++i) reports[i] = run_identity(ids[i], p);
    return reports;
  }

  std::atomic<std::size_t> cursor{0};
  std::exception_ptr first_error;
  std::mutex error_lock;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = cursor.fetch_add(1);
        if (i >= ids.size()) return;
        try {
          reports[i] = run_identity(ids[i], p);
        } catch (...) {
          std::lock_guard<std::mutex> hold(error_lock);
          if (!first_error) first_error = std::current_exception();
          return;
        }
      }
    });
  }
  for (std::thread& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
  return reports;
}

std::string reports_to_json(const std::vector<VerificationReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const VerificationReport& r : reports) {
    nlohmann::ordered_json o;
    o["id"] = r.id;
    nlohmann::ordered_json ps;
    ps["n"] = r.params.n;
    ps["q_cap"] = r.params.q_cap;
    ps["x_cap"] = r.params.x_cap;
    ps["y_cap"] = r.params.y_cap;
    ps["seed"] = r.params.seed;
    ps["trials"] = r.params.trials;
    o["params"] = ps;
    o["status"] = r.status == VerifyStatus::pass   ? "pass"
                  : r.status == VerifyStatus::fail ? "fail"
                                                   : "skipped";
    if (r.witness) {
      nlohmann::ordered_json w;
      w["monomial"] = r.witness->monomial;
      w["lhs"] = r.witness->lhs;
      w["rhs"] = r.witness->rhs;
      o["witness"] = w;
    } else {
      o["witness"] = nullptr;
    }
    o["ms"] = r.ms;
    arr.push_back(o);
  }
  return arr.dump(2) + "\n";
}

} // namespace pflab
