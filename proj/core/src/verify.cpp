#include "expdist/verify.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "expdist/closed_forms.hpp"
#include "expdist/edm.hpp"
#include "expdist/error.hpp"
#include "expdist/oracle.hpp"

namespace expdist {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

Witness scalar_witness(std::string what, const Rational& expected, const Rational& actual) {
  return Witness{std::move(what), std::nullopt, std::nullopt, expected.to_string(), actual.to_string()};
}

std::optional<Witness> compare(std::string what, const RationalMatrix& expected,
                               const RationalMatrix& actual) {
  const auto mismatch = first_mismatch(expected, actual);
  if (!mismatch) return std::nullopt;
  if (mismatch->shape_mismatch) {
    return Witness{std::move(what) + " (shape)", std::nullopt, std::nullopt,
                   std::to_string(expected.rows()) + "x" + std::to_string(expected.cols()),
                   std::to_string(actual.rows()) + "x" + std::to_string(actual.cols())};
  }
  return Witness{std::move(what), mismatch->row, mismatch->col, mismatch->expected.to_string(),
                 mismatch->actual.to_string()};
}

/// Lazily computed per-case quantities shared between checks.
class CaseContext {
 public:
  CaseContext(const BiBlockGraph& g, const Rational& q)
      : g_(g), q_(q), profile_(singularity_profile(g, q)) {}

  const BiBlockGraph& graph() const { return g_; }
  const Rational& q() const { return q_; }
  const SingularityProfile& profile() const { return profile_; }

  const RationalMatrix& F() {
    if (!F_) F_ = exponential_matrix(g_, q_);
    return *F_;
  }
  const Rational& det() {
    if (!det_) det_ = oracle_det(F());
    return *det_;
  }
  /// Only valid when det() != 0.
  const RationalMatrix& inverse() {
    if (!inverse_) inverse_ = oracle_inverse(F());
    return *inverse_;
  }
  const EdmBundle& bundle() {
    if (!bundle_) bundle_ = build_bundle(g_, q_);
    return *bundle_;
  }

 private:
  const BiBlockGraph& g_;
  Rational q_;
  SingularityProfile profile_;
  std::optional<RationalMatrix> F_;
  std::optional<Rational> det_;
  std::optional<RationalMatrix> inverse_;
  std::optional<EdmBundle> bundle_;
};

struct Verdict {
  CheckStatus status = CheckStatus::Pass;
  std::string reason;
  std::optional<Witness> witness;

  static Verdict pass() { return {}; }
  static Verdict skip(std::string why) { return {CheckStatus::Skipped, std::move(why), {}}; }
  static Verdict fail(Witness w) { return {CheckStatus::Fail, {}, std::move(w)}; }
  static Verdict from(std::optional<Witness> w) { return w ? fail(std::move(*w)) : pass(); }
};

Verdict check_det(CaseContext& ctx) {
  const Rational formula = det_bi_block(ctx.graph(), ctx.q());
  if (formula != ctx.det()) return Verdict::fail(scalar_witness("det: oracle vs closed form", ctx.det(), formula));
  return Verdict::pass();
}

Verdict check_inverse(CaseContext& ctx) {
  if (!ctx.profile().clean()) return Verdict::skip("SingularParameter");
  const RationalMatrix formula = inverse_bi_block(ctx.bundle());
  const std::size_t n = ctx.graph().vertex_count();
  if (auto w = compare("inverse: F * formula vs I", RationalMatrix::identity(n), ctx.F() * formula)) {
    return Verdict::fail(std::move(*w));
  }
  return Verdict::from(compare("inverse: oracle vs formula", ctx.inverse(), formula));
}

Verdict check_cofsum(CaseContext& ctx) {
  const Rational oracle = ctx.det().is_zero() ? adjugate_sum_by_row_expansion(ctx.F())
                                              : ctx.det() * ctx.inverse().sum();
  const Rational cancelled = cofsum_bi_block(ctx.graph(), ctx.q(), CofactorForm::Cancelled);
  if (cancelled != oracle) {
    return Verdict::fail(scalar_witness("cofsum: oracle vs cancelled form", oracle, cancelled));
  }
  if (ctx.profile().clean()) {
    const Rational stated = cofsum_bi_block(ctx.graph(), ctx.q(), CofactorForm::Stated);
    if (stated != oracle) return Verdict::fail(scalar_witness("cofsum: oracle vs stated form", oracle, stated));
  }
  return Verdict::pass();
}

Verdict check_qlap(CaseContext& ctx) {
  if (!ctx.profile().clean()) return Verdict::skip("SingularParameter");
  const EdmBundle& b = ctx.bundle();
  const Rational q2 = ctx.q() * ctx.q();
  const RationalMatrix scaled_inverse = (Rational(1) - q2) * ctx.inverse();
  if (auto w = compare("qlap: (1-q^2) F^-1 vs L", scaled_inverse, b.qlap)) return Verdict::fail(std::move(*w));
  const RationalMatrix composed = RationalMatrix::diagonal(b.x) + q2 * b.B - ctx.q() * b.A;
  if (auto w = compare("qlap: diag(x) + q^2 B - q A vs L", composed, b.qlap)) return Verdict::fail(std::move(*w));
  RationalVector shifted_mu;
  for (const Rational& m : b.mu) shifted_mu.push_back(Rational(1) + q2 * m);
  return Verdict::from(compare("qlap: I + q^2 diag(mu) vs diag(x)", RationalMatrix::diagonal(shifted_mu),
                               RationalMatrix::diagonal(b.x)));
}

Verdict check_triangularize(CaseContext& ctx) {
  if (ctx.graph().block_count() < 2) return Verdict::skip("NotEnoughBlocks");
  const LeafBlockDecomposition dec = leaf_block_triangularize(ctx.graph(), ctx.q());
  if (!dec.block_form_matches) {
    return Verdict::fail({"triangularize: F does not match its leaf-block partition", {}, {}, "true", "false"});
  }
  if (!dec.lower_blocks_zero) {
    return Verdict::fail({"triangularize: nonzero block below the diagonal of LF", {}, {}, "true", "false"});
  }
  if (!dec.diagonal_blocks_match) {
    if (auto w = compare("triangularize: middle diagonal block", dec.middle_form.materialize(), dec.diag_blocks[1])) {
      return Verdict::fail(std::move(*w));
    }
    if (auto w = compare("triangularize: last diagonal block", dec.last_form.materialize(), dec.diag_blocks[2])) {
      return Verdict::fail(std::move(*w));
    }
    return Verdict::fail({"triangularize: leading diagonal block differs from F(H)", {}, {}, "true", "false"});
  }
  for (std::size_t k = 1; k < 3; ++k) {
    const AIBJForm& form = k == 1 ? dec.middle_form : dec.last_form;
    const Rational via_form = aibj_det(form);
    const Rational via_oracle = oracle_det(dec.diag_blocks[k]);
    if (via_form != via_oracle) {
      return Verdict::fail(scalar_witness("triangularize: aI+bJ determinant of diagonal block " + std::to_string(k),
                                          via_oracle, via_form));
    }
  }
  const Rational product = oracle_det(dec.diag_blocks[0]) * aibj_det(dec.middle_form) * aibj_det(dec.last_form);
  if (product != ctx.det()) {
    return Verdict::fail(scalar_witness("triangularize: det F vs product of diagonal blocks", ctx.det(), product));
  }
  return Verdict::pass();
}

Verdict check_identities(CaseContext& ctx) {
  if (ctx.graph().block_count() < 2) return Verdict::skip("NotEnoughBlocks");
  const LeafIdentities ids = leaf_identities(ctx.graph(), ctx.q());
  static constexpr char kGroup[] = "abcde";
  for (std::size_t g = 0; g < ids.groups.size(); ++g) {
    for (std::size_t k = 0; k < 2; ++k) {
      if (!ids.groups[g][k]) {
        return Verdict::fail({std::string("identities: group (") + kGroup[g] + ") part " + std::to_string(k + 1),
                              {}, {}, "true", "false"});
      }
    }
  }
  return Verdict::pass();
}

Verdict check_tree_reduction(CaseContext& ctx) {
  const BiBlockGraph& g = ctx.graph();
  if (!g.is_tree()) return Verdict::skip("NotATree");
  const Rational& q = ctx.q();
  const std::size_t n = g.vertex_count();
  const Rational expected_det = (Rational(1) - q * q).pow(static_cast<unsigned>(n - 1));
  if (ctx.det() != expected_det) {
    return Verdict::fail(scalar_witness("tree: det F vs (1-q^2)^(n-1)", expected_det, ctx.det()));
  }
  const EdmBundle& b = ctx.bundle();
  RationalMatrix adjacency(n, n);
  RationalMatrix laplacian(n, n);
  RationalVector excess(n);  // degree - 1
  for (VertexId v = 0; v < n; ++v) {
    laplacian(v, v) = static_cast<std::int64_t>(g.degree(v));
    excess[v] = static_cast<std::int64_t>(g.degree(v)) - 1;
    for (VertexId w : g.neighbors(v)) {
      adjacency(v, w) = 1;
      laplacian(v, w) = -1;
    }
  }
  if (auto w = compare("tree: A vs adjacency", adjacency, b.A)) return Verdict::fail(std::move(*w));
  if (auto w = compare("tree: B vs 0", RationalMatrix(n, n), b.B)) return Verdict::fail(std::move(*w));
  if (auto w = compare("tree: mu vs deg - 1", RationalMatrix::diagonal(excess), RationalMatrix::diagonal(b.mu))) {
    return Verdict::fail(std::move(*w));
  }
  const RationalMatrix expected_qlap = q * laplacian - (q - Rational(1)) * RationalMatrix::identity(n) +
                                       (q * (q - Rational(1))) * RationalMatrix::diagonal(excess);
  return Verdict::from(compare("tree: L vs qL - (q-1)I + q(q-1)diag(d-1)", expected_qlap, b.qlap));
}

Verdict dispatch(CheckKind kind, CaseContext& ctx) {
  switch (kind) {
    case CheckKind::Det: return check_det(ctx);
    case CheckKind::Inverse: return check_inverse(ctx);
    case CheckKind::Cofsum: return check_cofsum(ctx);
    case CheckKind::Qlap: return check_qlap(ctx);
    case CheckKind::Triangularize: return check_triangularize(ctx);
    case CheckKind::Identities: return check_identities(ctx);
    case CheckKind::TreeReduction: return check_tree_reduction(ctx);
  }
  return Verdict::skip("UnknownCheck");
}

}  // namespace

std::string_view check_name(CheckKind kind) noexcept {
  switch (kind) {
    case CheckKind::Det: return "det";
    case CheckKind::Inverse: return "inverse";
    case CheckKind::Cofsum: return "cofsum";
    case CheckKind::Qlap: return "qlap";
    case CheckKind::Triangularize: return "triangularize";
    case CheckKind::Identities: return "identities";
    case CheckKind::TreeReduction: return "tree-reduction";
  }
  return "unknown";
}

CheckKind parse_check_name(std::string_view name) {
  for (CheckKind k : kAllChecks)
    if (check_name(k) == name) return k;
  throw Error(ErrorKind::ParseError, "unknown check '" + std::string(name) + "'");
}

std::string_view status_name(CheckStatus s) noexcept {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "unknown";
}

GraphDescriptor GraphDescriptor::of(const BiBlockGraph& g, std::optional<std::uint64_t> seed) {
  return {g.blocks(), g.attachments(), seed};
}

BiBlockGraph GraphDescriptor::build() const { return build_graph(blocks, attachments); }

bool VerificationReport::passed() const noexcept { return failures() == 0; }

std::size_t VerificationReport::failures() const noexcept {
  return static_cast<std::size_t>(std::count_if(outcomes.begin(), outcomes.end(), [](const CheckOutcome& o) {
    return o.status == CheckStatus::Fail;
  }));
}

VerificationReport run_case(const CheckCase& c) {
  const BiBlockGraph g = c.graph.build();
  VerificationReport report;
  report.graph = c.graph;
  report.vertex_count = g.vertex_count();
  report.q = c.q;
  CaseContext ctx(g, c.q);
  for (CheckKind kind : c.checks) {
    CheckOutcome outcome;
    outcome.kind = kind;
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    if (c.q.is_zero()) {
      v = Verdict::skip("ZeroQ");
    } else {
      try {
        v = dispatch(kind, ctx);
      } catch (const Error& e) {
        v = Verdict::fail({std::string(check_name(kind)) + ": unexpected error", {}, {}, "no error", e.what()});
      }
    }
    outcome.elapsed = std::chrono::steady_clock::now() - start;
    outcome.status = v.status;
    outcome.reason = std::move(v.reason);
    outcome.witness = std::move(v.witness);
    report.outcomes.push_back(std::move(outcome));
  }
  return report;
}

bool qlap_relation_check(const EdmBundle& bundle) {
  const Rational& q = bundle.q;
  if (q == Rational(1) || q == Rational(-1)) {
    throw Error(ErrorKind::SingularParameter, "q-Laplacian relation needs q != +-1");
  }
  RationalMatrix inverse;
  try {
    inverse = oracle_inverse(bundle.F);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::SingularMatrix) throw;
    throw Error(ErrorKind::SingularParameter, "F is singular");
  }
  const Rational q2 = q * q;
  const RationalMatrix composed = RationalMatrix::diagonal(bundle.x) + q2 * bundle.B - q * bundle.A;
  return (Rational(1) - q2) * inverse == bundle.qlap && composed == bundle.qlap;
}

std::size_t SweepReport::failures() const noexcept {
  std::size_t total = 0;
  for (const auto& r : reports) total += r.failures();
  return total;
}

CheckTally SweepReport::tally(CheckKind kind) const {
  CheckTally t;
  for (const auto& r : reports) {
    for (const auto& o : r.outcomes) {
      if (o.kind != kind) continue;
      switch (o.status) {
        case CheckStatus::Pass: ++t.pass; break;
        case CheckStatus::Fail: ++t.fail; break;
        case CheckStatus::Skipped: ++t.skipped; break;
      }
    }
  }
  return t;
}

BiBlockGraph sweep_graph(std::uint64_t seed, std::size_t index, std::size_t r_max, std::size_t size_max,
                         std::uint64_t* graph_seed) {
  if (r_max == 0 || size_max == 0) throw Error(ErrorKind::BadBlockSpec, "r_max and size_max must be positive");
  const std::uint64_t derived = splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(index)));
  if (graph_seed) *graph_seed = derived;
  const std::size_t r = 1 + static_cast<std::size_t>(splitmix64(derived) % r_max);
  return random_bi_block(derived, r, size_max, size_max);
}

SweepReport sweep(const SweepParams& params) {
  if (params.cases == 0) throw Error(ErrorKind::BadBlockSpec, "sweep needs at least one case");
  SweepReport out;
  out.params = params;

  std::vector<GraphDescriptor> graphs;
  graphs.reserve(params.cases);
  for (std::size_t i = 0; i < params.cases; ++i) {
    std::uint64_t graph_seed = 0;
    const BiBlockGraph g = sweep_graph(params.seed, i, params.r_max, params.size_max, &graph_seed);
    graphs.push_back(GraphDescriptor::of(g, graph_seed));
  }

  const std::size_t per_case = params.q_list.size();
  const std::size_t total = params.cases * per_case;
  out.reports.resize(total);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < total; k = next++) {
      out.reports[k] = run_case(CheckCase{graphs[k / per_case], params.q_list[k % per_case], params.checks});
    }
  };

  std::size_t threads = params.threads == 0 ? std::thread::hardware_concurrency() : params.threads;
  threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(total, 1));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  return out;
}

std::vector<Rational> default_q_list() {
  return {Rational(1, 2), Rational(1, 3), Rational(3, 7), Rational(5, 4),
          Rational(-2, 3), Rational(2),   Rational(-1),   Rational(1)};
}

}  // namespace expdist
