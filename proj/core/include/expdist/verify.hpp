#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "expdist/edm.hpp"
#include "expdist/graph.hpp"
#include "expdist/rational.hpp"

namespace expdist {

enum class CheckKind {
  Det,
  Inverse,
  Cofsum,
  Qlap,
  Triangularize,
  Identities,
  TreeReduction,
};

inline constexpr CheckKind kAllChecks[] = {
    CheckKind::Det,           CheckKind::Inverse,    CheckKind::Cofsum,       CheckKind::Qlap,
    CheckKind::Triangularize, CheckKind::Identities, CheckKind::TreeReduction,
};

std::string_view check_name(CheckKind kind) noexcept;
/// Inverse of `check_name`; throws ParseError.
CheckKind parse_check_name(std::string_view name);

/// How a case's graph was produced; enough to rebuild it standalone.
struct GraphDescriptor {
  std::vector<BlockSpec> blocks;
  std::vector<Attachment> attachments;
  std::optional<std::uint64_t> seed;

  static GraphDescriptor of(const BiBlockGraph& g, std::optional<std::uint64_t> seed = {});
  BiBlockGraph build() const;
  friend bool operator==(const GraphDescriptor&, const GraphDescriptor&) = default;
};

struct CheckCase {
  GraphDescriptor graph;
  Rational q;
  std::vector<CheckKind> checks;
};

enum class CheckStatus { Pass, Fail, Skipped };

std::string_view status_name(CheckStatus s) noexcept;

/// Where a failed check first disagreed. For scalar checks row and col are absent.
struct Witness {
  std::string what;
  std::optional<std::size_t> row;
  std::optional<std::size_t> col;
  std::string expected;
  std::string actual;
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct CheckOutcome {
  CheckKind kind = CheckKind::Det;
  CheckStatus status = CheckStatus::Pass;
  std::string reason;  // skip reason, e.g. "SingularParameter"
  std::optional<Witness> witness;
  std::chrono::nanoseconds elapsed{0};
};

struct VerificationReport {
  GraphDescriptor graph;
  std::size_t vertex_count = 0;
  Rational q;
  std::vector<CheckOutcome> outcomes;  // one per requested check, in request order

  bool passed() const noexcept;
  std::size_t failures() const noexcept;
};

/// Runs every requested check. Failures and skips are recorded in the
/// report; nothing is thrown for a valid case. "inverse" and "qlap" are
/// skipped with reason SingularParameter when q = +-1 or a block factor
/// vanishes; "triangularize" and "identities" with NotEnoughBlocks on a single
/// block; "tree-reduction" with NotATree when some block is not K_{1,1}.
VerificationReport run_case(const CheckCase& c);

/// (1 - q^2) F^-1 = L, and L = diag(x) + q^2 B - q A. Throws SingularParameter
/// when q = +-1 or F is singular.
bool qlap_relation_check(const EdmBundle& bundle);

struct SweepParams {
  std::uint64_t seed = 0;
  std::size_t cases = 1;
  std::size_t r_max = 1;
  std::size_t size_max = 1;
  std::vector<Rational> q_list;
  std::vector<CheckKind> checks{std::begin(kAllChecks), std::end(kAllChecks)};
  /// Worker threads; 0 picks the hardware concurrency.
  std::size_t threads = 0;
};

struct CheckTally {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skipped = 0;
};

struct SweepReport {
  SweepParams params;
  /// Ordered by (case index, q index) regardless of completion order.
  std::vector<VerificationReport> reports;

  std::size_t failures() const noexcept;
  CheckTally tally(CheckKind kind) const;
};

/// Graph for sweep case `index`: r uniform in [1, r_max], block sizes
/// uniform in [1, size_max], all driven by a seed derived from (seed, index).
BiBlockGraph sweep_graph(std::uint64_t seed, std::size_t index, std::size_t r_max,
                         std::size_t size_max, std::uint64_t* graph_seed = nullptr);

/// Deterministic sweep. Throws BadBlockSpec when cases, r_max or size_max is zero.
SweepReport sweep(const SweepParams& params);

/// Default q test points: 1/2, 1/3, 3/7, 5/4, -2/3, 2, -1, 1.
std::vector<Rational> default_q_list();

}  // namespace expdist
