#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "autorb/catalog.hpp"

namespace autorb {

enum class ClaimKind {
  OmegaEquals,
  OmegaAtMost,
  Predicate,
  ProductLaw,
  OrbitInvariance,
  OracleEquivalence,
};

enum class Provenance { PaperStated, DerivedOracle, FiniteAnalog };

enum class ClaimStatus { Pass, Fail, SkippedCapacity, NotApplicable };

const char* to_string(ClaimKind kind);
const char* to_string(Provenance provenance);
const char* to_string(ClaimStatus status);

/// One named, provenance-tagged claim. `subject` is a canonical group spec
/// ("A | B" for product-law claims) or empty for roster-wide predicates.
struct ClaimRecord {
  std::string id;
  std::string citation;
  ClaimKind kind = ClaimKind::Predicate;
  Provenance provenance = Provenance::DerivedOracle;
  std::string subject;
  std::string expected;
  long long expected_value = 0;
  bool stretch = false;
  bool testable = true;  // false: documented here, not checkable at finite scale
  std::string note;
};

struct ClaimResult {
  ClaimRecord claim;
  std::string observed;
  ClaimStatus status = ClaimStatus::Fail;
  long long elapsed_ms = 0;
};

struct HarnessConfig {
  std::size_t max_order = ElementTable::kDefaultCap;
  unsigned long long node_budget = 100'000'000ull;
  unsigned workers = 1;
  bool stretch = false;
};

struct VerificationReport {
  std::vector<ClaimResult> results;
  std::vector<std::string> notes;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  std::size_t not_applicable = 0;

  bool all_passed() const { return failed == 0; }
};

/// The fixed claim suite, in deterministic order. Stretch-flagged claims are
/// included in the table; run_all filters them by config.
const std::vector<ClaimRecord>& builtin_claims();

/// Named groups the roster predicates range over; canonical spec strings.
const std::vector<std::string>& catalog_roster();
const std::vector<std::string>& catalog_roster_stretch();

/// Checks the product law on one factor pair: equality when both factor
/// images are characteristic in the product, the <= bound otherwise.
ClaimResult product_law_check(const GroupSpec& a, const GroupSpec& b,
                              const HarnessConfig& config);

VerificationReport run_all(const HarnessConfig& config);

std::string report_table(const VerificationReport& report);

/// Machine report. elapsed_ms is pinned to 0 here so that consecutive runs
/// with the same config are byte-identical; the human table carries timings.
nlohmann::ordered_json report_json(const VerificationReport& report,
                                   const HarnessConfig& config);

/// FNV-1a over (id, citation, expected) of every paper-stated claim; guards
/// against editing a stated claim without touching its citation.
std::uint64_t stated_claims_fingerprint();

}  // namespace autorb
