// Differential campaigns: closed forms against the oracle over parameter
// grids, plus reproduction of the known misprinted formulas.

#ifndef TRIGSUM_VERIFY_HPP_
#define TRIGSUM_VERIFY_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trigsum/closed_forms.hpp"
#include "trigsum/exact.hpp"

namespace trigsum::verify {

struct CaseRecord {
  std::string family;
  std::string kind;  // empty when the family has no cos/sin split
  std::map<std::string, std::uint32_t> params;
  std::string closed_form;  // "p/q"
  std::string oracle;       // "p/q", or "error: ..." if the oracle threw
  bool match = false;
  std::int64_t micros_closed = 0;
  std::int64_t micros_oracle = 0;

  /// "family(kind, m=.., n=..)"
  std::string label() const;
};

struct ErratumRecord {
  std::string name;
  std::string detail;  // what was compared, human readable
  bool reproduced = false;
};

struct VerificationReport {
  std::vector<CaseRecord> cases;
  std::vector<ErratumRecord> errata;

  std::size_t total() const { return cases.size(); }
  std::size_t mismatches() const;
  bool errata_reproduced() const;
};

struct CampaignOptions {
  std::vector<std::string> families;  // empty = every grid family
  std::uint32_t m_min = 0;
  std::uint32_t m_max = 10;
  std::uint32_t n_min = 1;
  std::uint32_t n_max = 10;
  std::uint32_t k_max = 12;
  unsigned jobs = 1;
  bool expect_known_errata = false;
};

/// Families accepted by run_campaign's grid.
const std::vector<std::string>& grid_families();
/// Names of the reproducible errata checks.
const std::vector<std::string>& errata_names();

/// Throws DomainError on an unknown family name. Cases come back ordered by
/// (family, kind, m, n, q, k) whatever the job count.
VerificationReport run_campaign(const CampaignOptions& options);

/// Runs the named errata checks (all of them if `names` is empty).
std::vector<ErratumRecord> run_errata(const std::vector<std::string>& names);

struct BenchOptions {
  std::string family = "C";
  std::uint32_t m = 0;
  std::uint32_t n = 1;
  std::uint32_t q = 1;
  std::uint32_t k = 2;
  TrigKind kind = TrigKind::Cos;
  bool with_oracle = false;
  unsigned repeat = 1;
};

struct BenchResult {
  std::string label;
  std::string closed_form;
  std::int64_t micros_closed = 0;  // best of `repeat`
  std::optional<std::string> oracle;
  std::optional<std::int64_t> micros_oracle;

  bool values_equal() const { return !oracle || *oracle == closed_form; }
};

/// Throws DomainError for bad parameters or families without a bench path.
BenchResult run_bench(const BenchOptions& options);

/// Wall time of `fn` in microseconds.
std::int64_t time_micros(const std::function<void()>& fn);

}  // namespace trigsum::verify

#endif  // TRIGSUM_VERIFY_HPP_
