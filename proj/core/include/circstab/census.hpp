#pragma once

// Exhaustive census of nontrivially unstable circulant graphs, one record per
// isomorphism class.
//
// Connection sets are enumerated as choices of negation pairs {s, n - s}. A
// set survives the cheap filters (connected, nonbipartite, twin-free) and the
// multiplier filter (it is the numerically smallest bit mask in its orbit
// {mS : m a unit}) before any automorphism group is computed. When n is
// neither square-free nor twice square-free, records are further merged by
// canonical certificate.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "circstab/conditions.hpp"

namespace circstab {

struct ConditionFlags {
  bool c1 = false;
  bool c2 = false;
  bool c3 = false;
  bool c4 = false;
  bool general_hk = false;
  bool iso_translate = false;
  bool xe_c4 = false;
  bool xe_general = false;
  bool unexplained = false;
  bool aux_loops = false;
  bool even_part_empty = false;
  bool odd_part_empty = false;

  bool wilson() const { return c1 || c2 || c3 || c4; }
  bool any() const { return wilson() || general_hk || iso_translate || xe_c4 || xe_general; }
  friend bool operator==(const ConditionFlags&, const ConditionFlags&) = default;
};

ConditionFlags flags_of(const StabilityReport& report);
std::string flags_to_csv(const ConditionFlags& flags);
/// Throws ParseError on an unknown flag name.
ConditionFlags flags_from_csv(const std::string& csv);

struct CensusRecord {
  int n = 0;
  /// Smallest bit mask over the multiplier orbit (and over isomorphic orbits
  /// when n lacks the Cayley isomorphism guarantee).
  ConnectionSet canonical_set{ResidueSet(1)};
  std::vector<std::uint8_t> certificate;
  Verdict verdict = Verdict::nontrivially_unstable;
  ConditionFlags flags;

  bool no_wilson_type() const { return !flags.wilson(); }
  friend bool operator==(const CensusRecord&, const CensusRecord&) = default;
};

/// Cache line `n;canonical_set_csv;certificate_hex;verdict;flags_csv`.
std::string record_to_cache_line(const CensusRecord& record);
/// Throws ParseError on malformed lines.
CensusRecord record_from_cache_line(const std::string& line);

/// Smallest bit mask in {mS : m a unit mod n}.
ConnectionSet canonical_multiplier_set(const ConnectionSet& s);

struct OrderSummary {
  int n = 0;
  int nontrivially_unstable = 0;
  int c1 = 0;
  int c2 = 0;
  int c3 = 0;
  int c4 = 0;
  int general_hk = 0;
  int iso_translate = 0;
  int xe = 0;  ///< xe-c4 or xe-general
  int no_wilson_type = 0;
  int unexplained = 0;
  int aux_loops = 0;
  std::vector<ConnectionSet> no_wilson_sets;
  std::vector<ConnectionSet> unexplained_sets;
};

struct CensusSummary {
  int min_n = 0;
  int max_n = 0;
  std::vector<OrderSummary> orders;
  std::vector<CensusRecord> records;  ///< sorted by (n, canonical set bit mask)

  int total() const;
  int total_between(int lo, int hi) const;
  const OrderSummary* order(int n) const;
};

/// Orders above this need CensusOptions::extended.
inline constexpr int kStandardCensusMax = 38;

struct CensusOptions {
  unsigned workers = 1;
  bool extended = false;
  /// One file per order; resumable. Empty disables caching.
  std::filesystem::path cache_dir;
  /// Called after every finished chunk with (n, chunks done, chunk count).
  std::function<void(int, std::size_t, std::size_t)> progress;
};

/// Nontrivially unstable classes of order n, sorted by canonical set.
std::vector<CensusRecord> enumerate_order(int n, const CensusOptions& options = {});

/// Deterministic in (min_n, max_n): worker count and cache state do not change
/// the result. Throws DomainError for orders above kStandardCensusMax unless
/// options.extended is set, and Error on cache I/O failures.
CensusSummary run_census(int min_n, int max_n, const CensusOptions& options = {});

std::string summary_to_csv(const CensusSummary& summary);
std::string summary_to_json(const CensusSummary& summary);

/// The six order-24 sets without a Wilson type listed in the literature.
std::vector<ConnectionSet> known_order24_exceptions();

struct ComparisonRow {
  std::string item;
  std::string ours;
  std::optional<std::string> reference;  ///< empty: no reference value
  bool matches = true;
  bool reference_only = false;  ///< extended orders: reported, not required
  std::string note;
};

struct PaperComparison {
  std::vector<ComparisonRow> rows;

  /// Every required row with a reference value matches.
  bool required_match() const;
  std::string to_text() const;
};

PaperComparison compare_to_paper(const CensusSummary& summary);

}  // namespace circstab
