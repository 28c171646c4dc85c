#pragma once

// Closed-form bounds on Delta(j, k), the proven exact values, and fixed-point
// propagation of the two dimension reductions
//   Delta(j, k) <= Delta(2j, k-1)      (halving)
//   Delta(j, k) <= Delta(j+1, k) - 1   (Matschke)
// over a finite grid.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace equipart {

enum class RuleKind { RamosLower, ManiUpper, IndexCertificate, ReductionHalve, ReductionMatschke, SeededExact };

struct Provenance {
  RuleKind kind;
  std::string name;  ///< only for SeededExact

  std::string to_string() const;
  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct BoundsRecord {
  int j = 0;
  int k = 0;
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  std::optional<std::int64_t> exact;
  std::vector<Provenance> provenance;

  friend bool operator==(const BoundsRecord&, const BoundsRecord&) = default;
};

struct SeededValue {
  int j;
  int k;
  std::int64_t value;
  std::string name;
};

/// Published upper bounds whose proofs are incomplete. Never merged.
struct DisputedClaim {
  int j;
  int k;
  std::int64_t claimed_upper;
  std::string source;
};

/// max(k, ceil((2^k - 1) j / k)).
std::int64_t ramos_lower(std::int64_t j, int k);
/// 2^{t+k-1} + r for j = 2^t + r, 0 <= r < 2^t.
std::int64_t mani_upper(std::int64_t j, int k);
/// ceil((2^k - 1) j / k), the conjectured exact value.
std::int64_t conjectured_value(std::int64_t j, int k);

/// Proven exact values with j <= jmax (k <= 2 only carries entries).
std::vector<SeededValue> seeded_exact_values(int jmax);
std::vector<DisputedClaim> disputed_claims(int jmax, int kmax);

class InconsistentBoundsError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class BoundsTable {
 public:
  struct Options {
    /// Merge algebra-f2 index certificates as upper bounds.
    bool merge_index_certificates = false;
  };

  /// Formula bounds plus seeds, not yet propagated.
  static BoundsTable initial(int jmax, int kmax, Options options);
  static BoundsTable initial(int jmax, int kmax) { return initial(jmax, kmax, Options{}); }

  /// Formula bounds, seeds, propagation.
  static BoundsTable build(int jmax, int kmax, Options options);
  static BoundsTable build(int jmax, int kmax) { return build(jmax, kmax, Options{}); }

  int jmax() const { return jmax_; }
  int kmax() const { return kmax_; }
  bool empty() const { return cells_.empty(); }
  const BoundsRecord& at(int j, int k) const;
  BoundsRecord& at(int j, int k);
  const std::vector<BoundsRecord>& cells() const { return cells_; }

  friend bool operator==(const BoundsTable&, const BoundsTable&) = default;

 private:
  BoundsTable(int jmax, int kmax);
  int jmax_ = 0;
  int kmax_ = 0;
  std::vector<BoundsRecord> cells_;  ///< row-major in j, then k
};

/// Applies both reductions to a fixed point, marks exact cells and checks
/// lower <= upper everywhere (InconsistentBoundsError naming the cell).
BoundsTable propagate(BoundsTable table);

/// Record for a single cell, evaluated on a grid large enough to hold every
/// halving chain starting there.
BoundsRecord bounds_for(int j, int k, BoundsTable::Options options = {});

enum class TableFormat { Markdown, Csv, Json };

struct RenderOptions {
  bool conjecture = false;  ///< append the conjectured values, labeled
};

std::string render_table(const BoundsTable& table, TableFormat format, RenderOptions options = {});

}  // namespace equipart
