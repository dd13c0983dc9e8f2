#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cactus/presentation.hpp"

namespace cactus {

enum class TcStrategy { hlt, felsch };

struct EnumConfig {
  /// Cap on allocated cosets; 0 means CACTUS_MAX_COSETS from the
  /// environment, or 2^20 if unset.
  std::int64_t max_cosets = 0;
  TcStrategy strategy = TcStrategy::hlt;
  /// Dead-row fraction above which a lookahead pass compacts the table.
  double compaction_threshold = 0.10;
  /// Rows allocated between lookahead passes (HLT); 0 picks a default.
  std::int64_t lookahead_gap = 0;

  std::int64_t resolved_max_cosets() const;
};

struct TcStats {
  std::int64_t defined = 0;  // cosets ever created
  std::int64_t deleted = 0;  // cosets removed by coincidences
};

/// Result of a coset enumeration.  For complete tables the action columns
/// are total and mutually inverse, and every relator traces to the start
/// coset from every coset.  Coset 0 is the subgroup coset (printed 1-based
/// as coset 1).
class CosetTable {
 public:
  enum class Status { complete, capped };

  Status status = Status::capped;
  std::int64_t index = 0;  // live cosets
  int ngens = 0;           // dense generator count
  std::vector<std::int32_t> action;  // index * (2*ngens), fwd/inv interleaved
  TcStats stats;

  int ncols() const { return 2 * ngens; }
  std::int32_t apply(std::int32_t coset, int col) const {
    return action[static_cast<std::size_t>(coset) * ncols() + col];
  }
  static int col_fwd(int dense_gen) { return 2 * dense_gen; }
  static int col_inv(int dense_gen) { return 2 * dense_gen + 1; }

  /// Image of a coset under a word (letters translated through alpha).
  std::int32_t apply_word(std::int32_t coset, const Word& w, const Alphabet& alpha) const;

  /// Full check of the table against the presentation (and subgroup
  /// generator words at coset 0).  Completed enumerations satisfy this by
  /// construction; used as a test oracle.
  bool validate(const Presentation& p, const std::vector<Word>& subgroup_gens = {}) const;

  std::string to_csv(const Presentation& p) const;
};

struct TcCapExceeded : std::runtime_error {
  TcStats stats;
  std::int64_t live;
  TcCapExceeded(TcStats s, std::int64_t alive)
      : std::runtime_error("coset enumeration exceeded the coset cap (live " +
                           std::to_string(alive) + ", defined " + std::to_string(s.defined) +
                           ", deleted " + std::to_string(s.deleted) + ")"),
        stats(s),
        live(alive) {}
};

/// Enumerates the cosets of the subgroup generated by subgroup_gens.
/// Deterministic for a fixed strategy and input: identical inputs produce
/// bit-identical tables.  A capped run returns status == capped with
/// diagnostics; it is never silently wrong.
CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup_gens = {},
                        const EnumConfig& cfg = {});

/// Index over the trivial subgroup; throws TcCapExceeded when capped.
std::uint64_t group_order(const Presentation& p, const EnumConfig& cfg = {});

}  // namespace cactus
