#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cactus/todd_coxeter.hpp"

#include "json.hpp"

namespace cactus {

struct VerifyConfig {
  EnumConfig tc;
  int threads = 1;
  bool stretch = false;  // also run the cap-governed deep table cells
};

/// One named claim with its source identifier and the computed value; a
/// manifest never records a verdict without both.
struct Verdict {
  std::string claim;
  std::string source;
  nlohmann::ordered_json computed;
  nlohmann::ordered_json expected;
  bool pass = false;
  bool skipped = false;   // resource cap hit
  bool required = true;   // stretch cells are non-gating
  std::string note;

  nlohmann::ordered_json to_json() const;
};

struct RunManifest {
  std::string command;
  nlohmann::ordered_json parameters;
  nlohmann::ordered_json config;
  nlohmann::ordered_json results;
  std::vector<Verdict> verdicts;
  double wall_ms = 0;

  void add(Verdict v) { verdicts.push_back(std::move(v)); }
  bool all_required_pass() const;
  /// 0 all pass, 1 required claim failed, 2 required claim hit a resource cap.
  int exit_code() const;
  nlohmann::ordered_json to_json() const;
  std::string summary() const;
};

/// Layer ranks of the lower central series reported by an external
/// nilpotent-quotient computation, rows n = 4, 5, 6, columns i = 1..10.
/// The n = 6, i = 3 entry disagrees with the closed-form layer-rank
/// expressions; cmd_table adjudicates that cell from the computed value.
extern const int kReferenceRanks[3][10];

/// Closed-form layer ranks: i=1 -> n-1, i=2 -> floor(n/2),
/// i=3 -> 2*floor(n/2)-1; -1 where no formula applies.
int rank_formula(int n, int i);

/// Computes the layer-rank table for the requested orders and classes:
/// per cell, the class-i quotient is enumerated and its lower central
/// series measured (order-ratio fallback above the in-memory group
/// limit); every cell is compared against the reference table and the
/// closed-form expressions, and discrepancies between those two sources
/// are adjudicated, not failed.  Cells i >= 6 are out of scope.
RunManifest cmd_table(const std::vector<int>& ns, int max_class, const VerifyConfig& cfg = {});

/// Runs the whole claim suite: counts, homomorphisms, quotient orders,
/// isomorphism types, layer ranks, abelianizations, and the rank table.
RunManifest cmd_verify_all(int n_max, const VerifyConfig& cfg = {});

}  // namespace cactus
