#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cactus/word.hpp"

#include "json.hpp"

namespace cactus {

enum class RelatorLabel {
  square,
  disjoint,
  nested,
  rel5,
  rel6,
  commuting,
  triple,
  equalizer,
  truncation,
  parsed,
};

std::string to_string(RelatorLabel l);

enum class FamilyKind { standard_pres, minimal, thmd, truncated, custom };

struct Family {
  FamilyKind kind = FamilyKind::custom;
  int n = 0;
  FamilyKind base = FamilyKind::custom;  // for truncated
  int trunc_class = 0;                   // for truncated

  std::string str() const;
};

/// A finite presentation over an involutive generator alphabet.  Relators
/// are stored in involutive-reduced, cyclically canonical form and are
/// pairwise distinct; every presentation built here contains all generator
/// squares, which makes the canonical storage define the same group.
class Presentation {
 public:
  Presentation(Alphabet alphabet, Family family)
      : alphabet_(std::move(alphabet)), family_(family) {}

  const Alphabet& alphabet() const { return alphabet_; }
  int ngens() const { return alphabet_.count(); }
  Family family() const { return family_; }

  const std::vector<Word>& relators() const { return relators_; }
  const std::vector<RelatorLabel>& labels() const { return labels_; }

  /// Canonicalizes and inserts; duplicates and freely trivial relators are
  /// dropped.  Returns true if the relator was new.
  bool add_relator(const Word& w, RelatorLabel label);

  bool has_relator_canonical(const Word& canonical) const {
    return index_.count(canonical) > 0;
  }

  std::size_t count_label(RelatorLabel l) const;

  std::string to_gap() const;
  nlohmann::ordered_json to_json() const;

  /// Parses the to_gap format: < g2,g3 | g2^2, ... >.
  static Presentation parse_gap(const std::string& text);

 private:
  Alphabet alphabet_;
  Family family_;
  std::vector<Word> relators_;
  std::vector<RelatorLabel> labels_;
  std::map<Word, std::size_t> index_;
};

/// Presentation on generators x[p,q]: squares, commuting relators for
/// disjoint intervals, and nested-interval relators (mirror pairs collapse
/// under the canonical form).
Presentation standard_cactus(int n);

/// Presentation on g2..gn: squares, (gk gi gk gj)^2 for 4 <= i+j <= k <= n
/// with 2 <= i <= j, and gk g(i+j) gj g(i+j) = g(k-i) gj g(k-i) gk for
/// 3 <= i+j < k <= n, 1 <= i, 2 <= j, i+j <= k-i.
Presentation minimal_cactus(int n);

/// Class-2 quotient presentation on g2..gn: squares, commuting pairs for
/// min(i,j) < floor((n+1)/2) or equal parity, all weight-3 commutators,
/// and the commutator equalizers [gi,gj] = [gi,gk] for k == j (mod 2).
Presentation thmd_quotient(int n);

/// Appends all left-normed weight-(c+1) generator commutators (tuples with
/// first two entries distinct); presents the class-<=c quotient.
Presentation class_truncate(const Presentation& p, int c);

struct CountReport {
  int n = 0;
  // closed forms
  std::int64_t gens_standard = 0;
  std::int64_t rels_standard = 0;
  std::int64_t gens_minimal = 0;
  std::int64_t rels_minimal = 0;
  // enumerated
  std::int64_t gens_standard_enum = 0;
  std::int64_t rels_standard_enum = 0;
  std::int64_t gens_minimal_enum = 0;
  std::int64_t rels_minimal_enum = 0;

  bool consistent() const {
    return gens_standard == gens_standard_enum && rels_standard == rels_standard_enum &&
           gens_minimal == gens_minimal_enum && rels_minimal == rels_minimal_enum;
  }
  static std::string csv_header();
  std::string csv_row() const;
};

/// Evaluates the closed-form generator/relator counts for both
/// presentations and enumerates both for comparison.
CountReport counts_closed_form(int n);

/// Translation x[p,q] -> gq * g(q-p+1) * gq into the minimal generators
/// (letters of index 1 are the identity and are omitted; p = 1 gives the
/// single letter gq).
Word pq_to_min(int p, int q);

}  // namespace cactus
