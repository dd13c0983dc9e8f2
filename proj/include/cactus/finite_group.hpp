#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cactus/perm.hpp"
#include "cactus/presentation.hpp"
#include "cactus/todd_coxeter.hpp"

namespace cactus {

/// A concrete finite group given by permutation generators.  Construction
/// from arbitrary generators enumerates the closure; construction from a
/// completed coset table (the regular action on cosets) is closed by
/// construction and stays lazy.  Small groups can expose an index-based
/// multiplication table for backtracking searches.
class FiniteGroupTable {
 public:
  /// BFS closure of the generators; validates closedness by enumeration.
  static FiniteGroupTable from_generators(std::vector<Perm> gens, std::size_t limit = 1 << 20);

  /// A group already known to act regularly on the points (order = degree).
  static FiniteGroupTable regular(std::vector<Perm> gens, std::uint64_t order);

  std::uint64_t order() const { return order_; }
  unsigned degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const std::string& name() const { return name_; }
  FiniteGroupTable& set_name(std::string n) {
    name_ = std::move(n);
    return *this;
  }

  bool enumerated() const { return !elements_.empty(); }
  void ensure_enumerated();
  const std::vector<Perm>& elements() const;
  int element_index(const Perm& p) const;  // -1 if absent

  void ensure_mult_table();
  int mult(int a, int b) const { return mult_[static_cast<std::size_t>(a) * nelems_ + b]; }
  int inv(int a) const { return inv_[a]; }

 private:
  unsigned degree_ = 0;
  std::uint64_t order_ = 0;
  std::vector<Perm> gens_;
  std::vector<Perm> elements_;
  std::vector<std::uint16_t> mult_;
  std::vector<std::uint16_t> inv_;
  std::size_t nelems_ = 0;
  std::string name_;
};

/// Z2^2 wr Z2 of order 32 on 8 points: two Klein four-groups swapped by a
/// top involution.
FiniteGroupTable wreath_group();

FiniteGroupTable cyclic_table(int m);
FiniteGroupTable klein_table();

/// D_m (order 2m) in its regular action on 2m points, from the dihedral
/// normal-form arithmetic.  m = 1 gives Z2.
FiniteGroupTable dihedral_table(int m);

FiniteGroupTable direct_product(const FiniteGroupTable& a, const FiniteGroupTable& b);

/// Generators acting on the cosets of a completed enumeration over the
/// trivial subgroup; group order equals the index.
FiniteGroupTable regular_representation(const CosetTable& t, const Presentation& p);

/// Backtracking search for generator images of p in h satisfying all
/// relators; prunes each relator as soon as its support is assigned.
struct ImageSearch {
  std::uint64_t count = 0;
  std::optional<std::vector<int>> witness;  // element indices, when requested
};
ImageSearch search_images(const Presentation& p, FiniteGroupTable& h, bool surjective_only,
                          bool first_only, std::uint64_t node_cap = 0);

}  // namespace cactus
