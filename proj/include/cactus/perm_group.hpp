#pragma once

#include <cstdint>
#include <vector>

#include "cactus/finite_group.hpp"
#include "cactus/perm.hpp"

namespace cactus {

/// Finite permutation group backed by a base and strong generating set.
/// Construction is the deterministic Schreier-Sims procedure: base points
/// are smallest moved points, orbits are BFS in generator order, and every
/// Schreier generator is verified, so order() and contains() are exact.
/// Transversals are cached as explicit permutations when the degree is
/// small enough, and recomputed from Schreier-vector paths otherwise.
class PermGroup {
 public:
  explicit PermGroup(unsigned degree) : degree_(degree) {}
  PermGroup(unsigned degree, const std::vector<Perm>& gens) : degree_(degree) {
    for (const Perm& g : gens) insert(g);
  }

  unsigned degree() const { return degree_; }

  /// Extends the group by g (no-op if already a member).
  void insert(const Perm& g);

  bool contains(const Perm& g) const;
  std::uint64_t order() const;

  /// The inserted generators that extended the group; they generate it.
  const std::vector<Perm>& generators() const { return gens_; }

  std::size_t base_length() const { return levels_.size(); }

 private:
  struct Level {
    std::uint32_t base = 0;
    std::vector<Perm> gens;
    std::vector<Perm> gen_invs;
    std::vector<std::uint32_t> orbit;      // BFS order; orbit[0] == base
    std::vector<std::int32_t> pos;         // point -> orbit index or -1
    std::vector<std::int32_t> parent;      // orbit index -> orbit index (-1 at root)
    std::vector<std::int32_t> via;         // orbit index -> generator index
    bool cached = false;
    std::vector<std::vector<std::uint16_t>> tcache;  // orbit index -> transversal perm
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pending;  // Schreier pairs
    std::size_t cursor = 0;
  };

  Perm transversal(const Level& l, std::size_t idx) const;
  Perm strip_level(const Level& l, Perm g) const;  // g -> g * u(g(base))^-1
  std::pair<Perm, std::size_t> strip_from(Perm g, std::size_t from) const;

  void make_level(const Perm& witness);
  void add_gen(std::size_t lvl, const Perm& g);
  void add_strong(std::size_t stuck, const Perm& h);
  void try_extend(std::size_t lvl, std::size_t idx, std::size_t gi);
  void process_pending();

  unsigned degree_;
  std::vector<Perm> gens_;
  std::vector<Level> levels_;
};

/// Smallest normal subgroup of the ambient group containing the seeds.
/// The result's generators() are the seeds plus the conjugates that
/// extended it.
PermGroup normal_closure(const PermGroup& ambient, const std::vector<Perm>& seeds);

struct LcsReport {
  std::vector<std::uint64_t> orders;  // |G1| > |G2| > ... (last is 1 iff nilpotent)
  std::vector<int> ranks;             // per layer: r if |Gk|/|Gk+1| = 2^r, else -1
  std::vector<bool> elementary;       // layer generated by involutions mod next term
  bool reaches_trivial = false;
};

/// Iterated normal closures G(k+1) = <[h, g]>^G over generator pairs, down
/// to the trivial group or stabilization.
LcsReport lower_central_series(const PermGroup& g);

/// Rank r with |G_k|/|G_(k+1)| = 2^r; throws if the layer is not
/// elementary abelian of exponent 2.
int layer_rank(const LcsReport& rep, int k);
int layer_rank(const PermGroup& g, int k);

struct IsoResult {
  bool isomorphic = false;
  std::vector<Perm> witness;  // one target element per generator, when found
};

/// Backtracking test whether the group presented by p is isomorphic to h:
/// the coset index over the trivial subgroup must match |h|, and a
/// generator-image assignment must satisfy all relators and generate h.
/// Returns a checkable witness on success.  Requires |h| <= 256.
IsoResult isomorphic(const Presentation& p, FiniteGroupTable& h, const EnumConfig& cfg = {});

}  // namespace cactus
