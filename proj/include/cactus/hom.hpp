#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "cactus/dihedral.hpp"
#include "cactus/finite_group.hpp"
#include "cactus/perm.hpp"
#include "cactus/presentation.hpp"

#include "json.hpp"

namespace cactus {

enum class TargetKind {
  symmetric,          // S_n via Perm
  dihedral,           // finite D_m via DihedralElem
  infinite_dihedral,  // Z2 * Z2 via DihedralElem normal form
  freeprod_central,   // (Z2 * Z2) x Z2 via FreeProdElem
  finite_table,       // FiniteGroupTable via Perm
};

/// A homomorphism from a presented group, given by one target element per
/// generator.  Evaluation of relators is exact; all targets have decidable
/// equality.
struct GroupHom {
  std::string name;
  int n = 0;  // the defining parameter, for reports
  Presentation source;
  TargetKind kind = TargetKind::symmetric;
  std::int64_t dihedral_m = 0;
  std::vector<Perm> perm_images;
  std::vector<DihedralElem> dih_images;
  std::vector<FreeProdElem> fp_images;
  std::shared_ptr<FiniteGroupTable> table;
  bool checked = false;

  GroupHom(std::string nm, int par, Presentation src)
      : name(std::move(nm)), n(par), source(std::move(src)) {}
};

struct CheckFailure {
  std::string relator;
  std::string image;
};

struct CheckReport {
  std::string map;
  int n = 0;
  bool passed = false;
  std::vector<CheckFailure> failures;

  nlohmann::ordered_json to_json() const;
};

/// pi: J_n -> S_n on the minimal presentation (g_i -> s_{1,i}).
GroupHom pi_minimal(int n);
/// pi on the standard presentation (x[p,q] -> s_{p,q}).
GroupHom pi_standard(int n);

/// phi: J_n -> D_4; generators below floor((n+1)/2) die, the rest map to a
/// or b by parity.
GroupHom phi_d4(int n);

/// psi: J_m -> D_8 with an explicit pivot (default floor((m+1)/2)); the
/// checker is the authority on which m admit it.
GroupHom psi_d8(int m, int pivot = -1);

/// phi: J_n -> Z2 * Z2, g_i -> a(ab)^(n-i) above the pivot.
GroupHom phi_inf(int n);

/// theta: J_4 -> (Z2 * Z2) x Z2 with a central.
GroupHom theta();
/// theta after the collapse J_n -> J_4 (g_i dies for i <= n-3).
GroupHom theta_lambda(int n);

/// Evaluates every relator image; sets h.checked on success.
CheckReport hom_check(GroupHom& h);

/// Syntactic check that shifting generators down by one (erasing the
/// bottom letter) maps every relator of the order-n presentation to the
/// empty word or to a relator of the order-(n-1) presentation.
CheckReport qn_consequence_check(int n);

/// Requires a passed hom_check.  Finite targets compare the closure of the
/// images with the target order; the infinite dihedral target uses the
/// reflection-offset gcd rule.
bool surjectivity_check(const GroupHom& h);

/// phi_inf composed with the reduction Z2 * Z2 -> D_m (shift mod m);
/// checked and surjective by construction.
GroupHom dihedral_factorization(int n, int m);

/// Number of generator-image assignments into the target that satisfy all
/// relators (optionally only the surjective ones).
std::uint64_t hom_count(const Presentation& p, FiniteGroupTable& target, bool surjective_only,
                        std::uint64_t node_cap = 0);

}  // namespace cactus
