#include "cactus/hom.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

#include "cactus/perm_group.hpp"

namespace cactus {

nlohmann::ordered_json CheckReport::to_json() const {
  nlohmann::ordered_json j;
  j["map"] = map;
  j["n"] = n;
  j["passed"] = passed;
  nlohmann::ordered_json fs = nlohmann::ordered_json::array();
  for (const CheckFailure& f : failures) fs.push_back({{"relator", f.relator}, {"image", f.image}});
  j["failures"] = fs;
  return j;
}

namespace {

int pivot_of(int n) { return (n + 1) / 2; }

template <typename Elem, typename Mul>
Elem eval_word(const Word& w, const std::vector<Elem>& images, const Alphabet& alpha, Elem acc,
               Mul mul) {
  for (const Letter& l : w) {
    const Elem& x = images[alpha.col(l.gen)];
    acc = mul(acc, l.sign < 0 ? x.inverse() : x);
  }
  return acc;
}

struct Evaluated {
  bool is_identity;
  std::string printed;
};

Evaluated eval_relator(const GroupHom& h, const Word& r) {
  const Alphabet& alpha = h.source.alphabet();
  switch (h.kind) {
    case TargetKind::symmetric:
    case TargetKind::finite_table: {
      Perm acc = eval_word(r, h.perm_images, alpha, Perm(h.perm_images[0].degree()),
                           [](const Perm& a, const Perm& b) { return a * b; });
      return {acc.is_identity(), acc.to_cycles()};
    }
    case TargetKind::dihedral:
    case TargetKind::infinite_dihedral: {
      DihedralElem acc = eval_word(r, h.dih_images, alpha, DihedralElem::identity(h.dihedral_m),
                                   [](const DihedralElem& a, const DihedralElem& b) { return a * b; });
      return {acc.is_identity(), acc.str()};
    }
    case TargetKind::freeprod_central: {
      FreeProdElem acc = eval_word(r, h.fp_images, alpha, FreeProdElem(),
                                   [](const FreeProdElem& a, const FreeProdElem& b) { return a * b; });
      return {acc.is_identity(), acc.str(true)};
    }
  }
  throw std::logic_error("eval_relator: unhandled target");
}

}  // namespace

GroupHom pi_minimal(int n) {
  if (n < 2) throw std::invalid_argument("pi_minimal: n must be at least 2");
  GroupHom h("pi", n, minimal_cactus(n));
  h.kind = TargetKind::symmetric;
  for (int i = 2; i <= n; ++i) h.perm_images.push_back(sym_generator(n, 1, i));
  return h;
}

GroupHom pi_standard(int n) {
  if (n < 2) throw std::invalid_argument("pi_standard: n must be at least 2");
  GroupHom h("pi-standard", n, standard_cactus(n));
  h.kind = TargetKind::symmetric;
  for (int col = 0; col < h.source.ngens(); ++col) {
    auto [p, q] = h.source.alphabet().unpack_interval(h.source.alphabet().gen_of_col(col));
    h.perm_images.push_back(sym_generator(n, p, q));
  }
  return h;
}

GroupHom phi_d4(int n) {
  if (n < 3) throw std::invalid_argument("phi_d4: n must be at least 3");
  GroupHom h("phi-d4", n, minimal_cactus(n));
  h.kind = TargetKind::dihedral;
  h.dihedral_m = 4;
  const int piv = pivot_of(n);
  for (int i = 2; i <= n; ++i) {
    if (i < piv)
      h.dih_images.push_back(DihedralElem::identity(4));
    else
      h.dih_images.push_back(i % 2 == 0 ? DihedralElem::a(4) : DihedralElem::b(4));
  }
  return h;
}

GroupHom psi_d8(int m, int pivot) {
  if (m < 3) throw std::invalid_argument("psi_d8: m must be at least 3");
  if (pivot < 0) pivot = pivot_of(m);
  GroupHom h("psi-d8", m, minimal_cactus(m));
  h.kind = TargetKind::dihedral;
  h.dihedral_m = 8;
  for (int i = 2; i <= m; ++i) {
    if (i == pivot)
      h.dih_images.push_back(DihedralElem::a(8));
    else if (i >= pivot + 1 && (i - pivot - 1) % 2 == 0)
      h.dih_images.push_back(DihedralElem::b(8));
    else
      h.dih_images.push_back(DihedralElem::identity(8));
  }
  return h;
}

// The reflections must start strictly above n/2: at even n the relator
// (g_n g_(n/2))^4 would otherwise map to (ab)^(2n), which only dies in the
// finite dihedral groups with m | 2n.  For odd n this is the usual pivot.
GroupHom phi_inf(int n) {
  if (n < 3) throw std::invalid_argument("phi_inf: n must be at least 3");
  GroupHom h("phi-inf", n, minimal_cactus(n));
  h.kind = TargetKind::infinite_dihedral;
  h.dihedral_m = 0;
  const int piv = n / 2 + 1;
  for (int i = 2; i <= n; ++i) {
    if (i >= piv)
      h.dih_images.push_back(DihedralElem(0, true, n - i));
    else
      h.dih_images.push_back(DihedralElem::identity(0));
  }
  return h;
}

GroupHom theta() {
  GroupHom h("theta", 4, minimal_cactus(4));
  h.kind = TargetKind::freeprod_central;
  h.fp_images = {FreeProdElem::central(), FreeProdElem::letter(0), FreeProdElem::letter(1)};
  return h;
}

GroupHom theta_lambda(int n) {
  if (n < 4) throw std::invalid_argument("theta_lambda: n must be at least 4");
  GroupHom h("theta-lambda", n, minimal_cactus(n));
  h.kind = TargetKind::freeprod_central;
  for (int i = 2; i <= n; ++i) {
    if (i <= n - 3)
      h.fp_images.push_back(FreeProdElem());
    else if (i == n - 2)
      h.fp_images.push_back(FreeProdElem::central());
    else
      h.fp_images.push_back(FreeProdElem::letter(i == n - 1 ? 0 : 1));
  }
  return h;
}

CheckReport hom_check(GroupHom& h) {
  CheckReport rep;
  rep.map = h.name;
  rep.n = h.n;
  for (const Word& r : h.source.relators()) {
    Evaluated e = eval_relator(h, r);
    if (!e.is_identity)
      rep.failures.push_back({to_string(r, h.source.alphabet()), e.printed});
  }
  rep.passed = rep.failures.empty();
  h.checked = rep.passed;
  return rep;
}

CheckReport qn_consequence_check(int n) {
  if (n < 4) throw std::invalid_argument("qn_consequence_check: n must be at least 4");
  Presentation src = minimal_cactus(n);
  Presentation dst = minimal_cactus(n - 1);
  CheckReport rep;
  rep.map = "qn";
  rep.n = n;
  for (const Word& r : src.relators()) {
    Word image = map_generators(r, [](int g) { return g - 1; });
    image = reduced(erase_generator(image, 1), ReduceMode::Involutive);
    if (image.empty()) continue;
    Word canon = cyclic_canonical(image);
    if (!dst.has_relator_canonical(canon))
      rep.failures.push_back(
          {to_string(r, src.alphabet()), to_string(canon, dst.alphabet())});
  }
  rep.passed = rep.failures.empty();
  return rep;
}

namespace {

bool surjective_dihedral(const GroupHom& h) {
  // closure of the images inside D_m, compared with 2m
  std::set<std::pair<bool, std::int64_t>> seen;
  std::vector<DihedralElem> frontier{DihedralElem::identity(h.dihedral_m)};
  seen.insert({false, 0});
  for (std::size_t i = 0; i < frontier.size(); ++i)
    for (const DihedralElem& g : h.dih_images) {
      DihedralElem x = frontier[i] * g;
      if (seen.insert({x.reflection(), x.shift()}).second) frontier.push_back(x);
    }
  return static_cast<std::int64_t>(seen.size()) == 2 * h.dihedral_m;
}

bool surjective_infinite_dihedral(const std::vector<DihedralElem>& images) {
  // reflections a(ab)^k with offsets K plus rotations: the subgroup is all
  // of Z2 * Z2 iff K is nonempty and gcd(pairwise offset differences,
  // rotation shifts) is 1
  std::vector<std::int64_t> offsets, rotations;
  for (const DihedralElem& d : images) {
    if (d.is_identity()) continue;
    (d.reflection() ? offsets : rotations).push_back(d.shift());
  }
  if (offsets.empty()) return false;
  std::int64_t g = 0;
  for (std::size_t i = 1; i < offsets.size(); ++i)
    g = std::gcd(g, offsets[i] - offsets[0]);
  for (std::int64_t r : rotations) g = std::gcd(g, r);
  return std::abs(g) == 1;
}

bool surjective_freeprod(const std::vector<FreeProdElem>& images) {
  // (Z2 * Z2) x Z2: project the free part onto the infinite dihedral group
  std::vector<DihedralElem> proj;
  std::vector<int> central;
  for (const FreeProdElem& e : images) {
    DihedralElem d = DihedralElem::identity(0);
    for (std::uint8_t l : e.word())
      d = d * (l == 0 ? DihedralElem::a(0) : DihedralElem::b(0));
    proj.push_back(d);
    central.push_back(e.central_flag() ? 1 : 0);
  }
  if (!surjective_infinite_dihedral(proj)) return false;
  // full projection: surjective unless the central bits agree with some
  // homomorphism Z2 * Z2 -> Z2, i.e. c_i = e_i*xa + k_i*(xa+xb) throughout
  for (int xa = 0; xa <= 1; ++xa)
    for (int xb = 0; xb <= 1; ++xb) {
      bool consistent = true;
      for (std::size_t i = 0; i < proj.size(); ++i) {
        int predicted =
            ((proj[i].reflection() ? xa : 0) + proj[i].shift() * (xa ^ xb)) & 1;
        if (predicted != central[i]) {
          consistent = false;
          break;
        }
      }
      if (consistent) return false;
    }
  return true;
}

}  // namespace

bool surjectivity_check(const GroupHom& h) {
  if (!h.checked) throw std::invalid_argument("surjectivity_check: hom_check has not passed");
  switch (h.kind) {
    case TargetKind::symmetric: {
      PermGroup g(h.perm_images[0].degree(), h.perm_images);
      std::uint64_t fact = 1;
      for (std::uint64_t i = 2; i <= h.perm_images[0].degree(); ++i) fact *= i;
      return g.order() == fact;
    }
    case TargetKind::finite_table: {
      PermGroup g(h.perm_images[0].degree(), h.perm_images);
      return g.order() == h.table->order();
    }
    case TargetKind::dihedral:
      return surjective_dihedral(h);
    case TargetKind::infinite_dihedral:
      return surjective_infinite_dihedral(h.dih_images);
    case TargetKind::freeprod_central:
      return surjective_freeprod(h.fp_images);
  }
  return false;
}

GroupHom dihedral_factorization(int n, int m) {
  if (n < 3 || m < 1) throw std::invalid_argument("dihedral_factorization: need n >= 3, m >= 1");
  GroupHom h("dihedral-factorization", n, minimal_cactus(n));
  h.kind = TargetKind::dihedral;
  h.dihedral_m = m;
  const int piv = n / 2 + 1;  // as in phi_inf, whose reduction mod m this is
  for (int i = 2; i <= n; ++i) {
    if (i >= piv)
      h.dih_images.push_back(DihedralElem(m, true, n - i));
    else
      h.dih_images.push_back(DihedralElem::identity(m));
  }
  CheckReport rep = hom_check(h);
  if (!rep.passed)
    throw std::logic_error("dihedral_factorization: relator check failed unexpectedly");
  if (!surjectivity_check(h))
    throw std::logic_error("dihedral_factorization: image is a proper subgroup");
  return h;
}

std::uint64_t hom_count(const Presentation& p, FiniteGroupTable& target, bool surjective_only,
                        std::uint64_t node_cap) {
  return search_images(p, target, surjective_only, /*first_only=*/false, node_cap).count;
}

}  // namespace cactus
