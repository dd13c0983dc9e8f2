#include "cactus/finite_group.hpp"

#include <stdexcept>
#include <unordered_map>

#include "cactus/dihedral.hpp"

namespace cactus {

FiniteGroupTable FiniteGroupTable::from_generators(std::vector<Perm> gens, std::size_t limit) {
  if (gens.empty()) throw std::invalid_argument("from_generators: need at least one generator");
  FiniteGroupTable t;
  t.degree_ = gens[0].degree();
  for (const Perm& g : gens)
    if (g.degree() != t.degree_) throw std::invalid_argument("from_generators: degree mismatch");
  t.gens_ = std::move(gens);

  std::unordered_map<Perm, int, PermHash> seen;
  t.elements_.push_back(Perm(t.degree_));
  seen.emplace(t.elements_[0], 0);
  for (std::size_t i = 0; i < t.elements_.size(); ++i) {
    for (const Perm& g : t.gens_) {
      Perm next = t.elements_[i] * g;
      if (seen.emplace(next, static_cast<int>(t.elements_.size())).second) {
        t.elements_.push_back(std::move(next));
        if (t.elements_.size() > limit)
          throw std::runtime_error("from_generators: closure exceeds limit");
      }
    }
  }
  t.order_ = t.elements_.size();
  return t;
}

FiniteGroupTable FiniteGroupTable::regular(std::vector<Perm> gens, std::uint64_t order) {
  FiniteGroupTable t;
  if (gens.empty()) throw std::invalid_argument("regular: need at least one generator");
  t.degree_ = gens[0].degree();
  t.order_ = order;
  t.gens_ = std::move(gens);
  return t;
}

void FiniteGroupTable::ensure_enumerated() {
  if (enumerated()) return;
  FiniteGroupTable full = from_generators(gens_);
  if (full.order() != order_)
    throw std::logic_error("ensure_enumerated: closure disagrees with declared order");
  elements_ = std::move(full.elements_);
}

const std::vector<Perm>& FiniteGroupTable::elements() const {
  if (!enumerated()) throw std::logic_error("elements: group not enumerated");
  return elements_;
}

int FiniteGroupTable::element_index(const Perm& p) const {
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (elements_[i] == p) return static_cast<int>(i);
  return -1;
}

void FiniteGroupTable::ensure_mult_table() {
  if (!mult_.empty()) return;
  ensure_enumerated();
  nelems_ = elements_.size();
  if (nelems_ > 4096) throw std::runtime_error("ensure_mult_table: group too large");
  std::unordered_map<Perm, int, PermHash> idx;
  for (std::size_t i = 0; i < nelems_; ++i) idx.emplace(elements_[i], static_cast<int>(i));
  mult_.assign(nelems_ * nelems_, 0);
  inv_.assign(nelems_, 0);
  for (std::size_t i = 0; i < nelems_; ++i) {
    for (std::size_t j = 0; j < nelems_; ++j)
      mult_[i * nelems_ + j] = static_cast<std::uint16_t>(idx.at(elements_[i] * elements_[j]));
    inv_[i] = static_cast<std::uint16_t>(idx.at(elements_[i].inverse()));
  }
}

FiniteGroupTable wreath_group() {
  auto p = [](const std::string& s) { return Perm::parse_cycles(s, 8); };
  FiniteGroupTable t = FiniteGroupTable::from_generators({
      p("(1 2)(3 4)"),
      p("(1 3)(2 4)"),
      p("(5 6)(7 8)"),
      p("(5 7)(6 8)"),
      p("(1 5)(2 6)(3 7)(4 8)"),
  });
  t.set_name("wreath");
  return t;
}

FiniteGroupTable cyclic_table(int m) {
  if (m < 1) throw std::invalid_argument("cyclic_table: m must be positive");
  if (m == 1) {
    FiniteGroupTable t = FiniteGroupTable::from_generators({Perm(1)});
    t.set_name("cyclic:1");
    return t;
  }
  std::vector<std::uint32_t> img(m);
  for (int i = 0; i < m; ++i) img[i] = static_cast<std::uint32_t>((i + 1) % m);
  FiniteGroupTable t = FiniteGroupTable::from_generators({Perm(std::move(img))});
  t.set_name("cyclic:" + std::to_string(m));
  return t;
}

FiniteGroupTable klein_table() {
  FiniteGroupTable t = FiniteGroupTable::from_generators(
      {Perm::parse_cycles("(1 2)", 4), Perm::parse_cycles("(3 4)", 4)});
  t.set_name("klein");
  return t;
}

FiniteGroupTable dihedral_table(int m) {
  if (m < 1) throw std::invalid_argument("dihedral_table: m must be positive");
  // elements indexed refl*m + shift; generators act by right multiplication
  auto idx = [m](const DihedralElem& e) {
    return static_cast<std::uint32_t>((e.reflection() ? m : 0) + e.shift());
  };
  std::vector<std::uint32_t> ra(2 * m), rb(2 * m);
  for (int r = 0; r <= 1; ++r)
    for (int k = 0; k < m; ++k) {
      DihedralElem e(m, r != 0, k);
      ra[idx(e)] = idx(e * DihedralElem::a(m));
      rb[idx(e)] = idx(e * DihedralElem::b(m));
    }
  FiniteGroupTable t = FiniteGroupTable::from_generators({Perm(std::move(ra)), Perm(std::move(rb))});
  t.set_name("dihedral:" + std::to_string(m));
  return t;
}

FiniteGroupTable direct_product(const FiniteGroupTable& a, const FiniteGroupTable& b) {
  unsigned da = a.degree(), db = b.degree();
  std::vector<Perm> gens;
  for (const Perm& g : a.generators()) {
    std::vector<std::uint32_t> img(da + db);
    for (unsigned i = 0; i < da; ++i) img[i] = g[i];
    for (unsigned i = 0; i < db; ++i) img[da + i] = da + i;
    gens.push_back(Perm(std::move(img)));
  }
  for (const Perm& g : b.generators()) {
    std::vector<std::uint32_t> img(da + db);
    for (unsigned i = 0; i < da; ++i) img[i] = i;
    for (unsigned i = 0; i < db; ++i) img[da + i] = da + g[i];
    gens.push_back(Perm(std::move(img)));
  }
  FiniteGroupTable t = FiniteGroupTable::from_generators(std::move(gens));
  t.set_name(a.name() + "x" + b.name());
  return t;
}

FiniteGroupTable regular_representation(const CosetTable& t, const Presentation& p) {
  if (t.status != CosetTable::Status::complete)
    throw std::invalid_argument("regular_representation: incomplete coset table");
  std::vector<Perm> gens;
  gens.reserve(t.ngens);
  for (int g = 0; g < t.ngens; ++g) {
    std::vector<std::uint32_t> img(t.index);
    for (std::int64_t c = 0; c < t.index; ++c)
      img[c] = static_cast<std::uint32_t>(t.apply(static_cast<std::int32_t>(c), CosetTable::col_fwd(g)));
    gens.push_back(Perm(std::move(img)));
  }
  FiniteGroupTable out = FiniteGroupTable::regular(std::move(gens), static_cast<std::uint64_t>(t.index));
  out.set_name("regular:" + p.family().str());
  return out;
}

ImageSearch search_images(const Presentation& p, FiniteGroupTable& h, bool surjective_only,
                          bool first_only, std::uint64_t node_cap) {
  h.ensure_mult_table();
  const int m = p.ngens();
  const int n = static_cast<int>(h.order());

  // relators become index words over dense generator columns, checked as
  // soon as their last generator is assigned
  struct IdxWord {
    std::vector<std::pair<int, bool>> letters;  // (dense gen, inverted)
    int max_gen = 0;
  };
  std::vector<std::vector<IdxWord>> ready(m);
  for (const Word& r : p.relators()) {
    IdxWord w;
    for (const Letter& l : r) {
      int col = p.alphabet().col(l.gen);
      w.letters.push_back({col, l.sign < 0});
      w.max_gen = std::max(w.max_gen, col);
    }
    ready[w.max_gen].push_back(std::move(w));
  }

  ImageSearch result;
  std::vector<int> assign(m, 0);
  std::uint64_t nodes = 0;

  auto generates = [&](const std::vector<int>& imgs) {
    std::vector<bool> seen(n, false);
    std::vector<int> closure{0};
    seen[0] = true;
    for (std::size_t i = 0; i < closure.size(); ++i)
      for (int g : imgs) {
        int x = h.mult(closure[i], g);
        if (!seen[x]) {
          seen[x] = true;
          closure.push_back(x);
        }
      }
    return closure.size() == static_cast<std::size_t>(n);
  };

  auto rec = [&](auto&& self, int gen) -> bool {
    if (gen == m) {
      if (surjective_only && !generates(assign)) return false;
      ++result.count;
      if (first_only) {
        result.witness = assign;
        return true;
      }
      return false;
    }
    for (int e = 0; e < n; ++e) {
      if (node_cap && ++nodes > node_cap)
        throw std::runtime_error("search_images: node cap exceeded");
      assign[gen] = e;
      bool ok = true;
      for (const IdxWord& w : ready[gen]) {
        int acc = 0;
        for (auto [g, invd] : w.letters)
          acc = h.mult(acc, invd ? h.inv(assign[g]) : assign[g]);
        if (acc != 0) {
          ok = false;
          break;
        }
      }
      if (ok && self(self, gen + 1)) return true;
    }
    return false;
  };
  rec(rec, 0);
  return result;
}

}  // namespace cactus
