#include "cactus/perm_group.hpp"

#include <stdexcept>

namespace cactus {

namespace {

// Explicit transversal rows are worth caching up to ~134 MB; beyond that
// the Schreier-vector paths are used instead.
bool cache_transversals(unsigned degree) { return degree <= 8192; }

Perm from_u16(const std::vector<std::uint16_t>& row) {
  std::vector<std::uint32_t> img(row.begin(), row.end());
  return Perm(std::move(img));
}

std::vector<std::uint16_t> to_u16(const Perm& p) {
  std::vector<std::uint16_t> row(p.degree());
  for (unsigned i = 0; i < p.degree(); ++i) row[i] = static_cast<std::uint16_t>(p[i]);
  return row;
}

}  // namespace

Perm PermGroup::transversal(const Level& l, std::size_t idx) const {
  if (l.cached) return from_u16(l.tcache[idx]);
  // compose generators along the Schreier-vector path from the base
  std::vector<std::int32_t> path;
  for (std::int32_t i = static_cast<std::int32_t>(idx); l.parent[i] >= 0; i = l.parent[i])
    path.push_back(l.via[i]);
  Perm u(degree_);
  for (auto it = path.rbegin(); it != path.rend(); ++it) u = u * l.gens[*it];
  return u;
}

Perm PermGroup::strip_level(const Level& l, Perm g) const {
  std::size_t idx = static_cast<std::size_t>(l.pos[g[l.base]]);
  if (l.cached) {
    // g * u^-1 where u is the cached transversal row
    const std::vector<std::uint16_t>& u = l.tcache[idx];
    std::vector<std::uint32_t> uinv(degree_);
    for (unsigned i = 0; i < degree_; ++i) uinv[u[i]] = i;
    std::vector<std::uint32_t> img(degree_);
    for (unsigned i = 0; i < degree_; ++i) img[i] = uinv[g[i]];
    return Perm(std::move(img));
  }
  for (std::int32_t i = static_cast<std::int32_t>(idx); l.parent[i] >= 0; i = l.parent[i])
    g = g * l.gen_invs[l.via[i]];
  return g;
}

std::pair<Perm, std::size_t> PermGroup::strip_from(Perm g, std::size_t from) const {
  for (std::size_t i = from; i < levels_.size(); ++i) {
    if (g.is_identity()) return {g, i};
    const Level& l = levels_[i];
    std::uint32_t x = g[l.base];
    if (l.pos[x] < 0) return {g, i};
    g = strip_level(l, std::move(g));
  }
  return {g, levels_.size()};
}

void PermGroup::make_level(const Perm& witness) {
  Level l;
  l.base = witness.first_moved();
  l.pos.assign(degree_, -1);
  l.orbit.push_back(l.base);
  l.pos[l.base] = 0;
  l.parent.push_back(-1);
  l.via.push_back(-1);
  l.cached = cache_transversals(degree_);
  if (l.cached) l.tcache.push_back(to_u16(Perm(degree_)));
  levels_.push_back(std::move(l));
}

void PermGroup::try_extend(std::size_t lvl, std::size_t idx, std::size_t gi) {
  Level& l = levels_[lvl];
  std::uint32_t q = l.gens[gi][l.orbit[idx]];
  if (l.pos[q] >= 0) return;
  l.pos[q] = static_cast<std::int32_t>(l.orbit.size());
  l.orbit.push_back(q);
  l.parent.push_back(static_cast<std::int32_t>(idx));
  l.via.push_back(static_cast<std::int32_t>(gi));
  if (l.cached) {
    const std::vector<std::uint16_t>& up = l.tcache[idx];
    const Perm& g = l.gens[gi];
    std::vector<std::uint16_t> row(degree_);
    for (unsigned i = 0; i < degree_; ++i) row[i] = static_cast<std::uint16_t>(g[up[i]]);
    l.tcache.push_back(std::move(row));
  }
  std::uint32_t nidx = static_cast<std::uint32_t>(l.orbit.size() - 1);
  for (std::size_t h = 0; h < l.gens.size(); ++h)
    l.pending.push_back({nidx, static_cast<std::uint32_t>(h)});
}

void PermGroup::add_gen(std::size_t lvl, const Perm& g) {
  Level& l = levels_[lvl];
  std::size_t gi = l.gens.size();
  l.gens.push_back(g);
  l.gen_invs.push_back(g.inverse());
  for (std::size_t idx = 0; idx < l.orbit.size(); ++idx)
    l.pending.push_back({static_cast<std::uint32_t>(idx), static_cast<std::uint32_t>(gi)});
  // extend the orbit: old points with the new generator, then the newly
  // reached region with all generators
  std::size_t old_size = l.orbit.size();
  for (std::size_t idx = 0; idx < old_size; ++idx) try_extend(lvl, idx, gi);
  for (std::size_t idx = old_size; idx < levels_[lvl].orbit.size(); ++idx)
    for (std::size_t h = 0; h < levels_[lvl].gens.size(); ++h) try_extend(lvl, idx, h);
}

void PermGroup::add_strong(std::size_t stuck, const Perm& h) {
  if (stuck == levels_.size()) make_level(h);
  // a generator fixing the first bases still acts at every earlier level
  for (std::size_t i = 0; i <= stuck; ++i) add_gen(i, h);
}

void PermGroup::process_pending() {
  while (true) {
    std::size_t lvl = levels_.size();
    while (lvl > 0 && levels_[lvl - 1].cursor >= levels_[lvl - 1].pending.size()) --lvl;
    if (lvl == 0) return;
    --lvl;  // deepest level with pending pairs

    Level& l = levels_[lvl];
    auto [idx, gi] = l.pending[l.cursor++];
    std::uint32_t q = l.gens[gi][l.orbit[idx]];
    std::size_t qidx = static_cast<std::size_t>(l.pos[q]);

    Perm residue;
    if (l.cached) {
      const std::vector<std::uint16_t>& up = l.tcache[idx];
      const Perm& g = l.gens[gi];
      const std::vector<std::uint16_t>& uq = l.tcache[qidx];
      std::vector<std::uint32_t> tmp(degree_);
      bool ident = true;
      for (unsigned i = 0; i < degree_; ++i) {
        tmp[i] = g[up[i]];
        if (tmp[i] != uq[i]) ident = false;
      }
      if (ident) continue;  // u_p * g == u_q, Schreier generator is trivial
      std::vector<std::uint32_t> uqinv(degree_);
      for (unsigned i = 0; i < degree_; ++i) uqinv[uq[i]] = i;
      std::vector<std::uint32_t> img(degree_);
      for (unsigned i = 0; i < degree_; ++i) img[i] = uqinv[tmp[i]];
      residue = Perm(std::move(img));
    } else {
      Perm s = transversal(l, idx) * l.gens[gi];
      residue = strip_level(l, std::move(s));
    }
    if (residue.is_identity()) continue;

    auto [h, stuck] = strip_from(std::move(residue), lvl + 1);
    if (h.is_identity()) continue;
    add_strong(stuck, h);
  }
}

void PermGroup::insert(const Perm& g) {
  if (g.degree() != degree_) throw std::invalid_argument("PermGroup::insert: degree mismatch");
  auto [h, stuck] = strip_from(g, 0);
  if (h.is_identity()) return;
  gens_.push_back(g);
  add_strong(stuck, h);
  process_pending();
}

bool PermGroup::contains(const Perm& g) const {
  if (g.degree() != degree_) return false;
  return strip_from(g, 0).first.is_identity();
}

std::uint64_t PermGroup::order() const {
  std::uint64_t o = 1;
  for (const Level& l : levels_) o *= l.orbit.size();
  return o;
}

PermGroup normal_closure(const PermGroup& ambient, const std::vector<Perm>& seeds) {
  PermGroup h(ambient.degree());
  std::vector<Perm> queue(seeds);
  std::size_t qi = 0;
  while (qi < queue.size()) {
    Perm w = queue[qi++];
    if (w.is_identity() || h.contains(w)) continue;
    h.insert(w);
    for (const Perm& g : ambient.generators()) queue.push_back(g.inverse() * w * g);
  }
  return h;
}

namespace {

Perm perm_commutator(const Perm& a, const Perm& b) {
  return a.inverse() * b.inverse() * a * b;
}

int two_power_exponent(std::uint64_t q) {
  if (q == 0 || (q & (q - 1)) != 0) return -1;
  int r = 0;
  while (q > 1) {
    q >>= 1;
    ++r;
  }
  return r;
}

}  // namespace

LcsReport lower_central_series(const PermGroup& g) {
  LcsReport rep;
  rep.orders.push_back(g.order());
  std::vector<Perm> cur_gens = g.generators();

  while (rep.orders.back() > 1) {
    std::vector<Perm> seeds;
    for (const Perm& h : cur_gens)
      for (const Perm& x : g.generators()) seeds.push_back(perm_commutator(h, x));
    PermGroup next = normal_closure(g, seeds);
    std::uint64_t next_order = next.order();
    if (next_order == rep.orders.back()) break;  // stabilized above the identity

    bool elem = true;
    for (const Perm& h : cur_gens)
      if (!next.contains(h * h)) {
        elem = false;
        break;
      }
    if (elem) {
      for (std::size_t i = 0; i < cur_gens.size() && elem; ++i)
        for (std::size_t j = i + 1; j < cur_gens.size(); ++j)
          if (!next.contains(perm_commutator(cur_gens[i], cur_gens[j]))) {
            elem = false;
            break;
          }
    }
    rep.elementary.push_back(elem);
    rep.ranks.push_back(two_power_exponent(rep.orders.back() / next_order));
    rep.orders.push_back(next_order);
    cur_gens = next.generators();
  }
  rep.reaches_trivial = rep.orders.back() == 1;
  return rep;
}

int layer_rank(const LcsReport& rep, int k) {
  if (k < 1 || static_cast<std::size_t>(k) >= rep.orders.size())
    throw std::out_of_range("layer_rank: no such layer");
  int r = rep.ranks[k - 1];
  if (r < 0 || !rep.elementary[k - 1])
    throw std::runtime_error("layer_rank: layer is not elementary abelian of exponent 2");
  return r;
}

int layer_rank(const PermGroup& g, int k) { return layer_rank(lower_central_series(g), k); }

IsoResult isomorphic(const Presentation& p, FiniteGroupTable& h, const EnumConfig& cfg) {
  if (h.order() > 256) throw std::invalid_argument("isomorphic: target order above 256");
  IsoResult res;
  if (group_order(p, cfg) != h.order()) return res;
  ImageSearch s = search_images(p, h, /*surjective_only=*/true, /*first_only=*/true);
  if (!s.witness) return res;
  res.isomorphic = true;
  for (int e : *s.witness) res.witness.push_back(h.elements()[e]);
  return res;
}

}  // namespace cactus
