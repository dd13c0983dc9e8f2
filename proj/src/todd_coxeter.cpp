#include "cactus/todd_coxeter.hpp"

#include <cstdlib>
#include <deque>
#include <sstream>

namespace cactus {

std::int64_t EnumConfig::resolved_max_cosets() const {
  if (max_cosets > 0) return max_cosets;
  if (const char* env = std::getenv("CACTUS_MAX_COSETS")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end != env && v > 0) return v;
  }
  return std::int64_t(1) << 20;
}

namespace {

constexpr std::int32_t UNDEF = -1;

// A relator prepared for scanning: the column sequence, doubled so any
// cyclic rotation is a contiguous slice.
struct ScanWord {
  std::vector<std::int32_t> cols2;
  std::int32_t len = 0;
};

class Enumerator {
 public:
  Enumerator(const Presentation& p, const std::vector<Word>& subgroup_gens,
             const EnumConfig& cfg)
      : pres_(p), cfg_(cfg), ngens_(p.ngens()), ncols_(2 * p.ngens()) {
    cap_ = cfg.resolved_max_cosets();
    lookahead_gap_ = cfg.lookahead_gap > 0 ? cfg.lookahead_gap : (std::int64_t(1) << 16);

    for (const Word& r : p.relators()) relators_.push_back(prepare(r));
    for (const Word& w : subgroup_gens) subgroup_.push_back(prepare(w));

    if (cfg.strategy == TcStrategy::felsch) {
      occurrences_.resize(ncols_);
      for (std::size_t ri = 0; ri < relators_.size(); ++ri)
        for (std::int32_t pos = 0; pos < relators_[ri].len; ++pos)
          occurrences_[relators_[ri].cols2[pos]].push_back(
              {static_cast<std::int32_t>(ri), pos});
    }
  }

  CosetTable run() {
    new_coset();  // coset 0, the subgroup coset
    bool ok = cfg_.strategy == TcStrategy::hlt ? run_hlt() : run_felsch();
    return extract(ok);
  }

 private:
  ScanWord prepare(const Word& w) const {
    ScanWord s;
    s.len = static_cast<std::int32_t>(w.size());
    s.cols2.reserve(2 * w.size());
    for (const Letter& l : w)
      s.cols2.push_back(2 * pres_.alphabet().col(l.gen) + (l.sign < 0 ? 1 : 0));
    s.cols2.insert(s.cols2.end(), s.cols2.begin(), s.cols2.end());
    return s;
  }

  static std::int32_t inv_col(std::int32_t col) { return col ^ 1; }

  std::int32_t nrows() const { return static_cast<std::int32_t>(parent_.size()); }
  bool alive(std::int32_t c) const { return parent_[c] == c; }

  std::int32_t rep(std::int32_t c) {
    while (parent_[c] != c) {
      parent_[c] = parent_[parent_[c]];
      c = parent_[c];
    }
    return c;
  }

  std::int32_t& entry(std::int32_t c, std::int32_t col) {
    return table_[static_cast<std::size_t>(c) * ncols_ + col];
  }

  std::int32_t new_coset() {
    table_.resize(table_.size() + ncols_, UNDEF);
    parent_.push_back(nrows());
    ++stats_.defined;
    ++live_;
    return nrows() - 1;
  }

  void set_edge(std::int32_t c, std::int32_t col, std::int32_t d) {
    entry(c, col) = d;
    entry(d, inv_col(col)) = c;
    if (use_deductions_) {
      deductions_.push_back({c, col});
      deductions_.push_back({d, inv_col(col)});
    }
  }

  // --- coincidence handling -------------------------------------------

  void merge(std::int32_t a, std::int32_t b, std::deque<std::int32_t>& q) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    --live_;
    ++stats_.deleted;
    q.push_back(b);
  }

  void coincidence(std::int32_t a, std::int32_t b) {
    std::deque<std::int32_t> q;
    merge(a, b, q);
    while (!q.empty()) {
      std::int32_t dead = q.front();
      q.pop_front();
      for (std::int32_t col = 0; col < ncols_; ++col) {
        std::int32_t d = entry(dead, col);
        if (d == UNDEF) continue;
        entry(dead, col) = UNDEF;
        if (entry(d, inv_col(col)) == dead) entry(d, inv_col(col)) = UNDEF;
        std::int32_t mu = rep(dead);
        std::int32_t nu = rep(d);
        if (entry(mu, col) != UNDEF)
          merge(nu, entry(mu, col), q);
        else if (entry(nu, inv_col(col)) != UNDEF)
          merge(mu, entry(nu, inv_col(col)), q);
        else
          set_edge(mu, col, nu);
      }
    }
  }

  // --- scanning ---------------------------------------------------------

  // Scans w[from..from+len) at coset c, defining cosets to close the scan
  // (HLT).  Returns false when a definition would exceed the cap; the
  // partial fill stays valid and the scan can be retried after recovery.
  bool scan_and_fill(std::int32_t c, const ScanWord& w, std::int32_t from = 0) {
    std::int32_t i = from, j = from + w.len - 1;
    std::int32_t f = c, b = c;
    while (true) {
      while (i <= j && entry(f, w.cols2[i]) != UNDEF) f = entry(f, w.cols2[i++]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return true;
      }
      while (j >= i && entry(b, inv_col(w.cols2[j])) != UNDEF)
        b = entry(b, inv_col(w.cols2[j--]));
      if (j < i) {
        coincidence(f, b);
        return true;
      }
      if (j == i) {
        set_edge(f, w.cols2[i], b);
        return true;
      }
      if (nrows() >= cap_) return false;
      set_edge(f, w.cols2[i], new_coset());
    }
  }

  // Scan without definitions (Felsch deductions, lookahead).
  void scan_check(std::int32_t c, const ScanWord& w, std::int32_t from = 0) {
    std::int32_t i = from, j = from + w.len - 1;
    std::int32_t f = c, b = c;
    while (i <= j && entry(f, w.cols2[i]) != UNDEF) f = entry(f, w.cols2[i++]);
    if (i > j) {
      if (f != b) coincidence(f, b);
      return;
    }
    while (j >= i && entry(b, inv_col(w.cols2[j])) != UNDEF)
      b = entry(b, inv_col(w.cols2[j--]));
    if (j < i)
      coincidence(f, b);
    else if (j == i)
      set_edge(f, w.cols2[i], b);
  }

  // --- table maintenance -------------------------------------------------

  void lookahead() {
    for (std::int32_t c = 0; c < nrows(); ++c) {
      if (!alive(c)) continue;
      for (const ScanWord& r : relators_) {
        scan_check(c, r);
        if (!alive(c)) break;
      }
    }
  }

  // Renumbers live cosets in order; returns old->new of the tracked coset.
  std::int32_t compact(std::int32_t track = 0) {
    std::vector<std::int32_t> remap(nrows(), UNDEF);
    std::int32_t next = 0;
    for (std::int32_t c = 0; c < nrows(); ++c)
      if (alive(c)) remap[c] = next++;
    std::int32_t tracked = UNDEF;
    if (track >= 0) tracked = track < nrows() ? remap[rep(track)] : next;

    std::vector<std::int32_t> fresh(static_cast<std::size_t>(next) * ncols_, UNDEF);
    for (std::int32_t c = 0; c < nrows(); ++c) {
      if (!alive(c)) continue;
      for (std::int32_t col = 0; col < ncols_; ++col) {
        std::int32_t d = entry(c, col);
        if (d != UNDEF) fresh[static_cast<std::size_t>(remap[c]) * ncols_ + col] = remap[rep(d)];
      }
    }
    table_ = std::move(fresh);
    parent_.resize(next);
    for (std::int32_t c = 0; c < next; ++c) parent_[c] = c;
    rows_at_cleanup_ = next;
    return tracked;
  }

  // On hitting the cap: lookahead, drain deductions, compact if anything
  // died.  Renumbers cosets, so callers must restart scans from remapped
  // coset ids.  The definition budget bounds define/collapse cycles that
  // keep reclaiming a few rows without converging.
  bool recover_space() {
    if (stats_.defined > 64 * cap_) return false;
    lookahead();
    if (use_deductions_) process_deductions();
    if (nrows() - live_ == 0) return false;
    cursor_ = compact(cursor_);
    return nrows() < cap_;
  }

  // --- strategies ----------------------------------------------------------

  bool run_hlt() {
    for (const ScanWord& w : subgroup_) {
      if (!scan_and_fill(0, w)) {
        // coset 0 is the minimal representative and survives compaction
        if (!recover_space()) return false;
        if (!scan_and_fill(0, w)) return false;
      }
    }
    while (cursor_ < nrows()) {
      if (alive(cursor_)) {
        std::size_t ri = 0;
        while (ri < relators_.size() && alive(cursor_)) {
          if (scan_and_fill(cursor_, relators_[ri])) {
            ++ri;
            continue;
          }
          if (!recover_space()) return false;
          // cursor_ was remapped; if the tracked coset died its merge
          // target sits earlier and gets rescanned, which is harmless
        }
      }
      ++cursor_;
      // geometric schedule: a pass costs a full table scan, so run one only
      // after the table grows by a constant factor
      if (nrows() - rows_at_cleanup_ >= std::max(lookahead_gap_, rows_at_cleanup_)) {
        lookahead();
        if (nrows() - live_ >= static_cast<std::int64_t>(cfg_.compaction_threshold * nrows()))
          cursor_ = compact(cursor_);
        else
          rows_at_cleanup_ = nrows();
      }
    }
    return true;
  }

  void process_deductions() {
    while (!deductions_.empty()) {
      auto [c, col] = deductions_.back();
      deductions_.pop_back();
      if (!alive(c)) continue;
      for (const auto& [ri, pos] : occurrences_[col]) scan_check(c, relators_[ri], pos);
    }
  }

  bool run_felsch() {
    use_deductions_ = true;
    for (const ScanWord& w : subgroup_) {
      if (!scan_and_fill(0, w)) {
        process_deductions();
        if (!recover_space()) return false;
        if (!scan_and_fill(0, w)) return false;
      }
      process_deductions();
    }
    cursor_ = 0;
    while (true) {
      while (cursor_ < nrows() && !alive(cursor_)) ++cursor_;
      if (cursor_ >= nrows()) break;
      std::int32_t col = 0;
      while (col < ncols_ && entry(cursor_, col) != UNDEF) ++col;
      if (col == ncols_) {
        ++cursor_;
        continue;
      }
      if (nrows() >= cap_) {
        if (!recover_space()) return false;  // deduction stack is empty here
        continue;
      }
      set_edge(cursor_, col, new_coset());
      std::int64_t deleted_before = stats_.deleted;
      process_deductions();
      // coincidences can reopen slots on earlier live cosets
      if (stats_.deleted != deleted_before) cursor_ = 0;
    }
    return true;
  }

  CosetTable extract(bool complete) {
    CosetTable out;
    out.ngens = ngens_;
    out.stats = stats_;
    if (!complete) {
      out.status = CosetTable::Status::capped;
      out.index = live_;
      return out;
    }
    compact(UNDEF);
    out.status = CosetTable::Status::complete;
    out.index = nrows();
    out.action = table_;
    return out;
  }

  const Presentation& pres_;
  EnumConfig cfg_;
  int ngens_, ncols_;
  std::int64_t cap_ = 0, lookahead_gap_ = 0;
  std::vector<ScanWord> relators_, subgroup_;
  std::vector<std::vector<std::pair<std::int32_t, std::int32_t>>> occurrences_;

  std::vector<std::int32_t> table_;
  std::vector<std::int32_t> parent_;
  std::int64_t live_ = 0;
  std::int64_t rows_at_cleanup_ = 0;
  std::int32_t cursor_ = 0;
  TcStats stats_;
  bool use_deductions_ = false;
  std::vector<std::pair<std::int32_t, std::int32_t>> deductions_;
};

}  // namespace

CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup_gens,
                        const EnumConfig& cfg) {
  return Enumerator(p, subgroup_gens, cfg).run();
}

std::uint64_t group_order(const Presentation& p, const EnumConfig& cfg) {
  CosetTable t = todd_coxeter(p, {}, cfg);
  if (t.status != CosetTable::Status::complete)
    throw TcCapExceeded(t.stats, t.index);
  return static_cast<std::uint64_t>(t.index);
}

std::int32_t CosetTable::apply_word(std::int32_t coset, const Word& w,
                                    const Alphabet& alpha) const {
  std::int32_t c = coset;
  for (const Letter& l : w)
    c = apply(c, 2 * alpha.col(l.gen) + (l.sign < 0 ? 1 : 0));
  return c;
}

bool CosetTable::validate(const Presentation& p, const std::vector<Word>& subgroup_gens) const {
  if (status != Status::complete) return false;
  if (ngens != p.ngens()) return false;
  for (std::int64_t c = 0; c < index; ++c)
    for (int col = 0; col < ncols(); ++col) {
      std::int32_t d = apply(static_cast<std::int32_t>(c), col);
      if (d < 0 || d >= index) return false;
      if (apply(d, col ^ 1) != c) return false;
    }
  for (std::int64_t c = 0; c < index; ++c)
    for (const Word& r : p.relators())
      if (apply_word(static_cast<std::int32_t>(c), r, p.alphabet()) != c) return false;
  for (const Word& w : subgroup_gens)
    if (apply_word(0, w, p.alphabet()) != 0) return false;
  return true;
}

std::string CosetTable::to_csv(const Presentation& p) const {
  std::ostringstream os;
  os << "coset";
  for (int g = 0; g < ngens; ++g) {
    std::string name = p.alphabet().name(p.alphabet().gen_of_col(g));
    os << ',' << name << ',' << name << "^-1";
  }
  os << '\n';
  for (std::int64_t c = 0; c < index; ++c) {
    os << (c + 1);
    for (int col = 0; col < ncols(); ++col) os << ',' << (apply(static_cast<std::int32_t>(c), col) + 1);
    os << '\n';
  }
  return os.str();
}

}  // namespace cactus
