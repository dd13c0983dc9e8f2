// Acceptance suite: one line per criterion, exact values, enforced
// runtime budgets.  Exit code 0 iff every gating criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "cactus/hom.hpp"
#include "cactus/intmat.hpp"
#include "cactus/perm_group.hpp"
#include "cactus/verify.hpp"

using namespace cactus;

namespace {

int failures = 0;

void criterion(const std::string& name, double budget_s, const std::function<bool(std::string&)>& body) {
  std::string note;
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body(note);
  } catch (const std::exception& e) {
    note = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool in_budget = budget_s <= 0 || secs <= budget_s;
  bool pass = ok && in_budget;
  if (!pass) ++failures;
  std::printf("[%s] %s (%.2f s%s)%s%s\n", pass ? "PASS" : "FAIL", name.c_str(), secs,
              budget_s > 0 ? ("/" + std::to_string(static_cast<int>(budget_s)) + " s budget").c_str() : "",
              note.empty() ? "" : " -- ", note.c_str());
  std::fflush(stdout);
}

// --- criterion 9 helpers ---------------------------------------------------

// Independent canonicalizer: least rotation of the letter sequence or of
// its reversal, no heap traffic.
int oracle_canon(const int* v, int len, int* out) {
  if (len == 0) return 0;
  int best[16], cand[16];
  bool have = false;
  for (int dir = 0; dir < 2; ++dir) {
    for (int s = 0; s < len; ++s) {
      for (int k = 0; k < len; ++k) {
        int idx = (s + k) % len;
        cand[k] = dir == 0 ? v[idx] : v[len - 1 - idx];
      }
      if (!have) {
        for (int k = 0; k < len; ++k) best[k] = cand[k];
        have = true;
        continue;
      }
      for (int k = 0; k < len; ++k) {
        if (cand[k] == best[k]) continue;
        if (cand[k] < best[k])
          for (int j = 0; j < len; ++j) best[j] = cand[j];
        break;
      }
    }
  }
  for (int k = 0; k < len; ++k) out[k] = best[k];
  return len;
}

// Exhaustive rotation/inversion invariance of the canonical form for all
// words of length <= max_len over num_gens involutive letters, checked
// against the independent canonicalizer; the library implementation is
// cross-validated on every word up to cross_len and sampled above that.
bool canonical_invariance_exhaustive(int num_gens, int max_len, int cross_len) {
  int w[16], rot[16], rev[16], c0[16], c1[16], c2[16];
  std::uint64_t state = 424242;
  auto next = [&state] {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return state >> 33;
  };
  for (int len = 1; len <= max_len; ++len) {
    for (int i = 0; i < len; ++i) w[i] = 1;
    while (true) {
      for (int i = 0; i < len; ++i) {
        rot[i] = w[(i + 1) % len];
        rev[i] = w[len - 1 - i];
      }
      int n0 = oracle_canon(w, len, c0);
      int n1 = oracle_canon(rot, len, c1);
      int n2 = oracle_canon(rev, len, c2);
      if (n0 != n1 || n0 != n2) return false;
      for (int k = 0; k < n0; ++k)
        if (c0[k] != c1[k] || c0[k] != c2[k]) return false;

      if (len <= cross_len || next() % 256 == 0) {
        std::vector<int> signed_w(w, w + len);
        for (int& g : signed_w)
          if (next() % 2) g = -g;  // signs never matter
        Word lib = cyclic_canonical(word_from(signed_w));
        if (static_cast<int>(lib.size()) != n0) return false;
        for (int k = 0; k < n0; ++k)
          if (lib[k].gen != c0[k] || lib[k].sign != 1) return false;
        Word lib_rot = cyclic_canonical(word_from(std::vector<int>(rot, rot + len)));
        Word lib_rev = cyclic_canonical(word_from(std::vector<int>(rev, rev + len)));
        if (lib != lib_rot || lib != lib_rev) return false;
      }

      int pos = len - 1;
      while (pos >= 0 && w[pos] == num_gens) w[pos--] = 1;
      if (pos < 0) break;
      ++w[pos];
    }
  }
  return true;
}

long long mobius(int n) {
  long long mu = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

long long witt_count(int k, int w) {
  long long total = 0;
  for (int d = 1; d <= w; ++d) {
    if (w % d) continue;
    long long pw = 1;
    for (int i = 0; i < w / d; ++i) pw *= k;
    total += mobius(d) * pw;
  }
  return total / w;
}

}  // namespace

int main() {
  criterion("criterion-1 presentation-counts", 1.0, [](std::string& note) {
    for (int n = 2; n <= 12; ++n) {
      CountReport r = counts_closed_form(n);
      if (!r.consistent()) {
        note = "mismatch at n=" + std::to_string(n);
        return false;
      }
    }
    return true;
  });

  criterion("criterion-2 homomorphism-suite", 5.0, [](std::string& note) {
    for (int n = 2; n <= 12; ++n) {
      GroupHom a = pi_minimal(n), b = pi_standard(n);
      if (!hom_check(a).passed || !hom_check(b).passed) {
        note = "pi fails at n=" + std::to_string(n);
        return false;
      }
      if (!surjectivity_check(a)) {
        note = "pi not surjective at n=" + std::to_string(n);
        return false;
      }
    }
    for (int n = 3; n <= 12; ++n) {
      GroupHom p4 = phi_d4(n), pi_ = phi_inf(n);
      if (!hom_check(p4).passed || !hom_check(pi_).passed) {
        note = "phi fails at n=" + std::to_string(n);
        return false;
      }
      if (!surjectivity_check(p4) || !surjectivity_check(pi_)) {
        note = "phi not surjective at n=" + std::to_string(n);
        return false;
      }
    }
    {
      GroupHom t = theta();
      if (!hom_check(t).passed) {
        note = "theta fails";
        return false;
      }
    }
    for (int n = 4; n <= 10; ++n) {
      GroupHom tl = theta_lambda(n);
      if (!hom_check(tl).passed) {
        note = "theta-lambda fails at n=" + std::to_string(n);
        return false;
      }
    }
    for (int m = 3; m <= 13; ++m) {
      GroupHom psi = psi_d8(m);
      if (hom_check(psi).passed != (m % 4 != 2)) {
        note = "psi parity rule fails at m=" + std::to_string(m);
        return false;
      }
    }
    for (int m : {6, 10, 14}) {
      GroupHom psi = psi_d8(m);
      CheckReport rep = hom_check(psi);
      if (rep.passed) {
        note = "psi unexpectedly passes at m=" + std::to_string(m);
        return false;
      }
      Word wit = cyclic_canonical(word_from({m, m / 2, m, m / 2, m, m / 2, m, m / 2}));
      std::string expect = to_string(wit, psi.source.alphabet());
      bool found = false;
      for (const CheckFailure& f : rep.failures)
        if (f.relator == expect) found = true;
      if (!found) {
        note = "psi witness missing at m=" + std::to_string(m);
        return false;
      }
    }
    for (int n = 3; n <= 8; ++n)
      for (int m = 1; m <= 64; ++m) {
        GroupHom f = dihedral_factorization(n, m);
        if (!f.checked || !surjectivity_check(f)) {
          note = "factorization fails at n=" + std::to_string(n) + ", m=" + std::to_string(m);
          return false;
        }
      }
    return true;
  });

  criterion("criterion-3 class-2-quotient-orders", 30.0, [](std::string& note) {
    const std::uint64_t expected[] = {8, 32, 64, 256, 512, 2048};
    for (int n = 3; n <= 8; ++n) {
      std::uint64_t got = group_order(thmd_quotient(n));
      if (got != expected[n - 3]) {
        note = "order " + std::to_string(got) + " at n=" + std::to_string(n);
        return false;
      }
    }
    for (int n = 3; n <= 7; ++n)
      if (group_order(class_truncate(minimal_cactus(n), 2)) != group_order(thmd_quotient(n))) {
        note = "construction mismatch at n=" + std::to_string(n);
        return false;
      }
    return true;
  });

  criterion("criterion-4 isomorphism-types", 60.0, [](std::string& note) {
    FiniteGroupTable w = wreath_group();
    IsoResult a = isomorphic(thmd_quotient(4), w);
    if (!a.isomorphic || a.witness.empty()) {
      note = "J4 quotient vs wreath";
      return false;
    }
    FiniteGroupTable z2w = direct_product(cyclic_table(2), wreath_group());
    IsoResult b = isomorphic(thmd_quotient(5), z2w);
    if (!b.isomorphic || b.witness.empty()) {
      note = "J5 quotient vs Z2 x wreath";
      return false;
    }
    return true;
  });

  criterion("criterion-5 layer-2-ranks", 60.0, [](std::string& note) {
    for (int n = 3; n <= 7; ++n) {
      Presentation q = thmd_quotient(n);
      CosetTable t = todd_coxeter(q);
      if (t.status != CosetTable::Status::complete) {
        note = "enumeration capped at n=" + std::to_string(n);
        return false;
      }
      FiniteGroupTable rep = regular_representation(t, q);
      PermGroup g(rep.degree(), rep.generators());
      if (layer_rank(g, 2) != n / 2) {
        note = "rank mismatch at n=" + std::to_string(n);
        return false;
      }
    }
    return true;
  });

  criterion("criterion-6 layer-3-ranks", 120.0, [](std::string& note) {
    for (int n : {4, 5}) {
      Presentation q = class_truncate(minimal_cactus(n), 3);
      CosetTable t = todd_coxeter(q);
      if (t.status != CosetTable::Status::complete) {
        note = "enumeration capped at n=" + std::to_string(n);
        return false;
      }
      std::uint64_t expect_order = n == 4 ? 256 : 512;
      if (static_cast<std::uint64_t>(t.index) != expect_order) {
        note = "quotient order " + std::to_string(t.index) + " at n=" + std::to_string(n);
        return false;
      }
      FiniteGroupTable rep = regular_representation(t, q);
      PermGroup g(rep.degree(), rep.generators());
      if (layer_rank(g, 3) != 3) {
        note = "rank mismatch at n=" + std::to_string(n);
        return false;
      }
    }
    // the order-6 adjudication: a definitive computed value that must
    // contradict exactly one of the two sources
    Presentation q6 = class_truncate(minimal_cactus(6), 3);
    CosetTable t6 = todd_coxeter(q6);
    if (t6.status != CosetTable::Status::complete) {
      note = "order-6 enumeration capped";
      return false;
    }
    int rank;
    if (t6.index <= 8192) {
      FiniteGroupTable rep = regular_representation(t6, q6);
      PermGroup g(rep.degree(), rep.generators());
      rank = layer_rank(g, 3);
    } else {
      std::uint64_t prev = group_order(class_truncate(minimal_cactus(6), 2));
      std::uint64_t ratio = static_cast<std::uint64_t>(t6.index) / prev;
      rank = 0;
      while ((std::uint64_t(1) << rank) < ratio) ++rank;
    }
    const int table_val = kReferenceRanks[2][2];  // 4
    const int formula_val = rank_formula(6, 3);   // 5
    if (rank == table_val)
      note = "n=6 rank " + std::to_string(rank) + "; contradicts the rank formula (" +
             std::to_string(formula_val) + ")";
    else if (rank == formula_val)
      note = "n=6 rank " + std::to_string(rank) + "; contradicts the reference table (" +
             std::to_string(table_val) + ")";
    else {
      note = "n=6 rank " + std::to_string(rank) + " contradicts both sources";
      return false;
    }
    return true;
  });

  criterion("criterion-7 rank-table", 0, [](std::string& note) {
    VerifyConfig cfg;
    RunManifest m = cmd_table({4, 5, 6}, 3, cfg);
    int checked = 0;
    for (const Verdict& v : m.verdicts) {
      if (!v.required) continue;
      if (v.skipped || !v.pass) {
        note = "cell " + v.claim + (v.skipped ? " skipped" : " failed");
        return false;
      }
      ++checked;
    }
    // gating cells: i = 1..3 for each of n = 4, 5, 6
    if (checked != 9) {
      note = "expected 9 gating cells, saw " + std::to_string(checked);
      return false;
    }

    // stretch cells, cap-governed and non-gating; when they complete they
    // must match the table
    VerifyConfig stretch;
    stretch.stretch = true;
    RunManifest s = cmd_table({4}, 5, stretch);
    std::string stretch_note = "stretch:";
    for (const Verdict& v : s.verdicts) {
      if (v.claim == "table-J4-i4" || v.claim == "table-J4-i5") {
        stretch_note += " " + v.claim + "=" +
                        (v.skipped ? std::string("skipped") : v.computed.dump());
        if (!v.skipped && !v.pass) {
          note = "stretch cell " + v.claim + " computed wrong value " + v.computed.dump();
          return false;
        }
      }
    }
    note = stretch_note + "; cells with i >= 6 are out of scope (nilpotent-quotient engine)";
    return true;
  });

  criterion("criterion-8 abelianizations", 1.0, [](std::string& note) {
    for (int n = 2; n <= 8; ++n) {
      if (!abelianization(minimal_cactus(n)).is_elementary_2(n - 1) ||
          !abelianization(standard_cactus(n)).is_elementary_2(n - 1)) {
        note = "not Z2^(n-1) at n=" + std::to_string(n);
        return false;
      }
    }
    return true;
  });

  criterion("criterion-9 property-suites", 0, [](std::string& note) {
    // free reduction idempotence over a deterministic sample
    std::uint64_t state = 2024;
    auto next = [&state] {
      state = state * 6364136223846793005ull + 1442695040888963407ull;
      return state >> 33;
    };
    for (int trial = 0; trial < 5000; ++trial) {
      std::vector<int> ls;
      for (int i = 0, len = next() % 14; i < len; ++i) {
        int g = static_cast<int>(next() % 4) + 1;
        ls.push_back(next() % 2 ? g : -g);
      }
      Word w = word_from(ls);
      for (ReduceMode mode : {ReduceMode::Free, ReduceMode::Involutive}) {
        Word r = reduced(w, mode);
        if (reduced(r, mode) != r || r.size() > w.size()) {
          note = "free reduction property violated";
          return false;
        }
      }
    }

    if (!canonical_invariance_exhaustive(4, 12, 8)) {
      note = "canonical form not rotation/inversion invariant";
      return false;
    }

    for (int k = 1; k <= 4; ++k)
      for (int w = 1; w <= 5; ++w)
        if (static_cast<long long>(hall_basic_commutators(k, w).size()) != witt_count(k, w)) {
          note = "basic commutator count mismatch";
          return false;
        }

    // strategy agreement over the corpus
    std::vector<Presentation> corpus;
    for (int n = 3; n <= 6; ++n) corpus.push_back(thmd_quotient(n));
    for (int k = 1; k <= 4; ++k) corpus.push_back(class_truncate(minimal_cactus(3), k));
    corpus.push_back(class_truncate(minimal_cactus(4), 2));
    corpus.push_back(class_truncate(minimal_cactus(4), 3));
    corpus.push_back(class_truncate(minimal_cactus(5), 2));
    for (const Presentation& p : corpus) {
      EnumConfig h, f;
      f.strategy = TcStrategy::felsch;
      if (group_order(p, h) != group_order(p, f)) {
        note = "strategy disagreement";
        return false;
      }
    }

    // stabilizer-chain order vs exhaustive closure, orders <= 512
    std::vector<std::vector<Perm>> small;
    small.push_back(wreath_group().generators());
    small.push_back(dihedral_table(8).generators());
    {
      std::vector<Perm> revs;
      for (int q = 2; q <= 4; ++q) revs.push_back(sym_generator(4, 1, q));
      small.push_back(revs);
    }
    for (int n = 3; n <= 6; ++n) {
      Presentation p = thmd_quotient(n);
      CosetTable t = todd_coxeter(p);
      small.push_back(regular_representation(t, p).generators());
    }
    for (const auto& gens : small) {
      std::set<Perm> closure{Perm(gens[0].degree())};
      std::vector<Perm> frontier{Perm(gens[0].degree())};
      for (std::size_t i = 0; i < frontier.size(); ++i)
        for (const Perm& g : gens) {
          Perm x = frontier[i] * g;
          if (closure.insert(x).second) frontier.push_back(x);
        }
      if (closure.size() > 512) continue;
      PermGroup pg(gens[0].degree(), gens);
      if (pg.order() != closure.size()) {
        note = "stabilizer chain order disagrees with closure";
        return false;
      }
    }

    // dihedral shadow of the infinite lower central series: the j-th term
    // of D_(2^(k-1)) is the image of <(ab)^(2^(j-1))>, of order 2^(k-j)
    for (int k = 2; k <= 6; ++k) {
      FiniteGroupTable d = dihedral_table(1 << (k - 1));
      PermGroup g(d.degree(), d.generators());
      LcsReport lcs = lower_central_series(g);
      bool ok = lcs.reaches_trivial && lcs.orders.size() == static_cast<std::size_t>(k);
      for (int j = 2; ok && j <= k; ++j)
        ok = lcs.orders[j - 1] == (std::uint64_t(1) << (k - j));
      if (!ok) {
        note = "dihedral series shadow fails at k=" + std::to_string(k);
        return false;
      }
    }

    for (int n = 4; n <= 10; ++n)
      if (!qn_consequence_check(n).passed) {
        note = "consequence check fails at n=" + std::to_string(n);
        return false;
      }
    return true;
  });

  std::printf("ACCEPTANCE: %d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
