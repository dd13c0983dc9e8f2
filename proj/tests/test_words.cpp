#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <numeric>

#include "cactus/word.hpp"

using namespace cactus;

namespace {

// Independent necklace counter: (1/w) * sum_{d | w} mu(d) k^(w/d).
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

TEST_CASE("free reduction cancels inverse pairs") {
  Word w = word_from({1, -1, 2});
  CHECK(reduced(w) == word_from({2}));
  CHECK(reduced(word_from({4, 4, 3}), ReduceMode::Involutive) == word_from({3}));
  // plain mode keeps squares
  CHECK(reduced(word_from({4, 4, 3})) == word_from({4, 4, 3}));
}

TEST_CASE("erase-then-reduce used by the qn checker") {
  Word w = word_from({4, 2, 4, 2});
  Word erased = erase_generator(w, 2);
  CHECK(reduced(erased, ReduceMode::Involutive).empty());
}

TEST_CASE("free reduction is idempotent and length-non-increasing") {
  // deterministic pseudo-random words
  std::uint64_t state = 12345;
  auto next = [&state] {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return state >> 33;
  };
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<int> ls;
    int len = static_cast<int>(next() % 16);
    for (int i = 0; i < len; ++i) {
      int g = static_cast<int>(next() % 4) + 1;
      ls.push_back(next() % 2 ? g : -g);
    }
    Word w = word_from(ls);
    for (ReduceMode mode : {ReduceMode::Free, ReduceMode::Involutive}) {
      Word r = reduced(w, mode);
      CHECK(r.size() <= w.size());
      CHECK(reduced(r, mode) == r);
    }
  }
}

TEST_CASE("commutators") {
  Word a = Word::generator(1), b = Word::generator(2), c = Word::generator(3);
  CHECK(commutator(a, b) == word_from({-1, -2, 1, 2}));
  CHECK(commutator(a, a).empty());

  // [a,b,c] expanded by hand: (a^-1 b^-1 a b)^-1 c^-1 (a^-1 b^-1 a b) c,
  // freely reduced to 10 letters
  std::vector<Word> abc = {a, b, c};
  Word w = left_normed_commutator(abc);
  CHECK(w == word_from({-2, -1, 2, 1, -3, -1, -2, 1, 2, 3}));
  CHECK(w.size() == 10);

  std::vector<Word> tooShort = {a};
  CHECK_THROWS_AS(left_normed_commutator(tooShort), std::invalid_argument);
}

TEST_CASE("cyclic canonical forms") {
  // (ab)^2 vs (ba)^2
  CHECK(cyclic_canonical(word_from({1, 2, 1, 2})) == cyclic_canonical(word_from({2, 1, 2, 1})));
  CHECK(cyclic_canonical(word_from({1, 1})) == cyclic_canonical(word_from({1, 1})));

  // the two nested relators of the standard order-3 presentation, with
  // x[1,2] -> 1, x[1,3] -> 2, x[2,3] -> 3
  Word r1 = word_from({2, 1, -2, -3});
  Word r2 = word_from({2, 3, -2, -1});
  CHECK(cyclic_canonical(r1) == cyclic_canonical(r2));
}

TEST_CASE("cyclic canonical invariance, exhaustive short words") {
  // rotation by one and inversion generate all rotations and inversions
  std::vector<int> word;
  auto check_all = [&](auto&& self, int len, int maxlen) -> void {
    if (len > 0) {
      Word w = word_from(word);
      Word canon = cyclic_canonical(w);
      std::vector<int> rot(word.begin() + 1, word.end());
      rot.push_back(word[0]);
      CHECK(cyclic_canonical(word_from(rot)) == canon);
      std::vector<int> rev(word.rbegin(), word.rend());
      CHECK(cyclic_canonical(word_from(rev)) == canon);
    }
    if (len == maxlen) return;
    for (int g = 1; g <= 3; ++g) {
      word.push_back(g);
      self(self, len + 1, maxlen);
      word.pop_back();
    }
  };
  check_all(check_all, 0, 8);
}

TEST_CASE("hall basic commutators") {
  auto w22 = hall_basic_commutators(2, 2);
  REQUIRE(w22.size() == 1);
  CHECK(w22[0] == commutator(Word::generator(2), Word::generator(1)));

  auto w23 = hall_basic_commutators(2, 3);
  REQUIRE(w23.size() == 2);
  Word c21 = commutator(Word::generator(2), Word::generator(1));
  CHECK(w23[0] == commutator(c21, Word::generator(1)));
  CHECK(w23[1] == commutator(c21, Word::generator(2)));

  CHECK(hall_basic_commutators(3, 2).size() == 3);

  for (int k = 1; k <= 4; ++k)
    for (int w = 1; w <= 5; ++w)
      CHECK(static_cast<long long>(hall_basic_commutators(k, w).size()) == witt_count(k, w));
}

TEST_CASE("word text syntax round trip") {
  Alphabet a = Alphabet::lettered(2, 6);
  Word w = word_from({4, 2, -4});
  CHECK(to_string(w, a) == "g4*g2*g4^-1");
  CHECK(parse_word("g4*g2*g4^-1", a) == w);
  CHECK(to_string(Word(), a) == "1");
  CHECK(parse_word("1", a).empty());
  CHECK(parse_word("g2^2", a) == word_from({2, 2}));
  CHECK(parse_word("g2^-2", a) == word_from({-2, -2}));

  Alphabet x = Alphabet::intervals(4);
  Word v = word_from({Alphabet::pack_interval(1, 4), -Alphabet::pack_interval(2, 3)});
  CHECK(to_string(v, x) == "x[1,4]*x[2,3]^-1");
  CHECK(parse_word("x[1,4]*x[2,3]^-1", x) == v);

  // print -> parse -> print is stable on random words
  std::uint64_t state = 99;
  auto next = [&state] {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return state >> 33;
  };
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<int> ls;
    int len = static_cast<int>(next() % 10);
    for (int i = 0; i < len; ++i) {
      int g = static_cast<int>(next() % 5) + 2;
      ls.push_back(next() % 2 ? g : -g);
    }
    Word w2 = word_from(ls);
    std::string s = to_string(w2, a);
    CHECK(parse_word(s, a) == w2);
    CHECK(to_string(parse_word(s, a), a) == s);
  }
}

TEST_CASE("interval packing is a bijection") {
  Alphabet a = Alphabet::intervals(7);
  int count = 0;
  for (int q = 2; q <= 7; ++q)
    for (int p = 1; p < q; ++p) {
      int g = Alphabet::pack_interval(p, q);
      auto [p2, q2] = a.unpack_interval(g);
      CHECK(p == p2);
      CHECK(q == q2);
      ++count;
    }
  CHECK(count == a.count());
}
