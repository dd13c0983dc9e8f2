#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cactus/intmat.hpp"
#include "cactus/perm.hpp"
#include "cactus/presentation.hpp"
#include "cactus/todd_coxeter.hpp"

using namespace cactus;

TEST_CASE("standard presentation counts") {
  Presentation p2 = standard_cactus(2);
  CHECK(p2.ngens() == 1);
  CHECK(p2.relators().size() == 1);

  Presentation p3 = standard_cactus(3);
  CHECK(p3.ngens() == 3);
  CHECK(p3.relators().size() == 4);
  CHECK(p3.count_label(RelatorLabel::square) == 3);
  CHECK(p3.count_label(RelatorLabel::nested) == 1);

  Presentation p4 = standard_cactus(4);
  CHECK(p4.ngens() == 6);
  CHECK(p4.relators().size() == 12);
  CHECK(p4.count_label(RelatorLabel::square) == 6);
  CHECK(p4.count_label(RelatorLabel::disjoint) == 1);
  CHECK(p4.count_label(RelatorLabel::nested) == 5);

  CHECK_THROWS_AS(standard_cactus(1), std::invalid_argument);
}

TEST_CASE("minimal presentation relators") {
  Presentation p3 = minimal_cactus(3);
  CHECK(p3.ngens() == 2);
  REQUIRE(p3.relators().size() == 2);
  CHECK(p3.relators()[0] == cyclic_canonical(word_from({2, 2})));
  CHECK(p3.relators()[1] == cyclic_canonical(word_from({3, 3})));

  Presentation p4 = minimal_cactus(4);
  CHECK(p4.ngens() == 3);
  REQUIRE(p4.relators().size() == 5);
  // (g4 g2)^4 and (g4 g3 g2 g3)^2
  CHECK(p4.has_relator_canonical(cyclic_canonical(word_from({4, 2, 4, 2, 4, 2, 4, 2}))));
  CHECK(p4.has_relator_canonical(cyclic_canonical(word_from({4, 3, 2, 3, 4, 3, 2, 3}))));

  Presentation p5 = minimal_cactus(5);
  CHECK(p5.relators().size() == 10);
  CHECK(p5.count_label(RelatorLabel::square) == 4);
  CHECK(p5.count_label(RelatorLabel::rel5) == 3);
  CHECK(p5.count_label(RelatorLabel::rel6) == 3);
}

TEST_CASE("closed-form counts match enumeration") {
  for (int n = 2; n <= 12; ++n) {
    CountReport r = counts_closed_form(n);
    CHECK(r.consistent());
    CHECK(r.gens_standard == n * (n - 1) / 2);
    CHECK(r.gens_minimal == n - 1);
  }
  CountReport r4 = counts_closed_form(4);
  CHECK(r4.rels_standard == 12);
  CHECK(r4.rels_minimal == 5);
  CountReport r5 = counts_closed_form(5);
  CHECK(r5.gens_standard == 10);
  CHECK(r5.rels_standard == 29);
  CHECK(r5.rels_minimal == 10);
  CountReport r6 = counts_closed_form(6);
  CHECK(r6.gens_standard == 15);
  CHECK(r6.rels_standard == 61);
  CHECK(r6.gens_minimal == 5);
  CHECK(r6.rels_minimal == 19);
}

TEST_CASE("generator translation") {
  CHECK(pq_to_min(1, 4) == word_from({4}));
  CHECK(pq_to_min(2, 3) == word_from({3, 2, 3}));
  CHECK(pq_to_min(3, 4) == word_from({4, 2, 4}));
  CHECK_THROWS_AS(pq_to_min(3, 3), std::invalid_argument);
}

TEST_CASE("smith normal form") {
  IntMatrix d(2, 2);
  d.at(0, 0) = 2;
  d.at(1, 1) = 2;
  auto f = smith_normal_form(d);
  REQUIRE(f.size() == 2);
  CHECK(f[0] == 2);
  CHECK(f[1] == 2);

  // exponent matrix of the standard order-3 presentation, nested relator
  // included with signs
  IntMatrix m(4, 3);
  m.at(0, 0) = 2;
  m.at(1, 1) = 2;
  m.at(2, 2) = 2;
  m.at(3, 0) = 1;
  m.at(3, 2) = -1;
  auto g = smith_normal_form(m);
  REQUIRE(g.size() == 3);
  CHECK(g[0] == 1);
  CHECK(g[1] == 2);
  CHECK(g[2] == 2);

  // a matrix with a zero column keeps a free rank
  IntMatrix z(1, 2);
  z.at(0, 0) = 3;
  auto h = smith_normal_form(z);
  REQUIRE(h.size() == 1);
  CHECK(h[0] == 3);

  // divisibility chain on a random-ish matrix
  IntMatrix r(3, 3);
  int vals[3][3] = {{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.at(i, j) = vals[i][j];
  auto s = smith_normal_form(r);
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if (s[i] != 0 && s[i + 1] != 0) CHECK(s[i + 1] % s[i] == 0);
}

TEST_CASE("abelianization is elementary of rank n-1 for both presentations") {
  for (int n = 2; n <= 8; ++n) {
    AbelianInvariants a = abelianization(minimal_cactus(n));
    CHECK(a.is_elementary_2(n - 1));
    AbelianInvariants b = abelianization(standard_cactus(n));
    CHECK(b.is_elementary_2(n - 1));
  }
  AbelianInvariants t5 = abelianization(thmd_quotient(5));
  CHECK(t5.is_elementary_2(4));
  // minimal order-6 exponent matrix: five invariant factors equal to 2
  AbelianInvariants m6 = abelianization(minimal_cactus(6));
  CHECK(m6.torsion.size() == 5);
  CHECK(m6.free_rank == 0);
}

TEST_CASE("gap text emit and parse round trip") {
  Presentation p = minimal_cactus(4);
  std::string text = p.to_gap();
  CHECK(text.substr(0, 1) == "<");
  Presentation q = Presentation::parse_gap(text);
  CHECK(q.ngens() == p.ngens());
  REQUIRE(q.relators().size() == p.relators().size());
  for (std::size_t i = 0; i < q.relators().size(); ++i)
    CHECK(q.relators()[i] == p.relators()[i]);

  Presentation s = Presentation::parse_gap("< g1,g2 | g1^2, g2^2, g1*g2*g1*g2 >");
  CHECK(s.ngens() == 2);
  CHECK(s.relators().size() == 3);

  Presentation x = standard_cactus(3);
  Presentation y = Presentation::parse_gap(x.to_gap());
  CHECK(y.ngens() == 3);
  CHECK(y.relators().size() == x.relators().size());
}

TEST_CASE("presentation json shape") {
  auto j = minimal_cactus(3).to_json();
  CHECK(j["ngens"] == 2);
  CHECK(j["relators"].size() == 2);
  CHECK(j["labels"][0] == "square");
  CHECK(j["family"] == "minimal(3)");
}

TEST_CASE("class truncation families") {
  Presentation t = class_truncate(minimal_cactus(3), 1);
  // two squares plus one commutator
  CHECK(t.relators().size() == 3);
  CHECK(t.count_label(RelatorLabel::truncation) == 1);
  CHECK(t.family().kind == FamilyKind::truncated);
  CHECK(t.family().trunc_class == 1);
  CHECK_THROWS_AS(class_truncate(minimal_cactus(3), 0), std::invalid_argument);
}

TEST_CASE("translation consistency into the class-3 quotient and the symmetric group") {
  for (int n = 3; n <= 6; ++n) {
    Presentation std_pres = standard_cactus(n);
    Presentation quot = class_truncate(minimal_cactus(n), 3);
    CosetTable table = todd_coxeter(quot);
    REQUIRE(table.status == CosetTable::Status::complete);

    auto translate = [&](const Word& w) {
      return substitute(w, [&](int gen) {
        auto [p, q] = std_pres.alphabet().unpack_interval(gen);
        return pq_to_min(p, q);
      });
    };
    for (const Word& r : std_pres.relators()) {
      Word t = translate(r);
      // identity in the regular action iff it fixes the subgroup coset
      CHECK(table.apply_word(0, t, quot.alphabet()) == 0);
      // and the identity permutation under g_i -> s_{1,i}
      Perm acc(n);
      for (const Letter& l : t) {
        Perm img = sym_generator(n, 1, l.gen);
        acc = acc * img;  // reversals are involutions, signs immaterial
      }
      CHECK(acc.is_identity());
    }
  }
}
