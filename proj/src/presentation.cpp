#include "cactus/presentation.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

namespace cactus {

std::string to_string(RelatorLabel l) {
  switch (l) {
    case RelatorLabel::square: return "square";
    case RelatorLabel::disjoint: return "disjoint";
    case RelatorLabel::nested: return "nested";
    case RelatorLabel::rel5: return "rel5";
    case RelatorLabel::rel6: return "rel6";
    case RelatorLabel::commuting: return "commuting";
    case RelatorLabel::triple: return "triple";
    case RelatorLabel::equalizer: return "equalizer";
    case RelatorLabel::truncation: return "truncation";
    case RelatorLabel::parsed: return "parsed";
  }
  return "?";
}

namespace {

std::string family_kind_str(FamilyKind k) {
  switch (k) {
    case FamilyKind::standard_pres: return "standard";
    case FamilyKind::minimal: return "minimal";
    case FamilyKind::thmd: return "thmd";
    case FamilyKind::truncated: return "truncated";
    case FamilyKind::custom: return "custom";
  }
  return "?";
}

}  // namespace

std::string Family::str() const {
  if (kind == FamilyKind::truncated) {
    return "truncated(" + family_kind_str(base) + ":" + std::to_string(n) + ", class " +
           std::to_string(trunc_class) + ")";
  }
  if (kind == FamilyKind::custom) return "custom";
  return family_kind_str(kind) + "(" + std::to_string(n) + ")";
}

bool Presentation::add_relator(const Word& w, RelatorLabel label) {
  for (const Letter& l : w) {
    if (!alphabet_.contains(l.gen))
      throw std::invalid_argument("add_relator: letter outside the alphabet");
  }
  Word canon = cyclic_canonical(reduced(w, ReduceMode::Free));
  if (canon.empty()) return false;
  if (index_.count(canon)) return false;
  index_.emplace(canon, relators_.size());
  relators_.push_back(std::move(canon));
  labels_.push_back(label);
  return true;
}

std::size_t Presentation::count_label(RelatorLabel l) const {
  std::size_t c = 0;
  for (RelatorLabel x : labels_)
    if (x == l) ++c;
  return c;
}

std::string Presentation::to_gap() const {
  std::ostringstream os;
  os << "< ";
  for (int c = 0; c < alphabet_.count(); ++c) {
    if (c) os << ",";
    os << alphabet_.name(alphabet_.gen_of_col(c));
  }
  os << " | ";
  for (std::size_t i = 0; i < relators_.size(); ++i) {
    if (i) os << ", ";
    os << to_string(relators_[i], alphabet_);
  }
  os << " >";
  return os.str();
}

nlohmann::ordered_json Presentation::to_json() const {
  nlohmann::ordered_json j;
  j["ngens"] = ngens();
  nlohmann::ordered_json rels = nlohmann::ordered_json::array();
  for (const Word& w : relators_) {
    nlohmann::ordered_json r = nlohmann::ordered_json::array();
    for (const Letter& l : w) r.push_back({l.gen, l.sign});
    rels.push_back(r);
  }
  j["relators"] = rels;
  nlohmann::ordered_json labels = nlohmann::ordered_json::array();
  for (RelatorLabel l : labels_) labels.push_back(to_string(l));
  j["labels"] = labels;
  j["family"] = family_.str();
  return j;
}

Presentation Presentation::parse_gap(const std::string& text) {
  auto lt = text.find('<');
  auto bar = text.find('|');
  auto gt = text.rfind('>');
  if (lt == std::string::npos || bar == std::string::npos || gt == std::string::npos ||
      !(lt < bar && bar < gt))
    throw std::invalid_argument("parse_gap: expected < gens | relators >");

  auto split = [](const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    for (char c : s) {
      if (c == '[') ++depth;
      if (c == ']') --depth;
      if (c == sep && depth == 0) {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (!cur.empty()) parts.push_back(cur);
    return parts;
  };
  auto trim = [](std::string s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    return s;
  };

  std::vector<std::string> gen_names = split(text.substr(lt + 1, bar - lt - 1), ',');
  for (auto& g : gen_names) g = trim(g);
  if (gen_names.empty()) throw std::invalid_argument("parse_gap: no generators");

  Alphabet alpha = Alphabet::lettered(1, 1);
  if (gen_names[0][0] == 'x') {
    int n = 0;
    for (const auto& name : gen_names) {
      Alphabet probe = Alphabet::intervals(64);
      Word w = parse_word(name, probe);
      auto [p, q] = probe.unpack_interval(w[0].gen);
      (void)p;
      n = std::max(n, q);
    }
    alpha = Alphabet::intervals(n);
  } else {
    int lo = 1 << 30, hi = 0;
    for (const auto& name : gen_names) {
      if (name.size() < 2 || name[0] != 'g')
        throw std::invalid_argument("parse_gap: bad generator name " + name);
      int idx = std::stoi(name.substr(1));
      lo = std::min(lo, idx);
      hi = std::max(hi, idx);
    }
    alpha = Alphabet::lettered(lo, hi);
  }

  Presentation p(alpha, Family{FamilyKind::custom, 0, FamilyKind::custom, 0});
  for (const std::string& part : split(text.substr(bar + 1, gt - bar - 1), ',')) {
    std::string r = trim(part);
    if (r.empty()) continue;
    p.add_relator(parse_word(r, alpha), RelatorLabel::parsed);
  }
  return p;
}

// ---------------------------------------------------------------------------
// Builders
// ---------------------------------------------------------------------------

Presentation standard_cactus(int n) {
  if (n < 2) throw std::invalid_argument("standard_cactus: n must be at least 2");
  Presentation pres(Alphabet::intervals(n), Family{FamilyKind::standard_pres, n});
  auto x = [](int p, int q) { return Alphabet::pack_interval(p, q); };

  for (int q = 2; q <= n; ++q)
    for (int p = 1; p < q; ++p)
      pres.add_relator(word_from({x(p, q), x(p, q)}), RelatorLabel::square);

  // disjoint intervals [p,q], [r,s] with q < r
  for (int p = 1; p <= n; ++p)
    for (int q = p + 1; q <= n; ++q)
      for (int r = q + 1; r <= n; ++r)
        for (int s = r + 1; s <= n; ++s)
          pres.add_relator(word_from({x(p, q), x(r, s), -x(p, q), -x(r, s)}),
                           RelatorLabel::disjoint);

  // nested intervals [r,s] strictly inside [p,q]; the relation maps [r,s]
  // to its mirror [p+q-s, p+q-r], so each unordered mirror pair yields one
  // canonical relator
  for (int p = 1; p <= n; ++p)
    for (int q = p + 1; q <= n; ++q)
      for (int r = p; r <= q; ++r)
        for (int s = r + 1; s <= q; ++s) {
          if (r == p && s == q) continue;
          pres.add_relator(
              word_from({x(p, q), x(r, s), -x(p, q), -x(p + q - s, p + q - r)}),
              RelatorLabel::nested);
        }
  return pres;
}

Presentation minimal_cactus(int n) {
  if (n < 2) throw std::invalid_argument("minimal_cactus: n must be at least 2");
  Presentation pres(Alphabet::lettered(2, n), Family{FamilyKind::minimal, n});

  for (int i = 2; i <= n; ++i)
    pres.add_relator(word_from({i, i}), RelatorLabel::square);

  for (int k = 2; k <= n; ++k)
    for (int i = 2; i <= k; ++i)
      for (int j = i; j <= k; ++j) {
        if (i + j < 4 || i + j > k) continue;
        pres.add_relator(word_from({k, i, k, j, k, i, k, j}), RelatorLabel::rel5);
      }

  for (int k = 2; k <= n; ++k)
    for (int i = 1; i < k; ++i)
      for (int j = 2; j < k; ++j) {
        if (i + j < 3 || i + j >= k || i + j > k - i) continue;
        pres.add_relator(
            word_from({k, i + j, j, i + j, -k, -(k - i), -j, -(k - i)}),
            RelatorLabel::rel6);
      }
  return pres;
}

Presentation thmd_quotient(int n) {
  if (n < 3) throw std::invalid_argument("thmd_quotient: n must be at least 3");
  Presentation pres(Alphabet::lettered(2, n), Family{FamilyKind::thmd, n});
  const int pivot = (n + 1) / 2;

  for (int i = 2; i <= n; ++i)
    pres.add_relator(word_from({i, i}), RelatorLabel::square);

  for (int i = 2; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (i < pivot || (j - i) % 2 == 0)
        pres.add_relator(commutator(Word::generator(i), Word::generator(j)),
                         RelatorLabel::commuting);

  for (int i = 2; i <= n; ++i)
    for (int j = 2; j <= n; ++j) {
      if (i == j) continue;
      for (int k = 2; k <= n; ++k) {
        std::array<Word, 3> ws = {Word::generator(i), Word::generator(j),
                                  Word::generator(k)};
        pres.add_relator(left_normed_commutator(ws), RelatorLabel::triple);
      }
    }

  for (int i = 2; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        if ((k - j) % 2 != 0) continue;
        Word w = commutator(Word::generator(i), Word::generator(j));
        w.append(commutator(Word::generator(i), Word::generator(k)).inverse());
        pres.add_relator(reduced(w), RelatorLabel::equalizer);
      }
  return pres;
}

Presentation class_truncate(const Presentation& p, int c) {
  if (c < 1) throw std::invalid_argument("class_truncate: class must be at least 1");
  Family fam{FamilyKind::truncated, p.family().n,
             p.family().kind == FamilyKind::truncated ? p.family().base : p.family().kind,
             c};
  Presentation out(p.alphabet(), fam);
  for (std::size_t i = 0; i < p.relators().size(); ++i)
    out.add_relator(p.relators()[i], p.labels()[i]);

  const int m = p.ngens();
  std::vector<Word> gens(m);
  for (int col = 0; col < m; ++col)
    gens[col] = Word::generator(p.alphabet().gen_of_col(col));

  // all (c+1)-tuples with the first two entries distinct; equal first two
  // give freely trivial words
  std::vector<int> tuple(c + 1, 0);
  while (true) {
    if (tuple[0] != tuple[1]) {
      std::vector<Word> ws;
      ws.reserve(c + 1);
      for (int t : tuple) ws.push_back(gens[t]);
      out.add_relator(left_normed_commutator(ws), RelatorLabel::truncation);
    }
    int pos = c;
    while (pos >= 0 && tuple[pos] == m - 1) tuple[pos--] = 0;
    if (pos < 0) break;
    ++tuple[pos];
  }
  return out;
}

CountReport counts_closed_form(int n) {
  if (n < 2) throw std::invalid_argument("counts_closed_form: n must be at least 2");
  CountReport r;
  r.n = n;
  const std::int64_t nn = n;
  const std::int64_t sign = (n % 2 == 0) ? 1 : -1;

  std::int64_t num_std = 6 * nn * nn * nn * nn - 16 * nn * nn * nn + 48 * nn * nn - 32 * nn - 3 + 3 * sign;
  std::int64_t num_min = 4 * nn * nn * nn - 18 * nn * nn + 44 * nn - 27 + 3 * sign;
  if (num_std % 96 != 0 || num_min % 24 != 0)
    throw std::logic_error("counts_closed_form: non-integral closed form");
  r.rels_standard = num_std / 96;
  r.rels_minimal = num_min / 24;
  r.gens_standard = nn * (nn - 1) / 2;
  r.gens_minimal = nn - 1;

  Presentation s = standard_cactus(n);
  Presentation m = minimal_cactus(n);
  r.gens_standard_enum = s.ngens();
  r.rels_standard_enum = static_cast<std::int64_t>(s.relators().size());
  r.gens_minimal_enum = m.ngens();
  r.rels_minimal_enum = static_cast<std::int64_t>(m.relators().size());
  return r;
}

std::string CountReport::csv_header() {
  return "n,G_n,R_n,Gt_n,Rt_n,G_enum,R_enum,Gt_enum,Rt_enum";
}

std::string CountReport::csv_row() const {
  std::ostringstream os;
  os << n << ',' << gens_standard << ',' << rels_standard << ',' << gens_minimal << ','
     << rels_minimal << ',' << gens_standard_enum << ',' << rels_standard_enum << ','
     << gens_minimal_enum << ',' << rels_minimal_enum;
  return os.str();
}

Word pq_to_min(int p, int q) {
  if (!(1 <= p && p < q)) throw std::invalid_argument("pq_to_min: need 1 <= p < q");
  Word w = word_from({q, q - p + 1, q});
  w = erase_generator(w, 1);
  return reduced(w, ReduceMode::Involutive);
}

}  // namespace cactus
