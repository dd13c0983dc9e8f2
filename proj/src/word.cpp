#include "cactus/word.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace cactus {

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.push_back(Letter{it->gen, -it->sign});
  return Word(std::move(out));
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].gen != b[i].gen) return a[i].gen <=> b[i].gen;
    if (a[i].sign != b[i].sign) return a[i].sign <=> b[i].sign;
  }
  return std::strong_ordering::equal;
}

Word word_from(std::initializer_list<int> signed_gens) {
  return word_from(std::vector<int>(signed_gens));
}

Word word_from(const std::vector<int>& signed_gens) {
  std::vector<Letter> out;
  out.reserve(signed_gens.size());
  for (int g : signed_gens) {
    if (g == 0) throw std::invalid_argument("word_from: zero index");
    out.push_back(Letter{std::abs(g), g > 0 ? +1 : -1});
  }
  return Word(std::move(out));
}

Word reduced(const Word& w, ReduceMode mode) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    if (!out.empty() && out.back().gen == l.gen &&
        (mode == ReduceMode::Involutive || out.back().sign != l.sign)) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return Word(std::move(out));
}

Word mul(const Word& a, const Word& b) {
  Word c = a;
  c.append(b);
  return reduced(c);
}

Word commutator(const Word& u, const Word& v) {
  Word c = u.inverse();
  c.append(v.inverse());
  c.append(u);
  c.append(v);
  return reduced(c);
}

Word left_normed_commutator(std::span<const Word> ws) {
  if (ws.size() < 2)
    throw std::invalid_argument("left_normed_commutator: need at least 2 arguments");
  Word acc = commutator(ws[0], ws[1]);
  for (std::size_t i = 2; i < ws.size(); ++i) acc = commutator(acc, ws[i]);
  return acc;
}

namespace {

// Least rotation of v, compared against the current best; v must be
// cyclically reduced so every rotation is itself reduced.
void min_rotation_into(const std::vector<int>& v, std::vector<int>& best) {
  const std::size_t n = v.size();
  std::vector<int> cand(n);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t i = 0; i < n; ++i) cand[i] = v[(s + i) % n];
    if (best.empty() || cand < best) best = cand;
  }
}

}  // namespace

Word cyclic_canonical(const Word& w) {
  // signs are forgotten (every generator is an involution); the word is
  // NOT shortened here, so the square g*g keeps its own canonical form,
  // distinct for each generator.  Reduction stays an explicit caller step.
  std::vector<int> v;
  v.reserve(w.size());
  for (const Letter& l : w) v.push_back(l.gen);
  if (v.empty()) return Word();

  std::vector<int> best;
  min_rotation_into(v, best);
  std::vector<int> rev(v.rbegin(), v.rend());
  min_rotation_into(rev, best);

  std::vector<Letter> out;
  out.reserve(best.size());
  for (int g : best) out.push_back(Letter{g, +1});
  return Word(std::move(out));
}

std::vector<Word> hall_basic_commutators(int k, int w) {
  if (k < 1 || w < 1)
    throw std::invalid_argument("hall_basic_commutators: k and w must be positive");

  struct Basic {
    int weight;
    int left, right;  // indices into the list; -1 for weight-1 entries
    Word word;
  };
  std::vector<Basic> list;
  for (int g = 1; g <= k; ++g)
    list.push_back(Basic{1, -1, -1, Word::generator(g)});

  for (int l = 2; l <= w; ++l) {
    const std::size_t end = list.size();
    for (std::size_t i = 0; i < end; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (list[i].weight + list[j].weight != l) continue;
        // if b_i = [b_s, b_t] then b_j >= b_t
        if (list[i].left >= 0 && static_cast<int>(j) < list[i].right) continue;
        list.push_back(Basic{l, static_cast<int>(i), static_cast<int>(j),
                             commutator(list[i].word, list[j].word)});
      }
    }
  }

  std::vector<Word> out;
  for (const Basic& b : list)
    if (b.weight == w) out.push_back(b.word);
  return out;
}

Word map_generators(const Word& w, const std::function<int(int)>& f) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    int g = f(l.gen);
    if (g != 0) out.push_back(Letter{g, l.sign});
  }
  return Word(std::move(out));
}

Word substitute(const Word& w, const std::function<Word(int)>& f) {
  Word out;
  for (const Letter& l : w) {
    Word img = f(l.gen);
    if (l.sign < 0) img = img.inverse();
    out.append(img);
  }
  return reduced(out);
}

Word erase_generator(const Word& w, int gen) {
  return map_generators(w, [gen](int g) { return g == gen ? 0 : g; });
}

// ---------------------------------------------------------------------------
// Alphabets and text syntax
// ---------------------------------------------------------------------------

Alphabet Alphabet::lettered(int lo, int hi) {
  if (lo < 1 || hi < lo) throw std::invalid_argument("Alphabet::lettered: bad range");
  Alphabet a;
  a.lo_ = lo;
  a.hi_ = hi;
  a.count_ = hi - lo + 1;
  return a;
}

Alphabet Alphabet::intervals(int n) {
  if (n < 2) throw std::invalid_argument("Alphabet::intervals: n must be at least 2");
  Alphabet a;
  a.interval_n_ = n;
  a.lo_ = 1;
  a.count_ = n * (n - 1) / 2;
  a.hi_ = a.count_;
  return a;
}

int Alphabet::col(int gen) const {
  if (!contains(gen)) throw std::out_of_range("Alphabet::col: generator out of range");
  return gen - lo_;
}

int Alphabet::gen_of_col(int col) const {
  if (col < 0 || col >= count_) throw std::out_of_range("Alphabet::gen_of_col");
  return col + lo_;
}

bool Alphabet::contains(int gen) const { return gen >= lo_ && gen <= hi_; }

int Alphabet::pack_interval(int p, int q) {
  if (!(1 <= p && p < q)) throw std::invalid_argument("pack_interval: need 1 <= p < q");
  return (q - 1) * (q - 2) / 2 + p;
}

std::pair<int, int> Alphabet::unpack_interval(int gen) const {
  if (!is_interval() || !contains(gen))
    throw std::out_of_range("unpack_interval: not an interval generator");
  int q = 2;
  while ((q - 1) * (q - 2) / 2 + (q - 1) < gen) ++q;
  int p = gen - (q - 1) * (q - 2) / 2;
  return {p, q};
}

std::string Alphabet::name(int gen) const {
  if (!contains(gen)) throw std::out_of_range("Alphabet::name");
  if (is_interval()) {
    auto [p, q] = unpack_interval(gen);
    return "x[" + std::to_string(p) + "," + std::to_string(q) + "]";
  }
  return "g" + std::to_string(gen);
}

std::string to_string(const Word& w, const Alphabet& a) {
  if (w.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += "*";
    out += a.name(w[i].gen);
    int e = static_cast<int>(j - i) * w[i].sign;
    if (e != 1) out += "^" + std::to_string(e);
    i = j;
  }
  return out;
}

namespace {

struct Cursor {
  const std::string& s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  void expect(char c) {
    if (peek() != c)
      throw std::invalid_argument("parse_word: expected '" + std::string(1, c) + "'");
    ++i;
  }
  long integer() {
    skip_ws();
    std::size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw std::invalid_argument("parse_word: expected integer");
    return std::stol(s.substr(start, i - start));
  }
};

int parse_generator(Cursor& c, const Alphabet& a) {
  char ch = c.peek();
  if (ch == 'g') {
    ++c.i;
    int gen = static_cast<int>(c.integer());
    if (!a.contains(gen)) throw std::invalid_argument("parse_word: unknown generator g" + std::to_string(gen));
    return gen;
  }
  if (ch == 'x') {
    ++c.i;
    c.expect('[');
    int p = static_cast<int>(c.integer());
    c.expect(',');
    int q = static_cast<int>(c.integer());
    c.expect(']');
    int gen = Alphabet::pack_interval(p, q);
    if (!a.contains(gen)) throw std::invalid_argument("parse_word: interval generator out of range");
    return gen;
  }
  throw std::invalid_argument("parse_word: expected generator name");
}

}  // namespace

Word parse_word(const std::string& text, const Alphabet& a) {
  Cursor c{text};
  if (c.peek() == '1') {
    ++c.i;
    if (!c.eof()) throw std::invalid_argument("parse_word: trailing input after 1");
    return Word();
  }
  std::vector<Letter> out;
  while (true) {
    int gen = parse_generator(c, a);
    long e = 1;
    if (c.peek() == '^') {
      ++c.i;
      e = c.integer();
    }
    int sign = e >= 0 ? +1 : -1;
    for (long r = 0; r < std::labs(e); ++r) out.push_back(Letter{gen, sign});
    if (c.eof()) break;
    c.expect('*');
  }
  return Word(std::move(out));
}

}  // namespace cactus
