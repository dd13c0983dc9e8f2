#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace cactus {

/// One signed generator letter.  Generator indices are >= 1; which indices
/// are meaningful depends on the ambient alphabet (see Alphabet below).
struct Letter {
  int gen;
  int sign;  // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A word in a free group, stored as a flat letter sequence.
/// Words are plain values; all operations on them are pure.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  static Word generator(int gen, int sign = +1) {
    return Word({Letter{gen, sign}});
  }

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }
  const std::vector<Letter>& letters() const { return letters_; }

  void push_back(Letter l) { letters_.push_back(l); }
  void append(const Word& w) {
    letters_.insert(letters_.end(), w.letters_.begin(), w.letters_.end());
  }

  Word inverse() const;

  friend bool operator==(const Word&, const Word&) = default;

  /// Shortlex order; used as a map key for relator deduplication.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  std::vector<Letter> letters_;
};

/// Builds a word from signed indices: {4, -2} means g4 * g2^-1.
Word word_from(std::initializer_list<int> signed_gens);
Word word_from(const std::vector<int>& signed_gens);

enum class ReduceMode {
  Free,        // cancel g * g^-1 only
  Involutive,  // every generator is its own inverse: cancel any equal pair
};

/// Unique reduced form of w.  Involutive mode additionally cancels adjacent
/// equal letters regardless of sign.
Word reduced(const Word& w, ReduceMode mode = ReduceMode::Free);

/// Freely reduced concatenation.
Word mul(const Word& a, const Word& b);

/// [u, v] = u^-1 v^-1 u v, freely reduced.
Word commutator(const Word& u, const Word& v);

/// Left-normed commutator [w1, w2, ..., wk] = [[w1, ..., w(k-1)], wk].
/// Requires at least two entries.
Word left_normed_commutator(std::span<const Word> ws);

/// Canonical representative of a relator over an involutive alphabet: the
/// lexicographically least rotation of the involutively and cyclically
/// reduced word, taken over the word and its inverse.  All signs in the
/// result are +1.  Two relators impose the same relation (mod squares)
/// iff their canonical forms are equal.
Word cyclic_canonical(const Word& w);

/// Hall basic commutators of weight w over generators 1..k, as expanded
/// words, in construction-tuple order.
std::vector<Word> hall_basic_commutators(int k, int w);

/// Letterwise image under gen -> f(gen); f returning 0 erases the letter.
/// The result is not reduced.
Word map_generators(const Word& w, const std::function<int(int)>& f);

/// Letterwise substitution gen -> word; inverse letters map to the inverse
/// of the image word.  The result is freely reduced.
Word substitute(const Word& w, const std::function<Word(int)>& f);

Word erase_generator(const Word& w, int gen);

// ---------------------------------------------------------------------------
// Generator naming and text syntax.
//
// Words print as `*`-separated letters with `^k` powers, e.g. g4*g2*g4^-1.
// The empty word prints as `1`.  Two alphabets are in use: lettered ones
// (g2, g3, ...) and interval ones (x[p,q] for 1 <= p < q <= n, packed
// bijectively into indices).
// ---------------------------------------------------------------------------

class Alphabet {
 public:
  /// Generators g<lo> .. g<hi>.
  static Alphabet lettered(int lo, int hi);
  /// Generators x[p,q] for 1 <= p < q <= n.
  static Alphabet intervals(int n);

  int count() const { return count_; }

  /// Dense column index in [0, count) for a generator index.
  int col(int gen) const;
  int gen_of_col(int col) const;
  bool contains(int gen) const;

  std::string name(int gen) const;

  /// Interval alphabets only.
  static int pack_interval(int p, int q);
  std::pair<int, int> unpack_interval(int gen) const;

  bool is_interval() const { return interval_n_ > 0; }
  int interval_n() const { return interval_n_; }
  int lo() const { return lo_; }
  int hi() const { return hi_; }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  int lo_ = 1;
  int hi_ = 0;
  int interval_n_ = 0;  // 0 for lettered alphabets
  int count_ = 0;
};

std::string to_string(const Word& w, const Alphabet& a);

/// Parses the print format back; bit-exact round trip with to_string.
Word parse_word(const std::string& text, const Alphabet& a);

}  // namespace cactus
