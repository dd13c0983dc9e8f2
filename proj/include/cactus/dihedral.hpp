#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cactus/word.hpp"

namespace cactus {

/// Element of the dihedral group D_m = <a, b | a^2 = b^2 = (ab)^m = 1> in
/// the normal form a^e (ab)^k, with m = 0 meaning the infinite dihedral
/// group Z2 * Z2.  Equality is structural, so the word problem for these
/// targets is a field comparison.
class DihedralElem {
 public:
  DihedralElem() = default;
  DihedralElem(std::int64_t m, bool reflection, std::int64_t shift)
      : m_(m), refl_(reflection), shift_(norm(m, shift)) {
    if (m < 0) throw std::invalid_argument("DihedralElem: bad order parameter");
  }

  static DihedralElem identity(std::int64_t m) { return DihedralElem(m, false, 0); }
  static DihedralElem a(std::int64_t m) { return DihedralElem(m, true, 0); }
  static DihedralElem b(std::int64_t m) { return DihedralElem(m, true, 1); }  // b = a*(ab)
  static DihedralElem rotation(std::int64_t m, std::int64_t k) {
    return DihedralElem(m, false, k);
  }

  std::int64_t m() const { return m_; }
  bool reflection() const { return refl_; }
  std::int64_t shift() const { return shift_; }
  bool is_identity() const { return !refl_ && shift_ == 0; }

  // a (ab)^k a = (ab)^-k, so (e1,k1)(e2,k2) = (e1^e2, e2 ? k2-k1 : k1+k2)
  DihedralElem operator*(const DihedralElem& o) const {
    if (m_ != o.m_) throw std::invalid_argument("DihedralElem: mixed group orders");
    bool e = refl_ != o.refl_;
    std::int64_t k = o.refl_ ? o.shift_ - shift_ : shift_ + o.shift_;
    return DihedralElem(m_, e, k);
  }

  DihedralElem inverse() const {
    return refl_ ? *this : DihedralElem(m_, false, -shift_);
  }

  friend bool operator==(const DihedralElem&, const DihedralElem&) = default;

  std::string str() const {
    return "a^" + std::to_string(refl_ ? 1 : 0) + "*(ab)^" + std::to_string(shift_);
  }

 private:
  static std::int64_t norm(std::int64_t m, std::int64_t k) {
    if (m == 0) return k;
    k %= m;
    return k < 0 ? k + m : k;
  }

  std::int64_t m_ = 0;
  bool refl_ = false;
  std::int64_t shift_ = 0;
};

/// Reduced element of Z2 * Z2 (an alternating word in the two free-factor
/// involutions), optionally extended by a central involution for the group
/// (Z2 * Z2) x Z2.  Letters are stored as 0/1.
class FreeProdElem {
 public:
  FreeProdElem() = default;
  FreeProdElem(bool central, std::vector<std::uint8_t> alternating)
      : central_(central), alt_(std::move(alternating)) {
    for (std::size_t i = 1; i < alt_.size(); ++i)
      if (alt_[i] == alt_[i - 1])
        throw std::invalid_argument("FreeProdElem: word is not alternating");
  }

  static FreeProdElem identity() { return FreeProdElem(); }
  static FreeProdElem central() { return FreeProdElem(true, {}); }
  static FreeProdElem letter(int which) {
    return FreeProdElem(false, {static_cast<std::uint8_t>(which)});
  }

  bool central_flag() const { return central_; }
  const std::vector<std::uint8_t>& word() const { return alt_; }
  bool is_identity() const { return !central_ && alt_.empty(); }

  FreeProdElem operator*(const FreeProdElem& o) const {
    FreeProdElem r;
    r.central_ = central_ != o.central_;
    r.alt_ = alt_;
    for (std::uint8_t l : o.alt_) {
      if (!r.alt_.empty() && r.alt_.back() == l)
        r.alt_.pop_back();
      else
        r.alt_.push_back(l);
    }
    return r;
  }

  FreeProdElem inverse() const {
    FreeProdElem r;
    r.central_ = central_;
    r.alt_.assign(alt_.rbegin(), alt_.rend());
    return r;
  }

  friend bool operator==(const FreeProdElem&, const FreeProdElem&) = default;

  /// Pure Z2 * Z2 elements print over {a, b}; with a central flag the word
  /// letters print as {b, c} and the central involution as a.
  std::string str(bool with_central = false) const {
    std::string s;
    if (with_central) s += central_ ? "a^1*" : "a^0*";
    if (alt_.empty()) return s.empty() ? "1" : s + "1";
    for (std::uint8_t l : alt_) s += with_central ? (l ? 'c' : 'b') : (l ? 'b' : 'a');
    return s;
  }

 private:
  bool central_ = false;
  std::vector<std::uint8_t> alt_;
};

/// Reduces a word over {a, b} (gens 1, 2) into Z2 * Z2, or over {a, b, c}
/// (gens 1, 2, 3) into (Z2 * Z2) x Z2 with a central.  Signs are ignored;
/// every letter is an involution.
inline FreeProdElem freeprod_reduce(const Word& w, bool with_central) {
  FreeProdElem acc;
  for (const Letter& l : w) {
    FreeProdElem x;
    if (with_central) {
      if (l.gen == 1)
        x = FreeProdElem::central();
      else if (l.gen == 2 || l.gen == 3)
        x = FreeProdElem::letter(l.gen - 2);
      else
        throw std::invalid_argument("freeprod_reduce: unknown letter");
    } else {
      if (l.gen == 1 || l.gen == 2)
        x = FreeProdElem::letter(l.gen - 1);
      else
        throw std::invalid_argument("freeprod_reduce: unknown letter");
    }
    acc = acc * x;
  }
  return acc;
}

}  // namespace cactus
