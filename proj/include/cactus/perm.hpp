#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cactus {

/// Permutation of {0, ..., degree-1}.  Products compose left to right:
/// (p * q)[i] = q[p[i]].
class Perm {
 public:
  Perm() = default;
  explicit Perm(unsigned degree) : img_(degree) {
    for (unsigned i = 0; i < degree; ++i) img_[i] = i;
  }
  explicit Perm(std::vector<std::uint32_t> images);

  unsigned degree() const { return static_cast<unsigned>(img_.size()); }
  std::uint32_t operator[](std::uint32_t i) const { return img_[i]; }
  const std::vector<std::uint32_t>& images() const { return img_; }

  Perm operator*(const Perm& o) const;
  Perm inverse() const;
  bool is_identity() const;

  /// Smallest moved point, or degree() if the identity.
  std::uint32_t first_moved() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

  /// Cycle notation on 1-based points: "(1 4)(2 3)"; identity prints "()".
  std::string to_cycles() const;
  static Perm parse_cycles(const std::string& text, unsigned degree);

 private:
  std::vector<std::uint32_t> img_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const {
    std::size_t h = 1469598103934665603ull;
    for (std::uint32_t v : p.images()) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// The interval-reversing involution on n points: i -> p+q-i on [p,q]
/// (1-based), identity elsewhere.
Perm sym_generator(int n, int p, int q);

}  // namespace cactus
