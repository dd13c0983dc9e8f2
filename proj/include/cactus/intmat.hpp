#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cactus/presentation.hpp"

namespace cactus {

using BigInt = boost::multiprecision::cpp_int;

/// Dense arbitrary-precision integer matrix.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_, cols_;
  std::vector<BigInt> data_;
};

/// Diagonal of the Smith normal form: nonnegative d1 | d2 | ..., length
/// min(rows, cols), zeros trailing.  Pivoting is by least absolute value.
std::vector<BigInt> smith_normal_form(IntMatrix m);

/// Relator exponent-sum matrix (rows = relators, cols = generators).
IntMatrix exponent_matrix(const Presentation& p);

struct AbelianInvariants {
  std::vector<BigInt> torsion;  // invariant factors > 1, in divisibility order
  int free_rank = 0;

  bool is_elementary_2(int rank) const {
    if (free_rank != 0 || static_cast<int>(torsion.size()) != rank) return false;
    for (const BigInt& d : torsion)
      if (d != 2) return false;
    return true;
  }
  std::string str() const;
};

/// Abelianization via the Smith normal form of the exponent matrix.
AbelianInvariants abelianization(const Presentation& p);

}  // namespace cactus
