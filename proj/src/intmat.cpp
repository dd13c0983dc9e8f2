#include "cactus/intmat.hpp"

#include <sstream>

namespace cactus {

namespace {

BigInt gcd(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    BigInt t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

std::vector<BigInt> smith_normal_form(IntMatrix m) {
  const std::size_t n = std::min(m.rows(), m.cols());
  std::vector<BigInt> diag(n, 0);

  for (std::size_t t = 0; t < n; ++t) {
    // least-absolute-value pivot in the remaining block
    std::size_t pr = t, pc = t;
    BigInt best = 0;
    for (std::size_t r = t; r < m.rows(); ++r)
      for (std::size_t c = t; c < m.cols(); ++c) {
        const BigInt& v = m.at(r, c);
        if (v == 0) continue;
        BigInt av = v < 0 ? BigInt(-v) : v;
        if (best == 0 || av < best) {
          best = av;
          pr = r;
          pc = c;
        }
      }
    if (best == 0) break;  // remaining block is zero

    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(t, c), m.at(pr, c));
    for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m.at(r, t), m.at(r, pc));

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t r = t + 1; r < m.rows(); ++r) {
        if (m.at(r, t) == 0) continue;
        BigInt q = m.at(r, t) / m.at(t, t);
        for (std::size_t c = t; c < m.cols(); ++c) m.at(r, c) -= q * m.at(t, c);
        if (m.at(r, t) != 0) {  // remainder became the smaller pivot
          for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(t, c), m.at(r, c));
          clean = false;
        }
      }
      for (std::size_t c = t + 1; c < m.cols(); ++c) {
        if (m.at(t, c) == 0) continue;
        BigInt q = m.at(t, c) / m.at(t, t);
        for (std::size_t r = t; r < m.rows(); ++r) m.at(r, c) -= q * m.at(r, t);
        if (m.at(t, c) != 0) {
          for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m.at(r, t), m.at(r, c));
          clean = false;
        }
      }
    }
    diag[t] = m.at(t, t) < 0 ? BigInt(-m.at(t, t)) : m.at(t, t);
  }

  // enforce the divisibility chain; off-diagonal entries are zero, so
  // diag(a, b) -> diag(gcd(a,b), ab/gcd(a,b)) is a valid replacement
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (diag[j] == 0) continue;
      if (diag[i] == 0) {
        std::swap(diag[i], diag[j]);
        continue;
      }
      if (diag[j] % diag[i] != 0) {
        BigInt g = gcd(diag[i], diag[j]);
        BigInt l = diag[i] / g * diag[j];
        diag[i] = g;
        diag[j] = l;
      }
    }
  }
  return diag;
}

IntMatrix exponent_matrix(const Presentation& p) {
  IntMatrix m(p.relators().size(), p.ngens());
  for (std::size_t r = 0; r < p.relators().size(); ++r)
    for (const Letter& l : p.relators()[r])
      m.at(r, p.alphabet().col(l.gen)) += l.sign;
  return m;
}

AbelianInvariants abelianization(const Presentation& p) {
  std::vector<BigInt> diag = smith_normal_form(exponent_matrix(p));
  AbelianInvariants inv;
  int nonzero = 0;
  for (const BigInt& d : diag) {
    if (d == 0) continue;
    ++nonzero;
    if (d > 1) inv.torsion.push_back(d);
  }
  inv.free_rank = p.ngens() - nonzero;
  return inv;
}

std::string AbelianInvariants::str() const {
  if (torsion.empty() && free_rank == 0) return "1";
  std::ostringstream os;
  bool first = true;
  for (const BigInt& d : torsion) {
    if (!first) os << " x ";
    os << "Z" << d;
    first = false;
  }
  if (free_rank > 0) {
    if (!first) os << " x ";
    os << "Z^" << free_rank;
  }
  return os.str();
}

}  // namespace cactus
