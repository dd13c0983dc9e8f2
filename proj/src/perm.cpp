#include "cactus/perm.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace cactus {

Perm::Perm(std::vector<std::uint32_t> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (std::uint32_t v : img_) {
    if (v >= img_.size() || seen[v])
      throw std::invalid_argument("Perm: images are not a bijection");
    seen[v] = true;
  }
}

Perm Perm::operator*(const Perm& o) const {
  if (degree() != o.degree()) throw std::invalid_argument("Perm: degree mismatch");
  Perm r;
  r.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) r.img_[i] = o.img_[img_[i]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) r.img_[img_[i]] = static_cast<std::uint32_t>(i);
  return r;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

std::uint32_t Perm::first_moved() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return static_cast<std::uint32_t>(i);
  return degree();
}

std::string Perm::to_cycles() const {
  std::ostringstream os;
  std::vector<bool> seen(img_.size(), false);
  bool any = false;
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    any = true;
    os << '(';
    std::size_t j = i;
    bool first = true;
    do {
      if (!first) os << ' ';
      os << (j + 1);
      seen[j] = true;
      j = img_[j];
      first = false;
    } while (j != i);
    os << ')';
  }
  if (!any) return "()";
  return os.str();
}

Perm Perm::parse_cycles(const std::string& text, unsigned degree) {
  Perm r(degree);
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("parse_cycles: expected '('");
    ++i;
    std::vector<std::uint32_t> cyc;
    skip();
    while (i < text.size() && text[i] != ')') {
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == start) throw std::invalid_argument("parse_cycles: expected point");
      unsigned long v = std::stoul(text.substr(start, i - start));
      if (v < 1 || v > degree) throw std::invalid_argument("parse_cycles: point out of range");
      cyc.push_back(static_cast<std::uint32_t>(v - 1));
      skip();
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip();
      }
    }
    if (i >= text.size()) throw std::invalid_argument("parse_cycles: unterminated cycle");
    ++i;  // ')'
    std::vector<std::uint32_t> img = r.images();
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      if (cyc.size() < 2) break;
      img[cyc[k]] = cyc[(k + 1) % cyc.size()];
    }
    r = Perm(img);
    skip();
  }
  return r;
}

Perm sym_generator(int n, int p, int q) {
  if (!(1 <= p && p < q && q <= n)) throw std::invalid_argument("sym_generator: need 1 <= p < q <= n");
  std::vector<std::uint32_t> img(n);
  for (int i = 1; i <= n; ++i) {
    int image = (i >= p && i <= q) ? p + q - i : i;
    img[i - 1] = static_cast<std::uint32_t>(image - 1);
  }
  return Perm(std::move(img));
}

}  // namespace cactus
