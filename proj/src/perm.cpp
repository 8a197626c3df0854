#include "cover/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cover/error.hpp"

namespace cover {

Perm::Perm(uint32_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0u);
}

Perm Perm::from_images(std::vector<uint32_t> images) {
  const size_t n = images.size();
  std::vector<bool> seen(n, false);
  for (uint32_t v : images) {
    if (v >= n || seen[v]) {
      throw Error::malformed("permutation image table is not a bijection");
    }
    seen[v] = true;
  }
  Perm p;
  p.images_ = std::move(images);
  return p;
}

Perm Perm::from_cycles(uint32_t degree, std::string_view text) {
  Perm p(degree);
  std::vector<bool> used(degree, false);
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == ',' || text[i] == '\t')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw Error::malformed("expected '(' in cycle notation");
    ++i;
    std::vector<uint32_t> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw Error::malformed("expected point number in cycle notation");
      }
      uint64_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        ++i;
      }
      if (v < 1 || v > degree) {
        throw Error::malformed("cycle entry out of range for degree " + std::to_string(degree));
      }
      uint32_t point = static_cast<uint32_t>(v - 1);  // text is 1-indexed
      if (used[point]) throw Error::malformed("repeated point in cycle notation");
      used[point] = true;
      cycle.push_back(point);
      skip_ws();
    }
    if (i >= text.size()) throw Error::malformed("unterminated cycle");
    ++i;  // ')'
    for (size_t j = 0; j + 1 < cycle.size(); ++j) p.images_[cycle[j]] = cycle[j + 1];
    if (cycle.size() > 1) p.images_[cycle.back()] = cycle.front();
    skip_ws();
  }
  return p;
}

Perm Perm::then(const Perm& other) const {
  if (degree() != other.degree()) {
    throw Error::malformed("composing permutations of different degrees");
  }
  Perm r;
  r.images_.resize(images_.size());
  for (size_t i = 0; i < images_.size(); ++i) r.images_[i] = other.images_[images_[i]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.images_.resize(images_.size());
  for (uint32_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = i;
  return r;
}

Perm Perm::conjugated_by(const Perm& g) const {
  // g^-1 * this * g, so a cycle (x y) becomes (x^g y^g)
  if (degree() != g.degree()) {
    throw Error::malformed("conjugating permutations of different degrees");
  }
  Perm r;
  r.images_.resize(images_.size());
  for (uint32_t i = 0; i < images_.size(); ++i) r.images_[g.images_[i]] = g.images_[images_[i]];
  return r;
}

bool Perm::is_identity() const {
  for (uint32_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

bool Perm::is_even() const {
  uint64_t transpositions = 0;
  for (const auto& c : cycles()) transpositions += c.size() - 1;
  return transpositions % 2 == 0;
}

uint64_t Perm::element_order() const {
  uint64_t result = 1;
  for (const auto& c : cycles()) result = std::lcm<uint64_t>(result, c.size());
  return result;
}

std::vector<uint32_t> Perm::support() const {
  std::vector<uint32_t> s;
  for (uint32_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) s.push_back(i);
  }
  return s;
}

uint32_t Perm::smallest_moved_point() const {
  for (uint32_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return i;
  }
  return degree();
}

std::vector<std::vector<uint32_t>> Perm::cycles() const {
  std::vector<std::vector<uint32_t>> result;
  std::vector<bool> seen(images_.size(), false);
  for (uint32_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    std::vector<uint32_t> cycle;
    uint32_t p = i;
    while (!seen[p]) {
      seen[p] = true;
      cycle.push_back(p);
      p = images_[p];
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

std::string Perm::to_cycle_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream out;
  for (const auto& c : cs) {
    out << '(';
    for (size_t j = 0; j < c.size(); ++j) {
      if (j) out << ' ';
      out << (c[j] + 1);
    }
    out << ')';
  }
  return out.str();
}

uint64_t Perm::hash() const {
  uint64_t h = 1469598103934665603ull;
  for (uint32_t v : images_) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace cover
