#include "nilbound/permutation.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nilbound {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    const Point x = images_[i];
    if (x >= images_.size())
      throw std::invalid_argument("image out of range at position " + std::to_string(i));
    if (seen[x])
      throw std::invalid_argument("repeated image at position " + std::to_string(i));
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  return Permutation(std::move(images), Unchecked{});
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     std::initializer_list<std::initializer_list<Point>> cycles) {
  std::vector<std::vector<Point>> cs;
  for (const auto &c : cycles)
    cs.emplace_back(c);
  return from_cycles(degree, cs);
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>> &cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto &cycle : cycles) {
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      const Point from = cycle[j];
      const Point to = cycle[(j + 1) % cycle.size()];
      if (from >= degree || to >= degree)
        throw std::invalid_argument("cycle point out of range");
      if (used[from])
        throw std::invalid_argument("cycles are not disjoint");
      used[from] = true;
      images[from] = to;
    }
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

std::optional<Point> Permutation::first_moved_point() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return static_cast<Point>(i);
  return std::nullopt;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(inv), Unchecked{});
}

Permutation Permutation::pow(long long e) const {
  Permutation base = e < 0 ? inverse() : *this;
  unsigned long long n = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1
                               : static_cast<unsigned long long>(e);
  Permutation result = identity(degree());
  while (n != 0) {
    if (n & 1)
      result = result * base;
    base = base * base;
    n >>= 1;
  }
  return result;
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  std::vector<bool> done(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (done[i] || images_[i] == i)
      continue;
    out << '(';
    Point x = static_cast<Point>(i);
    bool first = true;
    while (!done[x]) {
      done[x] = true;
      if (!first)
        out << ' ';
      out << x;
      first = false;
      x = images_[x];
    }
    out << ')';
  }
  const std::string s = out.str();
  return s.empty() ? "()" : s;
}

Permutation compose(const Permutation &a, const Permutation &b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("degree mismatch");
  std::vector<Point> images(a.degree());
  for (std::size_t i = 0; i < images.size(); ++i)
    images[i] = b.images_[a.images_[i]];
  return Permutation(std::move(images), Permutation::Unchecked{});
}

Permutation commutator(const Permutation &x, const Permutation &y) {
  return x.inverse() * y.inverse() * x * y;
}

Permutation conjugate(const Permutation &h, const Permutation &g) {
  return g.inverse() * h * g;
}

std::size_t PermutationHash::operator()(const Permutation &p) const noexcept {
  std::size_t seed = p.degree();
  for (Point x : p.images())
    seed ^= x + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  return seed;
}

} // namespace nilbound
