#ifndef NILBOUND_PERMUTATION_HPP
#define NILBOUND_PERMUTATION_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace nilbound {

using Point = std::uint32_t;

/// A bijection of {0, ..., n-1}, stored as its image array.
///
/// Points are acted on from the right: the image of `i` under `p` is
/// `p[i]`, and `a * b` applies `a` first, then `b`.
class Permutation {
public:
  /// Identity on zero points; only useful as a placeholder.
  Permutation() = default;

  /// Throws std::invalid_argument naming the first offending position if
  /// `images` is not a bijection of {0, ..., images.size()-1}.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  /// Builds a permutation from disjoint cycles, e.g. {{0, 1, 2}, {3, 4}}.
  static Permutation from_cycles(std::size_t degree,
                                 std::initializer_list<std::initializer_list<Point>> cycles);
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>> &cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point i) const noexcept { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  std::optional<Point> first_moved_point() const noexcept;

  Permutation inverse() const;
  Permutation pow(long long e) const;

  /// Cycle notation, fixed points omitted; "()" for the identity.
  std::string to_string() const;

  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend std::strong_ordering operator<=>(const Permutation &a, const Permutation &b) {
    if (auto c = a.images_.size() <=> b.images_.size(); c != 0)
      return c;
    return a.images_ <=> b.images_;
  }

private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}

  friend Permutation compose(const Permutation &a, const Permutation &b);

  std::vector<Point> images_;
};

/// The product "a then b": i maps to b[a[i]]. Throws std::invalid_argument
/// ("degree mismatch") when the degrees differ.
Permutation compose(const Permutation &a, const Permutation &b);

inline Permutation operator*(const Permutation &a, const Permutation &b) {
  return compose(a, b);
}

/// [x, y] = x^-1 y^-1 x y.
Permutation commutator(const Permutation &x, const Permutation &y);

/// h^g = g^-1 h g.
Permutation conjugate(const Permutation &h, const Permutation &g);

struct PermutationHash {
  std::size_t operator()(const Permutation &p) const noexcept;
};

} // namespace nilbound

#endif // NILBOUND_PERMUTATION_HPP
