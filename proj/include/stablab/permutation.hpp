#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace stablab {

/// Bijection of {0, ..., n-1} stored as its image array.
///
/// Composition convention everywhere in the library: (a * b)(j) = a(b(j)),
/// i.e. the right factor acts first.
class Permutation {
 public:
  Permutation() = default;
  /// Throws MismatchError unless `images` is a bijection of 0..n-1.
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::size_t n);
  static Permutation transposition(std::size_t n, std::uint32_t i, std::uint32_t j);

  std::size_t degree() const noexcept { return images_.size(); }
  std::span<const std::uint32_t> images() const noexcept { return images_; }
  std::uint32_t operator()(std::uint32_t point) const { return images_[point]; }

  Permutation inverse() const;
  bool is_identity() const noexcept;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  std::string to_string() const;

 private:
  struct Trusted {};
  Permutation(Trusted, std::vector<std::uint32_t> images) : images_(std::move(images)) {}

  std::vector<std::uint32_t> images_;
};

/// Number of points where the two permutations differ.
std::size_t hamming_count(const Permutation& a, const Permutation& b);

/// (1/n) |{ j : a(j) != b(j) }|, computed as count / n.
double hamming_distance(const Permutation& a, const Permutation& b);

}  // namespace stablab
