#include "stablab/permutation.hpp"

#include "stablab/errors.hpp"

namespace stablab {

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || hit[x])
      throw MismatchError("image array is not a permutation of 0.." +
                          std::to_string(images_.size()) + "-1");
    hit[x] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::uint32_t> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<std::uint32_t>(i);
  return Permutation(Trusted{}, std::move(images));
}

Permutation Permutation::transposition(std::size_t n, std::uint32_t i, std::uint32_t j) {
  if (i >= n || j >= n) throw MismatchError("transposition point out of range");
  auto p = identity(n);
  std::swap(p.images_[i], p.images_[j]);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[images_[i]] = static_cast<std::uint32_t>(i);
  return Permutation(Trusted{}, std::move(out));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw MismatchError("permutation degrees differ");
  std::vector<std::uint32_t> out(a.degree());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = a.images_[b.images_[j]];
  return Permutation(Permutation::Trusted{}, std::move(out));
}

std::string Permutation::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(images_[i]);
  }
  return out + "]";
}

std::size_t hamming_count(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw MismatchError("permutation degrees differ");
  std::size_t count = 0;
  for (std::size_t j = 0; j < a.degree(); ++j) count += a(static_cast<std::uint32_t>(j)) != b(static_cast<std::uint32_t>(j));
  return count;
}

double hamming_distance(const Permutation& a, const Permutation& b) {
  const std::size_t count = hamming_count(a, b);
  return a.degree() == 0 ? 0.0 : static_cast<double>(count) / static_cast<double>(a.degree());
}

}  // namespace stablab
