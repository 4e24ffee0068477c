#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace stablab {

/// One signed generator reference: s_index or s_index^-1.
struct Letter {
  std::uint32_t generator = 0;
  int sign = +1;  // +1 or -1

  Letter inverse() const noexcept { return {generator, -sign}; }
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// A freely reduced element of the free group F(S).
///
/// Construction always reduces, so no two adjacent letters cancel. Generator
/// indices are not range-checked here; the owning Presentation does that.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);

  static Word generator(std::uint32_t index, int sign = +1);

  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  /// Largest generator index used plus one, or 0 for the empty word.
  std::uint32_t generator_bound() const noexcept;
  bool uses(std::uint32_t generator) const noexcept;
  std::size_t occurrences(std::uint32_t generator) const noexcept;

  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  friend Word free_reduce(std::span<const Letter> letters);
  struct Reduced {};
  Word(Reduced, std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::vector<Letter> letters_;
};

/// Cancels adjacent inverse pairs until none remain (stack-based, linear).
Word free_reduce(std::span<const Letter> letters);

Word inverse_word(const Word& w);
Word concat_reduced(const Word& u, const Word& v);
Word power(const Word& w, long exponent);
/// x*y*x^-1*y^-1
Word commutator(const Word& x, const Word& y);
inline std::size_t word_length(const Word& w) { return w.length(); }

/// Cyclic rotation sending letter `start` to the front (same normal closure).
Word rotate(const Word& w, std::size_t start);

/// Replaces every generator i by images[i] (or its inverse) and reduces.
Word substitute(const Word& w, std::span<const Word> images);

}  // namespace stablab
