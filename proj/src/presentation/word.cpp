#include "stablab/word.hpp"

#include <algorithm>

namespace stablab {

Word::Word(std::vector<Letter> letters) : Word(free_reduce(letters)) {}

Word Word::generator(std::uint32_t index, int sign) {
  return Word(Reduced{}, {Letter{index, sign < 0 ? -1 : +1}});
}

std::uint32_t Word::generator_bound() const noexcept {
  std::uint32_t bound = 0;
  for (const auto& l : letters_) bound = std::max(bound, l.generator + 1);
  return bound;
}

bool Word::uses(std::uint32_t generator) const noexcept {
  return occurrences(generator) > 0;
}

std::size_t Word::occurrences(std::uint32_t generator) const noexcept {
  return static_cast<std::size_t>(std::count_if(
      letters_.begin(), letters_.end(),
      [generator](const Letter& l) { return l.generator == generator; }));
}

Word free_reduce(std::span<const Letter> letters) {
  std::vector<Letter> stack;
  stack.reserve(letters.size());
  for (const auto& l : letters) {
    const Letter normalized{l.generator, l.sign < 0 ? -1 : +1};
    if (!stack.empty() && stack.back() == normalized.inverse()) {
      stack.pop_back();
    } else {
      stack.push_back(normalized);
    }
  }
  return Word(Word::Reduced{}, std::move(stack));
}

Word inverse_word(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.length());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
    out.push_back(it->inverse());
  return Word(std::move(out));
}

Word concat_reduced(const Word& u, const Word& v) {
  std::vector<Letter> out(u.letters().begin(), u.letters().end());
  out.insert(out.end(), v.letters().begin(), v.letters().end());
  return free_reduce(out);
}

Word power(const Word& w, long exponent) {
  const Word base = exponent < 0 ? inverse_word(w) : w;
  const long count = exponent < 0 ? -exponent : exponent;
  std::vector<Letter> out;
  out.reserve(base.length() * static_cast<std::size_t>(count));
  for (long k = 0; k < count; ++k)
    out.insert(out.end(), base.letters().begin(), base.letters().end());
  return free_reduce(out);
}

Word commutator(const Word& x, const Word& y) {
  return concat_reduced(concat_reduced(x, y),
                        concat_reduced(inverse_word(x), inverse_word(y)));
}

Word rotate(const Word& w, std::size_t start) {
  std::vector<Letter> out;
  out.reserve(w.length());
  const auto letters = w.letters();
  for (std::size_t k = 0; k < letters.size(); ++k)
    out.push_back(letters[(start + k) % letters.size()]);
  return Word(std::move(out));
}

Word substitute(const Word& w, std::span<const Word> images) {
  std::vector<Letter> out;
  for (const auto& l : w.letters()) {
    const Word& image = images[l.generator];
    if (l.sign > 0) {
      out.insert(out.end(), image.letters().begin(), image.letters().end());
    } else {
      for (auto it = image.letters().rbegin(); it != image.letters().rend(); ++it)
        out.push_back(it->inverse());
    }
  }
  return free_reduce(out);
}

}  // namespace stablab
