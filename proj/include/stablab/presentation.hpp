#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stablab/word.hpp"

namespace stablab {

/// Finitely presented group <S | R>. Immutable after construction.
///
/// Invariants: generator names are distinct identifiers, every relator is a
/// nonempty freely reduced word over the generators. The relator list may be
/// empty (free group) and may contain duplicates.
class Presentation {
 public:
  Presentation() = default;
  Presentation(std::vector<std::string> generators, std::vector<Word> relators);

  const std::vector<std::string>& generators() const noexcept { return generators_; }
  const std::vector<Word>& relators() const noexcept { return relators_; }
  std::size_t generator_count() const noexcept { return generators_.size(); }
  std::size_t relator_count() const noexcept { return relators_.size(); }

  std::optional<std::uint32_t> find_generator(std::string_view name) const;

  /// "<a, b | a*b*a^-1*b^-1>"; parse_presentation(to_string()) == *this.
  std::string to_string() const;

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  std::vector<std::string> generators_;
  std::vector<Word> relators_;
};

/// Same generator names in the same order and the same relator multiset.
bool equal_up_to_relator_order(const Presentation& a, const Presentation& b);

bool is_identifier(std::string_view name);

// Grammar:
//   presentation := "<" name ("," name)* "|" (word ("," word)*)? ">"
//   word         := factor ("*" factor)*
//   factor       := name ("^" int)? | "[" word "," word "]" | "(" word ")" ("^" int)?
// Whitespace is insignificant. Errors carry the character offset.

/// Parses a word over `alphabet`. Blank text yields the empty word.
Word parse_word(std::string_view text, const std::vector<std::string>& alphabet);
Presentation parse_presentation(std::string_view text);

/// Canonical text with runs folded into exponents, e.g. "a^2*b^-1".
/// The empty word prints as "".
std::string format_word(const Word& w, const std::vector<std::string>& alphabet);

}  // namespace stablab
