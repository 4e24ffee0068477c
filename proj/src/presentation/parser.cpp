#include <cctype>
#include <charconv>
#include <set>

#include "stablab/errors.hpp"
#include "stablab/presentation.hpp"

namespace stablab {
namespace {

constexpr long kMaxExponent = 1L << 20;

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>* alphabet)
      : text_(text), alphabet_(alphabet) {}

  std::size_t pos() const { return pos_; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      const char got = peek();
      throw ParseError(std::string("expected '") + c + "' but found " +
                           (got == '\0' ? std::string("end of input")
                                        : std::string("'") + got + "'"),
                       pos_);
    }
  }

  std::string name() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ >= text_.size() || !std::isalpha(static_cast<unsigned char>(text_[pos_])))
      throw ParseError("expected a generator name", pos_);
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  long integer() {
    skip_ws();
    const std::size_t start = pos_;
    std::size_t end = pos_;
    if (end < text_.size() && (text_[end] == '-' || text_[end] == '+')) ++end;
    const std::size_t digits = end;
    while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
    if (end == digits) throw ParseError("malformed exponent", start);
    const char* first = text_.data() + digits;
    long value = 0;
    auto [ptr, ec] = std::from_chars(first, text_.data() + end, value);
    if (ec != std::errc() || value > kMaxExponent)
      throw ParseError("exponent out of range", start);
    pos_ = end;
    return text_[start] == '-' ? -value : value;
  }

  long optional_exponent() { return accept('^') ? integer() : 1; }

  Word word() {
    Word w = factor();
    while (accept('*')) w = concat_reduced(w, factor());
    return w;
  }

  Word factor() {
    const char c = peek();
    if (c == '[') {
      const std::size_t open = pos_;
      ++pos_;
      Word x = word();
      expect(',');
      Word y = word();
      if (!accept(']')) throw ParseError("unbalanced '['", open);
      return commutator(x, y);
    }
    if (c == '(') {
      const std::size_t open = pos_;
      ++pos_;
      Word inner = word();
      if (!accept(')')) throw ParseError("unbalanced '('", open);
      return power(inner, optional_exponent());
    }
    const std::size_t start = (skip_ws(), pos_);
    const std::string n = name();
    std::uint32_t index = 0;
    bool found = false;
    for (std::size_t i = 0; i < alphabet_->size(); ++i) {
      if ((*alphabet_)[i] == n) {
        index = static_cast<std::uint32_t>(i);
        found = true;
        break;
      }
    }
    if (!found) throw ParseError("unknown generator '" + n + "'", start);
    return power(Word::generator(index), optional_exponent());
  }

  void set_alphabet(const std::vector<std::string>* alphabet) { alphabet_ = alphabet; }

 private:
  std::string_view text_;
  const std::vector<std::string>* alphabet_;
  std::size_t pos_ = 0;
};

}  // namespace

bool is_identifier(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) return false;
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

Word parse_word(std::string_view text, const std::vector<std::string>& alphabet) {
  Parser parser(text, &alphabet);
  if (parser.at_end()) return Word();
  Word w = parser.word();
  if (!parser.at_end()) throw ParseError("unexpected trailing input", parser.pos());
  return w;
}

Presentation parse_presentation(std::string_view text) {
  std::vector<std::string> generators;
  Parser parser(text, &generators);
  parser.expect('<');
  std::set<std::string> seen;
  do {
    parser.skip_ws();
    const std::size_t at = parser.pos();
    std::string n = parser.name();
    if (!seen.insert(n).second) throw ParseError("duplicate generator '" + n + "'", at);
    generators.push_back(std::move(n));
  } while (parser.accept(','));
  parser.expect('|');

  std::vector<Word> relators;
  if (parser.peek() != '>') {
    do {
      parser.skip_ws();
      const std::size_t at = parser.pos();
      Word r = parser.word();
      if (r.empty()) throw ParseError("relator reduces to the empty word", at);
      relators.push_back(std::move(r));
    } while (parser.accept(','));
  }
  parser.expect('>');
  if (!parser.at_end()) throw ParseError("unexpected trailing input", parser.pos());
  return Presentation(std::move(generators), std::move(relators));
}

std::string format_word(const Word& w, const std::vector<std::string>& alphabet) {
  std::string out;
  const auto letters = w.letters();
  for (std::size_t i = 0; i < letters.size();) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    const long run = static_cast<long>(j - i) * letters[i].sign;
    if (!out.empty()) out += '*';
    out += alphabet.at(letters[i].generator);
    if (run != 1) out += '^' + std::to_string(run);
    i = j;
  }
  return out;
}

}  // namespace stablab
