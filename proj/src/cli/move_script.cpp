#include "stablab/move_script.hpp"

#include <charconv>
#include <string>

#include "stablab/errors.hpp"

namespace stablab {

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

class LineParser {
 public:
  LineParser(std::string_view line, std::size_t offset, const Presentation& current)
      : line_(line), offset_(offset), p_(current) {}

  TietzeMove parse() {
    const std::string_view rest = trim(line_);
    const auto sp = rest.find_first_of(" \t");
    const std::string_view verb = rest.substr(0, sp);
    const std::string_view args = sp == std::string_view::npos ? "" : trim(rest.substr(sp));
    if (verb == "add_generator") return add_generator(args);
    if (verb == "remove_generator") return remove_generator(args);
    if (verb == "add_relator") return add_relator(args);
    if (verb == "remove_relator") return remove_relator(args);
    fail("unknown move '" + std::string(verb) + "'", rest);
  }

 private:
  [[noreturn]] void fail(const std::string& msg, std::string_view at) const {
    throw ParseError(msg, offset_ + static_cast<std::size_t>(at.data() - line_.data()));
  }

  Word word(std::string_view text) const {
    try {
      return parse_word(text, p_.generators());
    } catch (const ParseError& e) {
      const std::size_t base = offset_ + static_cast<std::size_t>(text.data() - line_.data());
      throw ParseError(e.message(),
                       e.position() == ParseError::npos ? base : base + e.position());
    }
  }

  std::size_t index(std::string_view text) const {
    text = trim(text);
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
      fail("expected a relator index", text);
    return v;
  }

  // (head, tail) around the first occurrence of `keyword` as a separate token.
  std::pair<std::string_view, std::string_view> split(std::string_view s,
                                                      std::string_view keyword) const {
    for (std::size_t pos = s.find(keyword); pos != std::string_view::npos;
         pos = s.find(keyword, pos + 1)) {
      const bool left = pos == 0 || s[pos - 1] == ' ' || s[pos - 1] == '\t';
      const std::size_t end = pos + keyword.size();
      const bool right = end == s.size() || s[end] == ' ' || s[end] == '\t';
      if (left && right) return {trim(s.substr(0, pos)), trim(s.substr(end))};
    }
    return {s, std::string_view(s.data() + s.size(), 0)};
  }

  NormalClosureCertificate certificate(std::string_view text) const {
    NormalClosureCertificate cert;
    while (!trim(text).empty()) {
      const auto semi = text.find(';');
      std::string_view factor = trim(text.substr(0, semi));
      text = semi == std::string_view::npos ? std::string_view() : text.substr(semi + 1);
      if (factor.empty()) fail("empty certificate factor", factor);
      CertificateFactor f;
      if (const auto colon = factor.find(':'); colon != std::string_view::npos) {
        f.conjugator = word(trim(factor.substr(0, colon)));
        factor = trim(factor.substr(colon + 1));
      }
      if (factor.empty() || factor[0] != 'r') fail("expected r<index>", factor);
      std::string_view idx = factor.substr(1);
      if (const auto caret = idx.find('^'); caret != std::string_view::npos) {
        const std::string_view e = trim(idx.substr(caret + 1));
        if (e == "-1") f.sign = -1;
        else if (e != "1") fail("certificate exponent must be 1 or -1", e);
        idx = idx.substr(0, caret);
      }
      f.relator = index(idx);
      cert.factors.push_back(std::move(f));
    }
    return cert;
  }

  TietzeMove add_generator(std::string_view args) const {
    const auto eq = args.find('=');
    if (eq == std::string_view::npos) fail("expected 'name = word'", args);
    const std::string_view name = trim(args.substr(0, eq));
    if (!is_identifier(name)) fail("invalid generator name", name);
    return tietze::AddGenerator{std::string(name), word(trim(args.substr(eq + 1)))};
  }

  TietzeMove remove_generator(std::string_view args) const {
    auto [name, rel] = split(args, "via");
    const auto g = p_.find_generator(name);
    if (!g) fail("unknown generator", name);
    if (rel.empty()) fail("expected 'via <relator index>'", args);
    return tietze::RemoveGenerator{*g, index(rel)};
  }

  TietzeMove add_relator(std::string_view args) const {
    auto [w, cert] = split(args, "by");
    return tietze::AddRelator{word(w), certificate(cert)};
  }

  TietzeMove remove_relator(std::string_view args) const {
    auto [i, cert] = split(args, "by");
    return tietze::RemoveRelator{index(i), certificate(cert)};
  }

  std::string_view line_;
  std::size_t offset_;
  const Presentation& p_;
};

}  // namespace

std::vector<TietzeMove> parse_move_script(std::string_view script, const Presentation& start) {
  std::vector<TietzeMove> moves;
  Presentation current = start;
  std::size_t offset = 0;
  while (offset <= script.size()) {
    auto nl = script.find('\n', offset);
    if (nl == std::string_view::npos) nl = script.size();
    const std::string_view line = script.substr(offset, nl - offset);
    const std::string_view body = trim(line);
    if (!body.empty() && body[0] != '#') {
      TietzeMove m = LineParser(line, offset, current).parse();
      current = apply_tietze(current, m).presentation;
      moves.push_back(std::move(m));
    }
    offset = nl + 1;
  }
  return moves;
}

}  // namespace stablab
