#include <algorithm>
#include <set>

#include "stablab/errors.hpp"
#include "stablab/presentation.hpp"

namespace stablab {

Presentation::Presentation(std::vector<std::string> generators, std::vector<Word> relators)
    : generators_(std::move(generators)), relators_(std::move(relators)) {
  std::set<std::string_view> seen;
  for (const auto& g : generators_) {
    if (!is_identifier(g)) throw ParseError("invalid generator name '" + g + "'");
    if (!seen.insert(g).second) throw ParseError("duplicate generator '" + g + "'");
  }
  for (std::size_t i = 0; i < relators_.size(); ++i) {
    if (relators_[i].empty())
      throw ParseError("relator " + std::to_string(i) + " is the empty word");
    if (relators_[i].generator_bound() > generators_.size())
      throw ParseError("relator " + std::to_string(i) + " uses an unknown generator");
  }
}

std::optional<std::uint32_t> Presentation::find_generator(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i] == name) return static_cast<std::uint32_t>(i);
  return std::nullopt;
}

std::string Presentation::to_string() const {
  std::string out = "<";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) out += ", ";
    out += generators_[i];
  }
  out += " | ";
  for (std::size_t i = 0; i < relators_.size(); ++i) {
    if (i) out += ", ";
    out += format_word(relators_[i], generators_);
  }
  out += ">";
  return out;
}

bool equal_up_to_relator_order(const Presentation& a, const Presentation& b) {
  if (a.generators() != b.generators()) return false;
  auto ra = a.relators();
  auto rb = b.relators();
  std::sort(ra.begin(), ra.end());
  std::sort(rb.begin(), rb.end());
  return ra == rb;
}

}  // namespace stablab
