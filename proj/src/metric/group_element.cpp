#include "stablab/group_element.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "stablab/errors.hpp"

namespace stablab {

void MetricDescriptor::validate() const {
  if (degree < 1) throw PreconditionError("metric degree must be >= 1");
  if (family == MetricFamily::UnitarySchatten && !(p >= 1.0))
    throw PreconditionError("Schatten exponent must satisfy p >= 1");
}

std::string MetricDescriptor::to_string() const {
  std::string s = std::string(family_name(family)) + "(n=" + std::to_string(degree);
  if (family == MetricFamily::UnitarySchatten) {
    char buf[32];
    std::snprintf(buf, sizeof buf, ", p=%g", p);
    s += buf;
  }
  return s + ")";
}

bool operator==(const MetricDescriptor& a, const MetricDescriptor& b) {
  return a.family == b.family && a.degree == b.degree &&
         (a.family != MetricFamily::UnitarySchatten || a.p == b.p);
}

std::string_view family_name(MetricFamily f) {
  switch (f) {
    case MetricFamily::SymHamming: return "sym_hamming";
    case MetricFamily::UnitaryHS: return "u_hs";
    case MetricFamily::UnitarySchatten: return "u_schatten";
    case MetricFamily::UnitaryOperator: return "u_op";
  }
  return "?";
}

MetricFamily parse_family(std::string_view name) {
  if (name == "sym_hamming") return MetricFamily::SymHamming;
  if (name == "u_hs") return MetricFamily::UnitaryHS;
  if (name == "u_schatten") return MetricFamily::UnitarySchatten;
  if (name == "u_op") return MetricFamily::UnitaryOperator;
  throw ParseError("unknown metric family '" + std::string(name) + "'");
}

GroupElement::GroupElement(MetricDescriptor desc, Value value)
    : desc_(desc), value_(std::move(value)) {
  desc_.validate();
  const bool is_perm = std::holds_alternative<Permutation>(value_);
  if (is_perm == desc_.is_unitary())
    throw MismatchError("element kind does not match metric family " + desc_.to_string());
  const std::size_t n = is_perm ? permutation().degree() : unitary().degree();
  if (n != desc_.degree)
    throw MismatchError("element degree " + std::to_string(n) + " does not match " +
                        desc_.to_string());
}

GroupElement GroupElement::identity(const MetricDescriptor& desc) {
  if (desc.is_unitary()) return GroupElement(desc, UnitaryMatrix::identity(desc.degree));
  return GroupElement(desc, Permutation::identity(desc.degree));
}

GroupElement GroupElement::inverse() const {
  return std::visit([this](const auto& v) { return GroupElement(desc_, v.inverse()); }, value_);
}

namespace {
void require_match(const GroupElement& a, const GroupElement& b) {
  if (!(a.descriptor() == b.descriptor()))
    throw MismatchError("descriptor mismatch: " + a.descriptor().to_string() + " vs " +
                        b.descriptor().to_string());
}
}  // namespace

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  require_match(a, b);
  if (a.desc_.is_unitary()) return GroupElement(a.desc_, a.unitary() * b.unitary());
  return GroupElement(a.desc_, a.permutation() * b.permutation());
}

double distance(const GroupElement& a, const GroupElement& b) {
  require_match(a, b);
  switch (a.descriptor().family) {
    case MetricFamily::SymHamming: return hamming_distance(a.permutation(), b.permutation());
    case MetricFamily::UnitaryHS: return hs_distance(a.unitary(), b.unitary());
    case MetricFamily::UnitarySchatten:
      return schatten_distance(a.unitary(), b.unitary(), a.descriptor().p);
    case MetricFamily::UnitaryOperator: return operator_distance(a.unitary(), b.unitary());
  }
  return 0.0;
}

double distance_to_identity(const GroupElement& a) {
  return distance(a, GroupElement::identity(a.descriptor()));
}

std::vector<GroupElement> enumerate_elements(const MetricDescriptor& desc) {
  desc.validate();
  if (desc.is_unitary()) throw CapExceeded("only symmetric groups can be enumerated");
  if (desc.degree > kMaxEnumerationDegree)
    throw CapExceeded("enumeration of Sym(" + std::to_string(desc.degree) +
                      ") exceeds the cap n <= 8");
  std::vector<std::uint32_t> images(desc.degree);
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = static_cast<std::uint32_t>(i);
  std::vector<GroupElement> out;
  do {
    out.emplace_back(desc, Permutation(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

}  // namespace stablab
