#include <algorithm>

#include "stablab/errors.hpp"
#include "stablab/stability.hpp"

namespace stablab {

AlmostHom::AlmostHom(PresentationPtr presentation, MetricDescriptor desc,
                     std::vector<GroupElement> assignment)
    : presentation_(std::move(presentation)), desc_(desc), assignment_(std::move(assignment)) {
  if (!presentation_) throw PreconditionError("assignment needs a presentation");
  desc_.validate();
  if (assignment_.size() != presentation_->generator_count())
    throw MismatchError("assignment has " + std::to_string(assignment_.size()) +
                        " elements for " + std::to_string(presentation_->generator_count()) +
                        " generators");
  for (const auto& g : assignment_)
    if (!(g.descriptor() == desc_))
      throw MismatchError("assigned element lives in " + g.descriptor().to_string() +
                          ", expected " + desc_.to_string());
}

AlmostHom AlmostHom::with(std::size_t generator, GroupElement value) const {
  auto assignment = assignment_;
  assignment.at(generator) = std::move(value);
  return AlmostHom(presentation_, desc_, std::move(assignment));
}

AlmostHom trivial_homomorphism(PresentationPtr p, const MetricDescriptor& desc) {
  std::vector<GroupElement> assignment(p->generator_count(), GroupElement::identity(desc));
  return AlmostHom(std::move(p), desc, std::move(assignment));
}

GroupElement evaluate_word(const AlmostHom& phi, const Word& w) {
  if (w.generator_bound() > phi.assignment().size())
    throw PreconditionError("word uses a generator outside the presentation");
  const auto& desc = phi.descriptor();
  if (!desc.is_unitary()) {
    // Image arrays directly: x -> phi(l_1)(phi(l_2)(...(x))).
    const std::size_t n = desc.degree;
    std::vector<std::uint32_t> images(n);
    std::vector<std::vector<std::uint32_t>> inverses(phi.assignment().size());
    for (std::size_t j = 0; j < n; ++j) {
      auto x = static_cast<std::uint32_t>(j);
      const auto letters = w.letters();
      for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
        const auto& perm = phi[it->generator].permutation();
        if (it->sign > 0) {
          x = perm(x);
        } else {
          auto& inv = inverses[it->generator];
          if (inv.empty()) {
            inv.resize(n);
            for (std::uint32_t k = 0; k < n; ++k) inv[perm(k)] = k;
          }
          x = inv[x];
        }
      }
      images[j] = x;
    }
    return GroupElement(desc, Permutation(std::move(images)));
  }
  GroupElement acc = GroupElement::identity(desc);
  for (const auto& l : w.letters())
    acc = acc * (l.sign > 0 ? phi[l.generator] : phi[l.generator].inverse());
  return acc;
}

DefectReport defect(const AlmostHom& phi) {
  DefectReport report;
  const auto& relators = phi.presentation().relators();
  for (std::size_t i = 0; i < relators.size(); ++i) {
    const double d = distance_to_identity(evaluate_word(phi, relators[i]));
    report.per_relator.emplace_back(i, d);
    report.defect = std::max(report.defect, d);
  }
  return report;
}

double defect_value(const AlmostHom& phi) { return defect(phi).defect; }

bool is_homomorphism(const AlmostHom& phi) {
  const double d = defect_value(phi);
  return phi.descriptor().is_unitary() ? d <= kUnitaryExactTolerance : d == 0.0;
}

double dist(const AlmostHom& phi, const AlmostHom& psi) {
  if (!(phi.descriptor() == psi.descriptor()))
    throw MismatchError("assignments live in different metric groups");
  if (phi.presentation().generator_count() != psi.presentation().generator_count())
    throw MismatchError("assignments are over different generator sets");
  double d = 0.0;
  for (std::size_t s = 0; s < phi.assignment().size(); ++s)
    d = std::max(d, distance(phi[s], psi[s]));
  return d;
}

const char* method_name(HomDistMethod m) {
  return m == HomDistMethod::Exact ? "exact" : "upper_bound";
}

AlmostHom transport_map(const AlmostHom& phi, const TransportMap& t, PresentationPtr target) {
  if (t.source_generators != phi.assignment().size())
    throw MismatchError("transport map is not over this assignment's generators");
  if (t.images.size() != target->generator_count())
    throw MismatchError("transport map does not cover the target generators");
  std::vector<GroupElement> assignment;
  assignment.reserve(t.images.size());
  for (const auto& w : t.images) assignment.push_back(evaluate_word(phi, w));
  return AlmostHom(std::move(target), phi.descriptor(), std::move(assignment));
}

}  // namespace stablab
