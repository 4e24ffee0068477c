#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "stablab/group_element.hpp"
#include "stablab/presentation.hpp"
#include "stablab/random.hpp"
#include "stablab/tietze.hpp"

namespace stablab {

using PresentationPtr = std::shared_ptr<const Presentation>;

inline PresentationPtr share(Presentation p) {
  return std::make_shared<const Presentation>(std::move(p));
}

/// Defect at or below which a unitary assignment counts as a homomorphism.
inline constexpr double kUnitaryExactTolerance = 1e-9;

/// A generator assignment S -> G; it extends uniquely to F(S) -> G.
class AlmostHom {
 public:
  /// Throws MismatchError unless there is one element per generator, each
  /// carrying `desc`.
  AlmostHom(PresentationPtr presentation, MetricDescriptor desc,
            std::vector<GroupElement> assignment);

  const Presentation& presentation() const noexcept { return *presentation_; }
  const PresentationPtr& presentation_ptr() const noexcept { return presentation_; }
  const MetricDescriptor& descriptor() const noexcept { return desc_; }
  const std::vector<GroupElement>& assignment() const noexcept { return assignment_; }
  const GroupElement& operator[](std::size_t generator) const { return assignment_[generator]; }

  AlmostHom with(std::size_t generator, GroupElement value) const;

  friend bool operator==(const AlmostHom& a, const AlmostHom& b) {
    return a.desc_ == b.desc_ && a.assignment_ == b.assignment_ &&
           *a.presentation_ == *b.presentation_;
  }

 private:
  PresentationPtr presentation_;
  MetricDescriptor desc_;
  std::vector<GroupElement> assignment_;
};

/// Every generator sent to the identity.
AlmostHom trivial_homomorphism(PresentationPtr p, const MetricDescriptor& desc);

/// Product of the assigned elements (inverted for negative letters) in
/// letter order; the empty word gives the identity.
GroupElement evaluate_word(const AlmostHom& phi, const Word& w);

struct DefectReport {
  double defect = 0.0;
  std::vector<std::pair<std::size_t, double>> per_relator;
};

/// max over relators of d(phi(r), 1); 0 when there are no relators.
DefectReport defect(const AlmostHom& phi);
double defect_value(const AlmostHom& phi);

/// Defect 0 on Sym, at most kUnitaryExactTolerance on unitary families.
bool is_homomorphism(const AlmostHom& phi);

/// max over generators of d(phi(s), psi(s)).
double dist(const AlmostHom& phi, const AlmostHom& psi);

enum class HomDistMethod { Exact, UpperBound };
const char* method_name(HomDistMethod m);

struct HomDistResult {
  double value = 0.0;
  AlmostHom witness;
  HomDistMethod method = HomDistMethod::Exact;
  std::size_t moves = 0;  // search moves used (UpperBound only)
};

struct EnumerationCaps {
  std::size_t max_degree = 6;
  std::size_t max_generators = 4;
};

/// Hom(Gamma, Sym(n)) as a flat table, built by backtracking over the
/// generators in index order with lexicographic element order. A relator is
/// checked as soon as its largest generator is assigned.
class HomomorphismTable {
 public:
  /// Throws CapExceeded when the family is not SymHamming or a cap is exceeded.
  HomomorphismTable(PresentationPtr p, const MetricDescriptor& desc,
                    const EnumerationCaps& caps = {});

  std::size_t size() const noexcept { return count_; }
  AlmostHom at(std::size_t index) const;
  std::vector<AlmostHom> all() const;

  /// Index of the first homomorphism at minimal distance from phi, together
  /// with that distance.
  std::pair<std::size_t, double> nearest(const AlmostHom& phi) const;

  const PresentationPtr& presentation() const noexcept { return presentation_; }
  const MetricDescriptor& descriptor() const noexcept { return desc_; }

 private:
  PresentationPtr presentation_;
  MetricDescriptor desc_;
  std::size_t generators_ = 0;
  std::size_t count_ = 0;
  std::vector<std::uint8_t> images_;  // count x generators x n
};

std::vector<AlmostHom> enumerate_homomorphisms(PresentationPtr p, const MetricDescriptor& desc,
                                               const EnumerationCaps& caps = {});

/// Minimum of dist(phi, pi) over Hom(Gamma, Sym(n)); first minimum wins.
HomDistResult homdist_exact(const AlmostHom& phi, const EnumerationCaps& caps = {});
HomDistResult homdist_exact(const AlmostHom& phi, const HomomorphismTable& table);

struct SearchBudget {
  std::size_t rounds = 2000;
};

/// Greedy single-generator descent on the defect, seeded. Sym moves swap two
/// entries of one image array; unitary moves follow random geodesics with an
/// adaptive step. Reports dist to the homomorphism it reaches.
/// Throws NoWitness when the budget runs out first.
HomDistResult homdist_upper(const AlmostHom& phi, const SearchBudget& budget, Rng& rng);

/// Assignment on the target presentation: g -> phi(t(g)).
/// Throws MismatchError if t is not over phi's generators or the target's
/// generator count differs from t.
AlmostHom transport_map(const AlmostHom& phi, const TransportMap& t, PresentationPtr target);

}  // namespace stablab
