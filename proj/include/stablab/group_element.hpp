#pragma once

#include <variant>
#include <vector>

#include "stablab/metric.hpp"
#include "stablab/permutation.hpp"
#include "stablab/random.hpp"
#include "stablab/unitary.hpp"

namespace stablab {

/// A permutation or unitary together with the metric group it belongs to.
class GroupElement {
 public:
  using Value = std::variant<Permutation, UnitaryMatrix>;

  /// Throws MismatchError when value and descriptor disagree.
  GroupElement(MetricDescriptor desc, Value value);

  static GroupElement identity(const MetricDescriptor& desc);

  const MetricDescriptor& descriptor() const noexcept { return desc_; }
  const Value& value() const noexcept { return value_; }
  const Permutation& permutation() const { return std::get<Permutation>(value_); }
  const UnitaryMatrix& unitary() const { return std::get<UnitaryMatrix>(value_); }

  GroupElement inverse() const;

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b);
  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  MetricDescriptor desc_;
  Value value_;
};

inline GroupElement identity(const MetricDescriptor& desc) { return GroupElement::identity(desc); }
inline GroupElement multiply(const GroupElement& a, const GroupElement& b) { return a * b; }
inline GroupElement invert(const GroupElement& a) { return a.inverse(); }

/// d_G(a, b) for the family in the shared descriptor.
double distance(const GroupElement& a, const GroupElement& b);

/// d_G(a, 1).
double distance_to_identity(const GroupElement& a);

/// Sym: g * tau with tau a uniformly random permutation of floor(radius*n)
/// random points, so the distance to g is at most floor(radius*n)/n.
/// Unitary: g * exp(i radius H), H random Hermitian with operator norm 1.
/// radius 0 returns g. Throws PreconditionError for radius < 0, or > 1 on Sym.
GroupElement sample_near(const GroupElement& g, double radius, Rng& rng);

/// Uniform random permutation, or a Haar-random unitary.
GroupElement random_element(const MetricDescriptor& desc, Rng& rng);

/// Random Hermitian matrix scaled to operator norm 1 (n x n).
CMatrix random_unit_hermitian(std::size_t n, Rng& rng);

inline constexpr std::size_t kMaxEnumerationDegree = 8;

/// All n! permutations in lexicographic image order. SymHamming only, n <= 8;
/// throws CapExceeded otherwise.
std::vector<GroupElement> enumerate_elements(const MetricDescriptor& desc);

}  // namespace stablab

namespace stablab {

/// Worst violations seen by a randomized audit of the metric axioms and of
/// bi-invariance on triples (x, y, z): symmetry, d(x,x) = 0, the triangle
/// inequality, d(zx, zy) = d(x, y) and d(xz, yz) = d(x, y).
struct MetricAudit {
  std::size_t triples = 0;
  double symmetry = 0.0;
  double identity = 0.0;
  double triangle = 0.0;
  double left_invariance = 0.0;
  double right_invariance = 0.0;
  double unitarity = 0.0;  // of products and inverses (unitary families)

  double max_violation() const;
};

MetricAudit audit_metric(const MetricDescriptor& desc, std::size_t triples, Rng& rng);

/// 0 on Sym (Hamming counts are integers), 1e-9 on unitary families.
inline double audit_tolerance(const MetricDescriptor& desc) { return desc.is_unitary() ? 1e-9 : 0.0; }

}  // namespace stablab
