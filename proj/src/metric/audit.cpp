#include <algorithm>
#include <cmath>

#include "stablab/group_element.hpp"

namespace stablab {

double MetricAudit::max_violation() const {
  return std::max({symmetry, identity, triangle, left_invariance, right_invariance});
}

namespace {

// Hamming distances are k/n, so the axioms are checked on the integer counts
// k, where they must hold exactly; comparing the doubles would report
// rounding such as 1/3 + 1/3 != 2/3 as a violation.
MetricAudit audit_sym(const MetricDescriptor& desc, std::size_t triples, Rng& rng) {
  MetricAudit a;
  a.triples = triples;
  const double n = static_cast<double>(desc.degree);
  auto worse = [n](double& slot, long excess) { slot = std::max(slot, static_cast<double>(excess) / n); };
  for (std::size_t t = 0; t < triples; ++t) {
    const Permutation x = random_element(desc, rng).permutation();
    const Permutation y = random_element(desc, rng).permutation();
    const Permutation z = random_element(desc, rng).permutation();
    auto k = [](const Permutation& u, const Permutation& v) { return static_cast<long>(hamming_count(u, v)); };
    const long kxy = k(x, y);
    worse(a.symmetry, std::labs(kxy - k(y, x)));
    worse(a.identity, k(x, x));
    worse(a.triangle, k(x, z) - kxy - k(y, z));
    worse(a.left_invariance, std::labs(k(z * x, z * y) - kxy));
    worse(a.right_invariance, std::labs(k(x * z, y * z) - kxy));
  }
  return a;
}

}  // namespace

MetricAudit audit_metric(const MetricDescriptor& desc, std::size_t triples, Rng& rng) {
  desc.validate();
  if (!desc.is_unitary()) return audit_sym(desc, triples, rng);
  MetricAudit a;
  a.triples = triples;
  for (std::size_t t = 0; t < triples; ++t) {
    const GroupElement x = random_element(desc, rng);
    const GroupElement y = random_element(desc, rng);
    const GroupElement z = random_element(desc, rng);
    const double dxy = distance(x, y);
    a.symmetry = std::max(a.symmetry, std::abs(dxy - distance(y, x)));
    a.identity = std::max(a.identity, distance(x, x));
    a.triangle = std::max(a.triangle, distance(x, z) - dxy - distance(y, z));
    const GroupElement zx = z * x, zy = z * y, xz = x * z, yz = y * z;
    a.left_invariance = std::max(a.left_invariance, std::abs(distance(zx, zy) - dxy));
    a.right_invariance = std::max(a.right_invariance, std::abs(distance(xz, yz) - dxy));
    a.unitarity = std::max({a.unitarity, unitarity_error(zx.unitary().matrix()),
                            unitarity_error(x.inverse().unitary().matrix())});
  }
  return a;
}

}  // namespace stablab
