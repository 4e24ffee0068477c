#include <algorithm>
#include <cmath>
#include <numeric>

#include "stablab/errors.hpp"
#include "stablab/group_element.hpp"

namespace stablab {
namespace {

std::vector<std::uint32_t> shuffled(std::size_t n, Rng& rng) {
  std::vector<std::uint32_t> v(n);
  std::iota(v.begin(), v.end(), 0u);
  for (std::size_t i = n; i > 1; --i) std::swap(v[i - 1], v[rng.below(i)]);
  return v;
}

CMatrix gaussian_matrix(std::size_t n, Rng& rng) {
  CMatrix g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = Complex(rng.normal(), rng.normal());
  return g;
}

}  // namespace

CMatrix random_unit_hermitian(std::size_t n, Rng& rng) {
  const CMatrix g = gaussian_matrix(n, rng);
  CMatrix h = Complex(0.5, 0.0) * (g + g.adjoint());
  const auto eig = hermitian_eigenvalues(h);
  const double op = std::max(std::abs(eig.front()), std::abs(eig.back()));
  if (op == 0.0) return CMatrix::identity(n);
  return Complex(1.0 / op, 0.0) * h;
}

GroupElement sample_near(const GroupElement& g, double radius, Rng& rng) {
  if (!(radius >= 0.0)) throw PreconditionError("perturbation radius must be >= 0");
  const auto& desc = g.descriptor();
  if (!desc.is_unitary()) {
    if (radius > 1.0) throw PreconditionError("Sym perturbation radius must be <= 1");
    const std::size_t n = desc.degree;
    const auto k = static_cast<std::size_t>(std::floor(radius * static_cast<double>(n) + 1e-9));
    if (k == 0) return g;
    const auto points = shuffled(n, rng);   // first k entries are the support
    const auto order = shuffled(k, rng);
    std::vector<std::uint32_t> tau(n);
    std::iota(tau.begin(), tau.end(), 0u);
    for (std::size_t i = 0; i < k; ++i) tau[points[i]] = points[order[i]];
    return g * GroupElement(desc, Permutation(std::move(tau)));
  }
  if (radius == 0.0) return g;
  const CMatrix h = random_unit_hermitian(desc.degree, rng);
  return g * GroupElement(desc, UnitaryMatrix(exp_i_hermitian(h, radius)));
}

GroupElement random_element(const MetricDescriptor& desc, Rng& rng) {
  desc.validate();
  if (!desc.is_unitary()) return GroupElement(desc, Permutation(shuffled(desc.degree, rng)));

  // Gram-Schmidt on a complex Ginibre matrix, columns fixed by the QR
  // convention R_ii > 0, gives Haar measure.
  const std::size_t n = desc.degree;
  CMatrix q = gaussian_matrix(n, rng);
  for (std::size_t j = 0; j < n; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < j; ++k) {
        Complex dot = 0.0;
        for (std::size_t i = 0; i < n; ++i) dot += std::conj(q(i, k)) * q(i, j);
        for (std::size_t i = 0; i < n; ++i) q(i, j) -= dot * q(i, k);
      }
    }
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) norm += std::norm(q(i, j));
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < n; ++i) q(i, j) /= norm;
  }
  return GroupElement(desc, UnitaryMatrix(std::move(q)));
}

}  // namespace stablab
