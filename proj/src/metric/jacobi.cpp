#include <algorithm>
#include <cmath>
#include <functional>

#include "stablab/cmatrix.hpp"
#include "stablab/errors.hpp"

namespace stablab {
namespace {

double off_diagonal_mass(const CMatrix& h) {
  double s = 0.0;
  for (std::size_t i = 0; i < h.size(); ++i)
    for (std::size_t j = 0; j < h.size(); ++j)
      if (i != j) s += std::norm(h(i, j));
  return std::sqrt(s);
}

// Annihilates h(p,q) with J = diag(1, e^{-i phi}) * [[c, s], [-s, c]] acting
// on the (p, q) plane: the phase makes the pivot block real symmetric, the
// real rotation then diagonalises it.
void rotate(CMatrix& h, std::size_t p, std::size_t q) {
  const Complex hpq = h(p, q);
  const double mag = std::abs(hpq);
  if (mag == 0.0) return;
  const Complex phase = hpq / mag;  // e^{i phi}
  const double app = h(p, p).real();
  const double aqq = h(q, q).real();
  const double theta = (aqq - app) / (2.0 * mag);
  const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const Complex jpp = c, jpq = s, jqp = -s * std::conj(phase), jqq = c * std::conj(phase);
  const std::size_t n = h.size();
  for (std::size_t k = 0; k < n; ++k) {  // H <- H J
    const Complex hkp = h(k, p), hkq = h(k, q);
    h(k, p) = hkp * jpp + hkq * jqp;
    h(k, q) = hkp * jpq + hkq * jqq;
  }
  for (std::size_t k = 0; k < n; ++k) {  // H <- J^H H
    const Complex hpk = h(p, k), hqk = h(q, k);
    h(p, k) = std::conj(jpp) * hpk + std::conj(jqp) * hqk;
    h(q, k) = std::conj(jpq) * hpk + std::conj(jqq) * hqk;
  }
  h(p, q) = 0.0;
  h(q, p) = 0.0;
  h(p, p) = h(p, p).real();
  h(q, q) = h(q, q).real();
}

}  // namespace

std::vector<double> hermitian_eigenvalues(CMatrix h, const JacobiOptions& opts) {
  const std::size_t n = h.size();
  const double scale = h.frobenius_norm();
  int sweep = 0;
  if (scale > 0.0) {
    while (off_diagonal_mass(h) > opts.tolerance * scale) {
      if (sweep++ >= opts.max_sweeps)
        throw NumericError("Jacobi eigenvalue iteration did not converge in " +
                           std::to_string(opts.max_sweeps) + " sweeps");
      for (std::size_t p = 0; p + 1 < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q) rotate(h, p, q);
    }
  }
  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = h(i, i).real();
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

std::vector<double> singular_values(const CMatrix& m, const JacobiOptions& opts) {
  auto values = hermitian_eigenvalues(m.adjoint() * m, opts);
  for (auto& v : values) {
    if (v < 0.0) {
      if (v < -1e-12) throw NumericError("Gram matrix has a negative eigenvalue");
      v = 0.0;
    }
    v = std::sqrt(v);
  }
  return values;
}

}  // namespace stablab
