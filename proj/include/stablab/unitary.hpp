#pragma once

#include "stablab/cmatrix.hpp"
#include "stablab/permutation.hpp"

namespace stablab {

inline constexpr double kUnitarityTolerance = 1e-10;

/// max-entry-modulus of A*A - I.
double unitarity_error(const CMatrix& a);

/// n x n unitary matrix; construction checks unitarity to 1e-10.
class UnitaryMatrix {
 public:
  UnitaryMatrix() = default;
  /// Throws MismatchError when ||A*A - I||_max exceeds kUnitarityTolerance.
  explicit UnitaryMatrix(CMatrix m);

  static UnitaryMatrix identity(std::size_t n);
  static UnitaryMatrix from_permutation(const Permutation& p);

  std::size_t degree() const noexcept { return m_.size(); }
  const CMatrix& matrix() const noexcept { return m_; }

  /// The adjoint, which is the exact inverse.
  UnitaryMatrix inverse() const;

  friend UnitaryMatrix operator*(const UnitaryMatrix& a, const UnitaryMatrix& b);
  friend bool operator==(const UnitaryMatrix&, const UnitaryMatrix&) = default;

 private:
  struct Trusted {};
  UnitaryMatrix(Trusted, CMatrix m) : m_(std::move(m)) {}

  CMatrix m_;
};

/// sqrt((1/n) tr((A-B)*(A-B))), in [0, 2].
double hs_distance(const UnitaryMatrix& a, const UnitaryMatrix& b);
/// (sum sigma_i^p)^(1/p) over singular values of A-B; not normalized.
double schatten_distance(const UnitaryMatrix& a, const UnitaryMatrix& b, double p);
/// Largest singular value of A-B, in [0, 2].
double operator_distance(const UnitaryMatrix& a, const UnitaryMatrix& b);

double schatten_norm(const CMatrix& m, double p);

/// exp(i t H) for Hermitian H by scaling and squaring of the Taylor series.
CMatrix exp_i_hermitian(const CMatrix& h, double t);

}  // namespace stablab
