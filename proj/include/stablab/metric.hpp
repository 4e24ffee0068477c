#pragma once

#include <string>
#include <string_view>

namespace stablab {

enum class MetricFamily { SymHamming, UnitaryHS, UnitarySchatten, UnitaryOperator };

/// Which bi-invariant metric group an element lives in.
struct MetricDescriptor {
  MetricFamily family = MetricFamily::SymHamming;
  std::size_t degree = 1;
  double p = 2.0;  // meaningful for UnitarySchatten only

  static MetricDescriptor sym(std::size_t n) { return {MetricFamily::SymHamming, n, 2.0}; }
  static MetricDescriptor unitary_hs(std::size_t n) { return {MetricFamily::UnitaryHS, n, 2.0}; }
  static MetricDescriptor unitary_schatten(std::size_t n, double p) {
    return {MetricFamily::UnitarySchatten, n, p};
  }
  static MetricDescriptor unitary_op(std::size_t n) {
    return {MetricFamily::UnitaryOperator, n, 2.0};
  }

  bool is_unitary() const noexcept { return family != MetricFamily::SymHamming; }
  MetricDescriptor with_degree(std::size_t n) const {
    auto d = *this;
    d.degree = n;
    return d;
  }

  /// Throws PreconditionError unless n >= 1 and (Schatten) p >= 1.
  void validate() const;
  std::string to_string() const;
};

/// Same family and degree, and the same p when the family is Schatten.
bool operator==(const MetricDescriptor& a, const MetricDescriptor& b);

std::string_view family_name(MetricFamily f);
/// "sym_hamming" | "u_hs" | "u_schatten" | "u_op"; throws ParseError otherwise.
MetricFamily parse_family(std::string_view name);

}  // namespace stablab
