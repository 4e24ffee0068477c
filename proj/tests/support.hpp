#pragma once

// Conversions between library values and the oracle representations.

#include "oracles.hpp"
#include "stablab/stability.hpp"

namespace support {

inline oracle::Perm to_oracle(const stablab::Permutation& p) {
  return oracle::Perm(p.images().begin(), p.images().end());
}

inline stablab::Permutation from_oracle(const oracle::Perm& p) {
  return stablab::Permutation(std::vector<std::uint32_t>(p.begin(), p.end()));
}

inline oracle::Letters to_oracle(const stablab::Word& w) {
  oracle::Letters out;
  for (const auto& l : w.letters()) out.emplace_back(static_cast<int>(l.generator), l.sign);
  return out;
}

inline oracle::Mat to_oracle(const stablab::CMatrix& m) {
  oracle::Mat out(m.size(), std::vector<oracle::C>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out[i][j] = m(i, j);
  return out;
}

inline stablab::GroupElement sym(const std::vector<std::uint32_t>& images) {
  return {stablab::MetricDescriptor::sym(images.size()), stablab::Permutation(images)};
}

inline stablab::AlmostHom z2_hom(std::vector<std::uint32_t> a, std::vector<std::uint32_t> b) {
  static const auto p = stablab::share(stablab::parse_presentation("<a, b | [a,b]>"));
  const auto desc = stablab::MetricDescriptor::sym(a.size());
  return stablab::AlmostHom(p, desc, {sym(a), sym(b)});
}

inline stablab::AlmostHom z2_hom_oracle(const oracle::Perm& a, const oracle::Perm& b) {
  return z2_hom(std::vector<std::uint32_t>(a.begin(), a.end()),
                std::vector<std::uint32_t>(b.begin(), b.end()));
}

}  // namespace support
