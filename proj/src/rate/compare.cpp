#include "stablab/errors.hpp"
#include "stablab/rate.hpp"

namespace stablab {

PresentationComparison presentation_rate_compare(const PresentationPtr& p,
                                                 const std::vector<TietzeMove>& moves,
                                                 const RateExperiment& cfg,
                                                 std::vector<double> c_grid) {
  const TietzeResult moved = apply_tietze(*p, moves);
  const PresentationPtr q = share(moved.presentation);

  BaseHoms first_bases, second_bases;
  for (std::size_t n : cfg.degrees) {
    const MetricDescriptor desc{cfg.family, n, cfg.p};
    std::vector<AlmostHom> homs;
    if (n <= cfg.caps.max_degree && p->generator_count() <= cfg.caps.max_generators) {
      homs = enumerate_homomorphisms(p, MetricDescriptor::sym(n), cfg.caps);
      if (desc.is_unitary()) {
        std::vector<AlmostHom> mats;
        for (const auto& h : homs) {
          std::vector<GroupElement> a;
          for (const auto& g : h.assignment())
            a.emplace_back(desc, UnitaryMatrix::from_permutation(g.permutation()));
          mats.emplace_back(p, desc, std::move(a));
        }
        homs = std::move(mats);
      }
    } else {
      homs.push_back(trivial_homomorphism(p, desc));
    }
    std::vector<AlmostHom> transported;
    transported.reserve(homs.size());
    for (const auto& h : homs) {
      transported.push_back(transport_map(h, moved.forward, q));
      if (!is_homomorphism(transported.back()))
        throw CertificateError("transported homomorphism is not a homomorphism; the moves are unsound");
    }
    first_bases.emplace(n, std::move(homs));
    second_bases.emplace(n, std::move(transported));
  }

  PresentationComparison out;
  out.first = sample_rate(p, cfg, &first_bases);
  out.second = sample_rate(q, cfg, &second_bases);
  out.verdict = equiv_check(out.first.as_function(), out.second.as_function(), std::move(c_grid));
  return out;
}

}  // namespace stablab
