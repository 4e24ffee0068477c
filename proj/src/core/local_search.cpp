#include "stablab/local_search.hpp"

#include <cmath>
#include <limits>

#include "stablab/errors.hpp"

namespace stablab {
namespace {

struct Candidate {
  AlmostHom phi;
  double defect;
  double moved;  // dist to origin
};

bool better(const Candidate& a, const Candidate& b) {
  if (a.defect != b.defect) return a.defect < b.defect;
  return a.moved < b.moved;
}

class Search {
 public:
  Search(const AlmostHom& origin, const DescentOptions& opts, Rng& rng)
      : origin_(origin), opts_(opts), rng_(rng),
        current_{origin, defect_value(origin), 0.0}, best_(current_) {}

  bool done(const Candidate& c) const {
    return opts_.strict_target ? c.defect < opts_.target_defect : c.defect <= opts_.target_defect;
  }

  bool inside(double moved) const { return !opts_.ball_radius || moved < *opts_.ball_radius; }

  std::optional<Candidate> consider(AlmostHom phi) {
    const double moved = dist(origin_, phi);
    if (!inside(moved)) return std::nullopt;
    const double d = defect_value(phi);
    return Candidate{std::move(phi), d, moved};
  }

  void adopt(Candidate c) {
    current_ = std::move(c);
    if (better(current_, best_)) best_ = current_;
  }

  DescentResult run() {
    std::size_t round = 0;
    if (!done(current_)) {
      if (origin_.descriptor().is_unitary())
        round = run_unitary();
      else
        round = run_sym();
    }
    const bool reached = done(best_);
    return DescentResult{best_.phi, best_.defect, round, reached};
  }

 private:
  std::size_t run_sym() {
    const std::size_t n = origin_.descriptor().degree;
    const std::size_t gens = origin_.assignment().size();
    std::size_t round = 0;
    while (round < opts_.rounds && !done(best_)) {
      ++round;
      std::optional<Candidate> pick;
      for (std::size_t s = 0; s < gens; ++s)
        for (std::uint32_t i = 0; i + 1 < n; ++i)
          for (std::uint32_t j = i + 1; j < n; ++j) {
            auto c = consider(swapped(current_.phi, s, i, j));
            if (c && (!pick || better(*c, *pick))) pick = std::move(c);
          }
      if (pick && pick->defect < current_.defect) {
        adopt(std::move(*pick));
        continue;
      }
      if (!opts_.allow_kicks || n < 2 || gens == 0) break;
      // Local minimum: one random swap, kept only if it stays in the ball.
      const auto s = rng_.below(gens);
      const auto i = static_cast<std::uint32_t>(rng_.below(n));
      auto j = static_cast<std::uint32_t>(rng_.below(n - 1));
      if (j >= i) ++j;
      if (auto c = consider(swapped(current_.phi, s, std::min(i, j), std::max(i, j))))
        adopt(std::move(*c));
    }
    return round;
  }

  static AlmostHom swapped(const AlmostHom& phi, std::size_t s, std::uint32_t i, std::uint32_t j) {
    const auto images = phi[s].permutation().images();
    std::vector<std::uint32_t> v(images.begin(), images.end());
    std::swap(v[i], v[j]);
    return phi.with(s, GroupElement(phi.descriptor(), Permutation(std::move(v))));
  }

  // Random geodesic directions, 8 per generator per round, both signs.
  // The step grows after a success and halves after a failed round.
  std::size_t run_unitary() {
    constexpr int kDirections = 8;
    const auto& desc = origin_.descriptor();
    const std::size_t gens = origin_.assignment().size();
    double step = std::max(current_.defect, 1e-6);
    std::size_t round = 0;
    while (round < opts_.rounds && !done(best_) && step > 1e-15 && gens > 0) {
      ++round;
      std::optional<Candidate> pick;
      for (std::size_t s = 0; s < gens; ++s)
        for (int k = 0; k < kDirections; ++k) {
          const CMatrix h = random_unit_hermitian(desc.degree, rng_);
          for (double sign : {1.0, -1.0}) {
            const GroupElement move(desc, UnitaryMatrix(exp_i_hermitian(h, sign * step)));
            auto c = consider(current_.phi.with(s, current_.phi[s] * move));
            if (c && (!pick || better(*c, *pick))) pick = std::move(c);
          }
        }
      if (pick && pick->defect < current_.defect) {
        adopt(std::move(*pick));
        step = std::min(step * 1.5, 1.0);
      } else {
        step *= 0.5;
      }
    }
    return round;
  }

  const AlmostHom& origin_;
  const DescentOptions& opts_;
  Rng& rng_;
  Candidate current_;
  Candidate best_;
};

}  // namespace

DescentResult descend(const AlmostHom& origin, const DescentOptions& opts, Rng& rng) {
  return Search(origin, opts, rng).run();
}

HomDistResult homdist_upper(const AlmostHom& phi, const SearchBudget& budget, Rng& rng) {
  DescentOptions opts;
  opts.target_defect = phi.descriptor().is_unitary() ? kUnitaryExactTolerance : 0.0;
  opts.rounds = budget.rounds;
  const DescentResult r = descend(phi, opts, rng);
  if (!r.reached)
    throw NoWitness("local search found no homomorphism within " +
                    std::to_string(budget.rounds) + " rounds (best defect " +
                    std::to_string(r.defect) + ")");
  return HomDistResult{dist(phi, r.best), r.best, HomDistMethod::UpperBound, r.rounds};
}

}  // namespace stablab
