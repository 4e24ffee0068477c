#include "stablab/solver.hpp"

#include <cmath>
#include <memory>

#include "stablab/errors.hpp"
#include "stablab/local_search.hpp"

namespace stablab {

const char* strategy_name(DiminishStrategy s) {
  return s == DiminishStrategy::SnapToNearestHom ? "snap" : "descent";
}

void DiminishConfig::validate() const {
  if (!(M > 0.0)) throw PreconditionError("M must be positive");
  if (!(epsilon > 0.0)) throw PreconditionError("epsilon must be positive");
  if (!(halving_factor > 0.0 && halving_factor < 1.0))
    throw PreconditionError("halving factor must lie in (0, 1)");
  if (max_iterations == 0) throw PreconditionError("max_iterations must be >= 1");
  if (!(final_tolerance >= 0.0)) throw PreconditionError("final tolerance must be >= 0");
}

StepOutcome diminish_step(const AlmostHom& phi, const DiminishConfig& cfg, Rng& rng,
                          const HomomorphismTable* table) {
  cfg.validate();
  const double d = defect_value(phi);
  if (d <= cfg.final_tolerance)
    throw PreconditionError("assignment is already a homomorphism; nothing to diminish");
  if (!(d < cfg.epsilon))
    throw PreconditionError("defect " + std::to_string(d) + " is not below epsilon " +
                            std::to_string(cfg.epsilon));

  auto outcome = [&](AlmostHom next) {
    const double moved = dist(phi, next);
    const double nd = defect_value(next);
    return StepOutcome{std::move(next), moved, nd, nd < cfg.halving_factor * d,
                       moved < cfg.M * d};
  };

  if (cfg.strategy == DiminishStrategy::SnapToNearestHom) {
    if (phi.descriptor().is_unitary()) return outcome(homdist_upper(phi, cfg.step_budget, rng).witness);
    if (table) return outcome(homdist_exact(phi, *table).witness);
    return outcome(homdist_exact(phi, cfg.caps).witness);
  }

  DescentOptions opts;
  opts.target_defect = cfg.halving_factor * d;
  opts.strict_target = true;
  opts.ball_radius = cfg.M * d;
  opts.rounds = cfg.step_budget.rounds;
  return outcome(descend(phi, opts, rng).best);
}

CertificationReport certify_trace(const SolveTrace& trace, const DiminishConfig& cfg) {
  CertificationReport report;
  const double q = cfg.halving_factor;
  const double d0 = trace.initial_defect;
  double previous = d0;
  double bound = d0;
  double sum = 0.0;
  for (std::size_t j = 0; j < trace.steps.size(); ++j) {
    const auto& s = trace.steps[j];
    bound *= q;
    if (!(s.defect < q * previous)) report.violations.push_back({j + 1, "halving"});
    if (!(s.step_distance < cfg.M * previous)) report.violations.push_back({j + 1, "movement"});
    if (!(s.defect < bound)) report.violations.push_back({j + 1, "geometric"});
    previous = s.defect;
    sum += s.step_distance;
  }
  if (trace.steps.empty()) {
    if (trace.total_distance != 0.0) report.violations.push_back({0, "cumulative"});
  } else if (!(trace.total_distance < cfg.M * d0 / (1.0 - q))) {
    report.violations.push_back({0, "cumulative"});
  }
  // Floating-point slack only; on Sym both sides are exact multiples of 1/n.
  if (trace.total_distance > sum + 1e-12 * (1.0 + sum))
    report.violations.push_back({0, "triangle"});
  return report;
}

SolveResult iterate_to_homomorphism(const AlmostHom& phi, const DiminishConfig& cfg, Rng& rng) {
  cfg.validate();
  SolveTrace trace;
  trace.initial_defect = defect_value(phi);
  if (!(trace.initial_defect < cfg.epsilon))
    throw PreconditionError("defect " + std::to_string(trace.initial_defect) +
                            " is not below epsilon " + std::to_string(cfg.epsilon));

  std::unique_ptr<HomomorphismTable> table;
  if (cfg.strategy == DiminishStrategy::SnapToNearestHom && !phi.descriptor().is_unitary() &&
      trace.initial_defect > cfg.final_tolerance)
    table = std::make_unique<HomomorphismTable>(phi.presentation_ptr(), phi.descriptor(), cfg.caps);

  AlmostHom current = phi;
  double current_defect = trace.initial_defect;
  for (std::size_t j = 0; j < cfg.max_iterations && current_defect > cfg.final_tolerance; ++j) {
    StepOutcome step = diminish_step(current, cfg, rng, table.get());
    if (!step.ok() && !(step.new_defect < current_defect)) break;
    trace.steps.push_back({step.new_defect, step.step_distance});
    current = std::move(step.next);
    current_defect = step.new_defect;
  }

  trace.converged = current_defect <= cfg.final_tolerance;
  trace.total_distance = dist(phi, current);
  trace.violations = certify_trace(trace, cfg).violations;
  trace.certified = trace.violations.empty();

  SolveResult out{std::move(current), std::move(trace), false};
  out.within_2M_bound = out.trace.steps.empty()
                            ? out.trace.total_distance == 0.0
                            : out.trace.total_distance < 2.0 * cfg.M * out.trace.initial_defect;
  return out;
}

}  // namespace stablab
