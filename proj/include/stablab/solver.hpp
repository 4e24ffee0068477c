#pragma once

#include <string>
#include <vector>

#include "stablab/stability.hpp"

namespace stablab {

enum class DiminishStrategy { SnapToNearestHom, LocalDescent };
const char* strategy_name(DiminishStrategy s);

/// Knobs for the defect-halving iteration.
///
/// A step from phi must find psi with defect(psi) < q * defect(phi) and
/// dist(phi, psi) < M * defect(phi). Only inputs with defect < epsilon are
/// accepted.
struct DiminishConfig {
  double M = 1.0;
  double epsilon = 1.0;
  double halving_factor = 0.5;  // q, in (0, 1)
  std::size_t max_iterations = 64;
  double final_tolerance = 0.0;  // 0 on Sym, 1e-9 on unitary families
  DiminishStrategy strategy = DiminishStrategy::SnapToNearestHom;
  EnumerationCaps caps;
  SearchBudget step_budget{2000};

  /// Throws PreconditionError on M <= 0, epsilon <= 0, q outside (0,1),
  /// max_iterations == 0 or a negative tolerance.
  void validate() const;

  /// Default tolerance for the family: 0 for Sym, 1e-9 for unitary.
  static double tolerance_for(const MetricDescriptor& desc) {
    return desc.is_unitary() ? kUnitaryExactTolerance : 0.0;
  }
};

struct StepOutcome {
  AlmostHom next;
  double step_distance = 0.0;  // dist(input, next), recomputed
  double new_defect = 0.0;     // defect(next), recomputed
  bool satisfied_halving = false;
  bool satisfied_movement = false;

  /// False means the strategy failed; `next` is then its best candidate.
  bool ok() const { return satisfied_halving && satisfied_movement; }
};

/// One halving step. Throws PreconditionError when defect(phi) is at or
/// below final_tolerance or not below epsilon. `table` short-circuits the
/// homomorphism enumeration for SnapToNearestHom on Sym.
StepOutcome diminish_step(const AlmostHom& phi, const DiminishConfig& cfg, Rng& rng,
                          const HomomorphismTable* table = nullptr);

struct TraceStep {
  double defect = 0.0;         // defect after the step
  double step_distance = 0.0;  // distance moved by the step
};

struct TraceViolation {
  std::size_t iteration = 0;  // 1-based step index, 0 for whole-trace bounds
  std::string bound;          // "halving" | "movement" | "geometric" | "cumulative" | "triangle"
};

struct SolveTrace {
  double initial_defect = 0.0;
  std::vector<TraceStep> steps;
  double total_distance = 0.0;  // dist(phi, final iterate)
  bool converged = false;
  bool certified = false;
  std::vector<TraceViolation> violations;
};

struct CertificationReport {
  std::vector<TraceViolation> violations;
  bool certified() const { return violations.empty(); }
};

/// Audits a trace from its recorded numbers alone: at every step j,
/// defect_j < q defect_{j-1}, step_j < M defect_{j-1} and
/// defect_j < defect_0 q^j; overall, total < M defect_0 / (1 - q) (which is
/// 2 M defect_0 at q = 1/2) and total <= sum of steps.
CertificationReport certify_trace(const SolveTrace& trace, const DiminishConfig& cfg);

struct SolveResult {
  AlmostHom result;
  SolveTrace trace;
  /// dist(phi, result) < 2 M defect(phi); vacuously true for exact input.
  bool within_2M_bound = false;
};

/// Repeats diminish_step until the defect is within final_tolerance or the
/// iteration cap is hit. A failed step is still taken when it lowers the
/// defect (and recorded as a violation); otherwise the run stops with
/// converged = false.
SolveResult iterate_to_homomorphism(const AlmostHom& phi, const DiminishConfig& cfg, Rng& rng);

}  // namespace stablab
