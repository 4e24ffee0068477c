#pragma once

#include <optional>

#include "stablab/stability.hpp"

namespace stablab {

struct DescentOptions {
  double target_defect = 0.0;  // stop once defect <= target
  bool strict_target = false;  // stop once defect < target instead
  std::optional<double> ball_radius;  // keep dist(origin, candidate) < radius
  std::size_t rounds = 2000;
  bool allow_kicks = true;  // random move when no neighbour improves (Sym)
};

struct DescentResult {
  AlmostHom best;  // lowest defect seen, ties by smaller distance to origin
  double defect = 0.0;
  std::size_t rounds = 0;
  bool reached = false;
};

/// Shared engine behind homdist_upper and the solver's LocalDescent.
DescentResult descend(const AlmostHom& origin, const DescentOptions& opts, Rng& rng);

}  // namespace stablab
