#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stablab/stability.hpp"

namespace stablab {

/// A monotone function known at finitely many points.
///
/// Between samples it is read as a right-continuous step: the value at the
/// largest grid point <= x. Past the last point the last value is kept;
/// below the first point it is 0 (the least value a nonnegative monotone
/// function can take there).
struct SampledFunction {
  std::vector<double> grid;
  std::vector<double> values;

  static SampledFunction sample(const std::function<double(double)>& f,
                                const std::vector<double>& grid);
  double operator()(double x) const;
};

/// `steps` equal intervals on [a, b]; steps + 1 points including both ends.
std::vector<double> make_grid(double a, double b, std::size_t steps, bool logarithmic);

/// "a:b:steps" with an optional "log"/"lin" suffix ("0.1:0.9:8log" or
/// "0.1:0.9:8:lin"); logarithmic by default.
std::vector<double> parse_grid(const std::string& spec);

/// Powers of two 2^0 .. 2^20.
std::vector<double> default_c_grid();

struct RateComparison {
  bool holds = false;
  std::optional<double> witness_C;  // smallest C on the C grid that works
  std::vector<double> delta_grid;
  std::vector<double> c_grid;
  static constexpr const char* interpolation =
      "right-continuous step from samples; constant past the last sample; 0 below the first";
};

/// f(d) <= C g(C d) + C d at every d of the delta grid, for this C.
bool preceq_holds_with(const SampledFunction& f, const SampledFunction& g, double C,
                       const std::vector<double>& delta_grid);

/// Finite-grid semi-decision of f preceq g: a witness is conclusive on the
/// grid, its absence is only evidence. Empty grids default to f's grid and
/// default_c_grid(). Throws PreconditionError when the delta grid is empty.
RateComparison preceq_check(const SampledFunction& f, const SampledFunction& g,
                            std::vector<double> c_grid = {}, std::vector<double> delta_grid = {});

struct EquivalenceResult {
  RateComparison forward;   // f preceq g
  RateComparison backward;  // g preceq f
  bool equivalent() const { return forward.holds && backward.holds; }
};

EquivalenceResult equiv_check(const SampledFunction& f, const SampledFunction& g,
                              std::vector<double> c_grid = {}, std::vector<double> delta_grid = {});

// ---------------------------------------------------------------------------
// Empirical D(delta)

enum class SampleKind { PerturbedHom, RandomFiltered };

struct RateSample {
  double defect = 0.0;
  double homdist = 0.0;
  HomDistMethod method = HomDistMethod::Exact;
  std::size_t degree = 0;
  std::size_t bin = 0;    // stream coordinates: derive_stream(seed, bin, index)
  std::size_t index = 0;
  SampleKind kind = SampleKind::PerturbedHom;
  std::optional<AlmostHom> phi;
};

struct RateExperiment {
  MetricFamily family = MetricFamily::SymHamming;
  double p = 2.0;
  std::vector<std::size_t> degrees{4, 5, 6};
  std::vector<double> grid;
  std::size_t samples_per_bin = 200;
  HomDistMethod method = HomDistMethod::Exact;
  std::uint64_t seed = 0;
  EnumerationCaps caps;
  std::size_t random_retries = 64;
  int bisection_steps = 12;
  SearchBudget upper_budget{4000};
  std::size_t threads = 1;
  bool keep_assignments = false;  // store phi in every RateSample

  void validate() const;
};

/// D_emp on a grid. values[b] = max homdist over all samples with
/// defect < grid[b], so the curve is nondecreasing by construction and the
/// supremum is approached from below.
struct RateCurve {
  std::vector<double> grid;
  std::vector<double> values;
  std::vector<std::size_t> counts;           // samples with defect < grid[b]
  std::vector<std::size_t> exact_counts;     // of which Exact
  std::vector<std::size_t> generated;        // samples targeted at bin b that were accepted
  std::vector<std::size_t> search_failures;  // UpperBound searches that gave up
  std::vector<bool> empty;                   // bin b produced no sample at all
  std::vector<RateSample> samples;

  SampledFunction as_function() const { return {grid, values}; }
  /// "exact", "upper_bound", "mixed" or "none" for bin b.
  std::string method_label(std::size_t b) const;
  bool is_monotone() const;
};

using BaseHoms = std::map<std::size_t, std::vector<AlmostHom>>;

/// Samples D_emp. Per (bin, index) task the degree cycles through
/// `degrees`, and the kind alternates between a perturbed homomorphism
/// (radius tuned by bisection until the defect is below the bin's delta) and
/// a uniformly random assignment kept only if its defect is below delta.
/// Base homomorphisms default to the enumerated Hom(Gamma, Sym(n)) (as
/// permutation matrices on unitary families); `bases` overrides them.
RateCurve sample_rate(const PresentationPtr& p, const RateExperiment& cfg,
                      const BaseHoms* bases = nullptr);

std::string curve_csv(const RateCurve& curve);

struct ExponentFit {
  double alpha = 0.0;
  double r_squared = 0.0;
  std::size_t points = 0;
};

/// Least-squares slope of log D against log delta over bins with D > 0.
/// Throws PreconditionError with fewer than 3 such bins.
ExponentFit fit_exponent(const RateCurve& curve);
ExponentFit fit_exponent(const SampledFunction& f);

struct LinearLowerBound {
  double c_max = 0.0;  // min of D/delta over bins with D > 0
  std::size_t positive_bins = 0;
  std::size_t zero_bins = 0;
  std::optional<double> support_min_delta;  // smallest delta with D > 0
  std::string note;
};

LinearLowerBound linear_lower_check(const RateCurve& curve);
LinearLowerBound linear_lower_check(const SampledFunction& f);

/// Compares the empirical rate of p with that of the presentation reached by
/// `moves`. Base homomorphisms of the second presentation are the forward
/// transports of the first one's.
struct PresentationComparison {
  RateCurve first;
  RateCurve second;
  EquivalenceResult verdict;
};

PresentationComparison presentation_rate_compare(const PresentationPtr& p,
                                                 const std::vector<TietzeMove>& moves,
                                                 const RateExperiment& cfg,
                                                 std::vector<double> c_grid = {});

// ---------------------------------------------------------------------------
// Finite-prefix surrogates for the asymptotic notions

struct AsymptoticReport {
  static constexpr const char* kind =
      "surrogate: finite-prefix trend heuristics, no ultrafilter limits are computed";
  std::vector<double> defects;
  std::vector<double> dists;
  std::vector<double> new_defects;
  double threshold = 0.2;

  double first_quarter_mean = 0.0;
  double last_quarter_mean = 0.0;
  bool is_asymptotic = false;

  std::optional<bool> diminish_a;      // dist = O(defect)
  std::optional<double> a_constant;    // max dist/defect
  std::optional<bool> diminish_b;      // new defect = o(defect)
  std::optional<double> b_last_ratio;  // max ratio over the last quarter
  std::size_t skipped = 0;             // indices with defect 0
};

/// Requires at least 8 terms; `dists` and `new_defects` are optional but
/// must match the defect length when given.
AsymptoticReport asymptotic_checks(const std::vector<double>& defects,
                                   const std::vector<double>& dists = {},
                                   const std::vector<double>& new_defects = {},
                                   double threshold = 0.2);

}  // namespace stablab
