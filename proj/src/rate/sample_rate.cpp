#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <memory>
#include <mutex>
#include <numbers>
#include <thread>

#include "stablab/errors.hpp"
#include "stablab/rate.hpp"

namespace stablab {

void RateExperiment::validate() const {
  if (degrees.empty()) throw PreconditionError("rate experiment needs at least one degree");
  if (grid.empty()) throw PreconditionError("rate experiment needs a delta grid");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0.0)) throw PreconditionError("delta grid must be positive");
    if (i && !(grid[i] > grid[i - 1])) throw PreconditionError("delta grid must be increasing");
  }
  if (samples_per_bin == 0) throw PreconditionError("samples per bin must be positive");
  for (auto n : degrees) MetricDescriptor{family, n, p}.validate();
  if (method == HomDistMethod::Exact && family != MetricFamily::SymHamming)
    throw CapExceeded("exact homomorphism distance needs a symmetric-group backend");
}

std::string RateCurve::method_label(std::size_t b) const {
  if (counts[b] == 0) return "none";
  if (exact_counts[b] == counts[b]) return "exact";
  if (exact_counts[b] == 0) return "upper_bound";
  return "mixed";
}

bool RateCurve::is_monotone() const {
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i] < values[i - 1]) return false;
  return true;
}

namespace {

struct DegreeContext {
  MetricDescriptor desc;
  std::unique_ptr<HomomorphismTable> table;  // Exact method on Sym
  std::vector<AlmostHom> bases;
};

std::vector<AlmostHom> permutation_matrix_images(const std::vector<AlmostHom>& homs,
                                                 const MetricDescriptor& desc) {
  std::vector<AlmostHom> out;
  out.reserve(homs.size());
  for (const auto& h : homs) {
    std::vector<GroupElement> assignment;
    for (const auto& g : h.assignment())
      assignment.emplace_back(desc, UnitaryMatrix::from_permutation(g.permutation()));
    out.emplace_back(h.presentation_ptr(), desc, std::move(assignment));
  }
  return out;
}

AlmostHom perturb(const AlmostHom& base, double radius, Rng& rng) {
  std::vector<GroupElement> assignment;
  assignment.reserve(base.assignment().size());
  for (const auto& g : base.assignment()) assignment.push_back(sample_near(g, radius, rng));
  return AlmostHom(base.presentation_ptr(), base.descriptor(), std::move(assignment));
}

AlmostHom random_assignment(const PresentationPtr& p, const MetricDescriptor& desc, Rng& rng) {
  std::vector<GroupElement> assignment;
  for (std::size_t s = 0; s < p->generator_count(); ++s)
    assignment.push_back(random_element(desc, rng));
  return AlmostHom(p, desc, std::move(assignment));
}

struct TaskResult {
  std::optional<RateSample> sample;
  bool search_failed = false;
};

TaskResult run_task(const PresentationPtr& p, const RateExperiment& cfg,
                    const std::vector<DegreeContext>& contexts, std::size_t bin,
                    std::size_t index) {
  Rng rng = derive_stream(cfg.seed, bin, index);
  const std::size_t nd = contexts.size();
  const DegreeContext& ctx = contexts[index % nd];
  const SampleKind kind = (index / nd) % 2 == 0 ? SampleKind::PerturbedHom : SampleKind::RandomFiltered;
  const double delta = cfg.grid[bin];

  std::optional<AlmostHom> phi;
  double phi_defect = 0.0;
  if (kind == SampleKind::PerturbedHom) {
    const AlmostHom& base = ctx.bases[rng.below(ctx.bases.size())];
    phi = base;
    phi_defect = defect_value(base);
    double lo = 0.0;
    double hi = ctx.desc.is_unitary() ? std::numbers::pi : 1.0;
    for (int it = 0; it < cfg.bisection_steps; ++it) {
      const double r = 0.5 * (lo + hi);
      AlmostHom candidate = perturb(base, r, rng);
      const double d = defect_value(candidate);
      if (d < delta) {
        phi = std::move(candidate);
        phi_defect = d;
        lo = r;
      } else {
        hi = r;
      }
    }
    if (!(phi_defect < delta)) phi.reset();
  } else {
    for (std::size_t attempt = 0; attempt < cfg.random_retries; ++attempt) {
      AlmostHom candidate = random_assignment(p, ctx.desc, rng);
      const double d = defect_value(candidate);
      if (d < delta) {
        phi = std::move(candidate);
        phi_defect = d;
        break;
      }
    }
  }
  if (!phi) return {};

  RateSample s;
  s.defect = phi_defect;
  s.degree = ctx.desc.degree;
  s.bin = bin;
  s.index = index;
  s.kind = kind;
  if (cfg.method == HomDistMethod::Exact) {
    s.homdist = ctx.table->nearest(*phi).second;
    s.method = HomDistMethod::Exact;
  } else {
    try {
      s.homdist = homdist_upper(*phi, cfg.upper_budget, rng).value;
    } catch (const NoWitness&) {
      return {std::nullopt, true};
    }
    s.method = HomDistMethod::UpperBound;
  }
  if (cfg.keep_assignments) s.phi = std::move(phi);
  return {std::move(s), false};
}

}  // namespace

RateCurve sample_rate(const PresentationPtr& p, const RateExperiment& cfg, const BaseHoms* bases) {
  cfg.validate();

  std::vector<DegreeContext> contexts;
  for (std::size_t n : cfg.degrees) {
    DegreeContext ctx{MetricDescriptor{cfg.family, n, cfg.p}, nullptr, {}};
    const MetricDescriptor sym = MetricDescriptor::sym(n);
    if (cfg.method == HomDistMethod::Exact)
      ctx.table = std::make_unique<HomomorphismTable>(p, sym, cfg.caps);
    if (bases && bases->count(n)) {
      ctx.bases = bases->at(n);
    } else if (ctx.table) {
      ctx.bases = ctx.table->all();
    } else if (n <= cfg.caps.max_degree && p->generator_count() <= cfg.caps.max_generators) {
      auto homs = HomomorphismTable(p, sym, cfg.caps).all();
      ctx.bases = ctx.desc.is_unitary() ? permutation_matrix_images(homs, ctx.desc) : std::move(homs);
    }
    if (ctx.bases.empty()) ctx.bases.push_back(trivial_homomorphism(p, ctx.desc));
    for (const auto& b : ctx.bases)
      if (!(b.descriptor() == ctx.desc) || !is_homomorphism(b))
        throw PreconditionError("base assignments must be homomorphisms in " + ctx.desc.to_string());
    contexts.push_back(std::move(ctx));
  }

  const std::size_t bins = cfg.grid.size();
  const std::size_t per = cfg.samples_per_bin;
  const std::size_t tasks = bins * per;
  std::vector<TaskResult> results(tasks);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t t = next++; t < tasks; t = next++) {
      try {
        results[t] = run_task(p, cfg, contexts, t / per, t % per);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = tasks;
      }
    }
  };
  const std::size_t threads = std::max<std::size_t>(1, std::min(cfg.threads, tasks));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  RateCurve curve;
  curve.grid = cfg.grid;
  curve.values.assign(bins, 0.0);
  curve.counts.assign(bins, 0);
  curve.exact_counts.assign(bins, 0);
  curve.generated.assign(bins, 0);
  curve.search_failures.assign(bins, 0);
  for (std::size_t t = 0; t < tasks; ++t) {
    auto& r = results[t];
    const std::size_t bin = t / per;
    if (r.search_failed) ++curve.search_failures[bin];
    if (!r.sample) continue;
    ++curve.generated[bin];
    curve.samples.push_back(std::move(*r.sample));
  }
  for (const auto& s : curve.samples)
    for (std::size_t b = 0; b < bins; ++b)
      if (s.defect < cfg.grid[b]) {
        curve.values[b] = std::max(curve.values[b], s.homdist);
        ++curve.counts[b];
        if (s.method == HomDistMethod::Exact) ++curve.exact_counts[b];
      }
  curve.empty.resize(bins);
  for (std::size_t b = 0; b < bins; ++b) curve.empty[b] = curve.generated[b] == 0;
  return curve;
}

namespace {
std::string shortest(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}
}  // namespace

std::string curve_csv(const RateCurve& curve) {
  std::string out = "delta,D_emp,samples,method\n";
  for (std::size_t b = 0; b < curve.grid.size(); ++b)
    out += shortest(curve.grid[b]) + "," + shortest(curve.values[b]) + "," +
           std::to_string(curve.counts[b]) + "," + curve.method_label(b) + "\n";
  return out;
}

}  // namespace stablab
