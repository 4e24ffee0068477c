#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "stablab/errors.hpp"
#include "stablab/rate.hpp"

namespace stablab {

ExponentFit fit_exponent(const SampledFunction& f) {
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < f.grid.size(); ++i)
    if (f.grid[i] > 0.0 && f.values[i] > 0.0) {
      xs.push_back(std::log(f.grid[i]));
      ys.push_back(std::log(f.values[i]));
    }
  if (xs.size() < 3)
    throw PreconditionError("exponent fit needs at least 3 bins with D > 0, found " +
                            std::to_string(xs.size()));
  const double n = static_cast<double>(xs.size());
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  if (sxx == 0.0) throw PreconditionError("exponent fit needs distinct delta values");
  ExponentFit fit;
  fit.alpha = sxy / sxx;
  fit.points = xs.size();
  double ss_res = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (my + fit.alpha * (xs[i] - mx));
    ss_res += r * r;
  }
  // A flat curve is fitted perfectly by slope 0.
  fit.r_squared = syy == 0.0 ? 1.0 : 1.0 - ss_res / syy;
  return fit;
}

ExponentFit fit_exponent(const RateCurve& curve) { return fit_exponent(curve.as_function()); }

LinearLowerBound linear_lower_check(const SampledFunction& f) {
  if (f.grid.empty()) throw PreconditionError("linear lower bound needs a nonempty curve");
  LinearLowerBound out;
  double c = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < f.grid.size(); ++i) {
    if (f.values[i] > 0.0 && f.grid[i] > 0.0) {
      c = std::min(c, f.values[i] / f.grid[i]);
      ++out.positive_bins;
      if (!out.support_min_delta) out.support_min_delta = f.grid[i];
    } else {
      ++out.zero_bins;
    }
  }
  if (out.positive_bins == 0) {
    out.c_max = 0.0;
    out.note = "free-group-like: the curve is identically zero";
    return out;
  }
  out.c_max = c;
  if (out.zero_bins > 0)
    out.note = "bound taken over bins with D > 0; smaller deltas admit only homomorphisms "
               "at the sampled degrees";
  return out;
}

LinearLowerBound linear_lower_check(const RateCurve& curve) {
  return linear_lower_check(curve.as_function());
}

namespace {

double mean(const std::vector<double>& v, std::size_t first, std::size_t last) {
  double s = 0.0;
  for (std::size_t i = first; i < last; ++i) s += v[i];
  return s / static_cast<double>(last - first);
}

}  // namespace

AsymptoticReport asymptotic_checks(const std::vector<double>& defects,
                                   const std::vector<double>& dists,
                                   const std::vector<double>& new_defects, double threshold) {
  if (defects.size() < 8) throw PreconditionError("asymptotic checks need a prefix of length >= 8");
  if (!dists.empty() && dists.size() != defects.size())
    throw PreconditionError("distance sequence length differs from the defect sequence");
  if (!new_defects.empty() && new_defects.size() != defects.size())
    throw PreconditionError("new-defect sequence length differs from the defect sequence");

  AsymptoticReport r;
  r.defects = defects;
  r.dists = dists;
  r.new_defects = new_defects;
  r.threshold = threshold;

  const std::size_t len = defects.size();
  const std::size_t quarter = std::max<std::size_t>(1, len / 4);
  r.first_quarter_mean = mean(defects, 0, quarter);
  r.last_quarter_mean = mean(defects, len - quarter, len);
  r.is_asymptotic = r.last_quarter_mean < r.first_quarter_mean / 4.0 && defects.back() < threshold;

  for (double d : defects)
    if (d == 0.0) ++r.skipped;

  if (!dists.empty()) {
    double c = 0.0;
    bool finite = true;
    for (std::size_t i = 0; i < len; ++i) {
      if (defects[i] == 0.0) continue;
      const double ratio = dists[i] / defects[i];
      if (!std::isfinite(ratio)) finite = false;
      else c = std::max(c, ratio);
    }
    r.diminish_a = finite;
    if (finite) r.a_constant = c;
  }

  if (!new_defects.empty()) {
    std::vector<double> ratios;
    std::vector<std::size_t> at;
    for (std::size_t i = 0; i < len; ++i)
      if (defects[i] != 0.0) {
        ratios.push_back(new_defects[i] / defects[i]);
        at.push_back(i);
      }
    if (ratios.size() >= 2) {
      const std::size_t q = std::max<std::size_t>(1, ratios.size() / 4);
      double last_max = 0.0;
      for (std::size_t i = ratios.size() - q; i < ratios.size(); ++i)
        last_max = std::max(last_max, ratios[i]);
      const double head = mean(ratios, 0, q);
      const double tail = mean(ratios, ratios.size() - q, ratios.size());
      r.b_last_ratio = last_max;
      r.diminish_b = last_max < 0.1 && tail <= head;
    } else {
      r.diminish_b = false;
    }
  }
  return r;
}

}  // namespace stablab
