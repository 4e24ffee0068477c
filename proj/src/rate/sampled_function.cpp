#include <algorithm>
#include <cmath>

#include "stablab/errors.hpp"
#include "stablab/rate.hpp"

namespace stablab {

SampledFunction SampledFunction::sample(const std::function<double(double)>& f,
                                        const std::vector<double>& grid) {
  SampledFunction s;
  s.grid = grid;
  for (double x : grid) s.values.push_back(f(x));
  return s;
}

double SampledFunction::operator()(double x) const {
  const auto it = std::upper_bound(grid.begin(), grid.end(), x);
  if (it == grid.begin()) return 0.0;
  return values[static_cast<std::size_t>(it - grid.begin()) - 1];
}

std::vector<double> make_grid(double a, double b, std::size_t steps, bool logarithmic) {
  if (!(a > 0.0) || !(b > a) || steps == 0)
    throw PreconditionError("grid needs 0 < a < b and at least one step");
  std::vector<double> grid(steps + 1);
  for (std::size_t i = 0; i <= steps; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(steps);
    grid[i] = logarithmic ? std::exp(std::log(a) + t * (std::log(b) - std::log(a)))
                          : a + t * (b - a);
  }
  grid.front() = a;
  grid.back() = b;
  return grid;
}

std::vector<double> parse_grid(const std::string& spec) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto colon = spec.find(':', start);
    parts.push_back(spec.substr(start, colon - start));
    if (colon == std::string::npos) break;
    start = colon + 1;
  }
  bool logarithmic = true;
  if (parts.size() == 4) {
    if (parts[3] == "lin") logarithmic = false;
    else if (parts[3] != "log") throw ParseError("grid spacing must be 'log' or 'lin'");
    parts.pop_back();
  }
  if (parts.size() != 3) throw ParseError("grid must look like a:b:steps[log|lin]");
  std::string& steps = parts[2];
  for (const char* suffix : {"log", "lin"}) {
    if (steps.size() > 3 && steps.ends_with(suffix)) {
      logarithmic = std::string(suffix) == "log";
      steps.resize(steps.size() - 3);
    }
  }
  try {
    std::size_t used = 0;
    const double a = std::stod(parts[0], &used);
    if (used != parts[0].size()) throw ParseError("bad grid start");
    const double b = std::stod(parts[1], &used);
    if (used != parts[1].size()) throw ParseError("bad grid end");
    const long n = std::stol(steps, &used);
    if (used != steps.size() || n <= 0) throw ParseError("bad grid step count");
    return make_grid(a, b, static_cast<std::size_t>(n), logarithmic);
  } catch (const std::logic_error&) {
    throw ParseError("grid must look like a:b:steps[log|lin]");
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

std::vector<double> default_c_grid() {
  std::vector<double> c;
  for (int k = 0; k <= 20; ++k) c.push_back(std::ldexp(1.0, k));
  return c;
}

bool preceq_holds_with(const SampledFunction& f, const SampledFunction& g, double C,
                       const std::vector<double>& delta_grid) {
  for (double d : delta_grid)
    if (!(f(d) <= C * g(C * d) + C * d)) return false;
  return true;
}

RateComparison preceq_check(const SampledFunction& f, const SampledFunction& g,
                            std::vector<double> c_grid, std::vector<double> delta_grid) {
  if (delta_grid.empty()) delta_grid = f.grid;
  if (c_grid.empty()) c_grid = default_c_grid();
  if (delta_grid.empty()) throw PreconditionError("preceq_check needs a nonempty delta grid");
  std::sort(c_grid.begin(), c_grid.end());
  RateComparison out;
  out.delta_grid = delta_grid;
  out.c_grid = c_grid;
  for (double C : c_grid) {
    if (preceq_holds_with(f, g, C, delta_grid)) {
      out.holds = true;
      out.witness_C = C;
      break;
    }
  }
  return out;
}

EquivalenceResult equiv_check(const SampledFunction& f, const SampledFunction& g,
                              std::vector<double> c_grid, std::vector<double> delta_grid) {
  if (delta_grid.empty()) {
    delta_grid = f.grid;
    delta_grid.insert(delta_grid.end(), g.grid.begin(), g.grid.end());
    std::sort(delta_grid.begin(), delta_grid.end());
    delta_grid.erase(std::unique(delta_grid.begin(), delta_grid.end()), delta_grid.end());
  }
  return {preceq_check(f, g, c_grid, delta_grid), preceq_check(g, f, c_grid, delta_grid)};
}

}  // namespace stablab
