#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "stablab/errors.hpp"
#include "stablab/rate.hpp"
#include "support.hpp"

using namespace stablab;
using Catch::Matchers::WithinAbs;

namespace {

const PresentationPtr kZ2 = share(parse_presentation("<a, b | [a,b]>"));

// Right-continuous lower step, constant past the last sample, 0 below the first.
double step_at(const std::vector<double>& xs, const std::vector<double>& ys, double x) {
  double v = 0;
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (xs[i] <= x) v = ys[i];
  return v;
}

std::optional<double> oracle_witness(const SampledFunction& f, const SampledFunction& g,
                                     const std::vector<double>& deltas) {
  for (int k = 0; k <= 20; ++k) {
    const double C = std::ldexp(1.0, k);
    bool ok = true;
    for (double d : deltas)
      ok = ok && step_at(f.grid, f.values, d) <= C * step_at(g.grid, g.values, C * d) + C * d;
    if (ok) return C;
  }
  return std::nullopt;
}

SampledFunction random_monotone(std::mt19937_64& gen) {
  std::uniform_int_distribution<int> size(3, 12);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  SampledFunction f;
  double x = 1e-4 * (1 + 9 * u(gen)), y = 0;
  for (int i = size(gen); i > 0; --i) {
    f.grid.push_back(x);
    y += u(gen) < 0.3 ? 0.0 : u(gen) * u(gen) * 0.5;
    f.values.push_back(y);
    x *= 1.2 + 3 * u(gen);
  }
  return f;
}

RateExperiment z2_experiment(std::vector<std::size_t> degrees, std::vector<double> grid, std::size_t samples) {
  RateExperiment ex;
  ex.degrees = std::move(degrees);
  ex.grid = std::move(grid);
  ex.samples_per_bin = samples;
  ex.seed = 5;
  return ex;
}

}  // namespace

TEST_CASE("sampled functions use right-continuous steps") {
  const SampledFunction f{{0.1, 0.2, 0.4}, {1, 2, 3}};
  CHECK(f(0.05) == 0);
  CHECK(f(0.1) == 1);
  CHECK(f(0.15) == 1);
  CHECK(f(0.2) == 2);
  CHECK(f(0.39) == 2);
  CHECK(f(0.4) == 3);
  CHECK(f(100) == 3);
  CHECK(SampledFunction::sample([](double x) { return 2 * x; }, {1, 2}).values == std::vector<double>{2, 4});
}

TEST_CASE("grid parsing") {
  const auto g = parse_grid("0.1:0.9:8log");
  REQUIRE(g.size() == 9);
  CHECK(g.front() == 0.1);
  CHECK(g.back() == 0.9);
  for (std::size_t i = 1; i < g.size(); ++i) CHECK_THAT(g[i] / g[i - 1], WithinAbs(std::pow(9.0, 1.0 / 8), 1e-12));
  const auto l = parse_grid("0.1:0.5:4lin");
  REQUIRE(l.size() == 5);
  CHECK_THAT(l[2], WithinAbs(0.3, 1e-15));
  CHECK(parse_grid("0.1:0.5:4:lin") == l);
  CHECK_THROWS_AS(parse_grid("0.1:0.5"), ParseError);
  CHECK_THROWS_AS(parse_grid("0.5:0.1:4log"), ParseError);
  CHECK_THROWS_AS(parse_grid("0.1:0.5:4xyz"), ParseError);
  CHECK_THROWS_AS(parse_grid("0:0.5:4lin"), ParseError);
  CHECK(default_c_grid().size() == 21);
  CHECK(default_c_grid().back() == 1048576.0);
}

TEST_CASE("preceq examples") {
  std::mt19937_64 gen(61);
  const auto grid = make_grid(1e-6, 1.0, 60, true);
  const auto id = SampledFunction::sample([](double x) { return x; }, grid);
  std::uniform_real_distribution<double> u(0, 5);
  for (int trial = 0; trial < 50; ++trial) {
    SampledFunction g;
    g.grid = grid;
    for (std::size_t i = 0; i < grid.size(); ++i) g.values.push_back(u(gen));
    const auto r = preceq_check(id, g);
    CHECK(r.holds);
    CHECK(r.witness_C == 1.0);
  }
  const auto square = SampledFunction::sample([](double x) { return x * x; }, grid);
  CHECK(preceq_check(square, id).witness_C == 1.0);

  const auto sqrt_f = SampledFunction::sample([](double x) { return std::sqrt(x); }, grid);
  const auto r = preceq_check(sqrt_f, id);
  // On a grid bottoming out at 1e-6 a moderate constant still works.
  REQUIRE(r.holds);
  CHECK(r.witness_C == oracle_witness(sqrt_f, id, grid));
  CHECK(*r.witness_C > 1.0);

  const auto deep = make_grid(1e-30, 1.0, 300, true);
  const auto sqrt_deep = SampledFunction::sample([](double x) { return std::sqrt(x); }, deep);
  const auto id_deep = SampledFunction::sample([](double x) { return x; }, deep);
  const auto none = preceq_check(sqrt_deep, id_deep);
  CHECK_FALSE(none.holds);
  CHECK_FALSE(none.witness_C.has_value());
  CHECK(none.c_grid == default_c_grid());
}

TEST_CASE("preceq agrees with an independent checker") {
  std::mt19937_64 gen(67);
  for (int trial = 0; trial < 300; ++trial) {
    const auto f = random_monotone(gen), g = random_monotone(gen);
    CHECK(preceq_check(f, g).witness_C == oracle_witness(f, g, f.grid));
    if (const auto c = preceq_check(f, g).witness_C) {
      for (double d : f.grid) CHECK(f(d) <= *c * g(*c * d) + *c * d);
    }
  }
}

TEST_CASE("preceq is reflexive and id is below everything") {
  std::mt19937_64 gen(71);
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = random_monotone(gen);
    CHECK(preceq_check(f, f).witness_C == 1.0);
    const auto id = SampledFunction::sample([](double x) { return x; }, f.grid);
    CHECK(preceq_check(id, f).witness_C == 1.0);
  }
}

TEST_CASE("preceq composes along chains") {
  std::mt19937_64 gen(73);
  std::size_t chains = 0, naive_failures = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const auto f = random_monotone(gen), g = random_monotone(gen), h = random_monotone(gen);
    const auto fg = preceq_check(f, g), gh = preceq_check(g, h);
    if (!fg.holds || !gh.holds) continue;
    ++chains;
    const double c1 = *fg.witness_C, c2 = *gh.witness_C;
    // Chaining the two inequalities gives c1*c2*h(c1*c2*d) + (c1*c1*c2 + c1)*d.
    CHECK(preceq_holds_with(f, h, c1 * c1 * c2 + c1, f.grid));
    if (!preceq_holds_with(f, h, c1 * c2 + c1 + c2, f.grid)) ++naive_failures;
  }
  CHECK(chains > 50);
  UNSCOPED_INFO("chains " << chains << ", failures of the c1*c2+c1+c2 candidate " << naive_failures);
  CHECK(chains >= naive_failures);
}

TEST_CASE("the additive chain candidate can be too small") {
  std::vector<double> grid;
  for (int k = -10; k <= 0; ++k) grid.push_back(std::ldexp(1.0, k));
  const auto f = SampledFunction::sample([](double x) { return 6 * x; }, grid);
  const auto g = SampledFunction::sample([](double x) { return x; }, grid);
  const auto h = SampledFunction::sample([](double) { return 0.0; }, grid);
  std::vector<double> inner(grid.begin(), grid.end() - 1);
  const auto fg = preceq_check(f, g, {}, inner), gh = preceq_check(g, h);
  REQUIRE(fg.witness_C == 2.0);
  REQUIRE(gh.witness_C == 1.0);
  CHECK_FALSE(preceq_holds_with(f, h, 2 * 1 + 2 + 1, inner));
  CHECK(preceq_holds_with(f, h, 2 * 2 * 1 + 2, inner));
}

TEST_CASE("equivalence examples") {
  const auto grid = make_grid(1e-3, 1.0, 30, true);
  const auto id = SampledFunction::sample([](double x) { return x; }, grid);
  const auto twice = SampledFunction::sample([](double x) { return 2 * x; }, grid);
  const auto e = equiv_check(id, id);
  CHECK(e.equivalent());
  CHECK(e.forward.witness_C == 1.0);
  CHECK(e.backward.witness_C == 1.0);
  const auto t = equiv_check(twice, id);
  CHECK(t.equivalent());
  CHECK(preceq_holds_with(twice, id, 2.0, grid));
  // The +C*delta term already absorbs the factor two.
  CHECK(t.forward.witness_C == 1.0);

  const auto deep = make_grid(1e-30, 1.0, 300, true);
  const auto s = equiv_check(SampledFunction::sample([](double x) { return std::sqrt(x); }, deep),
                             SampledFunction::sample([](double x) { return x; }, deep));
  CHECK_FALSE(s.equivalent());
  CHECK_FALSE(s.forward.holds);
  CHECK(s.backward.holds);
}

TEST_CASE("exponent fit examples") {
  const auto grid = make_grid(1e-3, 1.0, 20, true);
  const auto lin = fit_exponent(SampledFunction::sample([](double x) { return x; }, grid));
  CHECK_THAT(lin.alpha, WithinAbs(1.0, 1e-9));
  CHECK_THAT(lin.r_squared, WithinAbs(1.0, 1e-9));
  CHECK_THAT(fit_exponent(SampledFunction::sample([](double x) { return std::sqrt(x); }, grid)).alpha,
             WithinAbs(0.5, 1e-9));
  const SampledFunction sq{{0.1, 0.2, 0.4}, {3 * 0.01, 3 * 0.04, 3 * 0.16}};
  CHECK_THAT(fit_exponent(sq).alpha, WithinAbs(2.0, 1e-9));
  CHECK_THROWS_AS(fit_exponent(SampledFunction{{0.1, 0.2, 0.4}, {0, 1, 2}}), PreconditionError);
}

TEST_CASE("exponent fit matches closed-form least squares") {
  std::mt19937_64 gen(79);
  std::uniform_real_distribution<double> u(0.5, 1.5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = random_monotone(gen);
    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < f.grid.size(); ++i)
      if (f.values[i] > 0) {
        xs.push_back(f.grid[i]);
        ys.push_back(f.values[i]);
      }
    if (xs.size() < 3) continue;
    CHECK_THAT(fit_exponent(f).alpha, WithinAbs(oracle::loglog_slope(xs, ys), 1e-9));
    const auto fit = fit_exponent(f);
    CHECK(fit.r_squared <= 1.0 + 1e-12);
    CHECK(fit.points == xs.size());
  }
}

TEST_CASE("linear lower bound examples") {
  const auto grid = make_grid(1e-3, 1.0, 20, true);
  CHECK_THAT(linear_lower_check(SampledFunction::sample([](double x) { return x; }, grid)).c_max,
             WithinAbs(1.0, 1e-12));
  CHECK(linear_lower_check(SampledFunction{{0.25, 1.0}, {0.5, 1.0}}).c_max == 1.0);
  const auto zero = linear_lower_check(SampledFunction{{0.1, 0.2}, {0, 0}});
  CHECK(zero.c_max == 0.0);
  CHECK(zero.note.find("free-group-like") != std::string::npos);
  const auto partial = linear_lower_check(SampledFunction{{0.1, 0.2, 0.4}, {0, 0.1, 0.3}});
  CHECK(partial.c_max == 0.5);
  CHECK(partial.zero_bins == 1);
  CHECK(partial.support_min_delta == 0.2);
}

TEST_CASE("asymptotic surrogate examples") {
  std::vector<double> d, dist3, sq, flat;
  for (int n = 1; n <= 40; ++n) {
    d.push_back(1.0 / n);
    dist3.push_back(3.0 / n);
    sq.push_back(1.0 / (n * n));
    flat.push_back(0.5);
  }
  const auto a = asymptotic_checks(d, dist3);
  CHECK(a.is_asymptotic);
  CHECK(a.diminish_a == true);
  CHECK_THAT(*a.a_constant, WithinAbs(3.0, 1e-12));
  CHECK(std::string(AsymptoticReport::kind).find("surrogate") == 0);
  const auto b = asymptotic_checks(d, {}, sq);
  CHECK(b.diminish_b == true);
  CHECK(*b.b_last_ratio < 0.1);
  const auto c = asymptotic_checks(flat);
  CHECK_FALSE(c.is_asymptotic);
  const auto e = asymptotic_checks(flat, {}, flat);
  CHECK(e.diminish_b == false);
  CHECK_THROWS_AS(asymptotic_checks({1, 2, 3}), PreconditionError);
  std::vector<double> zeros = d;
  zeros[3] = 0;
  zeros[9] = 0;
  CHECK(asymptotic_checks(zeros, dist3).skipped == 2);
}

TEST_CASE("free presentations have an identically zero curve") {
  const auto free = share(parse_presentation("<a | >"));
  RateExperiment ex;
  ex.degrees = {3, 4, 5};
  ex.grid = make_grid(0.05, 1.0, 6, true);
  ex.samples_per_bin = 40;
  const RateCurve c = sample_rate(free, ex);
  for (double v : c.values) CHECK(v == 0.0);
  for (const auto& s : c.samples) {
    CHECK(s.defect == 0.0);
    CHECK(s.homdist == 0.0);
  }
}

TEST_CASE("rate curves are monotone and reproducible") {
  const auto ex = z2_experiment({4, 5}, make_grid(0.1, 0.9, 8, true), 60);
  const RateCurve a = sample_rate(kZ2, ex);
  CHECK(a.is_monotone());
  RateExperiment threaded = ex;
  threaded.threads = 3;
  const RateCurve b = sample_rate(kZ2, threaded);
  CHECK(a.values == b.values);
  CHECK(a.counts == b.counts);
  CHECK(curve_csv(a) == curve_csv(b));
  REQUIRE(a.samples.size() == b.samples.size());
  for (std::size_t i = 0; i < a.samples.size(); ++i) {
    CHECK(a.samples[i].defect == b.samples[i].defect);
    CHECK(a.samples[i].homdist == b.samples[i].homdist);
  }
  for (bool e : a.empty) CHECK_FALSE(e);
  RateExperiment other = ex;
  other.seed = 6;
  CHECK(curve_csv(sample_rate(kZ2, other)) != curve_csv(a));
}

TEST_CASE("rate samples match brute force") {
  // Every exact sample at degree 6 near delta 0.4.
  RateExperiment ex = z2_experiment({6}, {0.4}, 120);
  ex.keep_assignments = true;
  const RateCurve c = sample_rate(kZ2, ex);
  const oracle::CommutingPairs pairs6(6);
  REQUIRE(!c.samples.empty());
  for (const auto& s : c.samples) {
    REQUIRE(s.phi);
    const auto a = support::to_oracle((*s.phi)[0].permutation()), b = support::to_oracle((*s.phi)[1].permutation());
    CHECK(s.method == HomDistMethod::Exact);
    CHECK(s.defect == oracle::commutator_count(a, b) / 6.0);
    CHECK(s.homdist == pairs6.homdist_count(a, b) / 6.0);
  }
}

TEST_CASE("empirical curve never exceeds the true rate at small degrees") {
  const auto grid = make_grid(0.1, 0.9, 8, true);
  for (int n : {4, 5}) {
    const oracle::CommutingPairs pairs(n);
    const auto perms = oracle::all_perms(n);
    std::vector<double> truth(grid.size(), 0.0);
    for (const auto& a : perms)
      for (const auto& b : perms) {
        const double d = oracle::commutator_count(a, b) / static_cast<double>(n);
        const double h = pairs.homdist_count(a, b) / static_cast<double>(n);
        for (std::size_t i = 0; i < grid.size(); ++i)
          if (d < grid[i]) truth[i] = std::max(truth[i], h);
      }
    const RateCurve c = sample_rate(kZ2, z2_experiment({static_cast<std::size_t>(n)}, grid, 80));
    for (std::size_t i = 0; i < grid.size(); ++i) {
      CHECK(c.values[i] <= truth[i]);
      // Sampling reaches the true supremum at these sizes.
      CHECK(c.values[i] == truth[i]);
    }
  }
}

TEST_CASE("curve CSV layout") {
  const RateCurve c = sample_rate(kZ2, z2_experiment({4}, {0.5, 0.9}, 10));
  const std::string csv = curve_csv(c);
  CHECK(csv.rfind("delta,D_emp,samples,method\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
  CHECK(csv.find(",exact\n") != std::string::npos);
}

TEST_CASE("unitary rate curves use the upper bound") {
  RateExperiment ex;
  ex.family = MetricFamily::UnitaryHS;
  ex.degrees = {2};
  ex.grid = {0.05, 0.2};
  ex.samples_per_bin = 6;
  ex.method = HomDistMethod::UpperBound;
  const RateCurve c = sample_rate(kZ2, ex);
  CHECK(c.is_monotone());
  for (std::size_t b = 0; b < c.grid.size(); ++b)
    if (c.counts[b] > 0) CHECK(c.method_label(b) == "upper_bound");
  RateExperiment exact = ex;
  exact.method = HomDistMethod::Exact;
  CHECK_THROWS_AS(sample_rate(kZ2, exact), CapExceeded);
}

TEST_CASE("experiment validation") {
  RateExperiment ex;
  ex.grid = {};
  CHECK_THROWS_AS(ex.validate(), PreconditionError);
  ex.grid = {0.2, 0.1};
  CHECK_THROWS_AS(ex.validate(), PreconditionError);
  ex.grid = {0.1};
  ex.samples_per_bin = 0;
  CHECK_THROWS_AS(ex.validate(), PreconditionError);
}

TEST_CASE("presentation comparisons") {
  const auto ex = z2_experiment({4, 5}, make_grid(0.1, 0.9, 8, true), 40);
  const auto same = presentation_rate_compare(kZ2, {}, ex);
  CHECK(same.verdict.equivalent());
  CHECK(same.verdict.forward.witness_C == 1.0);
  CHECK(same.verdict.backward.witness_C == 1.0);
  CHECK(same.first.values == same.second.values);

  const Word r0 = kZ2->relators()[0];
  const std::vector<TietzeMove> redundant{
      tietze::AddRelator{concat_reduced(r0, r0), {{{Word(), 0, 1}, {Word(), 0, 1}}}}};
  const auto red = presentation_rate_compare(kZ2, redundant, ex);
  CHECK(red.verdict.equivalent());

  const std::vector<TietzeMove> added{tietze::AddGenerator{"c", parse_word("a*b", kZ2->generators())}};
  const auto gen = presentation_rate_compare(kZ2, added, ex);
  CHECK(gen.verdict.equivalent());
  CHECK(gen.second.is_monotone());
}
