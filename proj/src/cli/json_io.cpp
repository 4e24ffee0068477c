#include "stablab/json_io.hpp"

#include <charconv>
#include <cmath>

#include "stablab/errors.hpp"

namespace stablab {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

std::size_t as_size(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    throw ParseError(std::string("expected a nonnegative integer for ") + what);
  return j.get<std::size_t>();
}

double as_double(const Json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string("expected a number for ") + what);
  return j.get<double>();
}

bool as_bool(const Json& j, const char* what) {
  if (!j.is_boolean()) throw ParseError(std::string("expected a boolean for ") + what);
  return j.get<bool>();
}

std::string as_string(const Json& j, const char* what) {
  if (!j.is_string()) throw ParseError(std::string("expected a string for ") + what);
  return j.get<std::string>();
}

// Non-finite values have no JSON literal; they are written as null.
Json number(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

Json optional_number(const std::optional<double>& x) {
  return x ? number(*x) : Json(nullptr);
}

Json optional_bool(const std::optional<bool>& x) { return x ? Json(*x) : Json(nullptr); }

Json numbers(const std::vector<double>& xs) {
  Json a = Json::array();
  for (double x : xs) a.push_back(number(x));
  return a;
}

}  // namespace

std::string format_double(double x) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  (void)ec;
  return std::string(buf, ptr);
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
}

Json to_json(const MetricDescriptor& desc) {
  Json j;
  j["family"] = std::string(family_name(desc.family));
  j["n"] = desc.degree;
  if (desc.family == MetricFamily::UnitarySchatten) j["p"] = desc.p;
  return j;
}

MetricDescriptor descriptor_from_json(const Json& j) {
  const Json& fam = field(j, "family");
  if (!fam.is_string()) throw ParseError("metric family must be a string");
  MetricDescriptor d;
  try {
    d.family = parse_family(fam.get<std::string>());
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
  d.degree = as_size(field(j, "n"), "n");
  if (d.family == MetricFamily::UnitarySchatten) d.p = as_double(field(j, "p"), "p");
  d.validate();
  return d;
}

Json to_json(const GroupElement& g) {
  Json j;
  if (g.descriptor().is_unitary()) {
    const CMatrix& m = g.unitary().matrix();
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.size(); ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < m.size(); ++c)
        row.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
      rows.push_back(std::move(row));
    }
    j["unitary"] = std::move(rows);
  } else {
    Json imgs = Json::array();
    for (auto v : g.permutation().images()) imgs.push_back(v);
    j["perm"] = std::move(imgs);
  }
  j["metric"] = to_json(g.descriptor());
  return j;
}

GroupElement element_from_json(const Json& j) {
  const MetricDescriptor desc = descriptor_from_json(field(j, "metric"));
  if (desc.is_unitary()) {
    const Json& rows = field(j, "unitary");
    if (!rows.is_array() || rows.size() != desc.degree)
      throw ParseError("unitary must have n rows");
    CMatrix m(desc.degree);
    for (std::size_t r = 0; r < desc.degree; ++r) {
      const Json& row = rows[r];
      if (!row.is_array() || row.size() != desc.degree)
        throw ParseError("unitary row must have n entries");
      for (std::size_t c = 0; c < desc.degree; ++c) {
        const Json& e = row[c];
        if (!e.is_array() || e.size() != 2) throw ParseError("entry must be [re, im]");
        m(r, c) = Complex(as_double(e[0], "re"), as_double(e[1], "im"));
      }
    }
    return GroupElement(desc, UnitaryMatrix(std::move(m)));
  }
  const Json& imgs = field(j, "perm");
  if (!imgs.is_array()) throw ParseError("perm must be an array");
  std::vector<std::uint32_t> v;
  for (const Json& x : imgs) v.push_back(static_cast<std::uint32_t>(as_size(x, "perm entry")));
  return GroupElement(desc, Permutation(std::move(v)));
}

Json to_json(const Presentation& p) {
  Json j;
  j["generators"] = p.generators();
  Json rels = Json::array();
  for (const Word& r : p.relators()) rels.push_back(format_word(r, p.generators()));
  j["relators"] = std::move(rels);
  return j;
}

Presentation presentation_from_json(const Json& j) {
  if (j.is_string()) return parse_presentation(j.get<std::string>());
  const Json& gens = field(j, "generators");
  const Json& rels = field(j, "relators");
  if (!gens.is_array() || !rels.is_array())
    throw ParseError("generators and relators must be arrays");
  std::vector<std::string> names;
  for (const Json& g : gens) {
    if (!g.is_string()) throw ParseError("generator names must be strings");
    names.push_back(g.get<std::string>());
  }
  // Validate the alphabet before parsing words over it.
  Presentation alphabet(names, {});
  std::vector<Word> words;
  for (const Json& r : rels) {
    if (!r.is_string()) throw ParseError("relators must be word strings");
    words.push_back(parse_word(r.get<std::string>(), alphabet.generators()));
    if (words.back().empty()) throw ParseError("relator reduces to the empty word");
  }
  return Presentation(std::move(names), std::move(words));
}

Json to_json(const AlmostHom& phi) {
  Json j;
  j["presentation"] = to_json(phi.presentation());
  j["metric"] = to_json(phi.descriptor());
  Json a = Json::array();
  for (const GroupElement& g : phi.assignment()) a.push_back(to_json(g));
  j["assignment"] = std::move(a);
  return j;
}

AlmostHom almost_hom_from_json(const Json& j) {
  auto p = share(presentation_from_json(field(j, "presentation")));
  const MetricDescriptor desc = descriptor_from_json(field(j, "metric"));
  const Json& a = field(j, "assignment");
  if (!a.is_array()) throw ParseError("assignment must be an array");
  std::vector<GroupElement> elems;
  for (const Json& e : a) elems.push_back(element_from_json(e));
  return AlmostHom(std::move(p), desc, std::move(elems));
}

Json to_json(const DefectReport& report, const Presentation& p) {
  Json j;
  j["defect"] = report.defect;
  Json rows = Json::array();
  for (const auto& [index, value] : report.per_relator) {
    Json r;
    r["relator"] = index;
    r["word"] = format_word(p.relators()[index], p.generators());
    r["distance"] = value;
    rows.push_back(std::move(r));
  }
  j["per_relator"] = std::move(rows);
  return j;
}

Json to_json(const HomDistResult& result) {
  Json j;
  j["value"] = result.value;
  j["method"] = method_name(result.method);
  if (result.method == HomDistMethod::UpperBound) j["search_moves"] = result.moves;
  j["witness"] = to_json(result.witness);
  return j;
}

Json to_json(const SolveTrace& trace) {
  Json j;
  j["initial_defect"] = trace.initial_defect;
  Json steps = Json::array();
  for (const TraceStep& s : trace.steps)
    steps.push_back(Json{{"defect", s.defect}, {"step_distance", s.step_distance}});
  j["steps"] = std::move(steps);
  j["total_distance"] = trace.total_distance;
  j["converged"] = trace.converged;
  j["certified"] = trace.certified;
  Json v = Json::array();
  for (const TraceViolation& t : trace.violations)
    v.push_back(Json{{"iteration", t.iteration}, {"bound", t.bound}});
  j["violations"] = std::move(v);
  return j;
}

SolveTrace trace_from_json(const Json& j) {
  SolveTrace t;
  t.initial_defect = as_double(field(j, "initial_defect"), "initial_defect");
  const Json& steps = field(j, "steps");
  if (!steps.is_array()) throw ParseError("steps must be an array");
  for (const Json& s : steps)
    t.steps.push_back({as_double(field(s, "defect"), "defect"),
                       as_double(field(s, "step_distance"), "step_distance")});
  t.total_distance = as_double(field(j, "total_distance"), "total_distance");
  t.converged = as_bool(field(j, "converged"), "converged");
  t.certified = as_bool(field(j, "certified"), "certified");
  if (auto it = j.find("violations"); it != j.end() && it->is_array())
    for (const Json& v : *it)
      t.violations.push_back(
          {as_size(field(v, "iteration"), "iteration"), as_string(field(v, "bound"), "bound")});
  return t;
}

Json to_json(const RateComparison& cmp) {
  Json j;
  j["holds"] = cmp.holds;
  j["witness_C"] = optional_number(cmp.witness_C);
  j["interpolation"] = RateComparison::interpolation;
  j["delta_grid"] = numbers(cmp.delta_grid);
  j["c_grid"] = numbers(cmp.c_grid);
  return j;
}

Json to_json(const EquivalenceResult& eq) {
  Json j;
  j["equivalent"] = eq.equivalent();
  j["forward"] = to_json(eq.forward);
  j["backward"] = to_json(eq.backward);
  return j;
}

Json to_json(const ExponentFit& fit) {
  Json j;
  j["alpha"] = number(fit.alpha);
  j["r_squared"] = number(fit.r_squared);
  j["points"] = fit.points;
  return j;
}

Json to_json(const LinearLowerBound& bound) {
  Json j;
  j["c_max"] = number(bound.c_max);
  j["positive_bins"] = bound.positive_bins;
  j["zero_bins"] = bound.zero_bins;
  j["support_min_delta"] = optional_number(bound.support_min_delta);
  j["note"] = bound.note;
  return j;
}

Json to_json(const RateCurve& curve) {
  Json rows = Json::array();
  for (std::size_t b = 0; b < curve.grid.size(); ++b) {
    Json r;
    r["delta"] = curve.grid[b];
    r["D_emp"] = curve.values[b];
    r["samples"] = curve.counts[b];
    r["exact_samples"] = curve.exact_counts[b];
    r["generated"] = curve.generated[b];
    r["search_failures"] = curve.search_failures[b];
    r["empty"] = static_cast<bool>(curve.empty[b]);
    r["method"] = curve.method_label(b);
    rows.push_back(std::move(r));
  }
  return rows;
}

Json to_json(const AsymptoticReport& report) {
  Json j;
  j["kind"] = AsymptoticReport::kind;
  j["threshold"] = report.threshold;
  j["first_quarter_mean"] = number(report.first_quarter_mean);
  j["last_quarter_mean"] = number(report.last_quarter_mean);
  j["is_asymptotic"] = report.is_asymptotic;
  j["diminish_a"] = optional_bool(report.diminish_a);
  j["a_constant"] = optional_number(report.a_constant);
  j["diminish_b"] = optional_bool(report.diminish_b);
  j["b_last_ratio"] = optional_number(report.b_last_ratio);
  j["skipped"] = report.skipped;
  j["defects"] = numbers(report.defects);
  j["dists"] = numbers(report.dists);
  j["new_defects"] = numbers(report.new_defects);
  return j;
}

}  // namespace stablab
