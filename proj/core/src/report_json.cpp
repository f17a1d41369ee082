#include "lefsig/report_json.hpp"

#include "json.hpp"

namespace lefsig {

namespace {

using ojson = nlohmann::ordered_json;

// Exact serialization: int64-sized integers as JSON numbers, anything larger
// as decimal strings, non-integer rationals as "p/q" strings.
ojson integer_json(const Integer& x) {
  if (x.fits_slong_p()) return ojson(x.get_si());
  return ojson(x.get_str());
}

ojson rational_json(const Rational& q) {
  if (is_integer(q)) return integer_json(Integer(q.get_num()));
  return ojson(to_string(q));
}

}  // namespace

std::string report_to_json(const FibrationReport& report) {
  ojson j;
  j["genus"] = report.genus;
  j["base"] = report.base == BaseSurface::sphere ? "S2" : "D2";
  j["t"] = report.t;
  j["n"] = report.n;
  ojson by_genus = ojson::object();
  for (const auto& [h, count] : report.s_by_genus) {
    by_genus[std::to_string(h)] = count;
  }
  j["s_by_genus"] = by_genus;

  ojson steps = ojson::array();
  for (const StepRecord& step : report.steps) {
    ojson row;
    row["index"] = step.index;
    row["label"] = step.label;
    row["kind"] = step.separating ? "separating" : "nonseparating";
    if (report.achiral) row["negative"] = step.negative;
    if (step.kernel) {
      row["kernel"] = ojson::array({integer_json(step.kernel->u), integer_json(step.kernel->v)});
    } else {
      row["kernel"] = nullptr;
    }
    if (step.framed) {
      row["framed"] =
          ojson::array({integer_json((*step.framed)[0]), integer_json((*step.framed)[1])});
    } else {
      row["framed"] = nullptr;
    }
    row["increment"] = step.increment;
    row["running_sigma"] = step.running_sigma;
    steps.push_back(std::move(row));
  }
  j["steps"] = steps;

  j["sigma"] = report.sigma;
  j["euler"] = report.euler;
  j["c1_squared"] = report.c1_squared ? rational_json(*report.c1_squared) : ojson(nullptr);
  j["chi"] = report.chi ? rational_json(*report.chi) : ojson(nullptr);
  j["closure"] = report.closure;

  ojson checks = ojson::object();
  for (const auto& [name, result] : report.checks) {
    ojson c;
    c["status"] = to_string(result.status);
    c["details"] = result.details;
    checks[name] = std::move(c);
  }
  j["checks"] = checks;
  if (report.achiral) j["experimental"] = "achiral";

  return j.dump(2) + "\n";
}

}  // namespace lefsig
