#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "lefsig/catalog.hpp"
#include "lefsig/engine.hpp"
#include "lefsig/errors.hpp"
#include "lefsig/report_json.hpp"
#include "lefsig/word_dsl.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path.empty()) {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) {
    throw lefsig::ValidationError("cannot open input file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

// Kernel generator rendered as a combination of the longitude and meridian
// classes, e.g. (4, -1) -> <4[l'] - [m']>.
std::string kernel_pretty(const lefsig::KernelLine& line) {
  std::string out = "<";
  bool first = true;
  auto term = [&](const lefsig::Integer& c, const char* sym) {
    if (c == 0) return;
    if (first) {
      if (c == -1) {
        out += "-";
      } else if (c != 1) {
        out += c.get_str();
      }
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
      const lefsig::Integer a = abs(c);
      if (a != 1) out += a.get_str();
    }
    out += sym;
  };
  term(line.u, "[l']");
  term(line.v, "[m']");
  if (first) out += "0";
  out += ">";
  return out;
}

std::string separating_counts(const lefsig::FibrationReport& report) {
  if (report.s == 0) return "0";
  std::ostringstream out;
  out << report.s << " (";
  bool first = true;
  for (const auto& [h, count] : report.s_by_genus) {
    if (!first) out << ", ";
    out << "h=" << h << ": " << count;
    first = false;
  }
  out << ")";
  return out.str();
}

void print_summary(const lefsig::FibrationReport& report) {
  std::cout << "genus " << report.genus << " fibration over "
            << (report.base == lefsig::BaseSurface::sphere ? "S2" : "D2") << ", " << report.t
            << " twists: n = " << report.n << ", s = " << separating_counts(report) << "\n";
  if (report.achiral) std::cout << "achiral mode (experimental)\n";
  std::cout << "sigma = " << report.sigma << "\n";
  std::cout << "euler = " << report.euler << "\n";
  if (report.c1_squared) {
    std::cout << "c1^2  = " << lefsig::to_string(*report.c1_squared) << "\n";
    std::cout << "chi   = " << lefsig::to_string(*report.chi) << "\n";
  }
  std::cout << "homologically closed: " << (report.closure ? "yes" : "no") << "\n";
}

void print_trace(const lefsig::FibrationReport& report) {
  std::cout << "\n step  label             kernel                 (p, q)        inc  sigma\n";
  for (const lefsig::StepRecord& step : report.steps) {
    std::ostringstream kernel;
    std::ostringstream framed;
    if (step.kernel) {
      kernel << kernel_pretty(*step.kernel);
      framed << "(" << (*step.framed)[0].get_str() << ", " << (*step.framed)[1].get_str()
             << ")";
    } else {
      kernel << "-";
      framed << "-";
    }
    std::string label = step.label;
    if (step.negative) label = "-" + label;
    std::cout << std::setw(5) << step.index << "  " << std::left << std::setw(16) << label
              << "  " << std::setw(21) << kernel.str() << "  " << std::setw(12) << framed.str()
              << std::right << "  " << std::setw(3) << step.increment << "  " << std::setw(5)
              << step.running_sigma << "\n";
  }
}

void print_checks(const lefsig::FibrationReport& report) {
  std::cout << "\nchecks:\n";
  for (const auto& [name, result] : report.checks) {
    std::cout << "  " << name << ": " << lefsig::to_string(result.status);
    if (!result.details.empty()) std::cout << " (" << result.details << ")";
    std::cout << "\n";
  }
}

int cmd_compute(const std::string& input, bool trace, bool json, bool checks, bool achiral) {
  lefsig::FibrationSpec spec = lefsig::parse_document(read_input(input));
  spec.achiral = achiral;
  const lefsig::FibrationReport report = lefsig::compute(spec);
  if (json) {
    std::cout << lefsig::report_to_json(report);
    return 0;
  }
  print_summary(report);
  if (trace) print_trace(report);
  if (checks) print_checks(report);
  return 0;
}

int cmd_catalog(int genus) {
  const lefsig::GenusContext ctx(genus);  // rejects genus < 1
  const lefsig::CurveTable table = lefsig::chain_preset(ctx);
  std::cout << "genus " << genus << "\n";
  for (const std::string& label : table.labels()) {
    const lefsig::VanishingCycle* cycle = table.find(label);
    std::cout << "curve " << label;
    for (const lefsig::Integer& c : cycle->cls().coeffs()) {
      std::cout << " " << c.get_str();
    }
    std::cout << "\n";
  }
  if (genus == 3) {
    std::cout << "# d8 and d9 are not built in; add them with curve statements if needed\n";
  }
  return 0;
}

int cmd_substitute(const std::string& input, std::size_t position, bool achiral) {
  lefsig::FibrationSpec spec = lefsig::parse_document(read_input(input));
  spec.achiral = achiral;
  const lefsig::FibrationSpec replaced = lefsig::substitute_separating(spec, position);
  const lefsig::FibrationReport before = lefsig::compute(spec);
  const lefsig::FibrationReport after = lefsig::compute(replaced);
  std::cout << lefsig::render_document(replaced);
  std::cout << "# delta_sigma = " << std::showpos << after.sigma - before.sigma << "\n";
  std::cout << "# delta_euler = " << after.euler - before.euler << std::noshowpos << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Signature engine for Lefschetz fibrations given by Dehn twist words"};
  app.require_subcommand(1);

  std::string input;
  bool trace = false;
  bool json = false;
  bool checks = false;
  bool achiral = false;
  CLI::App* compute = app.add_subcommand("compute", "Compute signature, Euler characteristic "
                                                    "and checks for an input document");
  compute->add_option("--input", input, "input document (default: stdin)");
  compute->add_flag("--trace", trace, "print the per-handle trace table");
  compute->add_flag("--json", json, "emit the full report as JSON");
  compute->add_flag("--checks", checks, "print every check with its status");
  compute->add_flag("--achiral", achiral, "allow negative twists (experimental)");

  int genus = 0;
  CLI::App* catalog = app.add_subcommand("catalog", "Print a preset curve table in document "
                                                    "syntax");
  catalog->add_option("--genus", genus, "fiber genus")->required();

  std::string sub_input;
  std::size_t position = 0;
  bool sub_achiral = false;
  CLI::App* substitute = app.add_subcommand(
      "substitute", "Replace a separating twist in a genus-2 word by the equivalent "
                    "twelve-twist sequence and report the invariant deltas");
  substitute->add_option("--input", sub_input, "input document (default: stdin)");
  substitute->add_option("--position", position, "1-based index of the separating twist")
      ->required();
  substitute->add_flag("--achiral", sub_achiral, "allow negative twists (experimental)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (compute->parsed()) return cmd_compute(input, trace, json, checks, achiral);
    if (catalog->parsed()) return cmd_catalog(genus);
    return cmd_substitute(sub_input, position, sub_achiral);
  } catch (const lefsig::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const lefsig::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const lefsig::InternalInvariantError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
