// rotor: run rotation programs, audit single-qubit unitaries, selftest.
//
// Exit codes: 0 success, 2 lex/parse error, 3 evaluation error,
// 4 internal invariant violation.

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "rotor/dsl.hpp"
#include "rotor/rotation.hpp"
#include "rotor/selftest.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitEval = 3;
constexpr int kExitInternal = 4;

struct RunFlags {
  std::string convention = "right";
  std::string format = "text";
};

rotor::dsl::EvalOptions options_from(const RunFlags& f) {
  return {f.convention == "left" ? rotor::Convention::TextbookLeft : rotor::Convention::PaperRight};
}

rotor::dsl::Format format_from(const RunFlags& f) {
  return f.format == "json" ? rotor::dsl::Format::Json : rotor::dsl::Format::Text;
}

int run_program(const std::string& source, const RunFlags& flags) {
  try {
    const rotor::dsl::Program program = rotor::dsl::parse_source(source);
    const rotor::dsl::EvalTrace trace = rotor::dsl::evaluate(program, options_from(flags));
    std::cout << rotor::dsl::render(trace, format_from(flags));
    return kExitOk;
  } catch (const rotor::dsl::LexError& e) {
    std::cerr << "rotor: " << e.what() << "\n";
    return kExitParse;
  } catch (const rotor::dsl::ParseError& e) {
    std::cerr << "rotor: " << e.what() << "\n";
    return kExitParse;
  } catch (const rotor::dsl::EvalError& e) {
    std::cerr << "rotor: " << e.what() << "\n";
    return kExitEval;
  } catch (const std::exception& e) {
    std::cerr << "rotor: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  return parts;
}

int run_audit(const std::string& matrix, const std::string& reference, double tol,
              const std::string& format) {
  rotor::Matrix2 w;
  std::optional<rotor::Axis> ref;
  try {
    const auto parts = split_commas(matrix);
    if (parts.size() != 4) {
      std::cerr << "rotor: --matrix needs four comma-separated entries a11,a12,a21,a22\n";
      return kExitParse;
    }
    w = {rotor::dsl::parse_complex_literal(parts[0]), rotor::dsl::parse_complex_literal(parts[1]),
         rotor::dsl::parse_complex_literal(parts[2]), rotor::dsl::parse_complex_literal(parts[3])};
    if (!reference.empty()) {
      const auto r = split_commas(reference);
      if (r.size() != 3) {
        std::cerr << "rotor: --reference needs three comma-separated components\n";
        return kExitParse;
      }
      ref = rotor::Axis::normalized({std::stod(r[0]), std::stod(r[1]), std::stod(r[2])});
    }
  } catch (const std::exception& e) {
    std::cerr << "rotor: " << e.what() << "\n";
    return kExitParse;
  }

  rotor::AuditReport report;
  try {
    report = ref ? rotor::audit_convention(w, *ref, tol) : rotor::audit_convention(w, tol);
  } catch (const rotor::Error& e) {
    std::cerr << "rotor: " << e.what() << "\n";
    return kExitEval;
  } catch (const std::exception& e) {
    std::cerr << "rotor: internal error: " << e.what() << "\n";
    return kExitInternal;
  }

  const double deg = report.angle * 180.0 / std::numbers::pi;
  if (format == "json") {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["audit"] = {{"handedness", std::string(rotor::to_string(report.handedness))},
                  {"axis", {report.axis.x() + 0.0, report.axis.y() + 0.0, report.axis.z() + 0.0}},
                  {"angle", report.angle},
                  {"angle_deg", deg},
                  {"ambiguous_axis", report.ambiguous_axis},
                  {"half_turn_tie", report.half_turn_tie}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "handedness: " << rotor::to_string(report.handedness) << "\n"
              << "axis:       (" << report.axis.x() << ", " << report.axis.y() << ", "
              << report.axis.z() << ")\n"
              << "angle:      " << report.angle << " rad (" << deg << " deg)\n";
    if (report.ambiguous_axis) std::cout << "note:       identity, axis undefined (reported +z)\n";
    if (report.half_turn_tie) std::cout << "note:       half turn, both senses agree; reported RightScrew\n";
  }
  return kExitOk;
}

int run_selftest() {
  int failures = 0;
  for (const auto& r : rotor::run_selftest()) {
    std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name;
    if (!r.passed) std::cout << ": " << r.detail;
    std::cout << "\n";
    if (!r.passed) ++failures;
  }
  std::cout << (failures ? "selftest failed\n" : "selftest passed\n");
  return failures ? kExitInternal : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rotor: spin-1/2 rotation programs and convention auditing"};
  app.require_subcommand(1);

  RunFlags flags;
  std::string file;
  auto* run = app.add_subcommand("run", "Evaluate a rotation program file");
  run->add_option("file", file, "Program file (.rot)")->required()->check(CLI::ExistingFile);
  run->add_option("--convention", flags.convention, "Initial rotation convention")
      ->check(CLI::IsMember({"right", "left"}));
  run->add_option("--format", flags.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::string program_text;
  auto* eval = app.add_subcommand("eval", "Evaluate program text given on the command line");
  eval->add_option("program", program_text, "Program text")->required();
  eval->add_option("--convention", flags.convention, "Initial rotation convention")
      ->check(CLI::IsMember({"right", "left"}));
  eval->add_option("--format", flags.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::string matrix;
  std::string reference;
  double tol = 1e-9;
  std::string audit_format = "text";
  auto* audit = app.add_subcommand("audit", "Classify the screw sense of an SU(2) matrix");
  audit->add_option("--matrix", matrix, "a11,a12,a21,a22 with entries like 0.5+0.5i")->required();
  audit->add_option("--reference", reference, "x,y,z direction used to orient the recovered axis");
  audit->add_option("--tol", tol, "Tolerance for the SU(2) check");
  audit->add_option("--format", audit_format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto* selftest = app.add_subcommand("selftest", "Run the built-in fixture corpus");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  if (*run) {
    std::ifstream in(file);
    std::stringstream buf;
    buf << in.rdbuf();
    return run_program(buf.str(), flags);
  }
  if (*eval) return run_program(program_text, flags);
  if (*audit) return run_audit(matrix, reference, tol, audit_format);
  if (*selftest) return run_selftest();
  return kExitOk;
}
