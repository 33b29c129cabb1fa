// Command-line front end: describe, invariants, shift, verify.
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "argshift/errors.hpp"
#include "argshift/report.hpp"

using namespace argshift;

namespace {

void emit(const std::string& out, const std::string& text) {
  if (out.empty())
    std::cout << text;
  else
    write_atomically(out, text);
}

std::vector<Rational> parse_mu(const std::string& s) {
  std::vector<Rational> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(parse_rational(item));
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Argument-shift subalgebras of semisimple Lie algebras in exact arithmetic"};
  app.require_subcommand(1);

  std::string type = "A2";
  unsigned nmax = 3;
  std::uint64_t seed = 0;
  unsigned retries = 5;
  std::string out;
  std::string format = "json";
  std::string mu;
  std::string suite;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--type", type, "Root system type (A1, A2, A3, B2, C2, G2, ...)");
    sub->add_option("--out", out, "Output file (written atomically); default stdout");
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  };

  auto* describe_cmd = app.add_subcommand("describe", "Root system, basis and structure constants");
  common(describe_cmd);

  auto* inv_cmd = app.add_subcommand("invariants", "Basic invariants of S(g)");
  common(inv_cmd);
  inv_cmd->add_option("--nmax", nmax, "Largest degree to scan");

  auto* shift_cmd = app.add_subcommand("shift", "Argument-shift generators for mu");
  common(shift_cmd);
  shift_cmd->add_option("--nmax", nmax, "Largest degree for graded dimensions");
  shift_cmd->add_option("--seed", seed, "Seed for sampling mu");
  shift_cmd->add_option("--mu", mu, "Explicit mu as comma-separated rationals");

  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  common(verify_cmd);
  verify_cmd->add_option("suite", suite, "theorem1 | pencil | degenerate | pbw | invariants | all")
      ->required();
  verify_cmd->add_option("--nmax", nmax, "Largest degree");
  verify_cmd->add_option("--seed", seed, "RNG seed");
  verify_cmd->add_option("--retries", retries, "Resample cap for mu");

  CLI11_PARSE(app, argc, argv);
  const Format fmt = format == "text" ? Format::Text : Format::Json;

  try {
    if (*describe_cmd) {
      emit(out, fmt == Format::Json ? describe(type).dump() + "\n" : describe_text(type));
      return 0;
    }
    if (*inv_cmd) {
      const Json rep = invariants_report(type, nmax);
      if (fmt == Format::Json) {
        emit(out, rep.dump() + "\n");
      } else {
        std::ostringstream os;
        for (std::size_t i = 0; i < rep["generators"].size(); ++i) {
          os << "Phi_" << i + 1 << " (degree " << rep["degrees"][i].get<unsigned>() << "): ";
          std::string line;
          for (const auto& t : rep["generators"][i]) {
            if (!line.empty()) line += " + ";
            line += t["coeff"].get<std::string>();
            for (const auto& [name, e] : t["monomial"].items())
              line += " * " + name + (e.get<unsigned>() > 1 ? "^" + std::to_string(e.get<unsigned>()) : "");
          }
          os << line << '\n';
        }
        emit(out, os.str());
      }
      return 0;
    }
    if (*shift_cmd) {
      std::optional<std::vector<Rational>> mu_values;
      if (!mu.empty()) mu_values = parse_mu(mu);
      const Json rep = shift_report(type, nmax, seed, mu_values);
      if (fmt == Format::Json) {
        emit(out, rep.dump() + "\n");
      } else {
        std::ostringstream os;
        os << "mu = " << rep["mu"].dump() << ", " << rep["count"].get<std::size_t>()
           << " generators, graded dims " << rep["graded_dims"].dump() << '\n';
        for (std::size_t i = 0; i < rep["generators"].size(); ++i) {
          std::string line;
          for (const auto& t : rep["generators"][i]) {
            if (!line.empty()) line += " + ";
            line += t["coeff"].get<std::string>();
            for (const auto& [name, e] : t["monomial"].items())
              line += " * " + name + (e.get<unsigned>() > 1 ? "^" + std::to_string(e.get<unsigned>()) : "");
          }
          os << "degree " << rep["degrees"][i].get<unsigned>() << ": " << line << '\n';
        }
        emit(out, os.str());
      }
      return 0;
    }
    RunConfig cfg;
    cfg.type = type;
    cfg.nmax = nmax;
    cfg.seed = seed;
    cfg.retries = retries;
    cfg.out = out;
    cfg.format = fmt;
    cfg.suites = parse_suites(suite);
    const RunResult result = run_verify(cfg);
    emit(out, result.render(fmt));
    return result.passed ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << error_object(e.kind(), e.what()).dump() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << error_object("internal error", e.what()).dump() << '\n';
    return 3;
  }
}
