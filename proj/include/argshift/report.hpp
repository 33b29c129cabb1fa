#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "argshift/lie_algebra.hpp"
#include "argshift/poly.hpp"

namespace argshift {

using Json = nlohmann::ordered_json;

enum class Suite { Theorem1, Pencil, Degenerate, Pbw, Invariants };
enum class Format { Json, Text };

/// Parses "theorem1", "pencil", "degenerate", "pbw", "invariants" or "all".
std::vector<Suite> parse_suites(const std::string& name);
std::string suite_name(Suite s);

struct RunConfig {
  std::string type = "A2";
  unsigned nmax = 3;
  std::uint64_t seed = 0;
  unsigned retries = 5;
  std::string out;  ///< empty: standard output
  Format format = Format::Json;
  std::vector<Suite> suites;
};

struct RunResult {
  bool passed = true;
  std::vector<Json> records;

  /// JSON lines, or one "PASS|FAIL suite key=value ..." line per record.
  std::string render(Format format) const;
};

/// Runs the selected verification suites in a fixed order. Every record carries
/// an "ok" flag; `passed` is their conjunction. Throws argshift::Error on bad
/// input (unsupported type, nmax < 1, retries < 1).
RunResult run_verify(const RunConfig& config);

/// Root system and basis summary.
Json describe(const std::string& type);
std::string describe_text(const std::string& type);

/// Invariant generators with a sidecar {type, degrees, dims_by_degree}.
Json invariants_report(const std::string& type, unsigned max_degree);

/// Argument-shift generators for mu (sampled from seed when absent):
/// {type, mu, degrees, count, commutative, graded_dims, generators}.
Json shift_report(const std::string& type, unsigned nmax, std::uint64_t seed,
                  const std::optional<std::vector<Rational>>& mu);

/// JSON polynomial form: [{"coeff": "p/q", "monomial": {name: exponent}}, ...].
Json poly_to_json(const SparsePoly& p, const LieAlgebra& g);
SparsePoly poly_from_json(const Json& j, const LieAlgebra& g);

std::vector<std::string> basis_names(const LieAlgebra& g);

/// Writes via a temporary file and rename.
void write_atomically(const std::string& path, const std::string& contents);

/// {"error": kind, "message": text}
Json error_object(const std::string& kind, const std::string& message);

}  // namespace argshift
