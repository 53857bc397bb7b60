#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hesslie/constructions.hpp"

namespace hesslie {

struct ParameterSpec {
  std::string name;
  Rational default_value;
  std::string constraint;
};

struct ExampleInfo {
  std::string name;
  std::string summary;
  std::vector<ParameterSpec> parameters;
  /// True for fixtures that exist only to exercise failure paths.
  bool synthetic;
};

/// Where an expected outcome comes from.
enum class Source {
  printed,    ///< stated in the published worked example
  derived,    ///< computed by hand from the definitions
  synthetic,  ///< property of a fixture built for testing
};

std::string_view to_string(Source source);

struct ExpectedOutcome {
  std::string check;
  std::string outcome;
  Source source;
};

/// A relation printed in the published example for the double of the cone
/// extension, e.g. [u1, u2] = -4 rho2.
struct PrintedBracket {
  std::string left;
  std::string right;
  std::vector<std::pair<std::string, Rational>> value;
};
/// The printed l.c.K. form omega_{c,t}: base metric coefficients plus t.
struct PrintedOmega {
  Matrix base_metric;
  Rational t;
};
/// The printed assertion that omega_{1,1} is Kaehler.
struct PrintedKahler {
  bool kahler;
};
/// The printed matrix size of the triangular group.
struct PrintedMatrixSize {
  Index n;
};
/// The printed rescaling factor 1/c used to reach curvature 1 when c > 1.
struct PrintedRescaleToUnit {
  Rational curvature;
};

using PrintedValue = std::variant<PrintedBracket, PrintedOmega, PrintedKahler, PrintedMatrixSize, PrintedRescaleToUnit>;

struct PrintedClaim {
  std::string id;
  PrintedValue printed;
  /// Present exactly when the computation disagrees with the printed value.
  std::optional<std::string> divergence;
};

struct CatalogEntry {
  std::string name;
  std::string summary;
  bool synthetic;
  std::map<std::string, Rational> parameters;
  LieAlgebra algebra;
  std::optional<Connection> connection;
  std::optional<Metric> metric;
  /// Curvature handed to cone_extend; declared by choice for 1-dim bases.
  std::optional<Rational> curvature;
  /// t used for the l.c.K. pipeline checks.
  std::optional<Rational> pipeline_t;
  std::vector<ExpectedOutcome> expected;
  std::vector<PrintedClaim> printed;
  /// Informational remarks (e.g. entries completed by hand).
  std::vector<std::string> remarks;

  std::vector<std::string> divergence_notes() const;
};

std::vector<ExampleInfo> list_examples();

CatalogEntry get_example(const std::string& name, const std::map<std::string, Rational>& params = {});

/// Runs one named check against the entry and returns its outcome string
/// ("pass", "fail", a rational, "none" or "underdetermined", or a form).
std::string run_check(const CatalogEntry& entry, const std::string& check);

struct CheckOutcome {
  ExpectedOutcome expected;
  std::string actual;
  bool matches() const { return expected.outcome == actual; }
};

std::vector<CheckOutcome> verify_entry(const CatalogEntry& entry);

struct ClaimOutcome {
  std::string id;
  std::optional<std::string> divergence;
  std::string printed;
  std::string computed;
  bool agrees;
};

std::vector<ClaimOutcome> evaluate_claims(const CatalogEntry& entry);

/// Human-readable linear combination such as "-2*rho1" or "u2 + 2*rho2".
std::string format_combination(const std::vector<std::string>& labels, const Vector& coefficients);

/// Sum over increasing index tuples, e.g. "4*u1^u2 + 2*v1^v2 + rho1^rho2".
std::string format_form(const std::vector<std::string>& labels, const KForm& form);

}  // namespace hesslie
