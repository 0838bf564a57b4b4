#pragma once

// JSON and text formats shared by the CLI and tests. Every top-level
// document carries "schema_version".

#include "symwalk/distribution.hpp"
#include "symwalk/jsr.hpp"
#include "symwalk/montecarlo.hpp"
#include "symwalk/walks.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>

namespace symwalk {

inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::ordered_json;

// --- distributions -------------------------------------------------------

/// {"n": int, "support": [{"perm": [one-line], "p": real}, ...]}
Json to_json(const GroupDistribution& q);
GroupDistribution distribution_from_json(const Json& j);

/// A distribution named on the command line. Class-invariant specs keep the
/// class form so large n stays cheap; the explicit form is built on demand.
struct DistributionSpec {
  std::string text;
  std::optional<ClassDistribution> by_class;
  std::optional<GroupDistribution> explicit_form;

  int n() const;
  bool is_class() const { return by_class.has_value(); }
  /// Explicit weights; materializes class specs up to max_support elements.
  GroupDistribution group(std::size_t max_support = 1'000'000) const;
  PermutationSampler sampler() const;
};

/// "uniform", "uniform_class:<lengths>" (e.g. "uniform_class:2+2"),
/// "lazy_transposition:<n>" or "file:<path>". n is required by the first
/// two forms and checked against the others when positive.
DistributionSpec parse_distribution_spec(const std::string& text, int n);

// --- matrices and certificates -------------------------------------------

/// Row-major list of [re, im] pairs.
Json matrix_to_json(const ComplexMatrix& a);
ComplexMatrix matrix_from_json(const Json& j, int rows, int cols);

/// {"dim": d, "matrices": [[[re, im], ...], ...]}
Json to_json(const MatrixSet& s);
MatrixSet matrix_set_from_json(const Json& j);

/// {"degree", "gamma", "gram", "slacks", ...}
Json to_json(const NormCertificate& c);
NormCertificate certificate_from_json(const Json& j);

// --- reports -------------------------------------------------------------

Json to_json(const BoundReport& r);
BoundReport bound_report_from_json(const Json& j);

Json to_json(const JsrEstimate& e);
Json to_json(const FourierJsr& f);
Json to_json(const CertificateCheck& c);

Json to_json(const EmpiricalDistribution& e);
Json to_json(const MeanEstimate& e);
MeanEstimate mean_estimate_from_json(const Json& j);
Json to_json(const AnnealingEstimate& e);
AnnealingEstimate annealing_estimate_from_json(const Json& j);

/// Adds "schema_version" in front of a report body.
Json versioned(const std::string& kind, const Json& body);
/// Checks "schema_version" (when present) and returns the document.
const Json& check_version(const Json& j);

Json read_json_file(const std::string& path);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace symwalk
