#include "symwalk/io.hpp"

#include "symwalk/errors.hpp"

#include <fstream>
#include <sstream>

namespace symwalk {

namespace {

BigInt big_from_string(const std::string& s) {
  try {
    return BigInt(s);
  } catch (const std::exception&) {
    throw DomainError("not an integer: '" + s + "'");
  }
}

std::vector<int> int_list(const Json& j) {
  std::vector<int> v;
  for (const auto& e : j) v.push_back(e.get<int>());
  return v;
}

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.contains(key)) throw DomainError(std::string("missing field '") + key + "'");
  return j.at(key).get<T>();
}

}  // namespace

// --- distributions -------------------------------------------------------

Json to_json(const GroupDistribution& q) {
  Json support = Json::array();
  for (const auto& [g, p] : q.weights()) {
    support.push_back(Json{{"perm", std::vector<int>(g.images().begin(), g.images().end())},
                           {"p", p}});
  }
  return Json{{"n", q.n()}, {"support", support}};
}

GroupDistribution distribution_from_json(const Json& j) {
  check_version(j);
  const int n = field<int>(j, "n");
  if (!j.contains("support") || !j.at("support").is_array()) {
    throw DomainError("distribution JSON needs a 'support' array");
  }
  std::map<Permutation, double> w;
  for (const auto& e : j.at("support")) {
    Permutation g(int_list(e.at("perm")));
    if (g.degree() != n) throw DomainError("permutation degree differs from n");
    if (!w.emplace(g, e.at("p").get<double>()).second) {
      throw DomainError("duplicate permutation " + g.to_string());
    }
  }
  return GroupDistribution(n, std::move(w));
}

int DistributionSpec::n() const {
  return by_class ? by_class->n() : explicit_form->n();
}

GroupDistribution DistributionSpec::group(std::size_t max_support) const {
  if (explicit_form) return *explicit_form;
  return by_class->materialize(max_support);
}

PermutationSampler DistributionSpec::sampler() const {
  return by_class ? PermutationSampler(*by_class) : PermutationSampler(*explicit_form);
}

DistributionSpec parse_distribution_spec(const std::string& text, int n) {
  DistributionSpec spec;
  spec.text = text;
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
  auto need_n = [&] {
    if (n <= 0) throw DomainError("distribution '" + text + "' needs the degree n");
  };
  if (head == "uniform" && arg.empty()) {
    need_n();
    spec.by_class = ClassDistribution::uniform(n);
  } else if (head == "uniform_class") {
    need_n();
    const Partition lengths = parse_partition(arg);
    spec.by_class = ClassDistribution::uniform_class(CycleType::from_lengths(n, lengths.parts()));
  } else if (head == "lazy_transposition") {
    int m = 0;
    try {
      std::size_t used = 0;
      m = std::stoi(arg, &used);
      if (used != arg.size()) m = 0;
    } catch (const std::exception&) {
      m = 0;
    }
    if (m < 2) throw DomainError("lazy_transposition needs n >= 2");
    if (n > 0 && m != n) throw DomainError("lazy_transposition degree differs from n");
    spec.by_class = ClassDistribution::lazy_transposition(m);
  } else if (head == "file") {
    spec.explicit_form = distribution_from_json(read_json_file(arg));
    if (n > 0 && spec.explicit_form->n() != n) {
      throw DomainError("distribution file degree differs from n");
    }
  } else {
    throw DomainError("unknown distribution spec '" + text + "'");
  }
  return spec;
}

// --- matrices and certificates -------------------------------------------

Json matrix_to_json(const ComplexMatrix& a) {
  Json out = Json::array();
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      out.push_back(Json::array({a(r, c).real(), a(r, c).imag()}));
    }
  }
  return out;
}

ComplexMatrix matrix_from_json(const Json& j, int rows, int cols) {
  if (!j.is_array() || j.size() != static_cast<std::size_t>(rows) * cols) {
    throw DomainError("matrix JSON has the wrong number of entries");
  }
  ComplexMatrix a(rows, cols);
  std::size_t k = 0;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c, ++k) {
      const auto& e = j[k];
      if (e.is_number()) {
        a(r, c) = e.get<double>();
      } else if (e.is_array() && e.size() == 2) {
        a(r, c) = {e[0].get<double>(), e[1].get<double>()};
      } else {
        throw DomainError("matrix entry must be a number or [re, im]");
      }
    }
  }
  return a;
}

Json to_json(const MatrixSet& s) {
  Json mats = Json::array();
  for (const auto& a : s.matrices()) mats.push_back(matrix_to_json(a));
  return Json{{"dim", s.dim()}, {"matrices", mats}};
}

MatrixSet matrix_set_from_json(const Json& j) {
  check_version(j);
  const int d = field<int>(j, "dim");
  if (d < 1) throw DomainError("matrix set dim must be positive");
  std::vector<ComplexMatrix> mats;
  for (const auto& m : j.at("matrices")) mats.push_back(matrix_from_json(m, d, d));
  return MatrixSet(std::move(mats));
}

Json to_json(const NormCertificate& c) {
  return Json{{"degree", c.degree()},
              {"gamma", c.gamma},
              {"dim", c.gram.rows()},
              {"gram", matrix_to_json(c.gram)},
              {"slacks", c.slacks},
              {"min_eig_p", c.min_eig_p},
              {"certified_upper", c.certified_upper}};
}

NormCertificate certificate_from_json(const Json& j) {
  check_version(j);
  NormCertificate c;
  const int degree = field<int>(j, "degree");
  if (degree < 2 || degree % 2 != 0) throw DomainError("certificate degree must be even and >= 2");
  c.d = degree / 2;
  c.gamma = field<double>(j, "gamma");
  const auto& g = j.at("gram");
  int dim = 0;
  if (j.contains("dim")) {
    dim = j.at("dim").get<int>();
  } else {
    while (static_cast<std::size_t>(dim) * dim < g.size()) ++dim;
  }
  c.gram = matrix_from_json(g, dim, dim);
  if (j.contains("slacks")) c.slacks = j.at("slacks").get<std::vector<double>>();
  if (j.contains("min_eig_p")) c.min_eig_p = j.at("min_eig_p").get<double>();
  if (j.contains("certified_upper")) c.certified_upper = j.at("certified_upper").get<double>();
  return c;
}

// --- reports -------------------------------------------------------------

Json to_json(const BoundReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back(Json{{"shape", row.shape.to_string()},
                        {"multiplicity", to_string(row.multiplicity)},
                        {"dim", to_string(row.dim)},
                        {"term", row.term}});
  }
  Json j{{"space", r.space_id},
         {"space_size", to_string(r.space_size)},
         {"N", r.N},
         {"route", r.route},
         {"rows", rows},
         {"upper_avg", r.upper_avg},
         {"lower_avg", r.lower_avg}};
  if (r.exhaustive_avg_tv_sq) j["exhaustive_avg_tv_sq"] = *r.exhaustive_avg_tv_sq;
  return j;
}

BoundReport bound_report_from_json(const Json& j) {
  check_version(j);
  BoundReport r;
  r.space_id = field<std::string>(j, "space");
  r.space_size = big_from_string(field<std::string>(j, "space_size"));
  r.N = field<int>(j, "N");
  r.route = field<std::string>(j, "route");
  for (const auto& row : j.at("rows")) {
    r.rows.push_back(BoundRow{parse_partition(row.at("shape").get<std::string>()),
                              big_from_string(row.at("multiplicity").get<std::string>()),
                              big_from_string(row.at("dim").get<std::string>()),
                              row.at("term").get<double>()});
  }
  r.upper_avg = field<double>(j, "upper_avg");
  r.lower_avg = field<double>(j, "lower_avg");
  if (j.contains("exhaustive_avg_tv_sq")) {
    r.exhaustive_avg_tv_sq = j.at("exhaustive_avg_tv_sq").get<double>();
  }
  return r;
}

Json to_json(const JsrEstimate& e) {
  Json j{{"lower", e.lower},
         {"upper", e.upper},
         {"depth", e.depth},
         {"lower_word", e.lower_word},
         {"upper_source", e.upper_source},
         {"budget_exhausted", e.budget_exhausted},
         {"bisection_steps", e.bisection_steps}};
  if (e.certificate) j["certificate"] = to_json(*e.certificate);
  return j;
}

Json to_json(const FourierJsr& f) {
  Json irreps = Json::array();
  for (const auto& row : f.irreps) {
    irreps.push_back(Json{{"shape", row.shape.to_string()},
                          {"multiplicity", to_string(row.multiplicity)},
                          {"dim", row.dim},
                          {"route", row.route},
                          {"estimate", to_json(row.estimate)}});
  }
  return Json{{"lower", f.lower},
              {"upper", f.upper},
              {"verdict", f.verdict},
              {"budget_exhausted", f.budget_exhausted},
              {"irreps", irreps}};
}

Json to_json(const CertificateCheck& c) {
  return Json{{"passed", c.passed},
              {"min_eig_p", c.min_eig_p},
              {"max_eig_p", c.max_eig_p},
              {"slacks", c.slacks},
              {"certified_upper", c.certified_upper},
              {"message", c.message}};
}

Json to_json(const EmpiricalDistribution& e) {
  Json counts = Json::array();
  for (const auto& [state, c] : e.counts) counts.push_back(Json{{"state", state}, {"count", c}});
  return Json{{"space", e.space_id}, {"N", e.N}, {"M", e.M}, {"seed", e.seed}, {"counts", counts}};
}

Json to_json(const MeanEstimate& e) {
  return Json{{"estimate", e.estimate},
              {"radius", e.radius},
              {"confidence", e.confidence},
              {"declared_bound", e.declared_bound},
              {"epsilon", e.plan.epsilon},
              {"eta", e.plan.eta},
              {"tv_bound", e.plan.tv_bound},
              {"N", e.plan.N},
              {"M", e.plan.M},
              {"seed", e.seed}};
}

MeanEstimate mean_estimate_from_json(const Json& j) {
  check_version(j);
  MeanEstimate e;
  e.estimate = field<double>(j, "estimate");
  e.radius = field<double>(j, "radius");
  e.confidence = field<double>(j, "confidence");
  e.declared_bound = field<double>(j, "declared_bound");
  e.plan.epsilon = field<double>(j, "epsilon");
  e.plan.eta = field<double>(j, "eta");
  e.plan.tv_bound = field<double>(j, "tv_bound");
  e.plan.N = field<int>(j, "N");
  e.plan.M = field<std::uint64_t>(j, "M");
  e.seed = field<std::uint64_t>(j, "seed");
  return e;
}

Json to_json(const AnnealingEstimate& e) {
  return Json{{"estimate", e.lbar_hat},
              {"radius", e.radius},
              {"confidence", e.confidence},
              {"a_hat", e.a_hat},
              {"c_hat", e.c_hat},
              {"delta", e.delta},
              {"epsilon", e.epsilon},
              {"eta", e.eta},
              {"tv_bound", e.tv_bound},
              {"N", e.N},
              {"M", e.M},
              {"seed", e.seed}};
}

AnnealingEstimate annealing_estimate_from_json(const Json& j) {
  check_version(j);
  AnnealingEstimate e;
  e.lbar_hat = field<double>(j, "estimate");
  e.radius = field<double>(j, "radius");
  e.confidence = field<double>(j, "confidence");
  e.a_hat = field<double>(j, "a_hat");
  e.c_hat = field<double>(j, "c_hat");
  e.delta = field<double>(j, "delta");
  e.epsilon = field<double>(j, "epsilon");
  e.eta = field<double>(j, "eta");
  e.tv_bound = field<double>(j, "tv_bound");
  e.N = field<int>(j, "N");
  e.M = field<std::uint64_t>(j, "M");
  e.seed = field<std::uint64_t>(j, "seed");
  return e;
}

Json versioned(const std::string& kind, const Json& body) {
  Json j{{"schema_version", kSchemaVersion}, {"kind", kind}};
  for (const auto& [k, v] : body.items()) j[k] = v;
  return j;
}

const Json& check_version(const Json& j) {
  if (!j.is_object()) throw DomainError("expected a JSON object");
  if (j.contains("schema_version") && j.at("schema_version").get<int>() != kSchemaVersion) {
    throw DomainError("unsupported schema_version " + j.at("schema_version").dump());
  }
  return j;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json_file(const std::string& path) {
  try {
    return Json::parse(read_text_file(path));
  } catch (const Json::parse_error& e) {
    throw DomainError(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write " + path);
  out << text;
}

}  // namespace symwalk
