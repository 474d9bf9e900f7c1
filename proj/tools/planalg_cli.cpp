// Batch command-line front end: JSON jobs in, JSON reports out.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "planalg/charfn.hpp"
#include "planalg/factorization.hpp"
#include "planalg/hardy_model.hpp"
#include "planalg/json_io.hpp"
#include "planalg/opspace.hpp"
#include "planalg/pick.hpp"
#include "planalg/rng.hpp"
#include "planalg/sampler.hpp"

namespace planalg::cli {

constexpr int kExitOk = 0;
constexpr int kExitBadJob = 1;
constexpr int kExitNegativeVerdict = 2;
constexpr int kExitConditioning = 3;

struct Options {
  std::string job_path;
  std::string out_path;
  std::string csv_path;
  int threads = 1;
  std::optional<std::uint64_t> seed_override;
};

struct RunResult {
  Json results;
  int exit_code = kExitOk;
  std::string csv;
};

const Json& field(const Json& j, const std::string& key, const std::string& where) {
  if (!j.contains(key)) throw JobError("at " + where + ": missing field '" + key + "'");
  return j[key];
}

template <typename T>
T number(const Json& j, const std::string& key, const std::string& where, T fallback,
         bool required = false) {
  if (!j.contains(key)) {
    if (required) throw JobError("at " + where + ": missing field '" + key + "'");
    return fallback;
  }
  if (!j[key].is_number()) throw JobError("at " + where + "/" + key + ": expected a number");
  return j[key].get<T>();
}

std::uint64_t required_seed(const Json& job, const Options& opt) {
  if (opt.seed_override) return *opt.seed_override;
  if (!job.contains("seed") || !job["seed"].is_number_unsigned())
    throw JobError("at /seed: sampling commands require an unsigned integer seed");
  return job["seed"].get<std::uint64_t>();
}

struct OperatorPayload {
  std::optional<ModelOperatorA> a;
  std::optional<ModelOperatorB> b;
  std::optional<GeneralOperator> general;
};

OperatorPayload operator_from_json(const Json& j, const PlanarDomain& domain,
                                   const std::string& where) {
  const std::string type = field(j, "type", where).get<std::string>();
  OperatorPayload out;
  if (type == "A") {
    out.a.emplace(complex_from_json(field(j, "z1", where), where + "/z1"),
                  complex_from_json(field(j, "z2", where), where + "/z2"),
                  number<Real>(j, "s", where, 0.0, true),
                  complex_from_json(field(j, "mu", where), where + "/mu"));
  } else if (type == "B") {
    out.b.emplace(complex_from_json(field(j, "z", where), where + "/z"),
                  number<Real>(j, "t", where, 0.0, true),
                  complex_from_json(field(j, "lambda", where), where + "/lambda"));
  } else if (type == "general") {
    out.general.emplace(cmat_from_json(field(j, "matrix", where), where + "/matrix"), domain);
  } else {
    throw JobError("at " + where + "/type: expected 'A', 'B' or 'general'");
  }
  return out;
}

Json tolerance_block() {
  Json t;
  t["psd_rel"] = tol::kPsdRel;
  t["marginal_rel"] = tol::kMarginalRel;
  t["reproducing_defect"] = tol::kReproducingDefect;
  t["coinvariance_defect"] = tol::kCoinvarianceDefect;
  t["pole_margin"] = tol::kPoleMargin;
  return t;
}

// ---------------------------------------------------------------------------

RunResult run_kernel(const Json& job, const PlanarDomain& domain, const Options&) {
  const Json& params = field(job, "params", "/");
  const std::string action =
      params.contains("action") ? params["action"].get<std::string>() : "eval";
  const int truncation = number<int>(params, "truncation", "/params", defaults::kTruncation);
  const KernelIndex index = params.contains("index")
                                ? index_from_json(params["index"], "/params/index")
                                : KernelIndex::trivial(domain);

  RunResult out;
  out.results["truncation"] = truncation;
  if (action == "eval") {
    const auto kernel = TruncatedKernel::make(domain, index, truncation);
    const Json& pairs = field(params, "pairs", "/params");
    Json values = Json::array();
    Json tails = Json::array();
    std::ostringstream csv;
    csv << "re_z,im_z,re_w,im_w,re_k,im_k\n";
    for (size_t i = 0; i < pairs.size(); ++i) {
      const std::string where = "/params/pairs/" + std::to_string(i);
      if (!pairs[i].is_array() || pairs[i].size() != 2)
        throw JobError("at " + where + ": expected [z, w]");
      const Complex z = complex_from_json(pairs[i][0], where + "/0");
      const Complex w = complex_from_json(pairs[i][1], where + "/1");
      const Complex k = kernel.eval(z, w);
      values.push_back(to_json(k));
      tails.push_back(kernel.tail_bound(z, w));
      csv << z.real() << "," << z.imag() << "," << w.real() << "," << w.imag() << ","
          << k.real() << "," << k.imag() << "\n";
    }
    out.results["values"] = values;
    out.results["tail_bounds"] = tails;
    out.csv = csv.str();
  } else if (action == "verify") {
    const auto kernel = TruncatedKernel::make(domain, index, truncation);
    const int qpoints =
        number<int>(params, "quadrature_points", "/params", defaults::kQuadraturePoints);
    const auto quadrature = build_quadrature(domain, qpoints);
    std::vector<int> exponents;
    if (params.contains("test_exponents")) {
      for (const auto& e : params["test_exponents"]) exponents.push_back(e.get<int>());
    } else {
      const int lo = domain.is_disk() ? 0 : -10;
      for (int n = lo; n <= 10; ++n) exponents.push_back(n);
    }
    std::vector<Complex> probes;
    if (params.contains("probes"))
      for (const auto& p : params["probes"])
        probes.push_back(complex_from_json(p, "/params/probes"));
    const Real defect = verify_reproducing(kernel, quadrature, exponents, probes);
    out.results["defect"] = defect;
    out.results["within_tolerance"] = defect < tol::kReproducingDefect;
  } else if (action == "szego") {
    const Complex z = complex_from_json(field(params, "z", "/params"), "/params/z");
    out.results["value"] = szego_diag(domain, z, truncation);
  } else {
    throw JobError("at /params/action: expected 'eval', 'verify' or 'szego'");
  }
  return out;
}

RunResult run_pick(const Json& job, const PlanarDomain& domain, const Options&) {
  const Json& params = field(job, "params", "/");
  const std::string action = field(params, "action", "/params").get<std::string>();
  const int truncation = number<int>(params, "truncation", "/params", defaults::kTruncation);
  const int grid = number<int>(params, "grid_size", "/params", defaults::kGridSize);

  RunResult out;
  out.results["truncation"] = truncation;
  out.results["grid_size"] = grid;
  if (action == "feasibility") {
    PickProblem problem;
    problem.domain = domain;
    for (const auto& n : field(params, "nodes", "/params"))
      problem.nodes.push_back(complex_from_json(n, "/params/nodes"));
    if (params.contains("matrix_targets")) {
      for (const auto& m : params["matrix_targets"])
        problem.matrix_targets.push_back(cmat_from_json(m, "/params/matrix_targets"));
    } else {
      for (const auto& w : field(params, "targets", "/params"))
        problem.scalar_targets.push_back(complex_from_json(w, "/params/targets"));
    }
    const auto verdict = feasibility(problem, grid, truncation);
    out.results["verdict"] = to_json(verdict);
    if (!verdict.feasible) out.exit_code = kExitNegativeVerdict;
  } else if (action == "extremal_s") {
    const Complex z1 = complex_from_json(field(params, "z1", "/params"), "/params/z1");
    const Complex z2 = complex_from_json(field(params, "z2", "/params"), "/params/z2");
    out.results["extremal"] = to_json(extremal_s(domain, z1, z2, grid, truncation));
  } else if (action == "extremal_t") {
    const Complex z = complex_from_json(field(params, "z", "/params"), "/params/z");
    out.results["t"] = extremal_t(domain, z, truncation);
  } else {
    throw JobError("at /params/action: expected 'feasibility', 'extremal_s' or 'extremal_t'");
  }
  return out;
}

RunResult run_contract(const Json& job, const PlanarDomain& domain, const Options& opt) {
  const Json& params = field(job, "params", "/");
  const int truncation = number<int>(params, "truncation", "/params", defaults::kTruncation);
  const int grid = number<int>(params, "grid_size", "/params", defaults::kGridSize);
  const auto op = operator_from_json(field(params, "operator", "/params"), domain,
                                     "/params/operator");
  const bool wants_vn = params.contains("vn");

  RunResult out;
  out.results["truncation"] = truncation;
  out.results["grid_size"] = grid;
  bool negative = false;
  if (op.a) {
    const auto verdict = contractivity_A(*op.a, domain, grid, truncation);
    out.results["verdict"] = to_json(verdict);
    negative = !verdict.contractive;
  } else if (op.b) {
    const auto verdict = contractivity_B(*op.b, domain, truncation);
    out.results["verdict"] = to_json(verdict);
    negative = !verdict.contractive;
  } else {
    // No exact criterion beyond 2x2 models: the Pick-type sampling test is
    // the verdict (violations certify non-contractivity).
    const std::uint64_t seed = required_seed(job, opt);
    const Json& vn = field(params, "vn", "/params");
    const int samples = number<int>(vn, "sample_count", "/params/vn", 2000);
    const int degree = number<int>(vn, "max_degree", "/params/vn", defaults::kMaxDegree);
    const auto kernel = eigen_kernel(*op.general);
    const auto verdict =
        contractivity_pick_test(kernel, domain, samples, degree, seed, truncation);
    out.results["pick_test"] = to_json(verdict);
    negative = verdict.violation_found;
  }

  if (wants_vn) {
    const std::uint64_t seed = required_seed(job, opt);
    const Json& vn = params["vn"];
    const int samples = number<int>(vn, "sample_count", "/params/vn", 2000);
    const int degree = number<int>(vn, "max_degree", "/params/vn", defaults::kMaxDegree);
    VnReport report;
    if (op.a) {
      report = vn_sample_check(*op.a, domain, samples, degree, seed, opt.threads, truncation);
    } else if (op.b) {
      report = vn_sample_check(*op.b, domain, samples, degree, seed, opt.threads, truncation);
    } else {
      report =
          vn_sample_check(*op.general, domain, samples, degree, seed, opt.threads, truncation);
    }
    out.results["vn"] = to_json(report);
  }
  if (negative) out.exit_code = kExitNegativeVerdict;
  return out;
}

RunResult run_dilate(const Json& job, const PlanarDomain& domain, const Options&) {
  const Json& params = field(job, "params", "/");
  const std::string which = field(params, "which", "/params").get<std::string>();
  const int truncation = number<int>(params, "truncation", "/params", defaults::kTruncation);
  const int grid = number<int>(params, "grid_size", "/params", defaults::kGridSize);
  const int verify_count = number<int>(params, "verify_count", "/params", 4);

  RunResult out;
  out.results["truncation"] = truncation;
  DilationWitness witness;
  std::optional<TruncatedHardyModel> model;

  if (which == "pair") {
    const Complex z1 = complex_from_json(field(params, "z1", "/params"), "/params/z1");
    const Complex z2 = complex_from_json(field(params, "z2", "/params"), "/params/z2");
    const Complex mu = complex_from_json(field(params, "mu", "/params"), "/params/mu");
    const KernelIndex index = params.contains("index")
                                  ? index_from_json(params["index"], "/params/index")
                                  : alpha0_search(domain, z1, z2, grid, truncation);
    model = TruncatedHardyModel::spectral(TruncatedKernel::make(domain, index, truncation));
    const Real s = params.contains("s")
                       ? number<Real>(params, "s", "/params", 0.0, true)
                       : s_parameter(*model, z1, z2);
    const Real s_crit = s_parameter(*model, z1, z2);
    out.results["index"] = to_json(index);
    out.results["s_critical"] = s_crit;
    if (s * std::abs(mu) > s_crit * (1.0 + 1e-9)) {
      out.results["witness"] = nullptr;
      out.results["reason"] = "s|mu| exceeds the extremal bound; no dilation exists";
      out.exit_code = kExitNegativeVerdict;
      return out;
    }
    witness = dilation_witness_pair(*model, ModelOperatorA(z1, z2, s, mu));
  } else if (which == "jet") {
    const Complex z = complex_from_json(field(params, "z", "/params"), "/params/z");
    const Complex lambda =
        complex_from_json(field(params, "lambda", "/params"), "/params/lambda");
    const bool weighted = !params.contains("weighted") || params["weighted"].get<bool>();
    if (weighted) {
      const int qpoints =
          number<int>(params, "quadrature_points", "/params", defaults::kQuadraturePoints);
      const int basis = number<int>(params, "basis_size", "/params", std::min(truncation, 80));
      model = weighted_hardy(domain, z, build_quadrature(domain, qpoints), basis);
    } else {
      model = TruncatedHardyModel::spectral(
          TruncatedKernel::make(domain, KernelIndex::trivial(domain), truncation));
    }
    const Real t = params.contains("t") ? number<Real>(params, "t", "/params", 0.0, true)
                                        : t_parameter(*model, z);
    const Real t_crit = t_parameter(*model, z);
    out.results["t_model"] = t_crit;
    if (t * std::abs(lambda) > t_crit * (1.0 + 1e-9)) {
      out.results["witness"] = nullptr;
      out.results["reason"] = "t|lambda| exceeds the model bound; no dilation exists";
      out.exit_code = kExitNegativeVerdict;
      return out;
    }
    witness = dilation_witness_jet(*model, ModelOperatorB(z, t, lambda));
  } else {
    throw JobError("at /params/which: expected 'pair' or 'jet'");
  }

  // Exercise the dilation identity on a small rational battery.
  std::vector<RationalFunction> tests = {RationalFunction::identity(),
                                         RationalFunction::constant(Complex(0.4, -0.3))};
  RngStream rng(17, 0);
  for (int i = 0; i < verify_count; ++i) {
    if (domain.is_disk()) {
      tests.push_back(RationalFunction::blaschke(
          {rng.disk_point(0.8), rng.disk_point(0.8), rng.disk_point(0.8)}, rng.unit_phase()));
    } else {
      // Laurent polynomial with its pole in the hole.
      std::vector<Complex> coef(6);
      for (auto& c : coef) c = 0.3 * rng.cgauss();
      tests.push_back(RationalFunction(Polynomial(coef),
                                       Polynomial({Complex(0, 0), Complex(0, 0), Complex(1, 0)})));
    }
  }
  const CMat2 target_matrix = witness.compression.adjoint();
  out.results["witness"] = to_json(witness);
  out.results["verify_max_defect"] =
      verify_dilation(*model, witness.vectors.h1, witness.vectors.h2, target_matrix, tests);
  return out;
}

RunResult run_charfn(const Json& job, const PlanarDomain& domain, const Options&) {
  if (!domain.is_disk())
    throw JobError("at /domain: the characteristic function is a disk construction");
  const Json& params = field(job, "params", "/");
  const Complex z1 = complex_from_json(field(params, "z1", "/params"), "/params/z1");
  const Complex z2 = complex_from_json(field(params, "z2", "/params"), "/params/z2");
  const Complex mu = complex_from_json(field(params, "mu", "/params"), "/params/mu");
  const int boundary_points = number<int>(params, "boundary_points", "/params", 256);

  const CharFn theta(z1, z2, mu);
  Real inner_defect = 0;
  std::ostringstream csv;
  csv << "re_u,im_u,re_t11,im_t11,re_t12,im_t12,re_t21,im_t21,re_t22,im_t22\n";
  for (int j = 0; j < boundary_points; ++j) {
    const Complex u = std::polar(1.0, 2.0 * kPi * j / boundary_points);
    const CMat2 t = theta.eval(u);
    inner_defect =
        std::max(inner_defect, (t.adjoint() * t - CMat2::Identity()).cwiseAbs().maxCoeff());
    csv << u.real() << "," << u.imag();
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) csv << "," << t(r, c).real() << "," << t(r, c).imag();
    csv << "\n";
  }

  RunResult out;
  out.csv = csv.str();
  out.results["inner_defect"] = inner_defect;
  out.results["node_product"] = to_json(CMat(theta.product_at_node()));
  if (params.contains("equiv_mu2")) {
    const Complex mu2 = complex_from_json(params["equiv_mu2"], "/params/equiv_mu2");
    const auto eq = unitary_equiv(mu, mu2, z1, z2, params.value("search", false));
    Json ej;
    ej["equivalent"] = eq.equivalent;
    if (eq.certificate) ej["certificate"] = to_json(CMat(*eq.certificate));
    if (eq.search_residual) ej["search_residual"] = *eq.search_residual;
    out.results["equivalence"] = ej;
  }
  return out;
}

RunResult run_opspace(const Json& job, const PlanarDomain& domain, const Options& opt) {
  const Json& params = field(job, "params", "/");
  const int truncation = number<int>(params, "truncation", "/params", defaults::kTruncation);
  const int level = number<int>(params, "level", "/params", 1);
  const int samples = number<int>(params, "sample_count", "/params", 2000);
  const int degree = number<int>(params, "max_degree", "/params", defaults::kMaxDegree);
  const int homeqlin_budget = number<int>(params, "homeqlin_budget", "/params", 0);
  const std::uint64_t seed = required_seed(job, opt);

  const auto payload = operator_from_json(field(params, "operator", "/params"), domain,
                                          "/params/operator");
  CMat matrix;
  if (payload.general) {
    matrix = payload.general->matrix();
  } else if (payload.a) {
    matrix = payload.a->matrix();
  } else {
    throw JobError("at /params/operator: opspace experiments need distinct eigenvalues");
  }
  const GeneralOperator t(matrix, domain);
  const auto sys = lagrange_matrices(t);
  NodeTuple nodes{domain, t.eigenvalues()};

  RunResult out;
  out.results["truncation"] = truncation;
  Json lagrange;
  lagrange["sum_defect"] = sys.sum_defect;
  lagrange["idempotent_defect"] = sys.idem_defect;
  out.results["lagrange"] = lagrange;

  const auto bound =
      lt_norm_lower_bound(sys, nodes, samples, degree, seed, level, opt.threads, truncation);
  out.results["lt_bound"] = to_json(bound);

  // Exact criterion for 2x2 triangular models rides along; a sampled bound
  // beyond 1 for an exactly-contractive operator is a candidate
  // counterexample artifact, never clipped.
  if (t.size() == 2 && std::abs(matrix(0, 1)) < 1e-14) {
    const Complex coupling = matrix(1, 0);
    const Complex zz1 = matrix(0, 0), zz2 = matrix(1, 1);
    const ModelOperatorA model(zz1, zz2, std::max(std::abs(coupling / (zz1 - zz2)), 1e-30),
                               coupling / (zz1 - zz2) /
                                   std::max(std::abs(coupling / (zz1 - zz2)), 1e-30));
    const auto verdict = contractivity_A(model, domain, defaults::kGridSize, truncation);
    out.results["exact_verdict"] = to_json(verdict);
    out.results["candidate_counterexample"] =
        verdict.contractive && bound.bound > 1.0 + 1e-9;
  } else {
    out.results["candidate_counterexample"] = bound.bound > 1.0 + 1e-9;
  }

  if (homeqlin_budget > 0)
    out.results["homeqlin"] = to_json(homeqlin_check(t, nodes, homeqlin_budget, degree, seed,
                                                     truncation));
  return out;
}

RunResult run_factorize(const Json& job, const PlanarDomain& domain, const Options&) {
  const Json& params = field(job, "params", "/");
  const int truncation = number<int>(params, "truncation", "/params", defaults::kTruncation);
  const int grid = number<int>(params, "grid_size", "/params", defaults::kGridSize);

  std::optional<GeneralOperator> source;
  EigenKernel kernel;
  if (params.contains("operator")) {
    const auto payload =
        operator_from_json(params["operator"], domain, "/params/operator");
    if (!payload.general)
      throw JobError("at /params/operator: factorize expects a general operator matrix");
    source = payload.general;
    kernel = eigen_kernel(*source);
  } else {
    const Json& kj = field(params, "kernel", "/params");
    for (const auto& n : field(kj, "nodes", "/params/kernel"))
      kernel.nodes.push_back(complex_from_json(n, "/params/kernel/nodes"));
    kernel.gram = cmat_from_json(field(kj, "gram", "/params/kernel"), "/params/kernel/gram");
    kernel.validate();
  }

  const auto scan = schur_certificate(kernel, domain, grid, truncation);
  RunResult out;
  out.results["truncation"] = truncation;
  out.results["grid_size"] = grid;
  Json profile = Json::array();
  for (Real lam : scan.grid_profile) {
    if (std::isnan(lam)) {
      profile.push_back(nullptr);
    } else {
      profile.push_back(lam);
    }
  }
  out.results["grid_lambda_min"] = profile;
  if (scan.certificate) {
    out.results["certificate"] = to_json(*scan.certificate);
    const auto check = embedding_vectors(*scan.certificate, kernel, domain, truncation,
                                         source ? &*source : nullptr);
    out.results["embedding"] = to_json(check);
  } else {
    out.results["certificate"] = nullptr;
    out.exit_code = kExitNegativeVerdict;
  }
  return out;
}

// ---------------------------------------------------------------------------

Json load_job(const Options& opt) {
  std::string text;
  if (!opt.job_path.empty()) {
    std::ifstream in(opt.job_path);
    if (!in) throw JobError("cannot open job file '" + opt.job_path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  } else {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  }
  Json job = Json::parse(text, nullptr, false);
  if (job.is_discarded()) throw JobError("at /: input is not valid JSON");
  if (!job.is_object()) throw JobError("at /: job must be a JSON object");
  if (job.value("schema", 1) != 1) throw JobError("at /schema: unsupported schema version");
  return job;
}

int run_job(const std::string& command, const Options& opt) {
  Json job;
  Json output;
  try {
    job = load_job(opt);
    std::string cmd = command;
    if (cmd == "run") {
      cmd = field(job, "command", "/").get<std::string>();
    } else if (job.contains("command") && job["command"].get<std::string>() != cmd) {
      throw JobError("at /command: job command does not match the subcommand");
    }

    const PlanarDomain domain = job.contains("domain")
                                    ? domain_from_json(job["domain"], "/domain")
                                    : PlanarDomain::disk();

    RunResult result;
    if (cmd == "kernel") {
      result = run_kernel(job, domain, opt);
    } else if (cmd == "pick") {
      result = run_pick(job, domain, opt);
    } else if (cmd == "contract") {
      result = run_contract(job, domain, opt);
    } else if (cmd == "dilate") {
      result = run_dilate(job, domain, opt);
    } else if (cmd == "charfn") {
      result = run_charfn(job, domain, opt);
    } else if (cmd == "opspace-experiment") {
      result = run_opspace(job, domain, opt);
    } else if (cmd == "factorize") {
      result = run_factorize(job, domain, opt);
    } else {
      throw JobError("at /command: unknown command '" + cmd + "'");
    }

    output["schema"] = 1;
    output["command"] = cmd;
    output["domain"] = to_json(domain);
    output["params"] = job.contains("params") ? job["params"] : Json::object();
    if (job.contains("seed") && !opt.seed_override)
      output["seed"] = job["seed"];
    if (opt.seed_override) output["seed"] = *opt.seed_override;
    output["tolerances"] = tolerance_block();
    output["results"] = result.results;
    output["exit_code"] = result.exit_code;

    const std::string text = output.dump(2) + "\n";
    if (!opt.out_path.empty()) {
      std::ofstream out(opt.out_path);
      out << text;
    } else {
      std::cout << text;
    }
    if (!opt.csv_path.empty() && !result.csv.empty()) {
      std::ofstream csv(opt.csv_path);
      csv << result.csv;
    }
    return result.exit_code;
  } catch (const JobError& e) {
    std::cerr << "job error: " << e.what() << "\n";
    return kExitBadJob;
  } catch (const ConditioningError& e) {
    std::cerr << "conditioning error: " << e.what() << "\n";
    return kExitConditioning;
  } catch (const Error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitBadJob;
  }
}

}  // namespace planalg::cli

int main(int argc, char** argv) {
  CLI::App app{"planalg: kernels, Pick feasibility, contractivity and dilations"};
  app.require_subcommand(1);

  planalg::cli::Options opt;
  const std::vector<std::string> commands = {"kernel",  "pick",   "contract",
                                             "dilate",  "charfn", "opspace-experiment",
                                             "factorize", "run"};
  std::vector<CLI::App*> subs;
  for (const auto& name : commands) {
    CLI::App* sub = app.add_subcommand(
        name, name == "run" ? "dispatch on the job's command field" : "run a " + name + " job");
    sub->add_option("--job", opt.job_path, "job JSON path (default: stdin)");
    sub->add_option("--out", opt.out_path, "output JSON path (default: stdout)");
    sub->add_option("--csv", opt.csv_path, "CSV artifact path (opt-in)");
    sub->add_option("--threads", opt.threads, "threads for data-parallel scans");
    sub->add_option_function<std::uint64_t>(
        "--seed-override", [&opt](std::uint64_t s) { opt.seed_override = s; },
        "replace the job's seed");
    subs.push_back(sub);
  }

  CLI11_PARSE(app, argc, argv);
  for (size_t i = 0; i < commands.size(); ++i)
    if (subs[i]->parsed()) return planalg::cli::run_job(commands[i], opt);
  return planalg::cli::kExitBadJob;
}
