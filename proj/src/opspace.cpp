#include "planalg/opspace.hpp"

#include <cmath>

#include "planalg/linalg.hpp"

namespace planalg {

void NodeTuple::validate() const {
  if (nodes.empty()) throw ParameterError("node tuple must not be empty");
  for (Complex z : nodes) domain.require_interior(z, "node");
  for (size_t i = 0; i < nodes.size(); ++i)
    for (size_t j = i + 1; j < nodes.size(); ++j)
      if (std::abs(nodes[i] - nodes[j]) < 1e-12) throw DegenerateError("coincident nodes");
}

LagrangeSystem lagrange_matrices(const GeneralOperator& t) {
  LagrangeSystem sys;
  sys.operator_matrix = t.matrix();
  sys.nodes = t.eigenvalues();
  sys.v = lagrange_idempotents(t);

  const int n = t.size();
  CMat sum = CMat::Zero(n, n);
  for (const CMat& v : sys.v) sum += v;
  sys.sum_defect = (sum - CMat::Identity(n, n)).cwiseAbs().maxCoeff();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const CMat prod = sys.v[i] * sys.v[j];
      const CMat expect = (i == j) ? sys.v[i] : CMat::Zero(n, n);
      sys.idem_defect = std::max(sys.idem_defect, (prod - expect).cwiseAbs().maxCoeff());
    }
  if (sys.sum_defect > 1e-8 || sys.idem_defect > 1e-8)
    throw ConditioningError("Lagrange system defects exceed tolerance; nodes too clustered");
  return sys;
}

FeasibilityVerdict membership(const NodeTuple& nodes, const std::vector<Complex>& targets,
                              int grid_size, int truncation) {
  nodes.validate();
  PickProblem p;
  p.domain = nodes.domain;
  p.nodes = nodes.nodes;
  p.scalar_targets = targets;
  return feasibility(p, grid_size, truncation);
}

FeasibilityVerdict membership(const NodeTuple& nodes, const std::vector<CMat>& targets,
                              int grid_size, int truncation) {
  nodes.validate();
  PickProblem p;
  p.domain = nodes.domain;
  p.nodes = nodes.nodes;
  p.matrix_targets = targets;
  return feasibility(p, grid_size, truncation);
}

namespace {

Real lt_value(const LagrangeSystem& sys, const std::vector<CMat>& values) {
  const int n = static_cast<int>(sys.v.size());
  const int nn = static_cast<int>(sys.operator_matrix.rows());
  const int k = static_cast<int>(values.front().rows());
  CMat acc = CMat::Zero(nn * k, nn * k);
  for (int i = 0; i < n; ++i)
    for (int r = 0; r < nn; ++r)
      for (int c = 0; c < nn; ++c)
        acc.block(r * k, c * k, k, k) += sys.v[i](r, c) * values[i];
  return op_norm(acc);
}

Real lt_scalar_value(const LagrangeSystem& sys, const std::vector<Complex>& values) {
  const int nn = static_cast<int>(sys.operator_matrix.rows());
  CMat acc = CMat::Zero(nn, nn);
  for (size_t i = 0; i < sys.v.size(); ++i) acc += values[i] * sys.v[i];
  return op_norm(acc);
}

}  // namespace

LtBound lt_norm_lower_bound(const LagrangeSystem& sys, const NodeTuple& nodes,
                            int sample_count, int max_degree, std::uint64_t seed, int level,
                            int threads, int truncation) {
  nodes.validate();
  if (level < 1) throw ParameterError("level must be >= 1");
  if (sys.v.size() != nodes.nodes.size())
    throw ParameterError("node tuple must match the Lagrange system");

  const ScalarSampler sampler(nodes.domain, nodes.nodes.front(), max_degree, truncation, seed);
  const int n = nodes.size();
  const int k = level;

  std::vector<Real> norms(sample_count);
  parallel_map(sample_count, threads, [&](std::int64_t idx) {
    // Substream 0 reproduces the level-1 scalar stream, so level-k bounds
    // dominate level-1 bounds on matched seeds via the embedded samples.
    const ScalarSample scalar = sampler.draw(idx, 0);
    std::vector<Complex> scalar_values(n);
    for (int i = 0; i < n; ++i) scalar_values[i] = scalar.eval(nodes.nodes[i]);
    Real best = lt_scalar_value(sys, scalar_values);

    if (k > 1) {
      // Rotated diagonal sample U diag(b_1..b_k) V.
      std::vector<ScalarSample> diag;
      diag.push_back(scalar);
      for (int j = 1; j < k; ++j) diag.push_back(sampler.draw(idx, j));
      RngStream urng(sampler.seed(), idx + 1, 100);
      const CMat u = haar_unitary(k, urng);
      const CMat v = haar_unitary(k, urng);
      std::vector<CMat> values(n);
      for (int i = 0; i < n; ++i) {
        CMat d = CMat::Zero(k, k);
        for (int j = 0; j < k; ++j) d(j, j) = diag[j].eval(nodes.nodes[i]);
        values[i] = u * d * v;
      }
      best = std::max(best, lt_value(sys, values));

      if (nodes.domain.is_disk()) {
        // Blaschke-Potapov product of at most 3 one-zero factors.
        RngStream brng(sampler.seed(), idx + 1, 200);
        const int factors = 1 + static_cast<int>(brng.below(3));
        std::vector<CMat> prod(n, CMat::Identity(k, k));
        for (int fidx = 0; fidx < factors; ++fidx) {
          const Complex a = brng.disk_point(0.85);
          const CMat uf = haar_unitary(k, brng);
          const CMat vf = haar_unitary(k, brng);
          for (int i = 0; i < n; ++i) {
            CMat d = CMat::Identity(k, k);
            d(0, 0) = (nodes.nodes[i] - a) / (1.0 - std::conj(a) * nodes.nodes[i]);
            prod[i] = prod[i] * (uf * d * vf);
          }
        }
        best = std::max(best, lt_value(sys, prod));
      }
    }
    norms[idx] = best;
  });

  LtBound out;
  out.level = level;
  out.sample_count = sample_count;
  for (int i = 0; i < sample_count; ++i) {
    if (norms[i] > out.bound) {
      out.bound = norms[i];
      out.witness_index = i;
    }
  }
  return out;
}

HomeqlinReport homeqlin_check(const GeneralOperator& t, const NodeTuple& nodes, int budget,
                              int max_degree, std::uint64_t seed, int truncation) {
  nodes.validate();
  if (t.size() != nodes.size()) throw ParameterError("node count must match the operator size");
  for (int i = 0; i < t.size(); ++i) {
    Real best = 1e9;
    for (Complex z : nodes.nodes) best = std::min(best, std::abs(t.eigenvalues()[i] - z));
    if (best > 1e-10)
      throw ParameterError("node tuple must equal the operator eigenvalues");
  }

  const LagrangeSystem sys = lagrange_matrices(t);
  const ScalarSampler sampler(nodes.domain, nodes.nodes.front(), max_degree, truncation, seed);

  // Independent route for f(T): rational calculus when the sample is
  // rational, otherwise the eigenbasis of T itself. The L_T side goes
  // through the Lagrange polynomials, so agreement is a genuine
  // cross-validation of the sample-wise identity ||f(T)|| = ||sum f(z_i) V_i||.
  Eigen::ComplexEigenSolver<CMat> es(t.matrix());
  const CMat evec = es.eigenvectors();
  const Eigen::PartialPivLU<CMat> evec_lu(evec);

  HomeqlinReport report;
  report.sample_count = budget;
  for (int idx = 0; idx < budget; ++idx) {
    const ScalarSample f = sampler.draw(idx, 0);
    CMat ft;
    if (f.is_rational()) {
      ft = calc_general(t, f.to_rational(), nodes.domain);
    } else {
      CMat d = CMat::Zero(t.size(), t.size());
      for (int i = 0; i < t.size(); ++i) d(i, i) = f.eval(es.eigenvalues()(i));
      ft = evec * d * evec_lu.inverse();
    }
    const Real rho_norm = op_norm(ft);

    std::vector<Complex> at_nodes(nodes.size());
    for (int i = 0; i < nodes.size(); ++i) at_nodes[i] = f.eval(nodes.nodes[i]);
    const Real lt_norm = lt_scalar_value(sys, at_nodes);

    report.max_rho_norm = std::max(report.max_rho_norm, rho_norm);
    report.max_lt_norm = std::max(report.max_lt_norm, lt_norm);
    report.max_discrepancy = std::max(report.max_discrepancy, std::abs(rho_norm - lt_norm));
  }
  report.agree = report.max_discrepancy <= 1e-6;
  return report;
}

}  // namespace planalg
