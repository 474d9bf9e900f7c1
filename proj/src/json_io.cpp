#include "planalg/json_io.hpp"

namespace planalg {

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const CVec& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
  return out;
}

Json to_json(const CMat& m) {
  Json out = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    out.push_back(row);
  }
  return out;
}

Json to_json(const PlanarDomain& domain) {
  Json out;
  out["kind"] = domain.is_disk() ? "disk" : "annulus";
  if (!domain.is_disk()) out["inner_radius"] = domain.inner_radius();
  return out;
}

Json to_json(const KernelIndex& index) {
  Json out;
  out["exponents"] = index.exponents;
  return out;
}

Json to_json(const FeasibilityVerdict& verdict) {
  Json out;
  out["feasible"] = verdict.feasible;
  out["marginal"] = verdict.marginal;
  out["grid_resolution"] = verdict.grid_resolution;
  out["worst_min_eigenvalue"] = verdict.worst_min_eigenvalue;
  if (verdict.witness_index) {
    Json w;
    w["index"] = to_json(*verdict.witness_index);
    w["eigenvalue"] = *verdict.witness_eigenvalue;
    w["eigenvector"] = to_json(*verdict.witness_vector);
    out["witness"] = w;
  }
  return out;
}

Json to_json(const ExtremalS& ex) {
  Json out;
  out["s_sq"] = ex.s_sq;
  out["m_sq"] = ex.m_sq;
  out["alpha0"] = to_json(ex.alpha0);
  out["ratio"] = ex.ratio;
  return out;
}

Json to_json(const ContractivityVerdict& verdict) {
  Json out;
  out["contractive"] = verdict.contractive;
  out["marginal"] = verdict.marginal;
  out["critical"] = verdict.critical;
  out["value"] = verdict.value;
  out["reason"] = verdict.reason;
  return out;
}

Json to_json(const VnReport& report) {
  Json out;
  out["max_norm"] = report.max_norm;
  out["witness_index"] = report.witness_index;
  out["sample_count"] = report.sample_count;
  return out;
}

Json to_json(const DilationWitness& witness) {
  Json out;
  out["h1"] = to_json(witness.vectors.h1);
  out["h2"] = to_json(witness.vectors.h2);
  out["compression"] = to_json(CMat(witness.compression));
  out["target"] = to_json(CMat(witness.target));
  out["invariance_defect"] = witness.invariance_defect;
  out["entrywise_defect"] = witness.entrywise_defect;
  out["modulus_defect"] = witness.modulus_defect;
  return out;
}

Json to_json(const LtBound& bound) {
  Json out;
  out["bound"] = bound.bound;
  out["witness_index"] = bound.witness_index;
  out["level"] = bound.level;
  out["sample_count"] = bound.sample_count;
  return out;
}

Json to_json(const HomeqlinReport& report) {
  Json out;
  out["max_rho_norm"] = report.max_rho_norm;
  out["max_lt_norm"] = report.max_lt_norm;
  out["max_discrepancy"] = report.max_discrepancy;
  out["sample_count"] = report.sample_count;
  out["agree"] = report.agree;
  return out;
}

Json to_json(const PickTestVerdict& verdict) {
  Json out;
  out["violation_found"] = verdict.violation_found;
  out["worst_lambda_min"] = verdict.worst_lambda_min;
  out["sample_count"] = verdict.sample_count;
  if (verdict.violation) {
    Json v;
    v["sample_index"] = verdict.violation->sample_index;
    Json values = Json::array();
    for (Complex c : verdict.violation->values) values.push_back(to_json(c));
    v["values"] = values;
    v["lambda_min"] = verdict.violation->lambda_min;
    v["eigenvector"] = to_json(verdict.violation->eigenvector);
    out["violation"] = v;
  }
  return out;
}

Json to_json(const SchurCertificate& cert) {
  Json out;
  out["index"] = to_json(cert.index);
  out["quotient"] = to_json(cert.quotient);
  out["min_eigenvalue"] = cert.min_eigenvalue;
  out["vectors"] = to_json(cert.vectors);
  out["reconstruction_defect"] = cert.reconstruction_defect;
  return out;
}

Json to_json(const EmbeddingCheck& check) {
  Json out;
  out["vectors"] = to_json(check.vectors);
  out["gram_defect"] = check.gram_defect;
  if (check.compression.size() > 0) {
    out["compression"] = to_json(check.compression);
    out["compression_defect"] = check.compression_defect;
    out["invariance_defect"] = check.invariance_defect;
  }
  return out;
}

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw JobError("at " + where + ": " + what);
}

}  // namespace

Complex complex_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    fail(where, "expected a complex number as [re, im]");
  return {j[0].get<Real>(), j[1].get<Real>()};
}

CVec cvec_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of complex numbers");
  CVec v(j.size());
  for (size_t i = 0; i < j.size(); ++i)
    v(i) = complex_from_json(j[i], where + "/" + std::to_string(i));
  return v;
}

CMat cmat_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) fail(where, "expected a non-empty row-major matrix");
  const size_t rows = j.size();
  const size_t cols = j[0].is_array() ? j[0].size() : 0;
  CMat m(rows, cols);
  for (size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols)
      fail(where + "/" + std::to_string(r), "ragged matrix rows");
    for (size_t c = 0; c < cols; ++c)
      m(r, c) = complex_from_json(j[r][c],
                                  where + "/" + std::to_string(r) + "/" + std::to_string(c));
  }
  return m;
}

PlanarDomain domain_from_json(const Json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("kind")) fail(where, "expected {\"kind\": ...}");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "disk") return PlanarDomain::disk();
  if (kind == "annulus") {
    if (!j.contains("inner_radius") || !j["inner_radius"].is_number())
      fail(where + "/inner_radius", "annulus requires a numeric inner_radius");
    return PlanarDomain::annulus(j["inner_radius"].get<Real>());
  }
  fail(where + "/kind", "unsupported domain kind '" + kind + "'");
}

KernelIndex index_from_json(const Json& j, const std::string& where) {
  KernelIndex index;
  if (j.is_object() && j.contains("exponents")) {
    for (const auto& e : j["exponents"]) index.exponents.push_back(e.get<Real>());
  } else if (j.is_array()) {
    for (const auto& e : j) index.exponents.push_back(e.get<Real>());
  } else {
    fail(where, "expected an index as {\"exponents\": [...]} or [...]");
  }
  return index;
}

}  // namespace planalg
