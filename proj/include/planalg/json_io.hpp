#pragma once

#include <json.hpp>

#include "planalg/charfn.hpp"
#include "planalg/domain.hpp"
#include "planalg/factorization.hpp"
#include "planalg/hardy_model.hpp"
#include "planalg/opspace.hpp"
#include "planalg/pick.hpp"
#include "planalg/types.hpp"

namespace planalg {

using Json = nlohmann::json;

// Complex numbers as [re, im]; matrices as row-major nested arrays.
Json to_json(Complex z);
Json to_json(const CVec& v);
Json to_json(const CMat& m);
Json to_json(const PlanarDomain& domain);
Json to_json(const KernelIndex& index);
Json to_json(const FeasibilityVerdict& verdict);
Json to_json(const ExtremalS& ex);
Json to_json(const ContractivityVerdict& verdict);
Json to_json(const VnReport& report);
Json to_json(const DilationWitness& witness);
Json to_json(const LtBound& bound);
Json to_json(const HomeqlinReport& report);
Json to_json(const PickTestVerdict& verdict);
Json to_json(const SchurCertificate& cert);
Json to_json(const EmbeddingCheck& check);

Complex complex_from_json(const Json& j, const std::string& where);
CVec cvec_from_json(const Json& j, const std::string& where);
CMat cmat_from_json(const Json& j, const std::string& where);
PlanarDomain domain_from_json(const Json& j, const std::string& where);
KernelIndex index_from_json(const Json& j, const std::string& where);

/// Schema violation carrying a pointer to the offending field.
struct JobError : Error {
  using Error::Error;
};

}  // namespace planalg
