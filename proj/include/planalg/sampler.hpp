#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "planalg/kernels.hpp"
#include "planalg/operators.hpp"
#include "planalg/rational.hpp"
#include "planalg/rng.hpp"
#include "planalg/types.hpp"

namespace planalg {

/// A sampled holomorphic function in (certified) the unit ball of
/// H^inf(domain): a product of unit-ball factors, optionally post-composed
/// with a disk automorphism phi_u. Disk factors are Blaschke products and
/// are exactly inner; annulus factors are extremal interpolants assembled
/// from kernel data and rescaled against a fine boundary grid, so the family
/// is a lower-bound sampler only.
class ScalarSample {
 public:
  struct KernelRatio {
    std::shared_ptr<const TruncatedKernel> kernel;
    CVec num, den;  // section coefficients of numerator and denominator
    Real scale = 1;

    Complex eval(Complex z) const;
    Complex deriv(Complex z) const;
  };

  Complex eval(Complex z) const;
  Complex deriv(Complex z) const;

  bool is_rational() const { return kernel_factors_.empty(); }
  /// Collapses the rational factors (and the Mobius cap) to one quotient.
  RationalFunction to_rational() const;

  static ScalarSample from_rational(RationalFunction r);
  static ScalarSample from_kernel_ratio(KernelRatio k);
  void multiply(ScalarSample other);
  void compose_mobius(Complex u);

 private:
  std::vector<RationalFunction> rational_factors_;
  std::vector<KernelRatio> kernel_factors_;
  std::optional<Complex> mobius_u_;
};

/// Deterministic unit-ball sampler: the sample at (seed, index) does not
/// depend on thread scheduling. Annulus draws combine a precomputed pool of
/// extremal kernel-ratio interpolants; disk draws are Blaschke products with
/// an optional factor pinned at `pin`.
class ScalarSampler {
 public:
  ScalarSampler(const PlanarDomain& domain, std::optional<Complex> pin, int max_degree,
                int truncation, std::uint64_t seed);

  ScalarSample draw(std::uint64_t index, std::uint64_t substream = 0) const;

  const PlanarDomain& domain() const { return domain_; }
  std::uint64_t seed() const { return seed_; }

 private:
  ScalarSample draw_disk(RngStream& rng) const;
  ScalarSample draw_annulus(RngStream& rng) const;

  PlanarDomain domain_;
  std::optional<Complex> pin_;
  int max_degree_;
  int truncation_;
  std::uint64_t seed_;
  std::vector<ScalarSample::KernelRatio> pinned_pool_;
  std::vector<ScalarSample::KernelRatio> free_pool_;
};

/// Extremal two-point interpolant over the annulus at the refined maximizing
/// index: vanishes at z1, reaches (numerically) the extremal modulus at z2.
ScalarSample::KernelRatio extremal_kernel_ratio(const PlanarDomain& domain, Complex z1,
                                                Complex z2, int grid_size, int truncation,
                                                int boundary_points = 1024);

struct VnReport {
  Real max_norm = 0;
  std::uint64_t witness_index = 0;
  int sample_count = 0;
};

/// Max of ||r(T)|| over sampled unit-ball functions; a lower bound for the
/// homomorphism norm. The pinned factor follows the operator's first
/// eigenvalue.
VnReport vn_sample_check(const ModelOperatorA& op, const PlanarDomain& domain,
                         int sample_count, int max_degree, std::uint64_t seed,
                         int threads = 1, int truncation = defaults::kTruncation);
VnReport vn_sample_check(const ModelOperatorB& op, const PlanarDomain& domain,
                         int sample_count, int max_degree, std::uint64_t seed,
                         int threads = 1, int truncation = defaults::kTruncation);
VnReport vn_sample_check(const GeneralOperator& op, const PlanarDomain& domain,
                         int sample_count, int max_degree, std::uint64_t seed,
                         int threads = 1, int truncation = defaults::kTruncation);

/// Shared driver: max over samples of norm(values at the sample).
VnReport vn_scan(const ScalarSampler& sampler, int sample_count, int threads,
                 const std::function<Real(const ScalarSample&)>& norm_of);

/// Deterministic chunked parallel map: fills out[i] = f(i) for i in [0, n).
void parallel_map(std::int64_t n, int threads, const std::function<void(std::int64_t)>& f);

}  // namespace planalg
