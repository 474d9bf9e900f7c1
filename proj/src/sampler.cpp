#include "planalg/sampler.hpp"

#include <atomic>
#include <mutex>
#include <cmath>
#include <functional>
#include <thread>

#include "planalg/linalg.hpp"
#include "planalg/pick.hpp"

namespace planalg {

Complex ScalarSample::KernelRatio::eval(Complex z) const {
  Complex n{0, 0}, d{0, 0};
  for (int k = kernel->min_exponent(); k <= kernel->max_exponent(); ++k) {
    const Complex s = kernel->section(k, z);
    n += num(k - kernel->min_exponent()) * s;
    d += den(k - kernel->min_exponent()) * s;
  }
  return scale * n / d;
}

Complex ScalarSample::KernelRatio::deriv(Complex z) const {
  Complex n{0, 0}, d{0, 0}, dn{0, 0}, dd{0, 0};
  for (int k = kernel->min_exponent(); k <= kernel->max_exponent(); ++k) {
    const Complex s = kernel->section(k, z);
    const Complex sp = kernel->section_deriv(k, z);
    n += num(k - kernel->min_exponent()) * s;
    d += den(k - kernel->min_exponent()) * s;
    dn += num(k - kernel->min_exponent()) * sp;
    dd += den(k - kernel->min_exponent()) * sp;
  }
  return scale * (dn * d - n * dd) / (d * d);
}

Complex ScalarSample::eval(Complex z) const {
  Complex v{1, 0};
  for (const auto& r : rational_factors_) v *= r.eval(z);
  for (const auto& k : kernel_factors_) v *= k.eval(z);
  if (mobius_u_) v = (v - *mobius_u_) / (1.0 - std::conj(*mobius_u_) * v);
  return v;
}

Complex ScalarSample::deriv(Complex z) const {
  // Product rule over the factors, then the chain rule through phi_u.
  Complex v{1, 0}, dv{0, 0};
  auto push = [&](Complex f, Complex df) {
    dv = dv * f + v * df;
    v *= f;
  };
  for (const auto& r : rational_factors_) push(r.eval(z), r.deriv(z));
  for (const auto& k : kernel_factors_) push(k.eval(z), k.deriv(z));
  if (mobius_u_) {
    const Complex den = 1.0 - std::conj(*mobius_u_) * v;
    dv *= (1.0 - std::norm(*mobius_u_)) / (den * den);
  }
  return dv;
}

RationalFunction ScalarSample::to_rational() const {
  if (!is_rational()) throw ParameterError("sample is not a rational function");
  RationalFunction out = RationalFunction::constant(1);
  for (const auto& r : rational_factors_) out = out * r;
  if (mobius_u_) out = out.mobius_compose(*mobius_u_);
  return out;
}

ScalarSample ScalarSample::from_rational(RationalFunction r) {
  ScalarSample s;
  s.rational_factors_.push_back(std::move(r));
  return s;
}

ScalarSample ScalarSample::from_kernel_ratio(KernelRatio k) {
  ScalarSample s;
  s.kernel_factors_.push_back(std::move(k));
  return s;
}

void ScalarSample::multiply(ScalarSample other) {
  if (mobius_u_ || other.mobius_u_)
    throw ParameterError("multiply before applying the Mobius cap");
  for (auto& r : other.rational_factors_) rational_factors_.push_back(std::move(r));
  for (auto& k : other.kernel_factors_) kernel_factors_.push_back(std::move(k));
}

void ScalarSample::compose_mobius(Complex u) {
  if (std::abs(u) >= 1.0) throw ParameterError("Mobius parameter must be inside the disk");
  if (mobius_u_) throw ParameterError("Mobius cap already applied");
  mobius_u_ = u;
}

ScalarSample::KernelRatio extremal_kernel_ratio(const PlanarDomain& domain, Complex z1,
                                                Complex z2, int grid_size, int truncation,
                                                int boundary_points) {
  if (domain.is_disk()) throw DomainError("kernel-ratio samples are an annulus device");
  const ExtremalS ex = extremal_s(domain, z1, z2, grid_size, truncation);
  auto kernel = std::make_shared<TruncatedKernel>(
      TruncatedKernel::make(domain, ex.alpha0, truncation));

  const Complex k12 = kernel->eval(z1, z2);
  const Real k11 = kernel->eval(z1, z1).real();
  const Real m = std::sqrt(ex.m_sq);

  // f = (K11 K(.,z2) - K12 K(.,z1)) / (m K11 K(.,z2)): vanishes at z1 and
  // attains modulus m at z2 when alpha0 is exact.
  const int nb = kernel->basis_size();
  CVec num(nb), den(nb);
  for (int n = kernel->min_exponent(); n <= kernel->max_exponent(); ++n) {
    const int i = n - kernel->min_exponent();
    const Real cn = kernel->basis_norm_sq(n);
    const Complex coef_z1 = std::conj(kernel->section(n, z1)) / cn;
    const Complex coef_z2 = std::conj(kernel->section(n, z2)) / cn;
    num(i) = k11 * coef_z2 - k12 * coef_z1;
    den(i) = m * k11 * coef_z2;
  }

  ScalarSample::KernelRatio ratio{std::move(kernel), std::move(num), std::move(den), 1.0};

  // Certify the unit ball on a fine boundary grid, with a small safety factor
  // against the grid underestimating the true sup.
  Real sup = 0;
  for (Real radius : {1.0, domain.inner_radius()}) {
    for (int j = 0; j < boundary_points; ++j) {
      const Real t = 2.0 * kPi * j / boundary_points;
      sup = std::max(sup, std::abs(ratio.eval(radius * Complex(std::cos(t), std::sin(t)))));
    }
  }
  ratio.scale = (1.0 - 1e-6) / std::max(1.0, sup);
  return ratio;
}

ScalarSampler::ScalarSampler(const PlanarDomain& domain, std::optional<Complex> pin,
                             int max_degree, int truncation, std::uint64_t seed)
    : domain_(domain), pin_(pin), max_degree_(std::max(1, max_degree)),
      truncation_(truncation), seed_(seed) {
  if (pin_) domain_.require_interior(*pin_, "pin point");
  if (domain_.is_disk()) return;

  // Pool of extremal interpolants; draws combine pool members with phases
  // and Mobius caps. Pool streams live at index 0, draw streams at index+1.
  const Real r = domain_.inner_radius();
  const Real margin = 0.08 * (1.0 - r);
  const int pool_grid = 64;
  RngStream rng(seed_, 0, 7);
  const int pinned_count = pin_ ? 12 : 0;
  const int free_count = pin_ ? 6 : 12;
  for (int i = 0; i < pinned_count; ++i) {
    Complex zeta = rng.annulus_point(r, 1.0, margin);
    while (std::abs(zeta - *pin_) < 0.05 * (1.0 - r)) zeta = rng.annulus_point(r, 1.0, margin);
    pinned_pool_.push_back(
        extremal_kernel_ratio(domain_, *pin_, zeta, pool_grid, truncation_));
  }
  for (int i = 0; i < free_count; ++i) {
    const Complex za = rng.annulus_point(r, 1.0, margin);
    Complex zb = rng.annulus_point(r, 1.0, margin);
    while (std::abs(za - zb) < 0.05 * (1.0 - r)) zb = rng.annulus_point(r, 1.0, margin);
    free_pool_.push_back(extremal_kernel_ratio(domain_, za, zb, pool_grid, truncation_));
  }
}

ScalarSample ScalarSampler::draw(std::uint64_t index, std::uint64_t substream) const {
  RngStream rng(seed_, index + 1, substream);
  return domain_.is_disk() ? draw_disk(rng) : draw_annulus(rng);
}

ScalarSample ScalarSampler::draw_disk(RngStream& rng) const {
  const int degree = 1 + static_cast<int>(rng.below(max_degree_));
  std::vector<Complex> zeros;
  if (pin_) zeros.push_back(*pin_);
  while (static_cast<int>(zeros.size()) < degree) zeros.push_back(rng.disk_point(0.92));
  const Complex phase = rng.unit_phase();
  ScalarSample s = ScalarSample::from_rational(RationalFunction::blaschke(zeros, phase));
  if (rng.below(3) == 2) s.compose_mobius(rng.disk_point(0.7));
  return s;
}

ScalarSample ScalarSampler::draw_annulus(RngStream& rng) const {
  const auto& pool = pinned_pool_.empty() ? free_pool_ : pinned_pool_;
  ScalarSample s = ScalarSample::from_kernel_ratio(pool[rng.below(pool.size())]);
  const int variant = static_cast<int>(rng.below(4));
  if (variant == 1 && !free_pool_.empty()) {
    // Extra factor keeps the product in the ball and the pin intact.
    s.multiply(ScalarSample::from_kernel_ratio(free_pool_[rng.below(free_pool_.size())]));
  }
  s.multiply(ScalarSample::from_rational(RationalFunction::constant(rng.unit_phase())));
  if (variant == 2) s.compose_mobius(rng.disk_point(0.7));
  return s;
}

void parallel_map(std::int64_t n, int threads, const std::function<void(std::int64_t)>& f) {
  threads = std::max(1, threads);
  if (threads == 1 || n < 2 * threads) {
    for (std::int64_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<std::int64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      constexpr std::int64_t chunk = 16;
      try {
        while (true) {
          const std::int64_t begin = next.fetch_add(chunk);
          if (begin >= n) break;
          const std::int64_t end = std::min(n, begin + chunk);
          for (std::int64_t i = begin; i < end; ++i) f(i);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

VnReport vn_scan(const ScalarSampler& sampler, int sample_count, int threads,
                 const std::function<Real(const ScalarSample&)>& norm_of) {
  std::vector<Real> norms(sample_count);
  parallel_map(sample_count, threads,
               [&](std::int64_t i) { norms[i] = norm_of(sampler.draw(i)); });
  VnReport report;
  report.sample_count = sample_count;
  for (int i = 0; i < sample_count; ++i) {
    if (norms[i] > report.max_norm) {
      report.max_norm = norms[i];
      report.witness_index = i;
    }
  }
  return report;
}

VnReport vn_sample_check(const ModelOperatorA& op, const PlanarDomain& domain,
                         int sample_count, int max_degree, std::uint64_t seed, int threads,
                         int truncation) {
  const ScalarSampler sampler(domain, op.z1, max_degree, truncation, seed);
  return vn_scan(sampler, sample_count, threads, [&](const ScalarSample& s) {
    return op_norm(apply_values_A(op, s.eval(op.z1), s.eval(op.z2)));
  });
}

VnReport vn_sample_check(const ModelOperatorB& op, const PlanarDomain& domain,
                         int sample_count, int max_degree, std::uint64_t seed, int threads,
                         int truncation) {
  const ScalarSampler sampler(domain, op.z, max_degree, truncation, seed);
  return vn_scan(sampler, sample_count, threads, [&](const ScalarSample& s) {
    return op_norm(apply_values_B(op, s.eval(op.z), s.deriv(op.z)));
  });
}

VnReport vn_sample_check(const GeneralOperator& op, const PlanarDomain& domain,
                         int sample_count, int max_degree, std::uint64_t seed, int threads,
                         int truncation) {
  const ScalarSampler sampler(domain, op.eigenvalues().front(), max_degree, truncation, seed);
  const auto idem = lagrange_idempotents(op);
  return vn_scan(sampler, sample_count, threads, [&](const ScalarSample& s) {
    CMat m = CMat::Zero(op.size(), op.size());
    for (int i = 0; i < op.size(); ++i) m += s.eval(op.eigenvalues()[i]) * idem[i];
    return op_norm(m);
  });
}

}  // namespace planalg
