#include "rotframe/kinematics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rotframe/errors.hpp"

namespace rotframe {

VelocityField velocity_field(const CongruenceSpec& spec) {
  VelocityField field;
  field.c = spec.c();
  field.u = [spec](const Event& e) { return four_velocity(e, spec); };
  field.check_domain = [spec](const Event& e) { require_timelike(e.rho, spec); };
  return field;
}

double DerivativeConfig::resolved_step(double rho) const {
  if (step < 0.0 || !std::isfinite(step)) {
    throw DomainError("derivative step must be > 0, got " + std::to_string(step));
  }
  return step > 0.0 ? step : 1e-5 * std::max(rho, 1.0);
}

namespace {

Components lowered_u(const VelocityField& field, const Event& e) {
  return lower(field.u(e), metric_at(e, field.c)).components;
}

Components central_difference(const VelocityField& field, const Event& e,
                              std::size_t coord, double h) {
  Event plus = e;
  Event minus = e;
  plus[coord] += h;
  minus[coord] -= h;
  const Components up = lowered_u(field, plus);
  const Components down = lowered_u(field, minus);
  Components d{};
  for (std::size_t i = 0; i < kDim; ++i) d[i] = (up[i] - down[i]) / (2.0 * h);
  return d;
}

constexpr const char* kCoordNames[kDim] = {"t", "rho", "phi", "z"};

void check_stencil(const VelocityField& field, const Event& e, double h) {
  for (std::size_t coord = 0; coord < kDim; ++coord) {
    for (double offset : {-h, h}) {
      Event p = e;
      p[coord] += offset;
      try {
        if (!(p.rho > 0.0)) throw DomainError("rho <= 0");
        if (field.check_domain) field.check_domain(p);
      } catch (const DomainError& err) {
        throw DomainError("finite-difference stencil leaves the valid region at " +
                          std::string(kCoordNames[coord]) + " offset " +
                          std::to_string(offset) + " (" + err.what() + ")");
      }
    }
  }
}

// Quantities shared by every kinematic operation at one event.
struct Jet {
  MetricAt metric;
  FourVector u;          // contravariant
  FourVector u_low;      // covariant
  Matrix4 partials{};    // [gamma][delta] = partial_gamma u_delta
  Matrix4 nabla{};       // [gamma][delta] = nabla_gamma u_delta
  FourVector acc_low;    // covariant acceleration
  FourVector acc;        // contravariant acceleration
};

Jet compute_jet(const VelocityField& field, const Event& e, const DerivativeConfig& cfg) {
  if (field.check_domain) field.check_domain(e);
  const double h = cfg.resolved_step(e.rho);
  check_stencil(field, e, h);

  Jet jet;
  jet.metric = metric_at(e, field.c);
  jet.u = field.u(e);
  jet.u_low = lower(jet.u, jet.metric);

  for (std::size_t gamma = 0; gamma < kDim; ++gamma) {
    Components d = central_difference(field, e, gamma, h);
    if (cfg.method == DerivativeMethod::kExtrapolated) {
      const Components half = central_difference(field, e, gamma, 0.5 * h);
      for (std::size_t i = 0; i < kDim; ++i) d[i] = (4.0 * half[i] - d[i]) / 3.0;
    }
    jet.partials[gamma] = d;
  }

  const Connection conn = christoffel_at(e);
  for (std::size_t gamma = 0; gamma < kDim; ++gamma) {
    for (std::size_t delta = 0; delta < kDim; ++delta) {
      double sum = jet.partials[gamma][delta];
      for (std::size_t lam = 0; lam < kDim; ++lam) {
        sum -= conn[lam][gamma][delta] * jet.u_low[lam];
      }
      jet.nabla[gamma][delta] = sum;
    }
  }

  jet.acc_low = FourVector{{}, Variance::kCovariant};
  for (std::size_t delta = 0; delta < kDim; ++delta) {
    double sum = 0.0;
    for (std::size_t gamma = 0; gamma < kDim; ++gamma) {
      sum += jet.u[gamma] * jet.nabla[gamma][delta];
    }
    jet.acc_low[delta] = sum;
  }
  jet.acc = raise(jet.acc_low, jet.metric);
  return jet;
}

AntisymmetricTensor vorticity_tensor_of(const Jet& jet, double c) {
  // With the unit tangent n = u / c: n_{a;b} = nabla_b u_a / c and
  // ndot_a = acc_a / c^2.
  const double c2 = c * c;
  Matrix4 x{};
  for (std::size_t a = 0; a < kDim; ++a) {
    for (std::size_t b = 0; b < kDim; ++b) {
      x[a][b] = jet.nabla[b][a] / c - (jet.acc_low[a] / c2) * (jet.u_low[b] / c);
    }
  }
  const Matrix4 w = AntisymmetricTensor::antisymmetric_part(x).to_matrix();

  // Project onto the rest space of n. With r_a = w_ab n^b the projector acts
  // as w_ab - r_a n_b + n_a r_b; this is exact for the analytic tensor and
  // removes the finite-difference residue along n.
  Components r{};
  for (std::size_t a = 0; a < kDim; ++a) {
    for (std::size_t b = 0; b < kDim; ++b) r[a] += w[a][b] * (jet.u[b] / c);
  }
  Matrix4 out{};
  for (std::size_t a = 0; a < kDim; ++a) {
    for (std::size_t b = 0; b < kDim; ++b) {
      out[a][b] = w[a][b] - r[a] * (jet.u_low[b] / c) + (jet.u_low[a] / c) * r[b];
    }
  }
  return AntisymmetricTensor::antisymmetric_part(out);
}

FourVector vorticity_direct_of(const Jet& jet, double c) {
  const double prefactor = c / (2.0 * jet.metric.sqrt_neg_det);
  FourVector w{{}, Variance::kContravariant};
  for (std::size_t a = 0; a < kDim; ++a) {
    double sum = 0.0;
    for (std::size_t b = 0; b < kDim; ++b) {
      for (std::size_t g = 0; g < kDim; ++g) {
        for (std::size_t d = 0; d < kDim; ++d) {
          const int eps = levi_civita_symbol(a, b, g, d);
          if (eps == 0) continue;
          sum += eps * (jet.u_low[b] / c) * (jet.partials[g][d] / c);
        }
      }
    }
    w[a] = prefactor * sum;
  }
  return w;
}

FourVector vorticity_from_tensor_of(const Jet& jet, const AntisymmetricTensor& omega,
                                    double c) {
  const double prefactor = c / (2.0 * jet.metric.sqrt_neg_det);
  FourVector w{{}, Variance::kContravariant};
  for (std::size_t a = 0; a < kDim; ++a) {
    double sum = 0.0;
    for (std::size_t b = 0; b < kDim; ++b) {
      for (std::size_t g = 0; g < kDim; ++g) {
        for (std::size_t d = 0; d < kDim; ++d) {
          const int eps = levi_civita_symbol(a, b, g, d);
          if (eps == 0) continue;
          sum += eps * (jet.u_low[b] / c) * omega(d, g);
        }
      }
    }
    w[a] = prefactor * sum;
  }
  return w;
}

double magnitude_of(const FourVector& w, const MetricAt& m) {
  return std::sqrt(std::max(0.0, -dot(w, w, m)));
}

}  // namespace

Matrix4 partial_derivatives_u(const VelocityField& field, const Event& e,
                              const DerivativeConfig& cfg) {
  return compute_jet(field, e, cfg).partials;
}

FourVector acceleration(const VelocityField& field, const Event& e,
                        const DerivativeConfig& cfg) {
  return compute_jet(field, e, cfg).acc;
}

AntisymmetricTensor vorticity_tensor(const VelocityField& field, const Event& e,
                                     const DerivativeConfig& cfg) {
  return vorticity_tensor_of(compute_jet(field, e, cfg), field.c);
}

FourVector vorticity_vector_direct(const VelocityField& field, const Event& e,
                                   const DerivativeConfig& cfg) {
  return vorticity_direct_of(compute_jet(field, e, cfg), field.c);
}

FourVector vorticity_vector_from_tensor(const VelocityField& field, const Event& e,
                                        const DerivativeConfig& cfg) {
  const Jet jet = compute_jet(field, e, cfg);
  return vorticity_from_tensor_of(jet, vorticity_tensor_of(jet, field.c), field.c);
}

double vorticity_scalar(const VelocityField& field, const Event& e,
                        const DerivativeConfig& cfg) {
  const Jet jet = compute_jet(field, e, cfg);
  return magnitude_of(vorticity_direct_of(jet, field.c), jet.metric);
}

KinematicSample kinematic_sample(const VelocityField& field, const Event& e,
                                 const DerivativeConfig& cfg) {
  const Jet jet = compute_jet(field, e, cfg);
  KinematicSample s;
  s.event = e;
  s.u = jet.u;
  s.u_dot = jet.acc;
  s.omega_tensor = vorticity_tensor_of(jet, field.c);
  s.omega_vector = vorticity_direct_of(jet, field.c);
  s.Omega = magnitude_of(s.omega_vector, jet.metric);
  return s;
}

Matrix4 partial_derivatives_u(const CongruenceSpec& spec, const Event& e,
                              const DerivativeConfig& cfg) {
  return partial_derivatives_u(velocity_field(spec), e, cfg);
}

FourVector acceleration(const CongruenceSpec& spec, const Event& e,
                        const DerivativeConfig& cfg) {
  return acceleration(velocity_field(spec), e, cfg);
}

AntisymmetricTensor vorticity_tensor(const CongruenceSpec& spec, const Event& e,
                                     const DerivativeConfig& cfg) {
  return vorticity_tensor(velocity_field(spec), e, cfg);
}

FourVector vorticity_vector_direct(const CongruenceSpec& spec, const Event& e,
                                   const DerivativeConfig& cfg) {
  return vorticity_vector_direct(velocity_field(spec), e, cfg);
}

FourVector vorticity_vector_from_tensor(const CongruenceSpec& spec, const Event& e,
                                        const DerivativeConfig& cfg) {
  return vorticity_vector_from_tensor(velocity_field(spec), e, cfg);
}

double vorticity_scalar(const CongruenceSpec& spec, const Event& e,
                        const DerivativeConfig& cfg) {
  return vorticity_scalar(velocity_field(spec), e, cfg);
}

KinematicSample kinematic_sample(const CongruenceSpec& spec, const Event& e,
                                 const DerivativeConfig& cfg) {
  return kinematic_sample(velocity_field(spec), e, cfg);
}

double omega_closed_form(double rho, const CongruenceSpec& spec) {
  require_timelike(rho, spec);
  if (spec.kind() == CongruenceKind::kGal) {
    const double beta = rho * spec.omega() / spec.c();
    return spec.omega() / (1.0 - beta * beta);
  }
  const double lambda = rapidity(rho, spec);
  return spec.c() / (2.0 * rho) * (std::sinh(lambda) * std::cosh(lambda) + lambda);
}

}  // namespace rotframe
