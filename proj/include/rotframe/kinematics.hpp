#pragma once

// Kinematic invariants of a timelike congruence: acceleration, vorticity
// tensor, vorticity vector and the vorticity scalar Omega.
//
// The congruence enters only through its four-velocity field u(x), so any
// user-supplied field can be analysed. Spatial derivatives are taken by
// finite differences.
//
// Normalization: fields are supplied with u.u = c^2 (u = dx/dtau). The
// vorticity quantities are built from the unit tangent u/c, for which
//
//   omega_{ab} = u_[a;b] - udot_[a u_b],   X_[ab] = (X_ab - X_ba) / 2,
//   omega^a    = c / (2 sqrt(-g)) eps^{abcd} u_b u_{d,c},
//
// with x^0 = t and sqrt(-g) = c rho yield Omega in inverse lab-time units.
// The direction of omega^a follows eps(t, rho, phi, z) = +1; for
// counter-clockwise rotation (omega > 0) it points along +z.

#include <functional>

#include "rotframe/congruence.hpp"
#include "rotframe/tensor.hpp"

namespace rotframe {

/// A four-velocity field together with its domain of validity.
struct VelocityField {
  /// Contravariant u^alpha at an event, normalized to u.u = c^2.
  std::function<FourVector(const Event&)> u;
  double c = 1.0;
  /// Throws (a DomainError subclass) when the event is outside the field's domain.
  std::function<void(const Event&)> check_domain;
};

VelocityField velocity_field(const CongruenceSpec& spec);

enum class DerivativeMethod {
  kCentral,       // (f(x+h) - f(x-h)) / 2h
  kExtrapolated,  // one Richardson level on the central difference
};

struct DerivativeConfig {
  DerivativeMethod method = DerivativeMethod::kExtrapolated;
  /// Stencil half-width. 0 selects 1e-5 * max(rho, 1).
  double step = 0.0;

  [[nodiscard]] double resolved_step(double rho) const;
};

/// Everything evaluated at one event.
struct KinematicSample {
  Event event;
  FourVector u;                      // contravariant, u.u = c^2
  FourVector u_dot;                  // contravariant, u^b nabla_b u^a
  AntisymmetricTensor omega_tensor;  // covariant, built from u / c
  FourVector omega_vector;           // contravariant
  double Omega = 0.0;                // sqrt(-omega_a omega^a)
};

/// d[gamma][delta] = partial_gamma u_delta of the lowered field.
/// Throws DomainError if the stencil leaves the field's domain.
Matrix4 partial_derivatives_u(const VelocityField& field, const Event& e,
                              const DerivativeConfig& cfg = {});
Matrix4 partial_derivatives_u(const CongruenceSpec& spec, const Event& e,
                              const DerivativeConfig& cfg = {});

FourVector acceleration(const VelocityField& field, const Event& e,
                        const DerivativeConfig& cfg = {});
FourVector acceleration(const CongruenceSpec& spec, const Event& e,
                        const DerivativeConfig& cfg = {});

AntisymmetricTensor vorticity_tensor(const VelocityField& field, const Event& e,
                                     const DerivativeConfig& cfg = {});
AntisymmetricTensor vorticity_tensor(const CongruenceSpec& spec, const Event& e,
                                     const DerivativeConfig& cfg = {});

/// omega^a from partial derivatives and the permutation symbol only.
FourVector vorticity_vector_direct(const VelocityField& field, const Event& e,
                                   const DerivativeConfig& cfg = {});
FourVector vorticity_vector_direct(const CongruenceSpec& spec, const Event& e,
                                   const DerivativeConfig& cfg = {});

/// omega^a by contracting the vorticity tensor. Under the index convention
/// above, eps^{abcd} u_b omega_{cd} equals minus the direct contraction, so
/// this route contracts eps^{abcd} u_b omega_{dc}; both routes then agree
/// component by component.
FourVector vorticity_vector_from_tensor(const VelocityField& field, const Event& e,
                                        const DerivativeConfig& cfg = {});
FourVector vorticity_vector_from_tensor(const CongruenceSpec& spec, const Event& e,
                                        const DerivativeConfig& cfg = {});

double vorticity_scalar(const VelocityField& field, const Event& e,
                        const DerivativeConfig& cfg = {});
double vorticity_scalar(const CongruenceSpec& spec, const Event& e,
                        const DerivativeConfig& cfg = {});

KinematicSample kinematic_sample(const VelocityField& field, const Event& e,
                                 const DerivativeConfig& cfg = {});
KinematicSample kinematic_sample(const CongruenceSpec& spec, const Event& e,
                                 const DerivativeConfig& cfg = {});

/// Closed-form Omega:
///   GAL:    omega / (1 - omega^2 rho^2 / c^2)
///   TT/MTT: (c / 2 rho) (sinh lambda cosh lambda + lambda)
/// Throws LightCylinderError for GAL at rho omega >= c.
double omega_closed_form(double rho, const CongruenceSpec& spec);

}  // namespace rotframe
