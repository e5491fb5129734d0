#pragma once

// Gyroscope transport along the circular worldlines of a congruence and the
// precession per revolution.
//
// The precession angle is the rotation of the spin's spatial part measured
// against the comoving dyad (radial axis, tangential axis) of the fixed
// point. Angles are unwrapped: they accumulate continuously and are never
// folded into (-pi, pi].

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "rotframe/congruence.hpp"
#include "rotframe/tensor.hpp"

namespace rotframe {

/// Worldline of the fixed point of a congruence at radius rho, parametrized
/// by proper time, starting at t = 0, phi = phi0.
class Worldline {
 public:
  /// Throws LightCylinderError (GAL) or DomainError (rho <= 0).
  Worldline(const CongruenceSpec& spec, double rho, double phi0 = 0.0, double z = 0.0);

  [[nodiscard]] const CongruenceSpec& spec() const { return spec_; }
  [[nodiscard]] double rho() const { return rho_; }
  [[nodiscard]] double c() const { return spec_.c(); }
  /// d phi / dt of the worldline.
  [[nodiscard]] double angular_rate() const { return angular_rate_; }
  /// dt / dtau (the time component of u).
  [[nodiscard]] double dt_dtau() const { return u_[kT]; }

  [[nodiscard]] Event event(double tau) const;
  /// Contravariant four-velocity; constant in cylindrical components.
  [[nodiscard]] FourVector u(double tau) const;
  /// Contravariant four-acceleration, purely radial: a^rho = -rho (u^phi)^2.
  [[nodiscard]] FourVector a(double tau) const;

  /// Unit radial axis e_rho (spacelike, orthogonal to u).
  [[nodiscard]] FourVector radial_axis(double tau) const;
  /// Unit axis orthogonal to u and e_rho in the (t, phi) plane, oriented
  /// along increasing phi.
  [[nodiscard]] FourVector tangential_axis(double tau) const;

 private:
  CongruenceSpec spec_;
  double rho_;
  double phi0_;
  double z_;
  double angular_rate_;
  Components u_{};
};

struct SpinState {
  double tau = 0.0;
  FourVector S;  // contravariant
  Event event;
};

/// dS/dtau = M(tau) S with M^a_g = -Gamma^a_{bg} u^b + (a^a u_g - u^a a_g) / c^2,
/// the Fermi-Walker law in signature (+,-,-,-) written in cylindrical components.
Matrix4 fw_generator(const Worldline& wl, double tau);

/// One classical Runge-Kutta step of size h.
SpinState fw_step(const Worldline& wl, const SpinState& state, double h);

/// Spin angle against the comoving dyad, in (-pi, pi].
double dyad_angle(const Worldline& wl, const SpinState& state);

struct FwResult {
  std::vector<SpinState> trajectory;  // every `record_stride`-th state, plus the last
  SpinState final_state;
  double rotation_angle = 0.0;        // unwrapped dyad angle change
  double max_constraint = 0.0;        // max |S.u| / (|S| c)
  double norm_drift = 0.0;            // |S.S - S0.S0| / |S0.S0| at the end
};

/// Integrates over tau_span with `steps` RK4 steps (steps >= 16).
/// Throws ConstraintDriftError if |S.u| / (|S| c) exceeds 1e-6 mid-run and
/// DomainError if S0 is not orthogonal to u within 1e-9.
FwResult fw_transport(const Worldline& wl, const SpinState& s0, double tau_span,
                      std::size_t steps, std::size_t record_stride = 0);

/// Starting state with the spin along the radial axis.
SpinState radial_spin(const Worldline& wl);

struct PrecessionReport {
  CongruenceKind kind = CongruenceKind::kGal;
  double rho = 0.0;
  double omega_param = 0.0;
  double Omega = 0.0;
  double delta_tau_rev = 0.0;     // proper time of one revolution
  double delta_phi_prime = 0.0;   // -Omega * delta_tau_rev
  double thomas_net_angle = 0.0;  // delta_phi_prime + 2 pi
  std::optional<double> fw_measured_angle;
};

/// Closed-form precession per revolution. With fw_steps set, also runs the
/// Fermi-Walker integrator (GAL and TT only) and stores the measured dyad angle.
PrecessionReport precession_per_revolution(const CongruenceSpec& spec, double rho,
                                           std::optional<std::size_t> fw_steps = {});

/// Unwrapped dyad angle measured by the integrator over one revolution.
double fw_angle_per_revolution(const CongruenceSpec& spec, double rho, std::size_t steps);

enum class EntryStatus { kOk, kLightCylinder };

std::string_view to_string(EntryStatus status);

struct ComparisonEntry {
  CongruenceKind kind;
  EntryStatus status = EntryStatus::kOk;
  std::optional<PrecessionReport> report;  // empty unless status == kOk
};

/// Reports for GAL, TT and MTT at the same parameters. A GAL point at or
/// beyond the light cylinder is returned as a marked entry without a report.
std::vector<ComparisonEntry> compare_congruences(double rho, double omega, double c = 1.0);

}  // namespace rotframe
