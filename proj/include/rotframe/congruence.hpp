#pragma once

// Rotating-observer congruences in flat spacetime.
//
// GAL  - worldlines of points at rest under t' = t, phi' = phi - omega t.
// TT   - worldlines of points at rest under the Trocheris-Takeno map, a boost
//        with rapidity lambda = rho omega / c in the (ct, rho phi) plane.
// MTT  - the modified TT congruence. Its explicit coordinate map is not
//        implemented; it is identified with TT through the two properties
//        that are known to hold for it: the same vorticity scalar and the
//        same proper time per lab interval. Every kinematic quantity for MTT
//        is therefore computed by the TT code path. Whether MTT fixed points
//        coincide with TT fixed points is an assumption, not a derived fact.

#include <optional>
#include <string_view>

#include "rotframe/tensor.hpp"

namespace rotframe {

enum class CongruenceKind { kGal, kTt, kMtt };

std::string_view to_string(CongruenceKind kind);
std::optional<CongruenceKind> parse_congruence_kind(std::string_view name);

/// Immutable (kind, omega, c). omega = 0 is accepted and gives the static
/// congruence; negative omega and non-positive c throw DomainError.
class CongruenceSpec {
 public:
  CongruenceSpec(CongruenceKind kind, double omega, double c = 1.0);

  [[nodiscard]] CongruenceKind kind() const { return kind_; }
  [[nodiscard]] double omega() const { return omega_; }
  [[nodiscard]] double c() const { return c_; }

  /// TT and MTT share fixed-point worldlines.
  [[nodiscard]] bool is_tt_family() const { return kind_ != CongruenceKind::kGal; }

  [[nodiscard]] CongruenceSpec with_kind(CongruenceKind kind) const {
    return {kind, omega_, c_};
  }

 private:
  CongruenceKind kind_;
  double omega_;
  double c_;
};

/// lambda = rho omega / c.
double rapidity(double rho, const CongruenceSpec& spec);

/// Throws LightCylinderError for GAL when rho omega >= c, DomainError for rho <= 0.
void require_timelike(double rho, const CongruenceSpec& spec);

// Coordinate maps from the inertial frame S to the rotating frame S'.
// They are pure coordinate maps and ignore spec.kind().

Event gal_map(const Event& e, const CongruenceSpec& spec);
Event gal_inverse(const Event& e, const CongruenceSpec& spec);

/// Throws DomainError for rho <= 0.
Event tt_map(const Event& e, const CongruenceSpec& spec);
Event tt_inverse(const Event& e, const CongruenceSpec& spec);

/// Contravariant tangent u^alpha = dx^alpha / dtau of the fixed point of S'
/// through e, normalized to u.u = c^2.
///   GAL:    gamma (1, 0, omega, 0)
///   TT/MTT: (cosh lambda, 0, (c / rho) sinh lambda, 0)
FourVector four_velocity(const Event& e, const CongruenceSpec& spec);

/// Lab speed of a fixed point: omega rho (GAL) or c tanh lambda (TT/MTT).
double fixed_point_speed(double rho, const CongruenceSpec& spec);

/// d phi / dt of the fixed point at radius rho.
double fixed_point_angular_rate(double rho, const CongruenceSpec& spec);

/// d tau / dt of the fixed point: 1 / gamma (GAL), 1 / cosh lambda (TT/MTT).
double proper_time_rate(double rho, const CongruenceSpec& spec);

/// Lab time for one full turn in the lab angle phi.
/// Throws DegenerateError when omega = 0.
double revolution_period(double rho, const CongruenceSpec& spec);

}  // namespace rotframe
