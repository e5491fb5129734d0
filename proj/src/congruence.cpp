#include "rotframe/congruence.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "rotframe/errors.hpp"

namespace rotframe {

std::string_view to_string(CongruenceKind kind) {
  switch (kind) {
    case CongruenceKind::kGal: return "gal";
    case CongruenceKind::kTt: return "tt";
    case CongruenceKind::kMtt: return "mtt";
  }
  return "?";
}

std::optional<CongruenceKind> parse_congruence_kind(std::string_view name) {
  if (name == "gal" || name == "GAL") return CongruenceKind::kGal;
  if (name == "tt" || name == "TT") return CongruenceKind::kTt;
  if (name == "mtt" || name == "MTT") return CongruenceKind::kMtt;
  return std::nullopt;
}

CongruenceSpec::CongruenceSpec(CongruenceKind kind, double omega, double c)
    : kind_(kind), omega_(omega), c_(c) {
  if (!(omega >= 0.0) || !std::isfinite(omega)) {
    throw DomainError("omega must be finite and >= 0, got " + std::to_string(omega));
  }
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw DomainError("c must be finite and > 0, got " + std::to_string(c));
  }
}

double rapidity(double rho, const CongruenceSpec& spec) {
  return rho * spec.omega() / spec.c();
}

void require_timelike(double rho, const CongruenceSpec& spec) {
  if (!(rho > 0.0)) {
    throw DomainError("rho must be > 0 (axis excluded), got " + std::to_string(rho));
  }
  if (spec.kind() == CongruenceKind::kGal && rho * spec.omega() >= spec.c()) {
    throw LightCylinderError("GAL congruence requires rho*omega < c (rho=" +
                             std::to_string(rho) + ", omega=" +
                             std::to_string(spec.omega()) + ")");
  }
}

namespace {

double gal_gamma(double rho, const CongruenceSpec& spec) {
  const double beta = rho * spec.omega() / spec.c();
  return 1.0 / std::sqrt(1.0 - beta * beta);
}

Event tt_boost(const Event& e, double omega, double c) {
  if (!(e.rho > 0.0)) {
    throw DomainError("TT map requires rho > 0, got " + std::to_string(e.rho));
  }
  const double lambda = e.rho * omega / c;
  const double ch = std::cosh(lambda);
  const double sh = std::sinh(lambda);
  Event out = e;
  out.phi = e.phi * ch - e.t * (c / e.rho) * sh;
  out.t = e.t * ch - e.phi * (e.rho / c) * sh;
  return out;
}

}  // namespace

Event gal_map(const Event& e, const CongruenceSpec& spec) {
  Event out = e;
  out.phi = e.phi - spec.omega() * e.t;
  return out;
}

Event gal_inverse(const Event& e, const CongruenceSpec& spec) {
  Event out = e;
  out.phi = e.phi + spec.omega() * e.t;
  return out;
}

Event tt_map(const Event& e, const CongruenceSpec& spec) {
  return tt_boost(e, spec.omega(), spec.c());
}

Event tt_inverse(const Event& e, const CongruenceSpec& spec) {
  return tt_boost(e, -spec.omega(), spec.c());
}

FourVector four_velocity(const Event& e, const CongruenceSpec& spec) {
  require_timelike(e.rho, spec);
  if (spec.kind() == CongruenceKind::kGal) {
    const double gamma = gal_gamma(e.rho, spec);
    return FourVector::contravariant({gamma, 0.0, gamma * spec.omega(), 0.0});
  }
  const double lambda = rapidity(e.rho, spec);
  return FourVector::contravariant(
      {std::cosh(lambda), 0.0, (spec.c() / e.rho) * std::sinh(lambda), 0.0});
}

double fixed_point_speed(double rho, const CongruenceSpec& spec) {
  require_timelike(rho, spec);
  if (spec.kind() == CongruenceKind::kGal) return spec.omega() * rho;
  return spec.c() * std::tanh(rapidity(rho, spec));
}

double fixed_point_angular_rate(double rho, const CongruenceSpec& spec) {
  return fixed_point_speed(rho, spec) / rho;
}

double proper_time_rate(double rho, const CongruenceSpec& spec) {
  require_timelike(rho, spec);
  if (spec.kind() == CongruenceKind::kGal) return 1.0 / gal_gamma(rho, spec);
  return 1.0 / std::cosh(rapidity(rho, spec));
}

double revolution_period(double rho, const CongruenceSpec& spec) {
  require_timelike(rho, spec);
  if (spec.omega() == 0.0) {
    throw DegenerateError("revolution period undefined for omega = 0");
  }
  const double two_pi = 2.0 * std::numbers::pi;
  if (spec.kind() == CongruenceKind::kGal) return two_pi / spec.omega();
  return two_pi * rho / (spec.c() * std::tanh(rapidity(rho, spec)));
}

}  // namespace rotframe
