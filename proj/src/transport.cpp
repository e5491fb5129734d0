#include "rotframe/transport.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "rotframe/errors.hpp"
#include "rotframe/kinematics.hpp"

namespace rotframe {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kDriftLimit = 1e-6;
constexpr double kInitialOrthogonality = 1e-9;
constexpr std::size_t kMinSteps = 16;

FourVector mat_vec(const Matrix4& m, const FourVector& v) {
  FourVector out{{}, Variance::kContravariant};
  for (std::size_t a = 0; a < kDim; ++a) {
    double sum = 0.0;
    for (std::size_t b = 0; b < kDim; ++b) sum += m[a][b] * v[b];
    out[a] = sum;
  }
  return out;
}

double spin_norm(const FourVector& s, const MetricAt& m) {
  return std::sqrt(std::abs(dot(s, s, m)));
}

double scaled_constraint(const Worldline& wl, const SpinState& st) {
  const MetricAt m = metric_at(st.event, wl.c());
  const double norm = spin_norm(st.S, m);
  if (norm == 0.0) return 0.0;
  return std::abs(dot(st.S, wl.u(st.tau), m)) / (norm * wl.c());
}

}  // namespace

Worldline::Worldline(const CongruenceSpec& spec, double rho, double phi0, double z)
    : spec_(spec), rho_(rho), phi0_(phi0), z_(z) {
  require_timelike(rho, spec);
  angular_rate_ = fixed_point_angular_rate(rho, spec);
  u_ = four_velocity(Event{0.0, rho, phi0, z}, spec).components;
}

Event Worldline::event(double tau) const {
  const double t = tau * u_[kT];
  return Event{t, rho_, phi0_ + angular_rate_ * t, z_};
}

FourVector Worldline::u(double /*tau*/) const { return FourVector::contravariant(u_); }

FourVector Worldline::a(double /*tau*/) const {
  return FourVector::contravariant({0.0, -rho_ * u_[kPhi] * u_[kPhi], 0.0, 0.0});
}

FourVector Worldline::radial_axis(double /*tau*/) const {
  return FourVector::contravariant({0.0, 1.0, 0.0, 0.0});
}

FourVector Worldline::tangential_axis(double /*tau*/) const {
  const double c2 = spec_.c() * spec_.c();
  return FourVector::contravariant({rho_ * u_[kPhi] / c2, 0.0, u_[kT] / rho_, 0.0});
}

Matrix4 fw_generator(const Worldline& wl, double tau) {
  const Event e = wl.event(tau);
  const MetricAt m = metric_at(e, wl.c());
  const Connection conn = christoffel_at(e);
  const FourVector u = wl.u(tau);
  const FourVector acc = wl.a(tau);
  const FourVector u_low = lower(u, m);
  const FourVector a_low = lower(acc, m);
  const double c2 = wl.c() * wl.c();

  Matrix4 gen{};
  for (std::size_t a = 0; a < kDim; ++a) {
    for (std::size_t g = 0; g < kDim; ++g) {
      double entry = (acc[a] * u_low[g] - u[a] * a_low[g]) / c2;
      for (std::size_t b = 0; b < kDim; ++b) entry -= conn[a][b][g] * u[b];
      gen[a][g] = entry;
    }
  }
  return gen;
}

SpinState fw_step(const Worldline& wl, const SpinState& state, double h) {
  const double tau = state.tau;
  const FourVector& s = state.S;
  const Matrix4 m0 = fw_generator(wl, tau);
  const Matrix4 mh = fw_generator(wl, tau + 0.5 * h);
  const Matrix4 m1 = fw_generator(wl, tau + h);

  const FourVector k1 = mat_vec(m0, s);
  const FourVector k2 = mat_vec(mh, s + (0.5 * h) * k1);
  const FourVector k3 = mat_vec(mh, s + (0.5 * h) * k2);
  const FourVector k4 = mat_vec(m1, s + h * k3);

  SpinState next;
  next.tau = tau + h;
  next.S = s + (h / 6.0) * (k1 + (2.0 * k2) + (2.0 * k3) + k4);
  next.event = wl.event(next.tau);
  return next;
}

double dyad_angle(const Worldline& wl, const SpinState& state) {
  const MetricAt m = metric_at(state.event, wl.c());
  // Spacelike unit axes have norm -1, hence the sign flips.
  const double along_radial = -dot(state.S, wl.radial_axis(state.tau), m);
  const double along_tangential = -dot(state.S, wl.tangential_axis(state.tau), m);
  return std::atan2(along_tangential, along_radial);
}

SpinState radial_spin(const Worldline& wl) {
  return SpinState{0.0, wl.radial_axis(0.0), wl.event(0.0)};
}

FwResult fw_transport(const Worldline& wl, const SpinState& s0, double tau_span,
                      std::size_t steps, std::size_t record_stride) {
  if (steps < kMinSteps) {
    throw DomainError("fw_transport needs at least 16 steps, got " + std::to_string(steps));
  }
  if (!(tau_span > 0.0) || !std::isfinite(tau_span)) {
    throw DomainError("fw_transport needs a positive finite tau span");
  }
  if (scaled_constraint(wl, s0) > kInitialOrthogonality) {
    throw DomainError("initial spin is not orthogonal to u");
  }

  const MetricAt m0 = metric_at(s0.event, wl.c());
  const double norm0 = dot(s0.S, s0.S, m0);
  const double h = tau_span / static_cast<double>(steps);

  FwResult result;
  if (record_stride > 0) result.trajectory.push_back(s0);

  SpinState state = s0;
  double prev_angle = dyad_angle(wl, state);
  for (std::size_t i = 1; i <= steps; ++i) {
    state = fw_step(wl, state, h);
    // Avoid accumulating tau round-off over long runs.
    state.tau = s0.tau + h * static_cast<double>(i);
    state.event = wl.event(state.tau);

    const double constraint = scaled_constraint(wl, state);
    if (constraint > kDriftLimit) {
      throw ConstraintDriftError("|S.u| drifted to " + std::to_string(constraint) +
                                 " after " + std::to_string(i) + " steps; raise the step count");
    }
    result.max_constraint = std::max(result.max_constraint, constraint);

    const double angle = dyad_angle(wl, state);
    result.rotation_angle += std::remainder(angle - prev_angle, kTwoPi);
    prev_angle = angle;

    if (record_stride > 0 && (i % record_stride == 0 || i == steps)) {
      result.trajectory.push_back(state);
    }
  }

  const MetricAt m_end = metric_at(state.event, wl.c());
  result.norm_drift = norm0 == 0.0
                          ? 0.0
                          : std::abs(dot(state.S, state.S, m_end) - norm0) / std::abs(norm0);
  result.final_state = state;
  return result;
}

double fw_angle_per_revolution(const CongruenceSpec& spec, double rho, std::size_t steps) {
  const Worldline wl(spec, rho);
  const double tau_rev = revolution_period(rho, spec) * proper_time_rate(rho, spec);
  return fw_transport(wl, radial_spin(wl), tau_rev, steps).rotation_angle;
}

PrecessionReport precession_per_revolution(const CongruenceSpec& spec, double rho,
                                           std::optional<std::size_t> fw_steps) {
  PrecessionReport r;
  r.kind = spec.kind();
  r.rho = rho;
  r.omega_param = spec.omega();
  r.Omega = omega_closed_form(rho, spec);
  r.delta_tau_rev = revolution_period(rho, spec) * proper_time_rate(rho, spec);
  r.delta_phi_prime = -r.Omega * r.delta_tau_rev;
  r.thomas_net_angle = r.delta_phi_prime + kTwoPi;
  if (fw_steps && spec.kind() != CongruenceKind::kMtt) {
    r.fw_measured_angle = fw_angle_per_revolution(spec, rho, *fw_steps);
  }
  return r;
}

std::string_view to_string(EntryStatus status) {
  switch (status) {
    case EntryStatus::kOk: return "ok";
    case EntryStatus::kLightCylinder: return "light_cylinder";
  }
  return "?";
}

std::vector<ComparisonEntry> compare_congruences(double rho, double omega, double c) {
  std::vector<ComparisonEntry> out;
  for (CongruenceKind kind : {CongruenceKind::kGal, CongruenceKind::kTt, CongruenceKind::kMtt}) {
    const CongruenceSpec spec(kind, omega, c);
    ComparisonEntry entry{kind, EntryStatus::kOk, std::nullopt};
    try {
      entry.report = precession_per_revolution(spec, rho);
    } catch (const LightCylinderError&) {
      entry.status = EntryStatus::kLightCylinder;
    }
    out.push_back(entry);
  }
  return out;
}

}  // namespace rotframe
