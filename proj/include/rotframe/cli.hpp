#pragma once

// Command-line front end: `omega`, `precess`, `compare`, `transform`.
//
// Exit codes: 0 success, 2 self-check failure, 3 domain error, 64 usage error.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rotframe/congruence.hpp"
#include "rotframe/kinematics.hpp"

namespace rotframe::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitSelfCheck = 2;
inline constexpr int kExitDomain = 3;
inline constexpr int kExitUsage = 64;

inline constexpr std::string_view kVersion = "1.0.0";
inline constexpr double kSelfCheckTolerance = 1e-6;

inline constexpr std::string_view kReportCsvHeader =
    "kind,rho,lambda,omega_numeric,omega_closed,rel_err,v,dtau_dt,delta_phi_prime,"
    "thomas_net,status";

/// One grid point of one congruence. Absent values are written as `nan`
/// in CSV and `null` in JSON.
struct ReportRow {
  CongruenceKind kind = CongruenceKind::kGal;
  double rho = 0.0;
  double lambda = 0.0;
  std::optional<double> omega_numeric;
  std::optional<double> omega_closed;
  std::optional<double> rel_err;
  std::optional<double> v;
  std::optional<double> dtau_dt;
  std::optional<double> delta_phi_prime;
  std::optional<double> thomas_net;
  /// "ok", "light_cylinder" or "stencil_out_of_domain" (closed forms only).
  std::string status = "ok";
};

/// Evaluates one row. `perturbation` scales the numeric Omega by
/// (1 + perturbation); it exists only to exercise the self-check gate.
ReportRow make_report_row(const CongruenceSpec& spec, double rho,
                          const DerivativeConfig& cfg = {}, double perturbation = 0.0);

/// %.17g, with `nan` for absent or non-finite values.
std::string format_number(std::optional<double> value);

std::string to_csv_line(const ReportRow& row);

/// Runs the CLI on argv-style arguments (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rotframe::cli
