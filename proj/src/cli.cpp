#include "rotframe/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "rotframe/errors.hpp"
#include "rotframe/transport.hpp"

namespace rotframe::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { kCsv, kJson };

struct GlobalOptions {
  std::string format = "csv";
  std::string out_path;
  bool self_check = false;
  double c = 1.0;
  double perturbation = 0.0;
};

struct SweepConfig {
  std::vector<std::string> kinds{"gal", "tt", "mtt"};
  double rho_min = 0.1;
  double rho_max = 1.0;
  int steps = 10;
  double omega = 0.5;
};

struct PrecessOptions {
  std::string kind = "gal";
  double rho = 1.0;
  double omega = 0.5;
  std::optional<std::size_t> fw_steps;
};

struct CompareOptions {
  double rho = 1.0;
  double omega = 0.5;
};

struct TransformOptions {
  std::string map = "gal";
  std::string direction = "fwd";
  double t = 0.0;
  double rho = 1.0;
  double phi = 0.0;
  double z = 0.0;
  double omega = 0.5;
};

/// Raised for flag combinations CLI11 cannot validate on its own.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json json_number(std::optional<double> v) {
  if (!v || !std::isfinite(*v)) return nullptr;
  return *v;
}

Json row_to_json(const ReportRow& row) {
  Json j;
  j["kind"] = std::string(to_string(row.kind));
  j["rho"] = row.rho;
  j["lambda"] = row.lambda;
  j["omega_numeric"] = json_number(row.omega_numeric);
  j["omega_closed"] = json_number(row.omega_closed);
  j["rel_err"] = json_number(row.rel_err);
  j["v"] = json_number(row.v);
  j["dtau_dt"] = json_number(row.dtau_dt);
  j["delta_phi_prime"] = json_number(row.delta_phi_prime);
  j["thomas_net"] = json_number(row.thomas_net);
  j["status"] = row.status;
  return j;
}

Json envelope(Json params, Json rows) {
  Json j;
  j["params"] = std::move(params);
  j["rows"] = std::move(rows);
  j["version"] = std::string(kVersion);
  return j;
}

Format parse_format(const std::string& name) {
  return name == "json" ? Format::kJson : Format::kCsv;
}

CongruenceKind require_kind(const std::string& name) {
  const auto kind = parse_congruence_kind(name);
  if (!kind) throw UsageError("unknown congruence kind '" + name + "'");
  return *kind;
}

bool self_check_failed(const std::vector<ReportRow>& rows) {
  for (const ReportRow& row : rows) {
    if (row.status == "ok" && row.rel_err && *row.rel_err > kSelfCheckTolerance) return true;
  }
  return false;
}

void write_rows(const std::vector<ReportRow>& rows, Format format, Json params,
                std::ostream& out) {
  if (format == Format::kJson) {
    Json arr = Json::array();
    for (const ReportRow& row : rows) arr.push_back(row_to_json(row));
    out << envelope(std::move(params), std::move(arr)).dump(2) << '\n';
    return;
  }
  out << kReportCsvHeader << '\n';
  for (const ReportRow& row : rows) out << to_csv_line(row) << '\n';
}

int cmd_omega(const SweepConfig& cfg, const GlobalOptions& g, std::ostream& out) {
  if (!(cfg.rho_min > 0.0) || !(cfg.rho_min < cfg.rho_max)) {
    throw UsageError("need 0 < rho-min < rho-max");
  }
  if (cfg.steps < 2) throw UsageError("--steps must be >= 2");
  if (!(cfg.omega > 0.0)) throw UsageError("--omega must be > 0");

  std::vector<CongruenceKind> kinds;
  for (const std::string& name : cfg.kinds) kinds.push_back(require_kind(name));

  std::vector<ReportRow> rows;
  const double span = cfg.rho_max - cfg.rho_min;
  for (CongruenceKind kind : kinds) {
    const CongruenceSpec spec(kind, cfg.omega, g.c);
    for (int i = 0; i < cfg.steps; ++i) {
      const double rho = i + 1 == cfg.steps
                             ? cfg.rho_max
                             : cfg.rho_min + span * static_cast<double>(i) / (cfg.steps - 1);
      rows.push_back(make_report_row(spec, rho, {}, g.perturbation));
    }
  }

  Json params;
  params["kinds"] = cfg.kinds;
  params["rho_min"] = cfg.rho_min;
  params["rho_max"] = cfg.rho_max;
  params["steps"] = cfg.steps;
  params["omega"] = cfg.omega;
  params["c"] = g.c;
  write_rows(rows, parse_format(g.format), std::move(params), out);
  return g.self_check && self_check_failed(rows) ? kExitSelfCheck : kExitOk;
}

int cmd_compare(const CompareOptions& opt, const GlobalOptions& g, std::ostream& out) {
  if (!(opt.omega > 0.0)) throw UsageError("--omega must be > 0");
  std::vector<ReportRow> rows;
  for (const ComparisonEntry& entry : compare_congruences(opt.rho, opt.omega, g.c)) {
    ReportRow row = make_report_row(CongruenceSpec(entry.kind, opt.omega, g.c), opt.rho, {},
                                    g.perturbation);
    if (entry.status != EntryStatus::kOk) row.status = std::string(to_string(entry.status));
    if (entry.report) {
      row.delta_phi_prime = entry.report->delta_phi_prime;
      row.thomas_net = entry.report->thomas_net_angle;
    }
    rows.push_back(std::move(row));
  }
  Json params;
  params["rho"] = opt.rho;
  params["omega"] = opt.omega;
  params["c"] = g.c;
  write_rows(rows, parse_format(g.format), std::move(params), out);
  return g.self_check && self_check_failed(rows) ? kExitSelfCheck : kExitOk;
}

int cmd_precess(const PrecessOptions& opt, const GlobalOptions& g, std::ostream& out) {
  if (!(opt.omega > 0.0)) throw UsageError("--omega must be > 0");
  if (opt.fw_steps && *opt.fw_steps < 16) throw UsageError("--fw-check needs >= 16 steps");
  const CongruenceSpec spec(require_kind(opt.kind), opt.omega, g.c);
  const PrecessionReport r = precession_per_revolution(spec, opt.rho, opt.fw_steps);

  std::optional<double> deviation;
  if (r.fw_measured_angle) deviation = *r.fw_measured_angle - r.delta_phi_prime;

  if (parse_format(g.format) == Format::kJson) {
    Json row;
    row["kind"] = std::string(to_string(r.kind));
    row["rho"] = r.rho;
    row["omega"] = r.omega_param;
    row["Omega"] = r.Omega;
    row["delta_tau_rev"] = r.delta_tau_rev;
    row["delta_phi_prime"] = r.delta_phi_prime;
    row["thomas_net"] = r.thomas_net_angle;
    row["fw_measured"] = json_number(r.fw_measured_angle);
    row["fw_deviation"] = json_number(deviation);
    Json params;
    params["kind"] = opt.kind;
    params["rho"] = opt.rho;
    params["omega"] = opt.omega;
    params["c"] = g.c;
    params["fw_steps"] = opt.fw_steps ? Json(*opt.fw_steps) : Json(nullptr);
    out << envelope(std::move(params), Json::array({row})).dump(2) << '\n';
  } else {
    out << "kind,rho,omega,Omega,delta_tau_rev,delta_phi_prime,thomas_net,fw_measured,"
           "fw_deviation\n";
    out << to_string(r.kind) << ',' << format_number(r.rho) << ','
        << format_number(r.omega_param) << ',' << format_number(r.Omega) << ','
        << format_number(r.delta_tau_rev) << ',' << format_number(r.delta_phi_prime) << ','
        << format_number(r.thomas_net_angle) << ',' << format_number(r.fw_measured_angle)
        << ',' << format_number(deviation) << '\n';
  }
  return kExitOk;
}

int cmd_transform(const TransformOptions& opt, const GlobalOptions& g, std::ostream& out) {
  const bool forward = opt.direction == "fwd";
  const CongruenceSpec spec(CongruenceKind::kGal, opt.omega, g.c);
  const Event in{opt.t, opt.rho, opt.phi, opt.z};
  Event res;
  if (opt.map == "gal") {
    res = forward ? gal_map(in, spec) : gal_inverse(in, spec);
  } else {
    res = forward ? tt_map(in, spec) : tt_inverse(in, spec);
  }

  if (parse_format(g.format) == Format::kJson) {
    Json params;
    params["map"] = opt.map;
    params["direction"] = opt.direction;
    params["event"] = {{"t", in.t}, {"rho", in.rho}, {"phi", in.phi}, {"z", in.z}};
    params["omega"] = opt.omega;
    params["c"] = g.c;
    Json row = {{"t", res.t}, {"rho", res.rho}, {"phi", res.phi}, {"z", res.z}};
    out << envelope(std::move(params), Json::array({row})).dump(2) << '\n';
  } else {
    out << "t,rho,phi,z\n"
        << format_number(res.t) << ',' << format_number(res.rho) << ','
        << format_number(res.phi) << ',' << format_number(res.z) << '\n';
  }
  return kExitOk;
}

}  // namespace

ReportRow make_report_row(const CongruenceSpec& spec, double rho, const DerivativeConfig& cfg,
                          double perturbation) {
  ReportRow row;
  row.kind = spec.kind();
  row.rho = rho;
  row.lambda = rapidity(rho, spec);
  try {
    require_timelike(rho, spec);
  } catch (const LightCylinderError&) {
    row.status = std::string(to_string(EntryStatus::kLightCylinder));
    return row;
  }

  row.omega_closed = omega_closed_form(rho, spec);
  row.v = fixed_point_speed(rho, spec);
  row.dtau_dt = proper_time_rate(rho, spec);
  if (spec.omega() > 0.0) {
    const PrecessionReport r = precession_per_revolution(spec, rho);
    row.delta_phi_prime = r.delta_phi_prime;
    row.thomas_net = r.thomas_net_angle;
  }

  try {
    row.omega_numeric = vorticity_scalar(spec, Event{0.0, rho, 0.0, 0.0}, cfg) *
                        (1.0 + perturbation);
  } catch (const DomainError&) {
    row.status = "stencil_out_of_domain";
    return row;
  }
  if (*row.omega_closed != 0.0) {
    row.rel_err = std::abs(*row.omega_numeric - *row.omega_closed) / *row.omega_closed;
  }
  return row;
}

std::string format_number(std::optional<double> value) {
  if (!value || !std::isfinite(*value)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", *value);
  return buf;
}

std::string to_csv_line(const ReportRow& row) {
  std::ostringstream line;
  line << to_string(row.kind) << ',' << format_number(row.rho) << ','
       << format_number(row.lambda) << ',' << format_number(row.omega_numeric) << ','
       << format_number(row.omega_closed) << ',' << format_number(row.rel_err) << ','
       << format_number(row.v) << ',' << format_number(row.dtau_dt) << ','
       << format_number(row.delta_phi_prime) << ',' << format_number(row.thomas_net) << ','
       << row.status;
  return line.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rotating-frame congruences: vorticity and gyroscope precession"};
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", g.out_path, "Write output to this file instead of stdout");
  app.add_flag("--self-check", g.self_check, "Exit 2 if any rel_err exceeds 1e-6");
  app.add_option("--c", g.c, "Speed of light")->capture_default_str();
  app.add_option("--test-perturb", g.perturbation,
                 "Scale numeric Omega by (1 + x); exercises --self-check")
      ->group("");

  SweepConfig sweep;
  CLI::App* omega_cmd = app.add_subcommand("omega", "Sweep rho and compare numeric Omega with closed forms");
  omega_cmd->add_option("--kind", sweep.kinds, "Congruences (gal,tt,mtt)")->delimiter(',');
  omega_cmd->add_option("--omega", sweep.omega, "Angular-rate parameter")->capture_default_str();
  omega_cmd->add_option("--rho-min", sweep.rho_min)->capture_default_str();
  omega_cmd->add_option("--rho-max", sweep.rho_max)->capture_default_str();
  omega_cmd->add_option("--steps", sweep.steps, "Grid points per congruence")->capture_default_str();

  PrecessOptions precess;
  CLI::App* prec = app.add_subcommand("precess", "Gyroscope precession per revolution");
  prec->add_option("--kind", precess.kind)->capture_default_str();
  prec->add_option("--rho", precess.rho)->capture_default_str();
  prec->add_option("--omega", precess.omega)->capture_default_str();
  prec->add_option("--fw-check", precess.fw_steps, "Cross-check with N Fermi-Walker RK4 steps");

  CompareOptions compare;
  CLI::App* cmp = app.add_subcommand("compare", "GAL vs TT vs MTT at one radius");
  cmp->add_option("--rho", compare.rho)->capture_default_str();
  cmp->add_option("--omega", compare.omega)->capture_default_str();

  TransformOptions transform;
  CLI::App* tr = app.add_subcommand("transform", "Apply a coordinate map to one event");
  tr->add_option("--map", transform.map)->check(CLI::IsMember({"gal", "tt"}))->capture_default_str();
  tr->add_option("--direction", transform.direction)
      ->check(CLI::IsMember({"fwd", "inv"}))
      ->capture_default_str();
  tr->add_option("--t", transform.t)->capture_default_str();
  tr->add_option("--rho", transform.rho)->capture_default_str();
  tr->add_option("--phi", transform.phi)->capture_default_str();
  tr->add_option("--z", transform.z)->capture_default_str();
  tr->add_option("--omega", transform.omega)->capture_default_str();

  for (CLI::App* sub : {omega_cmd, prec, cmp, tr}) sub->fallthrough();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  std::ostringstream buffer;
  int code = kExitOk;
  try {
    if (!(g.c > 0.0)) throw UsageError("--c must be > 0");
    if (omega_cmd->parsed()) {
      code = cmd_omega(sweep, g, buffer);
    } else if (prec->parsed()) {
      code = cmd_precess(precess, g, buffer);
    } else if (cmp->parsed()) {
      code = cmd_compare(compare, g, buffer);
    } else {
      code = cmd_transform(transform, g, buffer);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }

  if (g.out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(g.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open '" << g.out_path << "' for writing\n";
      return kExitUsage;
    }
    file << buffer.str();
  }
  if (code == kExitSelfCheck) err << "self-check failed: rel_err above 1e-6\n";
  return code;
}

}  // namespace rotframe::cli
