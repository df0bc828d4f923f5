// Command-line frontend: dimension ladders, the reference table, pipeline
// cross-validation, the asymptotic expansion, interval certification and
// cover zero scans. Exit codes: 0 success, 1 numeric failure, 2 usage error.

#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hecke/asymptotics.hpp"
#include "hecke/certify.hpp"
#include "hecke/dimension.hpp"
#include "hecke/errors.hpp"
#include "hecke/geodesic_oracle.hpp"
#include "hecke/report_json.hpp"
#include "hecke/transfer.hpp"

namespace {

using nlohmann::json;

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

struct TableRow {
  double w;
  double ps_center, ps_width;  // Phillips-Sarnak reference interval
};

// reference column for the table command; pass = |s_k - center| <= width + 1e-3
constexpr TableRow kReferenceRows[] = {
    {2.5, 0.816, 0.002}, {3, 0.753, 0.003},  {4, 0.683, 0.005},
    {6, 0.621, 0.001},   {8, 0.595, 0.004},  {10, 0.575, 0.007},
    {16, 0.550, 0.005},  {40, 0.520, 0.007}, {100, 0.509, 0.002},
};

int cmd_dim(const std::vector<double>& ws, int k_flag,
            const std::string& format) {
  json out = {{"command", "dim"}, {"results", json::array()}};
  if (format == "csv") std::printf("w,k,s_k,error_estimate\n");
  for (const double w : ws) {
    const int k = k_flag > 0 ? k_flag : hecke::dimension::default_k(w);
    const auto ladder =
        hecke::dimension::dimension_ladder(w, std::max(2, k - 6), k);
    const double err = hecke::dimension::ladder_error_estimate(ladder, w);
    const auto& last = ladder.back();
    if (format == "json") {
      json row = last;
      row["error_estimate"] = err;
      out["results"].push_back(row);
    } else if (format == "csv") {
      std::printf("%s,%d,%s,%s\n", num(w).c_str(), last.k,
                  num(last.s_k).c_str(), num(err).c_str());
    } else {
      std::printf("w = %-6s k = %-3d s_k = %s  (error est %s, residual %s)\n",
                  num(w).c_str(), last.k, num(last.s_k).c_str(),
                  num(err).c_str(), num(last.residual).c_str());
    }
  }
  if (format == "json") std::printf("%s\n", out.dump(2).c_str());
  return 0;
}

int cmd_table(int k, const std::string& format) {
  json out = {{"command", "table"}, {"rows", json::array()}};
  if (format == "csv")
    std::printf("w,k,s_k,reference_center,reference_width,pass\n");
  else if (format != "json")
    std::printf("%-6s %-14s %-20s %s\n", "w", "reference", "s_k", "status");
  bool all_pass = true;
  for (const auto& row : kReferenceRows) {
    const auto scan = hecke::dimension::find_zero(k, row.w, 0.0, +1,
                                                  0.5005, 1.1);
    const double s_k = scan.root.value_or(0.0);
    const bool pass =
        scan.root && std::abs(s_k - row.ps_center) <= row.ps_width + 1e-3;
    all_pass = all_pass && pass;
    if (format == "json") {
      out["rows"].push_back({{"w", row.w},
                             {"k", k},
                             {"s_k", s_k},
                             {"reference_center", row.ps_center},
                             {"reference_width", row.ps_width},
                             {"pass", pass}});
    } else if (format == "csv") {
      std::printf("%s,%d,%s,%s,%s,%d\n", num(row.w).c_str(), k,
                  num(s_k).c_str(), num(row.ps_center).c_str(),
                  num(row.ps_width).c_str(), pass ? 1 : 0);
    } else {
      std::printf("%-6s %.3f+-%.3f  %-20s %s\n", num(row.w).c_str(),
                  row.ps_center, row.ps_width, num(s_k).c_str(),
                  pass ? "ok" : "OUTSIDE");
    }
  }
  if (format == "json") {
    out["all_pass"] = all_pass;
    std::printf("%s\n", out.dump(2).c_str());
  }
  return 0;
}

int cmd_validate(double w, double s, int n_max, long long m, double theta,
                 const std::string& format) {
  const hecke::Complex sc(s, 0);
  const auto det = hecke::transfer::determinant(
      hecke::transfer::build_matrix(30, sc, w, theta), +1);
  const auto recon =
      hecke::geodesic_oracle::log_det_reconstruction(sc, w, theta, n_max, m);
  const double d_det = det.value.real();
  const double d_recon = recon.value.real();

  double d_euler = 0;
  bool have_euler = theta == 0.0;
  if (have_euler) {
    const auto euler = hecke::geodesic_oracle::euler_product(
        sc, w, {+1, 0.0}, 3, 50);
    d_euler = euler.value.real();
  }

  if (format == "json") {
    json out = {{"command", "validate"},
                {"w", w},
                {"s", s},
                {"theta", theta},
                {"determinant_k30", d_det},
                {"log_det_reconstruction", d_recon},
                {"diff_det_recon", std::abs(d_det - d_recon)}};
    if (have_euler) {
      out["euler_product"] = d_euler;
      out["diff_det_euler"] = std::abs(d_det - d_euler);
    }
    std::printf("%s\n", out.dump(2).c_str());
  } else {
    std::printf("determinant (k=30)        %s\n", num(d_det).c_str());
    std::printf("log-det reconstruction    %s\n", num(d_recon).c_str());
    std::printf("|det - reconstruction|    %s\n",
                num(std::abs(d_det - d_recon)).c_str());
    if (have_euler) {
      std::printf("euler product (N<=3)      %s\n", num(d_euler).c_str());
      std::printf("|det - euler product|     %s\n",
                  num(std::abs(d_det - d_euler)).c_str());
    }
  }
  return 0;
}

int cmd_asympt(double w, const std::string& format) {
  const double value = hecke::asymptotics::delta_expansion(w);
  const auto p = hecke::asymptotics::p_polynomials(4);
  if (format == "json") {
    json out = {{"command", "asympt"}, {"w", w}, {"delta_expansion", value}};
    json polys = json::array();
    for (const auto& poly : p) polys.push_back(poly);
    out["p_polynomials"] = polys;  // ascending powers of log w
    std::printf("%s\n", out.dump(2).c_str());
  } else {
    std::printf("delta_expansion(%s) = %s\n", num(w).c_str(),
                num(value).c_str());
    for (std::size_t j = 0; j < p.size(); ++j) {
      std::printf("P_%zu(t) =", j + 1);
      for (std::size_t b = 0; b < p[j].size(); ++b)
        std::printf(" %s%s t^%zu", b ? "+ " : "", num(p[j][b]).c_str(), b);
      std::printf("\n");
    }
  }
  return 0;
}

int cmd_certify(double w, double prior, const std::string& format) {
  std::optional<double> prior_opt;
  if (prior > 0) prior_opt = prior;
  const auto bound = hecke::certify::certify_interval(w, prior_opt);
  if (format == "json") {
    json out = bound;
    out["command"] = "certify";
    std::printf("%s\n", out.dump(2).c_str());
  } else {
    std::printf("%s < delta(%s) < %s   (eps = %s, prior = %s)\n",
                num(bound.lower).c_str(), num(w).c_str(),
                num(bound.upper).c_str(), num(bound.epsilon_used).c_str(),
                num(bound.delta_prior).c_str());
  }
  return 0;
}

int cmd_covers(double w, int n, double eps, int k_flag,
               const std::string& format) {
  const int k = k_flag > 0 ? k_flag : hecke::dimension::default_k(w);
  const auto report = hecke::dimension::cover_zero_scan(w, n, eps, k);
  if (format == "json") {
    json out = report;
    out["command"] = "covers";
    std::printf("%s\n", out.dump(2).c_str());
  } else {
    std::printf("delta estimate %s, window (%s, %s]\n",
                num(report.delta_estimate).c_str(),
                num(report.delta_estimate - eps).c_str(),
                num(report.delta_estimate).c_str());
    for (const auto& f : report.factors) {
      std::printf("  factor det(1 %s L^(%d/%d)): ", f.sign > 0 ? "-" : "+",
                  f.a, n);
      if (f.zeros.empty()) {
        std::printf("no zero\n");
        continue;
      }
      for (const double z : f.zeros) std::printf("%s ", num(z).c_str());
      std::printf("\n");
    }
    std::printf("zeros in window: %d\n", report.count_in_window);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hausdorff dimension of Hecke triangle limit sets via "
               "transfer-operator determinants"};
  app.require_subcommand(1);
  app.fallthrough();  // allow --format after the subcommand too
  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));

  auto* dim = app.add_subcommand("dim", "dimension ladder per width");
  std::vector<double> dim_w;
  int dim_k = 0;
  dim->add_option("--w", dim_w, "width w > 2")->required();
  dim->add_option("--k", dim_k, "matrix size (default scales with w)");

  auto* table = app.add_subcommand("table", "reference table with the "
                                            "Phillips-Sarnak column");
  int table_k = 15;
  table->add_option("--k", table_k, "matrix size");

  auto* validate =
      app.add_subcommand("validate", "determinant vs trace and Euler "
                                     "product reconstructions");
  double val_w = 0, val_s = 0, val_theta = 0;
  int val_nmax = 8;
  long long val_m = 200;
  validate->add_option("--w", val_w)->required();
  validate->add_option("--s", val_s)->required();
  validate->add_option("--nmax", val_nmax);
  validate->add_option("--m", val_m);
  validate->add_option("--theta", val_theta);

  auto* asympt = app.add_subcommand("asympt", "large-w expansion of delta");
  double asympt_w = 0;
  asympt->add_option("--w", asympt_w)->required();

  auto* certify = app.add_subcommand("certify", "certified interval for "
                                                "delta(w)");
  double cert_w = 0, cert_prior = 0;
  certify->add_option("--w", cert_w)->required();
  certify->add_option("--prior", cert_prior, "a-priori lower bound");

  auto* covers = app.add_subcommand("covers", "twisted-determinant zero scan");
  double cov_w = 0, cov_eps = 0.05;
  int cov_n = 1, cov_k = 0;
  covers->add_option("--w", cov_w)->required();
  covers->add_option("--n", cov_n)->required();
  covers->add_option("--eps", cov_eps);
  covers->add_option("--k", cov_k);

  CLI11_PARSE(app, argc, argv);

  try {
    if (dim->parsed()) {
      for (const double w : dim_w)
        if (!(w > 2.0)) {
          std::fprintf(stderr, "w must exceed 2\n");
          return 2;
        }
      return cmd_dim(dim_w, dim_k, format);
    }
    if (table->parsed()) return cmd_table(table_k, format);
    if (validate->parsed()) {
      if (!(val_w > 2.0)) {
        std::fprintf(stderr, "w must exceed 2\n");
        return 2;
      }
      if (!(val_s > 0.5)) {
        std::fprintf(stderr, "s must exceed 1/2\n");
        return 2;
      }
      return cmd_validate(val_w, val_s, val_nmax, val_m, val_theta, format);
    }
    if (asympt->parsed()) {
      if (!(asympt_w >= 10.0)) {
        std::fprintf(stderr, "asympt requires w >= 10\n");
        return 2;
      }
      return cmd_asympt(asympt_w, format);
    }
    if (certify->parsed()) {
      if (!(cert_w >= 3.0)) {
        std::fprintf(stderr, "certify requires w >= 3\n");
        return 2;
      }
      return cmd_certify(cert_w, cert_prior, format);
    }
    if (covers->parsed()) {
      if (!(cov_w > 2.0)) {
        std::fprintf(stderr, "w must exceed 2\n");
        return 2;
      }
      return cmd_covers(cov_w, cov_n, cov_eps, cov_k, format);
    }
  } catch (const hecke::DomainError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}
