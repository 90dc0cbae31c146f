// Command line front end. All exponent math lives in mpae_core; this file
// parses flags, runs sweeps, and prints deterministic CSV. Snr inputs are
// linear unless --db is given; output snr columns are always linear.
// Timing goes to stderr so stdout is byte-stable for a fixed invocation.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mpae/asymptotics.hpp"
#include "mpae/bounds.hpp"
#include "mpae/kernels.hpp"
#include "mpae/montecarlo.hpp"
#include "mpae/replication.hpp"
#include "mpae/version.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 2;
constexpr int exit_strict = 3;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string join_args(int argc, char** argv) {
  std::string s;
  for (int i = 1; i < argc; ++i) {
    if (i > 1) s += ' ';
    s += argv[i];
  }
  return s;
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

std::vector<double> make_grid(double lo, double hi, int points, bool linear) {
  if (points < 2) throw std::domain_error("points must be >= 2");
  if (!(lo > 0.0) && !linear)
    throw std::domain_error("log grid needs snr-min > 0");
  if (!(lo < hi)) throw std::domain_error("need snr-min < snr-max");
  std::vector<double> g(points);
  if (linear) {
    for (int i = 0; i < points; ++i)
      g[i] = lo + (hi - lo) * i / (points - 1);
  } else {
    double llo = std::log10(lo), lhi = std::log10(hi);
    for (int i = 0; i < points; ++i)
      g[i] = std::pow(10.0, llo + (lhi - llo) * i / (points - 1));
  }
  return g;
}

const std::vector<std::pair<std::string, mpae::BoundKind>>& kind_table() {
  static const std::vector<std::pair<std::string, mpae::BoundKind>> t = {
      {"dpt", mpae::BoundKind::dpt},
      {"channel_coding", mpae::BoundKind::channel_coding},
      {"spherical_cap", mpae::BoundKind::spherical_cap},
      {"spectrum_replication", mpae::BoundKind::spectrum_replication},
      {"unlimited", mpae::BoundKind::unlimited},
      {"achievability", mpae::BoundKind::achievability}};
  return t;
}

std::vector<std::pair<std::string, mpae::BoundKind>> parse_kinds(const std::string& kinds) {
  if (kinds.empty() || kinds == "all") return kind_table();
  std::vector<bool> selected(kind_table().size(), false);
  std::stringstream ss(kinds);
  std::string item;
  while (std::getline(ss, item, ',')) {
    bool known = false;
    for (std::size_t i = 0; i < kind_table().size(); ++i) {
      if (kind_table()[i].first == item) {
        selected[i] = true;
        known = true;
        break;
      }
    }
    if (!known) throw std::domain_error("unknown bound kind: " + item);
  }
  std::vector<std::pair<std::string, mpae::BoundKind>> out;
  for (std::size_t i = 0; i < kind_table().size(); ++i)
    if (selected[i]) out.push_back(kind_table()[i]);
  if (out.empty()) throw std::domain_error("empty --kinds selection");
  return out;
}

struct OutStream {
  std::ofstream file;
  std::ostream* os = &std::cout;
  explicit OutStream(const std::string& path) {
    if (!path.empty()) {
      file.open(path);
      if (!file) throw std::domain_error("cannot open output file: " + path);
      os = &file;
    }
  }
  std::ostream& get() { return *os; }
};

void print_header(std::ostream& os, const std::string& args) {
  os << "# mpae " << mpae::version_string << "\n";
  os << "# args: " << args << "\n";
}

void emit_bounds_sweep(std::ostream& os, double alpha,
                       const std::vector<double>& grid,
                       const std::vector<std::pair<std::string, mpae::BoundKind>>& kinds,
                       const std::string& args) {
  print_header(os, args);
  os << "snr";
  for (const auto& k : kinds) os << ',' << k.first;
  os << '\n';
  for (double g : grid) {
    os << fmt(g);
    for (const auto& k : kinds) os << ',' << fmt(mpae::bound_value(k.second, alpha, g));
    os << '\n';
  }
}

// alpha grid 0.1, 0.2, ..., 10.0: exact decimals so landmark alphas sit on
// grid points
std::vector<double> alpha_decigrid() {
  std::vector<double> g(100);
  for (int k = 0; k < 100; ++k) g[k] = (k + 1) / 10.0;
  return g;
}

void emit_intercepts(std::ostream& os, const std::string& args) {
  print_header(os, args);
  os << "alpha,channel_coding,spherical_cap,spectrum_replication\n";
  for (double a : alpha_decigrid()) {
    auto cc = mpae::high_snr_constant(mpae::BoundKind::channel_coding, a);
    auto sc = mpae::high_snr_constant(mpae::BoundKind::spherical_cap, a);
    auto sp = mpae::high_snr_constant(mpae::BoundKind::spectrum_replication, a);
    os << fmt(a) << ',' << fmt(cc.value) << ',' << fmt(sc.value) << ','
       << fmt(sp.valid ? sp.value : std::nan("")) << '\n';
  }
}

void emit_critical_sweep(std::ostream& os, const std::string& args) {
  print_header(os, args);
  os << "alpha,channel_coding,spherical_cap,spectrum_replication\n";
  auto cell = [](mpae::BoundKind kind, double a) {
    // low alpha can lack a crossing: the coding converse departs from the
    // gamma_alpha snr line immediately when its low-snr slope already
    // equals gamma_alpha
    try {
      return mpae::critical_snr(kind, a).snr;
    } catch (const std::runtime_error&) {
      return std::nan("");
    }
  };
  for (double a : alpha_decigrid()) {
    os << fmt(a) << ',' << fmt(cell(mpae::BoundKind::channel_coding, a)) << ','
       << fmt(cell(mpae::BoundKind::spherical_cap, a)) << ','
       << fmt(cell(mpae::BoundKind::spectrum_replication, a)) << '\n';
  }
  os << "# nan: no crossing, the bound leaves the linear regime immediately\n";
}

int run_bounds(const std::string& args, double alpha, double snr_min,
               double snr_max, int points, bool linear, bool db,
               const std::string& kinds_csv, const std::string& out_path) {
  if (db) {
    snr_min = db_to_linear(snr_min);
    snr_max = db_to_linear(snr_max);
  }
  auto kinds = parse_kinds(kinds_csv);
  auto grid = make_grid(snr_min, snr_max, points, linear);
  OutStream out(out_path);
  emit_bounds_sweep(out.get(), alpha, grid, kinds, args);
  return exit_ok;
}

int run_figure(const std::string& args, const std::string& token,
               const std::string& out_path) {
  OutStream out(out_path);
  auto all = kind_table();
  if (token == "fig3" || token == "fig4" || token == "fig5" || token == "alpha10") {
    double alpha = token == "fig3" ? 0.1 : token == "fig4" ? 1.0
                   : token == "fig5" ? 2.0 : 10.0;
    auto grid = make_grid(0.1, 1000.0, 100, false);
    emit_bounds_sweep(out.get(), alpha, grid, all, args);
  } else if (token == "fig6") {
    emit_intercepts(out.get(), args);
  } else if (token == "fig7") {
    emit_critical_sweep(out.get(), args);
  } else {
    throw std::domain_error("unknown figure token: " + token +
                            " (expected fig3|fig4|fig5|fig6|fig7|alpha10)");
  }
  return exit_ok;
}

int run_asymptotics(const std::string& args, double alpha,
                    const std::string& out_path) {
  OutStream out(out_path);
  std::ostream& os = out.get();
  print_header(os, args);
  os << "kind,c_alpha,valid,residual_1e3,residual_1e4,residual_1e5,residual_1e6\n";
  const double snrs[] = {1e3, 1e4, 1e5, 1e6};
  for (auto kind : {mpae::BoundKind::channel_coding, mpae::BoundKind::spherical_cap,
                    mpae::BoundKind::spectrum_replication}) {
    auto c = mpae::high_snr_constant(kind, alpha);
    std::string name;
    for (const auto& k : kind_table())
      if (k.second == kind) name = k.first;
    os << name << ',' << fmt(c.value) << ',' << (c.valid ? 1 : 0);
    for (double g : snrs) {
      if (c.valid)
        os << ',' << fmt(mpae::verify_high_snr(kind, alpha, g));
      else
        os << ",nan";
    }
    os << '\n';
  }
  os << "# low_snr_slope " << fmt(mpae::low_snr_slope(alpha)) << '\n';
  os << "# gamma_alpha " << fmt(mpae::gamma_alpha(alpha).value) << '\n';
  return exit_ok;
}

int run_critical(const std::string& args, double alpha,
                 const std::string& out_path) {
  OutStream out(out_path);
  std::ostream& os = out.get();
  print_header(os, args);
  os << "kind,critical_snr,bracket_lo,bracket_hi\n";
  for (auto kind : {mpae::BoundKind::channel_coding, mpae::BoundKind::spherical_cap,
                    mpae::BoundKind::spectrum_replication}) {
    auto c = mpae::critical_snr(kind, alpha);
    std::string name;
    for (const auto& k : kind_table())
      if (k.second == kind) name = k.first;
    os << name << ',' << fmt(c.snr) << ',' << fmt(c.bracket_lo) << ','
       << fmt(c.bracket_hi) << '\n';
  }
  return exit_ok;
}

int run_crossover(const std::string& args, const std::string& out_path) {
  OutStream out(out_path);
  std::ostream& os = out.get();
  print_header(os, args);
  os << "pair,alpha,analytic\n";
  for (const auto& x : mpae::constant_crossovers()) {
    std::string a, b;
    for (const auto& k : kind_table()) {
      if (k.second == x.first) a = k.first;
      if (k.second == x.second) b = k.first;
    }
    os << a << '/' << b << ',' << fmt(x.alpha) << ',' << (x.analytic ? 1 : 0) << '\n';
  }
  os << "# spectrum_replication intercept valid for alpha >= 2\n";
  return exit_ok;
}

int run_simulate(const std::string& args, const std::string& scheme,
                 mpae::SimConfig cfg, bool seed_given, bool db,
                 std::vector<double> u_list, int band, bool strict,
                 const std::string& out_path) {
  if (strict && !seed_given) {
    std::cerr << "simulate: --strict requires an explicit --seed\n";
    return exit_usage;
  }
  if (db) cfg.snr = db_to_linear(cfg.snr);

  OutStream out(out_path);
  std::ostream& os = out.get();
  auto t0 = std::chrono::steady_clock::now();
  bool any_untestable = false;

  print_header(os, args);
  if (scheme == "replication") {
    mpae::SimReport rep = mpae::simulate_replication_detector(cfg, band);
    any_untestable = rep.bound_untestable;
    os << "field,value\n";
    os << "scheme,replication\n";
    os << "n_dim," << cfg.n_dim << '\n';
    os << "levels," << cfg.num_levels << '\n';
    os << "snr," << fmt(cfg.snr) << '\n';
    os << "alpha," << fmt(cfg.alpha) << '\n';
    os << "trials," << rep.trials_run << '\n';
    os << "seed," << cfg.seed << '\n';
    os << "band_true," << band << '\n';
    os << "empirical_error_prob," << fmt(rep.empirical_error_prob) << '\n';
    os << "wilson_lo," << fmt(rep.wilson_ci.first) << '\n';
    os << "wilson_hi," << fmt(rep.wilson_ci.second) << '\n';
    os << "empirical_mpae," << fmt(rep.empirical_mpae) << '\n';
    os << "empirical_exponent," << fmt(rep.empirical_exponent) << '\n';
    os << "mean_signal_energy," << fmt(rep.mean_signal_energy) << '\n';
    os << "mean_noise_energy," << fmt(rep.mean_noise_energy) << '\n';
    os << "analytic_reference," << fmt(rep.analytic_reference) << '\n';
    os << "bound_untestable," << (rep.bound_untestable ? 1 : 0) << '\n';
  } else if (scheme == "orthogonal") {
    if (u_list.empty()) {
      // default sweep probes cell interiors and both sides of a boundary
      u_list = {0.0, 0.25, 0.5 - 1e-9, 0.5, 0.75, 1.0 - 1e-9};
    }
    os << "u,empirical_error_prob,wilson_lo,wilson_hi,empirical_mpae,"
          "empirical_exponent,analytic_error_prob,bound_untestable\n";
    double sup_p = 0.0, sup_mpae = 0.0, sup_ref = 0.0;
    std::pair<double, double> sup_ci{0.0, 0.0};
    for (double u : u_list) {
      mpae::SimReport rep = mpae::simulate_quantize_orthogonal(cfg, u);
      any_untestable = any_untestable || rep.bound_untestable;
      os << fmt(u) << ',' << fmt(rep.empirical_error_prob) << ','
         << fmt(rep.wilson_ci.first) << ',' << fmt(rep.wilson_ci.second) << ','
         << fmt(rep.empirical_mpae) << ',' << fmt(rep.empirical_exponent) << ','
         << fmt(rep.analytic_reference) << ','
         << (rep.bound_untestable ? 1 : 0) << '\n';
      if (rep.empirical_error_prob >= sup_p) {
        sup_p = rep.empirical_error_prob;
        sup_ci = rep.wilson_ci;
      }
      sup_mpae = std::max(sup_mpae, rep.empirical_mpae);
      sup_ref = std::max(sup_ref, rep.analytic_reference);
    }
    double sup_exp = sup_mpae > 0.0 ? -(2.0 / cfg.n_dim) * std::log(sup_mpae)
                                    : HUGE_VAL;
    os << "sup," << fmt(sup_p) << ',' << fmt(sup_ci.first) << ','
       << fmt(sup_ci.second) << ',' << fmt(sup_mpae) << ',' << fmt(sup_exp)
       << ',' << fmt(sup_ref) << ',' << (any_untestable ? 1 : 0) << '\n';
  } else {
    throw std::domain_error("unknown scheme: " + scheme +
                            " (expected replication|orthogonal)");
  }

  auto dt = std::chrono::duration<double, std::milli>(
                std::chrono::steady_clock::now() - t0)
                .count();
  std::fprintf(stderr, "simulate: %.1f ms\n", dt);

  if (strict && any_untestable) {
    std::cerr << "simulate: analytic reference below 10/trials, result not "
                 "testable at this trial budget (strict mode)\n";
    return exit_strict;
  }
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bounds on the mean power-alpha error exponent over the "
               "band-limited AWGN channel"};
  app.set_version_flag("--version", std::string("mpae ") + mpae::version_string);
  app.require_subcommand(1);
  const std::string args = join_args(argc, argv);

  // bounds
  auto* b = app.add_subcommand("bounds", "sweep all bounds over snr at fixed alpha");
  double b_alpha = 2.0, b_lo = 0.1, b_hi = 1000.0;
  int b_points = 50;
  bool b_linear = false, b_db = false;
  std::string b_kinds = "all", b_out;
  b->add_option("--alpha", b_alpha, "error moment order")->required();
  b->add_option("--snr-min", b_lo, "sweep start (linear, or dB with --db)");
  b->add_option("--snr-max", b_hi, "sweep end (linear, or dB with --db)");
  b->add_option("--points", b_points, "grid size");
  b->add_flag("--linear", b_linear, "linear grid instead of log");
  b->add_flag("--db", b_db, "interpret snr inputs as dB (output stays linear)");
  b->add_option("--kinds", b_kinds, "comma list of output columns, or 'all'");
  b->add_option("--out", b_out, "write CSV here instead of stdout");

  // figure
  auto* f = app.add_subcommand("figure", "canned sweeps behind the standard plots");
  std::string f_token, f_out;
  f->add_option("token", f_token, "fig3|fig4|fig5|fig6|fig7|alpha10")->required();
  f->add_option("--out", f_out, "write CSV here instead of stdout");

  // asymptotics
  auto* a = app.add_subcommand("asymptotics", "high-snr intercepts and residuals");
  double a_alpha = 2.0;
  std::string a_out;
  a->add_option("--alpha", a_alpha, "error moment order")->required();
  a->add_option("--out", a_out, "write CSV here instead of stdout");

  // critical-snr
  auto* c = app.add_subcommand("critical-snr", "departure points from the linear regime");
  double c_alpha = 2.0;
  std::string c_out;
  c->add_option("--alpha", c_alpha, "error moment order")->required();
  c->add_option("--out", c_out, "write CSV here instead of stdout");

  // crossover
  auto* x = app.add_subcommand("crossover", "equal-intercept alphas of the converses");
  std::string x_out;
  x->add_option("--out", x_out, "write CSV here instead of stdout");

  // simulate
  auto* s = app.add_subcommand("simulate", "Monte Carlo probes of the two schemes");
  std::string s_scheme = "replication", s_out;
  mpae::SimConfig cfg;
  cfg.n_dim = 64;
  cfg.num_levels = 8;
  cfg.snr = 10.0;
  cfg.trials = 100000;
  std::vector<double> s_u;
  int s_band = 0;
  bool s_db = false, s_strict = false;
  s->add_option("--scheme", s_scheme, "replication|orthogonal");
  s->add_option("--n-dim", cfg.n_dim, "real dimensions N");
  s->add_option("--levels", cfg.num_levels, "cells / candidate bands M");
  s->add_option("--snr", cfg.snr, "linear snr (or dB with --db)");
  s->add_option("--alpha", cfg.alpha, "error moment order");
  s->add_option("--trials", cfg.trials, "Monte Carlo trials (max 1e7)");
  auto* seed_opt = s->add_option("--seed", cfg.seed, "RNG seed");
  s->add_option("--threads", cfg.threads, "worker threads");
  s->add_option("--u", s_u, "orthogonal scheme: parameter values in [0,1)");
  s->add_option("--band", s_band, "replication scheme: true band index");
  s->add_flag("--db", s_db, "interpret --snr as dB");
  s->add_flag("--strict", s_strict, "exit 3 when the reference is untestable; require --seed");
  s->add_option("--out", s_out, "write report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (b->parsed())
      return run_bounds(args, b_alpha, b_lo, b_hi, b_points, b_linear, b_db,
                        b_kinds, b_out);
    if (f->parsed()) return run_figure(args, f_token, f_out);
    if (a->parsed()) return run_asymptotics(args, a_alpha, a_out);
    if (c->parsed()) return run_critical(args, c_alpha, c_out);
    if (x->parsed()) return run_crossover(args, x_out);
    if (s->parsed())
      return run_simulate(args, s_scheme, cfg, seed_opt->count() > 0, s_db,
                          s_u, s_band, s_strict, s_out);
  } catch (const std::domain_error& e) {
    std::cerr << "mpae: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "mpae: " << e.what() << '\n';
    return exit_strict;
  }
  return exit_usage;
}
