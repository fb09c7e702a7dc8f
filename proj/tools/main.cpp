#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mathieu/format.hpp"
#include "mathieu/hurwitz.hpp"
#include "mathieu/mathieu.hpp"
#include "mathieu/polylog.hpp"
#include "mathieu/special.hpp"
#include "mathieu/trig.hpp"
#include "output.hpp"

using mathieu::Complex;
using mathieu::EvalOutcome;

namespace {

struct CommonOpts {
  std::string format = "json";
  std::string out_path;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--format", opts.format, "Output format (csv or json)")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", opts.out_path, "Write output to a file instead of stdout");
}

void deliver(const cli::OutputTable& table, const CommonOpts& opts) {
  std::string text = cli::emit(table, cli::parse_format(opts.format));
  if (opts.out_path.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream file(opts.out_path, std::ios::binary);
  if (!file) {
    mathieu::fail(mathieu::ErrorKind::parameter,
                  "cannot open output file '" + opts.out_path + "'");
  }
  file.write(text.data(), static_cast<std::streamsize>(text.size()));
}

// Either --z "a+bi" or --x angle (z = e^{ix}).
struct ArgumentZ {
  std::string z_text;
  double x = 0.0;
  CLI::Option* x_opt = nullptr;

  Complex resolve() const {
    if (x_opt != nullptr && x_opt->count() > 0) return mathieu::unit_circle_point(x);
    if (z_text.empty()) {
      mathieu::fail(mathieu::ErrorKind::parameter, "one of --z or --x is required");
    }
    return mathieu::parse_complex(z_text);
  }
};

void add_z_options(CLI::App* cmd, ArgumentZ& arg) {
  auto* z_opt = cmd->add_option("--z", arg.z_text, "Complex argument, e.g. -1 or 0.3+0.4i");
  arg.x_opt = cmd->add_option("--x", arg.x, "Angle form: z = e^{ix}, x in (0, 2 pi)");
  arg.x_opt->excludes(z_opt);
  z_opt->excludes(arg.x_opt);
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> grid;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    grid.push_back(std::strtod(item.c_str(), nullptr));
  }
  if (grid.empty()) {
    mathieu::fail(mathieu::ErrorKind::parameter, "empty grid list '" + text + "'");
  }
  return grid;
}

std::vector<cli::Value> outcome_row(double mu, double r, const Complex& z,
                                    const EvalOutcome& out) {
  return {mu,
          r,
          z.real(),
          z.imag(),
          out.value.real(),
          out.value.imag(),
          out.error_bound,
          std::string(to_string(out.bound_kind)),
          static_cast<long long>(out.terms_used),
          std::string(to_string(out.method))};
}

const std::vector<std::string> kOutcomeColumns = {
    "mu",        "r",          "z_re",  "z_im",  "value_re", "value_im",
    "err_bound", "bound_kind", "terms", "method"};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Mathieu power series: evaluation, expansions, identities"};
  app.require_subcommand(1);

  // ---- eval ----------------------------------------------------------------
  struct {
    double mu = 1.0, r = 1.0, tol = 1e-10;
    ArgumentZ z;
    CommonOpts common;
  } eval_opts;
  {
    auto* cmd = app.add_subcommand("eval", "Evaluate F_mu(r, z) by certified direct summation");
    cmd->add_option("--mu", eval_opts.mu, "mu > 0")->required();
    cmd->add_option("--r", eval_opts.r, "r > 0")->required();
    add_z_options(cmd, eval_opts.z);
    cmd->add_option("--tol", eval_opts.tol, "Tail tolerance")->capture_default_str();
    add_common(cmd, eval_opts.common);
    cmd->final_callback([&]() {
      Complex z = eval_opts.z.resolve();
      EvalOutcome out = mathieu::mathieu_direct(
          mathieu::MathieuParams{eval_opts.mu, eval_opts.r, z}, eval_opts.tol);
      cli::OutputTable table;
      table.columns = kOutcomeColumns;
      table.add_row(outcome_row(eval_opts.mu, eval_opts.r, z, out));
      deliver(table, eval_opts.common);
    });
  }

  // ---- asym ----------------------------------------------------------------
  struct {
    double mu = 1.0, r = 1.0;
    int kmax = -1;
    ArgumentZ z;
    CommonOpts common;
  } asym_opts;
  {
    auto* cmd = app.add_subcommand("asym", "Evaluate the large-r asymptotic expansion");
    cmd->add_option("--mu", asym_opts.mu)->required();
    cmd->add_option("--r", asym_opts.r)->required();
    add_z_options(cmd, asym_opts.z);
    cmd->add_option("--kmax", asym_opts.kmax,
                    "Truncation index; -1 = optimal (smallest term)")
        ->capture_default_str();
    add_common(cmd, asym_opts.common);
    cmd->final_callback([&]() {
      Complex z = asym_opts.z.resolve();
      std::optional<int> kmax;
      if (asym_opts.kmax >= 0) kmax = asym_opts.kmax;
      EvalOutcome out = mathieu::asym_eval(
          mathieu::MathieuParams{asym_opts.mu, asym_opts.r, z}, kmax);
      cli::OutputTable table;
      table.columns = kOutcomeColumns;
      table.add_row(outcome_row(asym_opts.mu, asym_opts.r, z, out));
      deliver(table, asym_opts.common);
    });
  }

  // ---- expand ----------------------------------------------------------------
  struct {
    double mu = 1.0;
    int kmax = 2;
    ArgumentZ z;
    CommonOpts common;
  } expand_opts;
  {
    auto* cmd = app.add_subcommand("expand", "Print the expansion coefficients c_k(mu, z)");
    cmd->add_option("--mu", expand_opts.mu)->required();
    add_z_options(cmd, expand_opts.z);
    cmd->add_option("--kmax", expand_opts.kmax, "Highest coefficient index")
        ->required()
        ->check(CLI::Range(0, 80));
    add_common(cmd, expand_opts.common);
    cmd->final_callback([&]() {
      Complex z = expand_opts.z.resolve();
      mathieu::AsymExpansion exp =
          mathieu::asym_coeffs(expand_opts.mu, z, expand_opts.kmax);
      cli::OutputTable table;
      table.columns = {"k", "c_re", "c_im"};
      for (int k = 0; k <= exp.k_max; ++k) {
        table.add_row({static_cast<long long>(k), exp.coeffs[k].real(),
                       exp.coeffs[k].imag()});
      }
      deliver(table, expand_opts.common);
    });
  }

  // ---- compare ---------------------------------------------------------------
  struct {
    double mu = 1.0, r_min = 10.0, r_max = 40.0, tol = 1e-10;
    int points = 4;
    ArgumentZ z;
    CommonOpts common;
  } compare_opts;
  {
    auto* cmd = app.add_subcommand(
        "compare", "Direct vs asymptotic evaluation over an r grid");
    cmd->add_option("--mu", compare_opts.mu)->required();
    add_z_options(cmd, compare_opts.z);
    cmd->add_option("--r-min", compare_opts.r_min)->required();
    cmd->add_option("--r-max", compare_opts.r_max)->required();
    cmd->add_option("--points", compare_opts.points)->required()->check(CLI::Range(1, 100000));
    cmd->add_option("--tol", compare_opts.tol, "Direct-sum tolerance")->capture_default_str();
    add_common(cmd, compare_opts.common);
    cmd->final_callback([&]() {
      Complex z = compare_opts.z.resolve();
      cli::OutputTable table;
      table.columns = {"r",       "direct_re", "direct_im", "asym_re",
                       "asym_im", "abs_err",   "rel_err"};
      int n = compare_opts.points;
      for (int i = 0; i < n; ++i) {
        double r = (n == 1) ? compare_opts.r_min
                            : compare_opts.r_min +
                                  (compare_opts.r_max - compare_opts.r_min) * i / (n - 1);
        EvalOutcome direct = mathieu::mathieu_direct(
            mathieu::MathieuParams{compare_opts.mu, r, z}, compare_opts.tol);
        EvalOutcome asym =
            mathieu::asym_eval(mathieu::MathieuParams{compare_opts.mu, r, z}, {});
        double abs_err = std::abs(direct.value - asym.value);
        double rel_err = abs_err / std::abs(direct.value);
        table.add_row({r, direct.value.real(), direct.value.imag(),
                       asym.value.real(), asym.value.imag(), abs_err, rel_err});
      }
      deliver(table, compare_opts.common);
    });
  }

  // ---- mellin-check ------------------------------------------------------------
  struct {
    double mu = 1.0, tol = 1e-6;
    std::string u_text, z_text;
    CommonOpts common;
  } mellin_opts;
  {
    auto* cmd = app.add_subcommand(
        "mellin-check", "Closed-form Mellin transform vs quadrature oracle");
    cmd->add_option("--mu", mellin_opts.mu)->required();
    cmd->add_option("--z", mellin_opts.z_text)->required();
    cmd->add_option("--u", mellin_opts.u_text, "Mellin variable")->required();
    cmd->add_option("--tol", mellin_opts.tol)->capture_default_str();
    add_common(cmd, mellin_opts.common);
    cmd->final_callback([&]() {
      Complex z = mathieu::parse_complex(mellin_opts.z_text);
      Complex u = mathieu::parse_complex(mellin_opts.u_text);
      Complex closed = mathieu::mellin_closed(mathieu::MellinQuery{u}, mellin_opts.mu, z);
      EvalOutcome numeric =
          mathieu::mellin_numeric(mathieu::MellinQuery{u}, mellin_opts.mu, z, mellin_opts.tol);
      double abs_diff = std::abs(closed - numeric.value);
      cli::OutputTable table;
      table.columns = {"u_re",       "u_im",       "mu",       "z_re",
                       "z_im",       "closed_re",  "closed_im", "numeric_re",
                       "numeric_im", "abs_diff",   "rel_diff",  "numeric_bound"};
      table.add_row({u.real(), u.imag(), mellin_opts.mu, z.real(), z.imag(),
                     closed.real(), closed.imag(), numeric.value.real(),
                     numeric.value.imag(), abs_diff, abs_diff / std::abs(closed),
                     numeric.error_bound});
      deliver(table, mellin_opts.common);
    });
  }

  // ---- identity -----------------------------------------------------------------
  auto* identity = app.add_subcommand("identity", "Cross-route identity checks");
  identity->require_subcommand(1);

  struct {
    std::string alpha_text, z_text;
    double tol = 1e-10;
    CommonOpts common;
  } jon_opts;
  {
    auto* cmd = identity->add_subcommand(
        "jonquiere", "Hurwitz-zeta representation vs an independent route");
    cmd->add_option("--alpha", jon_opts.alpha_text)->required();
    cmd->add_option("--z", jon_opts.z_text)->required();
    cmd->add_option("--tol", jon_opts.tol)->capture_default_str();
    add_common(cmd, jon_opts.common);
    cmd->final_callback([&]() {
      Complex alpha = mathieu::parse_complex(jon_opts.alpha_text);
      Complex z = mathieu::parse_complex(jon_opts.z_text);
      mathieu::PolylogQuery query{alpha, z};
      EvalOutcome jon = mathieu::polylog_jonquiere(query);
      EvalOutcome ref;
      if (std::fabs(alpha.imag()) < 1e-12 && alpha.real() <= 0.5 &&
          std::fabs(alpha.real() - std::round(alpha.real())) < 1e-12) {
        Complex v = mathieu::polylog_neg_int(
            static_cast<int>(-std::round(alpha.real())), z);
        ref = EvalOutcome{v, 0.0, mathieu::BoundKind::certified, 0,
                          mathieu::Method::neg_int_closed_form};
      } else if (std::abs(z) <= 0.999 || alpha.real() > 1.0) {
        ref = mathieu::polylog_series(query, jon_opts.tol);
      } else {
        ref = mathieu::polylog_lindelof(query,
                                        mathieu::lindelof_half_width(z, jon_opts.tol));
      }
      double abs_diff = std::abs(jon.value - ref.value);
      cli::OutputTable table;
      table.columns = {"alpha_re",     "alpha_im",     "z_re",
                       "z_im",         "jonquiere_re", "jonquiere_im",
                       "reference_re", "reference_im", "reference_method",
                       "abs_diff",     "rel_diff"};
      table.add_row({alpha.real(), alpha.imag(), z.real(), z.imag(),
                     jon.value.real(), jon.value.imag(), ref.value.real(),
                     ref.value.imag(), std::string(to_string(ref.method)), abs_diff,
                     abs_diff / std::abs(ref.value)});
      deliver(table, jon_opts.common);
    });
  }

  struct {
    std::string alpha_text;
    int p = 1, q = 1;
    double tol = 1e-10;
    CommonOpts common;
  } multi_opts;
  {
    auto* cmd = identity->add_subcommand(
        "multisection", "Unit-circle multisection vs closed form / series");
    cmd->add_option("--alpha", multi_opts.alpha_text)->required();
    cmd->add_option("--p", multi_opts.p)->required()->check(CLI::PositiveNumber);
    cmd->add_option("--q", multi_opts.q)->required()->check(CLI::PositiveNumber);
    cmd->add_option("--tol", multi_opts.tol)->capture_default_str();
    add_common(cmd, multi_opts.common);
    cmd->final_callback([&]() {
      Complex alpha = mathieu::parse_complex(multi_opts.alpha_text);
      auto angle = mathieu::RationalAngle::reduced(multi_opts.p, multi_opts.q);
      Complex z = angle.unit();
      EvalOutcome ms = mathieu::polylog_unit_circle(alpha, angle);
      EvalOutcome ref;
      if (std::fabs(alpha.imag()) < 1e-12 && alpha.real() <= 0.5 &&
          std::fabs(alpha.real() - std::round(alpha.real())) < 1e-12) {
        Complex v = mathieu::polylog_neg_int(
            static_cast<int>(-std::round(alpha.real())), z);
        ref = EvalOutcome{v, 0.0, mathieu::BoundKind::certified, 0,
                          mathieu::Method::neg_int_closed_form};
      } else if (alpha.real() > 1.0) {
        ref = mathieu::polylog_series(mathieu::PolylogQuery{alpha, z}, multi_opts.tol);
      } else {
        ref = mathieu::polylog_jonquiere(mathieu::PolylogQuery{alpha, z});
      }
      double abs_diff = std::abs(ms.value - ref.value);
      cli::OutputTable table;
      table.columns = {"alpha_re", "alpha_im",        "p",
                       "q",        "multisection_re", "multisection_im",
                       "reference_re", "reference_im", "reference_method",
                       "abs_diff", "rel_diff"};
      table.add_row({alpha.real(), alpha.imag(), static_cast<long long>(angle.p),
                     static_cast<long long>(angle.q), ms.value.real(),
                     ms.value.imag(), ref.value.real(), ref.value.imag(),
                     std::string(to_string(ref.method)), abs_diff,
                     abs_diff / std::abs(ref.value)});
      deliver(table, multi_opts.common);
    });
  }

  struct {
    std::string s_text;
    CommonOpts common;
  } eta_opts;
  {
    auto* cmd = identity->add_subcommand(
        "eta", "eta(s) from the zeta relation vs the half-shift multisection");
    cmd->add_option("--s", eta_opts.s_text)->required();
    add_common(cmd, eta_opts.common);
    cmd->final_callback([&]() {
      Complex s = mathieu::parse_complex(eta_opts.s_text);
      EvalOutcome relation = mathieu::dirichlet_eta(s);
      // eta(s) = -Li_s(-1) via the 2-term multisection at x = pi.
      EvalOutcome ms = mathieu::polylog_unit_circle(s, mathieu::RationalAngle{1, 1});
      Complex ms_eta = -ms.value;
      double abs_diff = std::abs(relation.value - ms_eta);
      cli::OutputTable table;
      table.columns = {"s_re",       "s_im",       "eta_zeta_re", "eta_zeta_im",
                       "eta_ms_re",  "eta_ms_im",  "abs_diff",    "rel_diff"};
      table.add_row({s.real(), s.imag(), relation.value.real(), relation.value.imag(),
                     ms_eta.real(), ms_eta.imag(), abs_diff,
                     abs_diff / std::abs(relation.value)});
      deliver(table, eta_opts.common);
    });
  }

  struct {
    double a = 1.0, gamma = 1.0, alpha = 2.0, mu = 2.0, y = 1e-4, tol = 1e-8;
    int kmax = 3;
    CommonOpts common;
  } zast_opts;
  {
    auto* cmd = identity->add_subcommand(
        "zastavnyi", "Power/gamma expansion vs certified direct sum");
    cmd->add_option("--a", zast_opts.a)->required();
    cmd->add_option("--gamma", zast_opts.gamma)->required();
    cmd->add_option("--alpha", zast_opts.alpha)->required();
    cmd->add_option("--mu", zast_opts.mu)->required();
    cmd->add_option("--y", zast_opts.y)->required();
    cmd->add_option("--kmax", zast_opts.kmax)->required()->check(CLI::Range(0, 60));
    cmd->add_option("--tol", zast_opts.tol)->capture_default_str();
    add_common(cmd, zast_opts.common);
    cmd->final_callback([&]() {
      mathieu::ZastavnyiParams params{zast_opts.a, zast_opts.gamma, zast_opts.alpha,
                                      zast_opts.mu, zast_opts.y, zast_opts.kmax};
      EvalOutcome expansion = mathieu::zastavnyi_expansion(params);
      EvalOutcome direct = mathieu::zastavnyi_direct(params, zast_opts.tol);
      double ratio = (zast_opts.gamma + 1.0) / zast_opts.alpha;
      double leading = mathieu::complex_gamma({ratio, 0.0}).real() *
                       mathieu::complex_gamma({zast_opts.mu - ratio, 0.0}).real() /
                       (zast_opts.alpha *
                        mathieu::complex_gamma({zast_opts.mu, 0.0}).real()) *
                       std::pow(zast_opts.y, -ratio);
      double abs_diff = std::abs(expansion.value - direct.value);
      cli::OutputTable table;
      table.columns = {"a",      "gamma",     "alpha",  "mu",       "y",
                       "k_max",  "leading",   "expansion", "direct", "abs_diff",
                       "rel_diff"};
      table.add_row({zast_opts.a, zast_opts.gamma, zast_opts.alpha, zast_opts.mu,
                     zast_opts.y, static_cast<long long>(zast_opts.kmax), leading,
                     expansion.value.real(), direct.value.real(), abs_diff,
                     abs_diff / std::abs(direct.value)});
      deliver(table, zast_opts.common);
    });
  }

  // ---- smallx -----------------------------------------------------------------
  struct {
    std::string family = "sine";
    double alpha = 0.0, beta = 1.0, gamma = 0.0, delta = 0.0, mu = 0.0, r = 1.0;
    double x = 1e-2, tol = 1e-6;
    CommonOpts common;
  } smallx_opts;
  {
    auto* cmd = app.add_subcommand(
        "smallx", "Generalized sine series vs its small-x leading law");
    cmd->add_option("--family", smallx_opts.family)
        ->check(CLI::IsMember({"sine", "logfact"}))
        ->capture_default_str();
    cmd->add_option("--alpha", smallx_opts.alpha)->capture_default_str();
    cmd->add_option("--beta", smallx_opts.beta)->capture_default_str();
    cmd->add_option("--gamma", smallx_opts.gamma)->capture_default_str();
    cmd->add_option("--delta", smallx_opts.delta)->capture_default_str();
    cmd->add_option("--mu", smallx_opts.mu)->capture_default_str();
    cmd->add_option("--r", smallx_opts.r)->capture_default_str();
    cmd->add_option("--x", smallx_opts.x)->required();
    cmd->add_option("--tol", smallx_opts.tol)->capture_default_str();
    add_common(cmd, smallx_opts.common);
    cmd->final_callback([&]() {
      double theta, sum, prediction;
      std::string kind;
      if (smallx_opts.family == "sine") {
        mathieu::SeriesFamilyParams fam{smallx_opts.alpha, smallx_opts.beta,
                                        smallx_opts.gamma, smallx_opts.delta,
                                        smallx_opts.mu,    smallx_opts.r};
        theta = mathieu::theta_exponent(fam);
        sum = mathieu::general_sine_series(fam, smallx_opts.x, smallx_opts.tol)
                  .value.real();
        if (theta > 2.0) {
          prediction =
              mathieu::smallx_hartman_wintner(fam, smallx_opts.x, smallx_opts.tol)
                  .value.real();
          kind = "hartman_wintner";
        } else {
          prediction = mathieu::smallx_leading_sine(fam, smallx_opts.x);
          kind = "leading";
        }
      } else {
        auto lf = mathieu::log_factorial_sine_series(
            smallx_opts.alpha, smallx_opts.beta, smallx_opts.mu, smallx_opts.r,
            smallx_opts.x, smallx_opts.tol);
        theta = lf.theta;
        sum = lf.sum.value.real();
        if (!lf.hartman_wintner) {
          mathieu::fail(mathieu::ErrorKind::range,
                        "smallx logfact: prediction requires theta > 2");
        }
        prediction = lf.hartman_wintner->value.real();
        kind = "hartman_wintner";
      }
      cli::OutputTable table;
      table.columns = {"family", "theta", "x", "sum", "prediction", "ratio",
                       "prediction_kind"};
      table.add_row({smallx_opts.family, theta, smallx_opts.x, sum, prediction,
                     sum / prediction, kind});
      deliver(table, smallx_opts.common);
    });
  }

  // ---- probe-order ---------------------------------------------------------------
  struct {
    double mu = 1.0, tol = 1e-10;
    std::string r_list = "20,30,40";
    ArgumentZ z;
    CommonOpts common;
  } probe_opts;
  {
    auto* cmd = app.add_subcommand(
        "probe-order", "Fit the decay order of |F| on an r grid");
    cmd->add_option("--mu", probe_opts.mu)->required();
    add_z_options(cmd, probe_opts.z);
    cmd->add_option("--r", probe_opts.r_list, "Comma-separated r grid")
        ->capture_default_str();
    cmd->add_option("--tol", probe_opts.tol)->capture_default_str();
    add_common(cmd, probe_opts.common);
    cmd->final_callback([&]() {
      Complex z = probe_opts.z.resolve();
      std::vector<double> grid = parse_grid(probe_opts.r_list);
      double slope = mathieu::growth_order_probe(probe_opts.mu, z, grid, probe_opts.tol);
      double expected = (std::abs(z - Complex(1.0, 0.0)) < 1e-12)
                            ? -2.0 * probe_opts.mu
                            : -2.0 * probe_opts.mu - 2.0;
      cli::OutputTable table;
      table.columns = {"mu", "z_re", "z_im", "slope", "expected"};
      table.add_row({probe_opts.mu, z.real(), z.imag(), slope, expected});
      deliver(table, probe_opts.common);
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);  // --help and friends
    }
    std::cerr << "{\"error\": \"usage\", \"message\": " << '"' << e.what() << '"'
              << "}\n";
    return 2;
  } catch (const mathieu::Error& e) {
    std::cerr << "{\"error\": \"" << to_string(e.kind()) << "\", \"message\": \""
              << e.what() << "\"}\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "{\"error\": \"internal\", \"message\": \"" << e.what() << "\"}\n";
    return 1;
  }
  return 0;
}
