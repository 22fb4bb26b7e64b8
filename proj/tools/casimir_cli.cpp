// casimir: command-line surface for the curved-space oscillator toolkit.
// Subcommands: verify-classical, verify-identity, spectrum, ladder, oracle,
// adjudicate. JSON (primary) or CSV on stdout, logs on stderr.
// Exit codes: 0 success, 1 invariant violation, 2 invalid input.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "casimir/classical.hpp"
#include "casimir/oracle.hpp"
#include "casimir/qalgebra.hpp"
#include "casimir/report.hpp"
#include "casimir/spectrum.hpp"

using namespace casimir;

namespace {

struct ParamOpts {
  std::string hbar = "1";
  std::string kappa, lambda;
  std::string omega, omega_sq;
  std::string convention = "lambda=-kappa";
};

struct OutputOpts {
  std::string format = "json";
  std::string out_file;
};

void add_param_flags(CLI::App* cmd, ParamOpts& p) {
  cmd->add_option("--hbar", p.hbar, "Planck constant (rational)");
  auto* k = cmd->add_option("--kappa", p.kappa, "curvature parameter kappa (rational)");
  auto* l = cmd->add_option("--lambda", p.lambda, "metric nonlinearity lambda (rational)");
  k->excludes(l);
  auto* w = cmd->add_option("--omega", p.omega, "oscillator frequency omega (rational)");
  auto* w2 = cmd->add_option("--omega-sq", p.omega_sq, "squared frequency omega^2 (rational)");
  w->excludes(w2);
  cmd->add_option("--convention", p.convention, "kappa/lambda identification")
      ->check(CLI::IsMember({"lambda=-kappa", "lambda=kappa"}));
}

void add_output_flags(CLI::App* cmd, OutputOpts& o) {
  cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", o.out_file, "write the report to FILE instead of stdout");
}

ModelParams make_params(const ParamOpts& p) {
  if (p.kappa.empty() == p.lambda.empty())
    throw std::invalid_argument("supply exactly one of --kappa or --lambda");
  KappaConvention conv = p.convention == "lambda=kappa" ? KappaConvention::LambdaIsKappa
                                                        : KappaConvention::LambdaIsMinusKappa;
  Rational osq(1);
  if (!p.omega.empty()) {
    Rational w = Rational::from_string(p.omega);
    osq = w * w;
  } else if (!p.omega_sq.empty()) {
    osq = Rational::from_string(p.omega_sq);
  }
  ModelParams mp;
  if (!p.kappa.empty()) {
    mp.hbar = Rational::from_string(p.hbar);
    mp.kappa = Rational::from_string(p.kappa);
    mp.omega_sq = osq;
    mp.convention = conv;
  } else {
    mp = ModelParams::from_lambda(Rational::from_string(p.hbar),
                                  Rational::from_string(p.lambda), osq, conv);
  }
  mp.validate();
  return mp;
}

JsonValue params_json(const ModelParams& mp) {
  JsonValue j = JsonValue::object();
  j["hbar"] = mp.hbar.str();
  j["kappa"] = mp.kappa.str();
  j["lambda"] = mp.lambda().str();
  j["omega_sq"] = mp.omega_sq.str();
  j["convention"] = mp.convention == KappaConvention::LambdaIsMinusKappa ? "lambda=-kappa"
                                                                         : "lambda=kappa";
  return j;
}

JsonValue envelope(const std::string& command, const ModelParams& mp) {
  JsonValue j = JsonValue::object();
  j["schema"] = "casimir-spectra/1";
  j["command"] = command;
  j["params"] = params_json(mp);
  return j;
}

void emit(const std::string& text, const OutputOpts& o) {
  if (o.out_file.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream f(o.out_file);
    if (!f) throw std::invalid_argument("cannot open output file " + o.out_file);
    f << text << "\n";
  }
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string fmt17(double d) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", d);
  return buf;
}

JsonValue line_json(const SpectrumLine& l, bool with_amplitudes) {
  JsonValue j = JsonValue::object();
  j["p"] = l.p;
  j["u_branch"] = l.u_branch;
  j["u"] = l.u;
  j["E"] = l.E;
  j["u_exact"] = l.u_exact ? JsonValue(l.u_exact->str()) : JsonValue(nullptr);
  j["E_exact"] = l.E_exact ? JsonValue(l.E_exact->str()) : JsonValue(nullptr);
  JsonValue phi = JsonValue::array();
  for (double v : l.phi_ladder) phi.push(v);
  j["phi"] = std::move(phi);
  if (with_amplitudes) {
    JsonValue amps = JsonValue::array();
    for (double v : ladder_amplitudes(l)) amps.push(v);
    j["amplitudes"] = std::move(amps);
  }
  JsonValue flags = JsonValue::object();
  flags["phi0_zero"] = l.phi0_zero;
  flags["phiP1_zero"] = l.phiP1_zero;
  flags["all_positive"] = l.all_positive;
  flags["matches_closed_form"] = l.matches_closed_form;
  flags["exact"] = l.exact;
  j["flags"] = std::move(flags);
  return j;
}

std::string lines_csv(const std::vector<SpectrumLine>& lines, bool with_amplitudes) {
  std::ostringstream os;
  os << "p,u_branch,u,E,u_exact,E_exact,phi" << (with_amplitudes ? ",amplitudes" : "")
     << ",phi0_zero,phiP1_zero,all_positive,matches_closed_form,exact";
  for (const auto& l : lines) {
    os << "\n" << l.p << "," << csv_escape(l.u_branch) << "," << fmt17(l.u) << ","
       << fmt17(l.E) << "," << csv_escape(l.u_exact ? l.u_exact->str() : "") << ","
       << csv_escape(l.E_exact ? l.E_exact->str() : "") << ",";
    std::string phis;
    for (std::size_t i = 0; i < l.phi_ladder.size(); ++i)
      phis += (i ? ";" : "") + fmt17(l.phi_ladder[i]);
    os << csv_escape(phis);
    if (with_amplitudes) {
      std::string amps;
      auto a = ladder_amplitudes(l);
      for (std::size_t i = 0; i < a.size(); ++i) amps += (i ? ";" : "") + fmt17(a[i]);
      os << "," << csv_escape(amps);
    }
    os << "," << l.phi0_zero << "," << l.phiP1_zero << "," << l.all_positive << ","
       << l.matches_closed_form << "," << l.exact;
  }
  return os.str();
}

JsonValue comparison_json(const PhiComparison& c) {
  JsonValue j = JsonValue::object();
  j["proportional"] = c.proportional;
  j["ratio"] = c.ratio.str();
  JsonValue terms = JsonValue::array();
  for (const auto& t : c.mismatch_terms) terms.push(t);
  j["mismatch_terms"] = std::move(terms);
  return j;
}

struct SpectrumOpts {
  int p_max = 3;
  std::string mode = "closed";
  std::string branch;
};

void add_spectrum_flags(CLI::App* cmd, SpectrumOpts& s) {
  cmd->add_option("--p-max", s.p_max, "largest Fock cutoff p");
  cmd->add_option("--mode", s.mode, "solver mode")->check(CLI::IsMember({"closed", "generic"}));
  cmd->add_option("--branch", s.branch, "restrict output to one u-branch (u1..u8)");
}

std::vector<SpectrumLine> run_solve(const ModelParams& mp, const SpectrumOpts& s) {
  if (s.p_max < 0) throw std::invalid_argument("--p-max must be >= 0");
  auto res = solve_spectrum(
      mp, s.p_max, s.mode == "generic" ? SolveMode::Generic : SolveMode::ClosedForm);
  if (s.branch.empty()) return res.lines;
  std::vector<SpectrumLine> out;
  for (auto& l : res.lines)
    if (l.u_branch == s.branch) out.push_back(l);
  return out;
}

struct GridOpts {
  int n_r = 512;
  double r_max = 0;  // 0: use the parameter-adapted standard radius
  int m_max = 8;
  int levels = 3;
  int k = 6;
};

void add_grid_flags(CLI::App* cmd, GridOpts& g) {
  cmd->add_option("--n-r", g.n_r, "radial grid points on the finest level");
  cmd->add_option("--r-max", g.r_max, "domain radius (0: automatic)");
  cmd->add_option("--m-max", g.m_max, "largest angular index");
  cmd->add_option("--levels", g.levels, "refinement levels for Richardson estimates");
  cmd->add_option("--k", g.k, "eigenvalues per angular sector");
}

GridSpec make_grid(const GridOpts& g, const ModelParams& mp) {
  GridSpec grid = GridSpec::standard(mp);
  grid.n_r = g.n_r;
  grid.m_max = g.m_max;
  grid.refinement_levels = g.levels;
  if (g.r_max > 0) grid.r_max = g.r_max;
  return grid;
}

int cmd_verify_classical(const ModelParams& mp, int points, unsigned seed, double tol,
                         const OutputOpts& out) {
  auto table = verify_quadratic_poisson(mp, points, seed);
  bool pass = table.pass(tol);
  JsonValue j = envelope("verify-classical", mp);
  JsonValue r = JsonValue::object();
  r["max_AC"] = table.max_AC;
  r["max_BC"] = table.max_BC;
  r["max_jacobi"] = table.max_jacobi;
  r["max_casimir"] = table.max_casimir;
  r["max_conservation"] = table.max_conservation;
  r["max_F1"] = table.max_F1;
  r["max_F2"] = table.max_F2;
  r["max_bracket_table"] = table.max_bracket_table;
  r["max_antisymmetry"] = table.max_antisymmetry;
  r["points_used"] = table.points_used;
  r["convention"] = table.convention;
  r["pass"] = pass;
  j["residuals"] = std::move(r);
  if (out.format == "csv") {
    std::ostringstream os;
    os << "quantity,value\nmax_AC," << fmt17(table.max_AC) << "\nmax_BC," << fmt17(table.max_BC)
       << "\nmax_jacobi," << fmt17(table.max_jacobi) << "\nmax_casimir,"
       << fmt17(table.max_casimir) << "\nmax_conservation," << fmt17(table.max_conservation)
       << "\nmax_F1," << fmt17(table.max_F1) << "\nmax_F2," << fmt17(table.max_F2)
       << "\nmax_bracket_table," << fmt17(table.max_bracket_table) << "\nmax_antisymmetry,"
       << fmt17(table.max_antisymmetry) << "\npass," << pass;
    emit(os.str(), out);
  } else {
    emit(j.dump(), out);
  }
  if (!pass) std::cerr << "verify-classical: residuals exceed tolerance\n";
  return pass ? 0 : 1;
}

int cmd_verify_identity(const ModelParams& mp, const OutputOpts& out) {
  auto rep = verify_phi_identity(mp);
  JsonValue j = envelope("verify-identity", mp);
  JsonValue id = JsonValue::object();
  id["built_vs_factorized"] = comparison_json(rep.built_vs_factorized);
  id["built_plus_vs_factorized"] = comparison_json(rep.built_plus_vs_factorized);
  id["transcribed_vs_factorized"] = comparison_json(rep.transcribed_vs_factorized);
  id["resolved_quartic_sign"] = rep.resolved_quartic_sign;
  id["consistent"] = rep.consistent();
  j["identity"] = std::move(id);
  if (out.format == "csv") {
    std::ostringstream os;
    os << "quantity,value\nbuilt_vs_factorized," << rep.built_vs_factorized.proportional
       << "\ntranscribed_vs_factorized," << rep.transcribed_vs_factorized.proportional
       << "\nresolved_quartic_sign," << rep.resolved_quartic_sign << "\nconsistent,"
       << rep.consistent();
    emit(os.str(), out);
  } else {
    emit(j.dump(), out);
  }
  if (!rep.consistent()) std::cerr << "verify-identity: structure functions disagree\n";
  return rep.consistent() ? 0 : 1;
}

int cmd_spectrum(const ModelParams& mp, const SpectrumOpts& s, bool with_amplitudes,
                 const OutputOpts& out) {
  auto lines = run_solve(mp, s);
  if (out.format == "csv") {
    emit(lines_csv(lines, with_amplitudes), out);
    return 0;
  }
  JsonValue j = envelope(with_amplitudes ? "ladder" : "spectrum", mp);
  JsonValue arr = JsonValue::array();
  for (const auto& l : lines) arr.push(line_json(l, with_amplitudes));
  j["lines"] = std::move(arr);
  emit(j.dump(), out);
  return 0;
}

int cmd_oracle(const ModelParams& mp, const GridOpts& g, const OutputOpts& out) {
  auto spec = oracle_spectrum(mp, make_grid(g, mp), g.k);
  if (out.format == "csv") {
    std::ostringstream os;
    os << "E,m,level,convergence,order";
    for (const auto& ev : spec.eigenvalues)
      os << "\n" << fmt17(ev.E) << "," << ev.m << "," << ev.level << ","
         << fmt17(ev.convergence) << "," << fmt17(ev.order);
    emit(os.str(), out);
    return 0;
  }
  JsonValue j = envelope("oracle", mp);
  JsonValue arr = JsonValue::array();
  for (const auto& ev : spec.eigenvalues) {
    JsonValue e = JsonValue::object();
    e["E"] = ev.E;
    e["m"] = ev.m;
    e["level"] = ev.level;
    e["convergence"] = ev.convergence;
    e["order"] = ev.order;
    arr.push(std::move(e));
  }
  j["eigenvalues"] = std::move(arr);
  emit(j.dump(), out);
  return 0;
}

int cmd_adjudicate(const ModelParams& mp, const SpectrumOpts& s, const GridOpts& g,
                   double tol_factor, const OutputOpts& out) {
  auto lines = run_solve(mp, s);
  auto spec = oracle_spectrum(mp, make_grid(g, mp), g.k);
  auto rep = adjudicate(lines, spec, tol_factor);
  JsonValue j = envelope("adjudicate", mp);
  JsonValue adj = JsonValue::object();
  JsonValue names = JsonValue::array();
  for (const auto& n : rep.convention_names) names.push(n);
  adj["conventions"] = std::move(names);
  JsonValue larr = JsonValue::array();
  for (const auto& la : rep.lines) {
    JsonValue e = JsonValue::object();
    e["p"] = la.p;
    e["E"] = la.E;
    e["closed_form"] = la.closed_form;
    JsonValue pred = JsonValue::array(), near = JsonValue::array(), diff = JsonValue::array(),
              match = JsonValue::array();
    for (std::size_t c = 0; c < 4; ++c) {
      pred.push(la.predicted[c]);
      near.push(la.nearest[c]);
      diff.push(la.diff[c]);
      match.push(la.matched[c]);
    }
    e["predicted"] = std::move(pred);
    e["nearest"] = std::move(near);
    e["diff"] = std::move(diff);
    e["matched"] = std::move(match);
    e["outside_all"] = la.outside_all;
    larr.push(std::move(e));
  }
  adj["lines"] = std::move(larr);
  JsonValue counts = JsonValue::array(), cfcounts = JsonValue::array();
  for (std::size_t c = 0; c < 4; ++c) {
    counts.push(rep.match_counts[c]);
    cfcounts.push(rep.closed_form_match_counts[c]);
  }
  adj["match_counts"] = std::move(counts);
  adj["closed_form_match_counts"] = std::move(cfcounts);
  adj["closed_form_lines"] = rep.closed_form_lines;
  adj["winner"] = rep.winner;
  adj["unique_winner"] = rep.unique_winner;
  JsonValue notes = JsonValue::array();
  for (const auto& n : rep.notes) notes.push(n);
  adj["notes"] = std::move(notes);
  j["adjudication"] = std::move(adj);
  if (out.format == "csv") {
    std::ostringstream os;
    os << "p,E,closed_form,matched_root+_overall+,matched_root-_overall+,"
          "matched_root+_overall-,matched_root-_overall-,outside_all";
    for (const auto& la : rep.lines)
      os << "\n" << la.p << "," << fmt17(la.E) << "," << la.closed_form << "," << la.matched[0]
         << "," << la.matched[1] << "," << la.matched[2] << "," << la.matched[3] << ","
         << la.outside_all;
    emit(os.str(), out);
  } else {
    emit(j.dump(), out);
  }
  if (!rep.unique_winner) std::cerr << "adjudicate: no unique sign/branch convention\n";
  return rep.unique_winner ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"curved-space oscillator spectra: exact algebra and numerical oracle"};
  app.require_subcommand(1);

  ParamOpts pc, pi, ps, pl, po, pa;
  OutputOpts oc, oi, os_, ol, oo, oa;
  SpectrumOpts ss, sl, sa;
  GridOpts go, ga;
  int points = 100;
  unsigned seed = 7;
  double tol = 1e-5, tol_factor = 3.0;

  auto* vc = app.add_subcommand("verify-classical", "Poisson-algebra residual sweep");
  add_param_flags(vc, pc);
  add_output_flags(vc, oc);
  vc->add_option("--points", points, "number of sampled phase-space points");
  vc->add_option("--seed", seed, "sampling seed");
  vc->add_option("--tol", tol, "finite-difference residual tolerance");

  auto* vi = app.add_subcommand("verify-identity", "structure-function identity check");
  add_param_flags(vi, pi);
  add_output_flags(vi, oi);

  auto* sp = app.add_subcommand("spectrum", "admissible (u, E) lines");
  add_param_flags(sp, ps);
  add_output_flags(sp, os_);
  add_spectrum_flags(sp, ss);

  auto* ld = app.add_subcommand("ladder", "spectrum lines with ladder amplitudes");
  add_param_flags(ld, pl);
  add_output_flags(ld, ol);
  add_spectrum_flags(ld, sl);

  auto* oc_cmd = app.add_subcommand("oracle", "numerical radial eigenvalues");
  add_param_flags(oc_cmd, po);
  add_output_flags(oc_cmd, oo);
  add_grid_flags(oc_cmd, go);

  auto* ad = app.add_subcommand("adjudicate", "match algebraic lines to the oracle");
  add_param_flags(ad, pa);
  add_output_flags(ad, oa);
  add_spectrum_flags(ad, sa);
  add_grid_flags(ad, ga);
  ad->add_option("--tol-factor", tol_factor, "match window in Richardson-estimate units");
  sa.p_max = 2;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (vc->parsed()) return cmd_verify_classical(make_params(pc), points, seed, tol, oc);
    if (vi->parsed()) return cmd_verify_identity(make_params(pi), oi);
    if (sp->parsed()) return cmd_spectrum(make_params(ps), ss, false, os_);
    if (ld->parsed()) return cmd_spectrum(make_params(pl), sl, true, ol);
    if (oc_cmd->parsed()) return cmd_oracle(make_params(po), go, oo);
    if (ad->parsed()) return cmd_adjudicate(make_params(pa), sa, ga, tol_factor, oa);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
