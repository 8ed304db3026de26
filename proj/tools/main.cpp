// Command-line front end: family generation, perturbations, zeros and
// interlacing, function-law residuals, relativistic flow checks, chain
// sequences, table regeneration and the identity suites.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "ricopoly/chainseq.hpp"
#include "ricopoly/family_spec.hpp"
#include "ricopoly/harness.hpp"
#include "ricopoly/stieltjes.hpp"
#include "ricopoly/toda.hpp"
#include "ricopoly/zeros.hpp"

using namespace ricopoly;
using ojson = nlohmann::ordered_json;

namespace {

struct GlobalOpts {
  std::string mode = "rational";  // rational | float
  double tol = 1e-10;
  std::string out;              // empty = stdout
  std::string format = "json";  // json | csv
  bool algebra_only = false;
};

void emit(const GlobalOpts& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) throw UsageError("cannot open output file '" + g.out + "'");
  f << text;
}

std::string spec_or_file(const std::string& arg) {
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream f(arg.substr(1));
    if (!f) throw UsageError("cannot read family spec file '" + arg.substr(1) + "'");
    std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    return text;
  }
  return arg;
}

template <class T>
CoefficientSequences<T> load_family(const std::string& spec_text, const std::string& pert_text) {
  auto seqs = parse_family_spec(spec_or_file(spec_text)).materialize<T>();
  if (!pert_text.empty()) {
    std::vector<Perturbation<T>> ps;
    for (const auto& e : parse_perturbation_spec(pert_text)) ps.push_back(e.materialize<T>());
    seqs = apply_perturbations(seqs, ps);
  }
  return seqs;
}

template <class T>
ojson polys_json(const std::vector<Polynomial<T>>& fam) {
  ojson arr = ojson::array();
  for (const auto& p : fam) arr.push_back(coeff_strings(p));
  return arr;
}

template <class T>
int run_family_mode(const GlobalOpts& g, const std::string& spec, const std::string& pert, int n,
                    int shift, const std::string& method) {
  const auto base = parse_family_spec(spec_or_file(spec)).materialize<T>();
  std::vector<Polynomial<T>> fam;
  std::string what;
  if (pert.empty()) {
    fam = generate_family(base, n, shift);
    what = "family";
  } else {
    const auto entries = parse_perturbation_spec(pert);
    if (entries.size() == 1 && method == "represented") {
      fam = perturbed_family_represented(base, entries[0].materialize<T>(), n);
    } else {
      std::vector<Perturbation<T>> ps;
      for (const auto& e : entries) ps.push_back(e.materialize<T>());
      fam = generate_family(apply_perturbations(base, ps), n, shift);
    }
    what = "perturbed family";
  }
  if (g.format == "csv") {
    std::string csv = "n,degree,coefficients\n";
    for (size_t i = 0; i < fam.size(); ++i) {
      csv += std::to_string(i) + "," + std::to_string(fam[i].degree()) + ",\"";
      const auto cs = coeff_strings(fam[i]);
      for (size_t j = 0; j < cs.size(); ++j) csv += (j ? " " : "") + cs[j];
      csv += "\"\n";
    }
    emit(g, csv);
  } else {
    ojson out{{"kind", what}, {"spec", spec}, {"mode", g.mode}, {"N", n}, {"shift", shift}};
    if (!pert.empty()) {
      out["perturbation"] = pert;
      out["method"] = method;
    }
    out["polynomials"] = polys_json(fam);
    emit(g, out.dump(2));
  }
  return 0;
}

int run_zeros(const GlobalOpts& g, const std::string& spec, const std::string& pert, int n) {
  if (g.mode == "rational")
    throw UsageError("zeros requires float mode (companion-matrix root finding); pass --mode float");
  const auto seqs = load_family<Rational>(spec, pert);  // exact coefficients, float rooting
  const auto fam = generate_family(seqs, n);
  const auto zs = real_zeros(fam.back(), g.tol);
  if (g.format == "csv") {
    std::string csv = "family,pert,n,j,zero,residual\n";
    for (size_t j = 0; j < zs.zeros.size(); ++j) {
      csv += seqs.name() + "," + (pert.empty() ? "-" : pert) + "," + std::to_string(n) + "," +
             std::to_string(j + 1) + "," + double_string(zs.zeros[j]) + "," +
             double_string(zs.residuals[j]) + "\n";
    }
    emit(g, csv);
  } else {
    ojson out{{"family", seqs.name()}, {"pert", pert.empty() ? "-" : pert}, {"n", n}};
    out["zeros"] = zs.zeros;
    out["residuals"] = zs.residuals;
    emit(g, out.dump(2));
  }
  return 0;
}

int run_interlace(const GlobalOpts& g, const std::string& spec, const std::string& pert, int n) {
  const auto base = load_family<Rational>(spec, "");
  const auto moved = load_family<Rational>(spec, pert);
  const auto zu = real_zeros(generate_family(base, n).back(), g.tol);
  const auto zp = real_zeros(generate_family(moved, n).back(), g.tol);
  const auto rep = interlacing_report(zp, zu);
  ojson details = ojson::array();
  for (const auto& e : rep.details)
    details.push_back(
        ojson{{"x", e.x}, {"source", e.tag == 'A' ? "perturbed" : "unperturbed"}, {"common", e.common}});
  std::string pattern;
  switch (rep.pattern) {
    case InterlacingPattern::a_starts: pattern = "perturbed-starts"; break;
    case InterlacingPattern::b_starts: pattern = "unperturbed-starts"; break;
    case InterlacingPattern::violated: pattern = "violated"; break;
    case InterlacingPattern::none: pattern = "none"; break;
  }
  ojson common = ojson::array();
  for (const auto& [xa, xb] : rep.common) common.push_back(ojson{{"perturbed", xa}, {"unperturbed", xb}});
  ojson out{{"family", base.name()}, {"pert", pert},       {"n", n},
            {"pattern", pattern},    {"common", common},   {"details", details}};
  emit(g, out.dump(2));
  return 0;
}

template <class T>
int run_stieltjes_mode(const GlobalOpts& g, const std::string& spec, const std::string& pert_text,
                       int depth, const std::string& z_text) {
  const auto seqs = parse_family_spec(spec_or_file(spec)).materialize<T>();
  const T z = scalar_traits<T>::from_rational(parse_rational(z_text));
  const auto entries = parse_perturbation_spec(pert_text);
  if (entries.size() != 1) throw UsageError("stieltjes expects exactly one perturbation");
  const auto pert = entries[0].materialize<T>();
  const int k = pert.k;

  const auto full = ri_fraction(seqs);
  const auto tail = tail_fraction(seqs, k);
  const auto pert_full = ri_fraction(apply_perturbation(seqs, pert));
  const auto h_tail = homography_from_tail(seqs, pert);
  const auto h_full = homography_from_full(seqs, pert);

  ojson out{{"family", seqs.name()},
            {"perturbation", pert_text},
            {"z", z_text},
            {"depth", depth},
            {"mode", g.mode}};
  const T u_full = convergent(full, z, depth);
  const T u_pert = convergent(pert_full, z, depth);
  out["convergents"] = ojson{{"unperturbed", scalar_traits<T>::str(u_full)},
                             {"perturbed", scalar_traits<T>::str(u_pert)}};

  ojson residuals = ojson::object();
  {
    const T v = h_full.apply(u_full, z);
    residuals["full_law"] = scalar_traits<T>::str(T(u_pert - v));
  }
  if (depth > k + 1) {
    const T u_tail = convergent(tail, z, depth - k - 1);
    const T v = h_tail.apply(u_tail, z);
    residuals["tail_law"] = scalar_traits<T>::str(T(u_pert - v));
    const T w = seqs.lambda(k + 1) * (z - seqs.a(k + 1));
    const auto P = generate_family(seqs, k + 1);
    const auto Q = generate_second_kind(seqs, k + 1);
    const T den = P[static_cast<size_t>(k)].value_at(z) * u_full - Q[static_cast<size_t>(k)].value_at(z);
    if (den != T(0)) {
      const T rhs =
          (P[static_cast<size_t>(k) + 1].value_at(z) * u_full - Q[static_cast<size_t>(k) + 1].value_at(z)) /
          den;
      residuals["tail_from_full_law"] = scalar_traits<T>::str(T(w * u_tail - rhs));
    }
  }
  out["identity_residuals"] = residuals;
  emit(g, out.dump(2));
  return 0;
}

DiscreteMeasure<double> parse_measure(const std::string& nodes, const std::string& weights,
                                      const std::string& file) {
  auto parse_list = [](const std::string& text) {
    std::vector<double> out;
    std::string cur;
    for (char ch : text + ",") {
      if (ch == ',') {
        if (!cur.empty()) out.push_back(parse_rational(cur).get_d());
        cur.clear();
      } else if (!std::isspace(static_cast<unsigned char>(ch))) {
        cur.push_back(ch);
      }
    }
    return out;
  };
  if (!file.empty()) {
    std::ifstream f(file);
    if (!f) throw UsageError("cannot read measure file '" + file + "'");
    std::string n_line, w_line;
    std::getline(f, n_line);
    std::getline(f, w_line);
    return DiscreteMeasure<double>(parse_list(n_line), parse_list(w_line));
  }
  return DiscreteMeasure<double>(parse_list(nodes), parse_list(weights));
}

int run_toda(const GlobalOpts& g, const DiscreteMeasure<double>& measure, double p, double q, double t0,
             double h, int n, const std::string& sched_text, const std::string& integrate_text) {
  if (g.mode == "rational" && !g.algebra_only)
    throw UsageError(
        "toda requires float mode (exponential deformation); pass --mode float, or "
        "--algebra-only for the exact t = 0 checks");
  std::optional<PerturbationSchedule<double>> sched;
  if (!sched_text.empty()) {
    const auto parts = parse_perturbation_spec(sched_text);
    if (parts.size() != 1) throw UsageError("--sched expects a single k=..,mu=..,nu=.. entry");
    sched = PerturbationSchedule<double>::constants(parts[0].k, parts[0].mu.get_d(), parts[0].nu.get_d());
  }

  if (g.mode == "rational") {
    // exact frame of the undeformed functional
    std::vector<Rational> rn, rw;
    for (double x : measure.nodes) rn.push_back(parse_rational(double_string(x)));
    for (double w : measure.weights) rw.push_back(parse_rational(double_string(w)));
    const DiscreteMeasure<Rational> rm(rn, rw);
    TodaParams<Rational> par{Rational(0), Rational(0), Rational(0)};
    const auto f = coeffs_from_moments(rm, par, n);
    ojson out{{"mode", "rational"}, {"t", "0"}};
    ojson cs = ojson::array(), ls = ojson::array();
    for (int j = 0; j <= n; ++j) {
      cs.push_back(rational_string(f.c[static_cast<size_t>(j)]));
      ls.push_back(rational_string(f.lambda[static_cast<size_t>(j)]));
    }
    out["c"] = cs;
    out["lambda"] = ls;
    emit(g, out.dump(2));
    return 0;
  }

  if (!integrate_text.empty()) {
    const auto comma = integrate_text.find(',');
    if (comma == std::string::npos) throw UsageError("--integrate expects T,steps");
    const double T_end = parse_rational(integrate_text.substr(0, comma)).get_d();
    const int steps = static_cast<int>(std::stol(integrate_text.substr(comma + 1)));
    TodaParams<double> par{p, q, t0};
    const auto start = coeffs_from_moments(measure, par, n);
    const auto traj = integrate_flow(start, par, sched ? &*sched : nullptr, T_end, steps);
    if (g.format == "csv") {
      std::string csv = "step,t";
      for (int j = 1; j <= n; ++j) csv += ",c" + std::to_string(j);
      for (int j = 2; j <= n; ++j) csv += ",lambda" + std::to_string(j);
      csv += "\n";
      const size_t stride = static_cast<size_t>(std::max<int>(1, steps / 200));
      for (size_t s = 0; s < traj.size(); s += stride) {
        csv += std::to_string(s) + "," + double_string(t0 + T_end * static_cast<double>(s) / steps);
        for (int j = 1; j <= n; ++j) csv += "," + double_string(traj[s].c[static_cast<size_t>(j)]);
        for (int j = 2; j <= n; ++j) csv += "," + double_string(traj[s].lambda[static_cast<size_t>(j)]);
        csv += "\n";
      }
      emit(g, csv);
    } else {
      ojson out{{"T", T_end}, {"steps", steps}};
      out["endpoint_c"] = std::vector<double>(traj.back().c.begin() + 1, traj.back().c.end());
      out["endpoint_lambda"] = std::vector<double>(traj.back().lambda.begin() + 2, traj.back().lambda.end());
      emit(g, out.dump(2));
    }
    return 0;
  }

  TodaParams<double> par{p, q, t0};
  const auto rep = verify_flow(measure, par, sched ? &*sched : nullptr, t0, h, n);
  const auto rep_half = verify_flow(measure, par, sched ? &*sched : nullptr, t0, h / 2, n);
  ojson checks = ojson::array();
  for (const auto& c : rep.checks)
    checks.push_back(ojson{
        {"var", std::string(1, c.var)}, {"n", c.n}, {"fd", c.fd}, {"rhs", c.rhs}, {"residual", c.residual}});
  const double order = std::log2(rep.max_residual / rep_half.max_residual);
  ojson out{{"p", p},           {"q", q}, {"t0", t0}, {"h", h}, {"N", n}, {"max_residual", rep.max_residual},
            {"observed_order", order}};
  if (!sched_text.empty()) out["sched"] = sched_text;
  out["checks"] = checks;
  emit(g, out.dump(2));
  return 0;
}

ChainSequence<Rational> parse_chain(const std::string& text) {
  const std::string s = spec_or_file(text);
  if (s.rfind("builtin:", 0) == 0) {
    // builtin:eta,eta=<rat>,t=<rat>
    const std::string rest = s.substr(8);
    const std::string which = rest.substr(0, rest.find(','));
    if (which != "eta") throw UsageError("unknown builtin chain '" + which + "'");
    Rational eta(0), t(0);
    size_t pos = rest.find(',');
    while (pos != std::string::npos) {
      const size_t next = rest.find(',', pos + 1);
      const std::string kv = rest.substr(pos + 1, next == std::string::npos ? next : next - pos - 1);
      const auto eq = kv.find('=');
      if (eq == std::string::npos) throw UsageError("expected key=value in chain spec");
      const std::string key = kv.substr(0, eq);
      if (key == "eta")
        eta = parse_rational(kv.substr(eq + 1));
      else if (key == "t")
        t = parse_rational(kv.substr(eq + 1));
      else
        throw UsageError("unknown chain field '" + key + "'");
      pos = next;
    }
    return eta_family(eta, t).chain;
  }
  // comma list, optionally ending in "..." to repeat the last element
  std::vector<Rational> values;
  bool repeat_tail = false;
  std::string cur;
  for (char ch : s + ",") {
    if (ch == ',') {
      if (cur == "...") {
        repeat_tail = true;
      } else if (!cur.empty()) {
        values.push_back(parse_rational(cur));
      }
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur.push_back(ch);
    }
  }
  if (values.empty()) throw UsageError("empty chain spec");
  if (repeat_tail) {
    const Rational tail = values.back();
    values.pop_back();
    return ChainSequence<Rational>::head_then_constant(values, tail);
  }
  return ChainSequence<Rational>::from_list(values, "chain");
}

int run_chain(const GlobalOpts& g, const std::string& d_text, bool complement,
              const std::string& perturb_nu, int szego_n, const std::string& delta0, int n) {
  auto chain = parse_chain(d_text);
  ojson out{{"chain", d_text}};
  if (!perturb_nu.empty()) {
    const auto comma = perturb_nu.find(',');
    if (comma == std::string::npos) throw UsageError("--perturb-nu expects k,nu");
    const int level = static_cast<int>(std::stol(perturb_nu.substr(0, comma)));
    const Rational nu = parse_rational(perturb_nu.substr(comma + 1));
    chain = codilate_chain(chain, level, nu);
    out["perturb_nu"] = perturb_nu;
  }
  if (complement) {
    chain = complementary(chain, n + 1);
    out["complemented"] = true;
  }

  ojson dvals = ojson::array();
  for (int j = 1; j <= n; ++j) dvals.push_back(rational_string(chain.d(j)));
  out["d"] = dvals;

  const auto m = minimal_parameters(chain, n);
  ojson mv = ojson::array();
  for (const auto& v : m) mv.push_back(rational_string(v));
  out["minimal_parameters"] = mv;

  const auto analysis = analyze_chain(to_double_chain(chain), n);
  out["maximal_parameters"] = analysis.maximal;
  out["sppcs"] = analysis.sppcs;

  if (szego_n > 0) {
    const auto sz = szego_from_chain(chain, szego_n);
    out["szego"] = polys_json(sz.phi);
    ojson vb = ojson::array();
    for (const auto& v : sz.verblunsky) vb.push_back(rational_string(v));
    out["verblunsky"] = vb;
  }
  if (!delta0.empty()) {
    const auto delta = delta_from_chain(parse_rational(delta0), chain, n);
    ojson dv = ojson::array();
    for (int j = 1; j <= delta.size(); ++j) dv.push_back(rational_string(delta.at(j)));
    out["delta"] = dv;
  }
  emit(g, out.dump(2));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "orthogonal polynomial toolkit: single-level perturbations of three-term recurrences "
      "with (z - a_n) companions, their zeros, function laws, flows and chain sequences"};
  app.require_subcommand(1);

  GlobalOpts g;
  if (const char* env = std::getenv("RI_COPOLY_PRECISION")) g.tol = std::atof(env);
  app.add_option("--mode", g.mode, "numeric mode: rational | float")
      ->check(CLI::IsMember({"rational", "float"}));
  app.add_option("--tol", g.tol, "float tolerance (also via RI_COPOLY_PRECISION)");
  app.add_option("--out", g.out, "output path (default stdout)");
  app.add_option("--format", g.format, "output format: json | csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--algebra-only", g.algebra_only, "permit rational mode on flows (exact t = 0 checks)");

  std::string spec, pert, method = "direct", z_text = "5", sched_text, integrate_text;
  std::string nodes, weights, measure_file, d_text, perturb_nu, delta0;
  int n = 6, shift = 0, depth = 6, szego_n = 0;
  double p = 1, q = 0, t0 = 0, h = 1e-3;

  auto* fam_cmd = app.add_subcommand("family", "generate a polynomial family");
  fam_cmd->add_option("--spec", spec, "family spec (or @file)")->required();
  fam_cmd->add_option("--n", n, "largest degree");
  fam_cmd->add_option("--shift", shift, "coefficient index offset (associated families)");

  auto* pert_cmd = app.add_subcommand("perturb", "generate a perturbed family");
  pert_cmd->add_option("--spec", spec, "family spec (or @file)")->required();
  pert_cmd->add_option("--perturb", pert, "k=..,mu=..,nu=..[;...]")->required();
  pert_cmd->add_option("--n", n, "largest degree");
  pert_cmd->add_option("--method", method, "direct | represented")
      ->check(CLI::IsMember({"direct", "represented"}));

  auto* zeros_cmd = app.add_subcommand("zeros", "real zeros of a family member");
  zeros_cmd->add_option("--spec", spec, "family spec (or @file)")->required();
  zeros_cmd->add_option("--perturb", pert, "optional perturbation(s)");
  zeros_cmd->add_option("--n", n, "degree");

  auto* inter_cmd = app.add_subcommand("interlace", "classify perturbed vs unperturbed zeros");
  inter_cmd->add_option("--spec", spec, "family spec (or @file)")->required();
  inter_cmd->add_option("--perturb", pert, "perturbation(s)")->required();
  inter_cmd->add_option("--n", n, "degree");

  auto* st_cmd = app.add_subcommand("stieltjes", "function-law residuals at finite truncation");
  st_cmd->add_option("--family", spec, "family spec (or @file)")->required();
  st_cmd->add_option("--perturb", pert, "k=..,mu=..,nu=..")->required();
  st_cmd->add_option("--depth", depth, "truncation depth");
  st_cmd->add_option("--z", z_text, "sample point (rational)");

  auto* toda_cmd = app.add_subcommand("toda", "relativistic flow checks and integration");
  toda_cmd->add_option("--nodes", nodes, "measure nodes, comma separated");
  toda_cmd->add_option("--weights", weights, "measure weights, comma separated");
  toda_cmd->add_option("--measure-file", measure_file, "file with node and weight lines");
  toda_cmd->add_option("--p", p, "deformation coefficient of x");
  toda_cmd->add_option("--q", q, "deformation coefficient of 1/x");
  toda_cmd->add_option("--t0", t0, "expansion time");
  toda_cmd->add_option("--h", h, "finite-difference step");
  toda_cmd->add_option("--n", n, "frame depth");
  toda_cmd->add_option("--sched", sched_text, "constant schedule k=..,mu=..,nu=..");
  toda_cmd->add_option("--integrate", integrate_text, "T,steps");

  auto* chain_cmd = app.add_subcommand("chain", "chain sequence parameters and constructions");
  chain_cmd->add_option("--d", d_text, "comma list (tail '...'), or builtin:eta,eta=..,t=..")->required();
  chain_cmd->add_flag("--complement", "replace by the complementary sequence");
  chain_cmd->add_option("--perturb-nu", perturb_nu, "k,nu co-dilation");
  chain_cmd->add_option("--szego", szego_n, "emit the Szego family to this degree");
  chain_cmd->add_option("--delta0", delta0, "seed the delta recursion");
  chain_cmd->add_option("--n", n, "parameter range");

  std::string table_id, suite_name;
  auto* table_cmd = app.add_subcommand("table", "regenerate a published zero table");
  table_cmd->add_option("id", table_id, "T1..T5")->required();
  auto* suite_cmd = app.add_subcommand("suite", "run a module identity suite");
  suite_cmd->add_option("name", suite_name, "representation|transfer|stieltjes|toda|chain")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*fam_cmd || *pert_cmd) {
      const bool rational = g.mode == "rational";
      return rational ? run_family_mode<Rational>(g, spec, *pert_cmd ? pert : "", n, shift, method)
                      : run_family_mode<double>(g, spec, *pert_cmd ? pert : "", n, shift, method);
    }
    if (*zeros_cmd) return run_zeros(g, spec, pert, n);
    if (*inter_cmd) return run_interlace(g, spec, pert, n);
    if (*st_cmd) {
      return g.mode == "rational" ? run_stieltjes_mode<Rational>(g, spec, pert, depth, z_text)
                                  : run_stieltjes_mode<double>(g, spec, pert, depth, z_text);
    }
    if (*toda_cmd) {
      const auto measure = parse_measure(nodes, weights, measure_file);
      return run_toda(g, measure, p, q, t0, h, n, sched_text, integrate_text);
    }
    if (*chain_cmd) {
      return run_chain(g, d_text, chain_cmd->count("--complement") > 0, perturb_nu, szego_n, delta0, n);
    }
    if (*table_cmd) {
      const auto rep = run_table(table_id);
      emit(g, g.format == "csv" ? rep.to_csv() : rep.to_json());
      return rep.all_passed() ? 0 : 1;
    }
    if (*suite_cmd) {
      const auto rep = run_suite(suite_name);
      emit(g, g.format == "csv" ? rep.to_csv() : rep.to_json());
      return rep.all_passed() ? 0 : 1;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
