#include "rmppa/bench.hpp"
#include "rmppa/config.hpp"
#include "rmppa/diagnostics.hpp"
#include "rmppa/io.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace rmppa;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitNumerical = 2;

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open config file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::vector<double> parse_double_list(const std::string& csv) {
  std::vector<double> out;
  std::istringstream is(csv);
  std::string tok;
  while (std::getline(is, tok, ',')) out.push_back(std::stod(tok));
  return out;
}

std::vector<std::string> parse_string_list(const std::string& csv) {
  std::vector<std::string> out;
  std::istringstream is(csv);
  std::string tok;
  while (std::getline(is, tok, ',')) out.push_back(tok);
  return out;
}

void write_manifest(const fs::path& dir, const InstanceSpec& spec,
                    const std::string& source) {
  std::ofstream f(dir / "manifest.txt");
  f << "source = " << source << "\n"
    << "m = " << spec.m << "\n"
    << "n = " << spec.n << "\n"
    << "spikes = " << spec.spikes << "\n"
    << "amplitude = " << spec.amplitude << "\n"
    << "noise_std = " << spec.noise_std << "\n"
    << "seed = " << spec.seed << "\n";
}

int cmd_gen(const InstanceSpec& spec, const std::string& out) {
  const ProblemInstance problem = gen_instance(spec);
  fs::create_directories(out);
  const fs::path dir(out);
  write_matrix_file((dir / "A.txt").string(), problem.A);
  write_vector_file((dir / "b.txt").string(), problem.b);
  write_vector_file((dir / "x_orig.txt").string(), *problem.x_orig);
  write_manifest(dir, spec, "generated");
  std::cerr << "wrote instance to " << out << "\n";
  return kExitOk;
}

ProblemInstance load_instance(const std::string& dir) {
  const fs::path d(dir);
  ProblemInstance problem;
  problem.objective = ObjectiveSpec::l1();
  problem.set = FeasibleSetSpec::all_space();
  problem.A = read_matrix_file((d / "A.txt").string());
  problem.b = read_vector_file((d / "b.txt").string());
  if (fs::exists(d / "x_orig.txt"))
    problem.x_orig = read_vector_file((d / "x_orig.txt").string());
  if (problem.A.rows() != problem.b.size())
    throw std::runtime_error("loaded instance: A rows != b dim");
  return problem;
}

void write_history_csv(std::ostream& os, const RunHistory& hist,
                       bool diagnostics) {
  os << "k,it_err,eq_err,obj,re";
  if (diagnostics) os << ",lyapunov,t_form_a,t_form_b,bound_gap";
  os << "\n";
  char buf[320];
  for (const IterRecord& rec : hist.records) {
    std::snprintf(buf, sizeof(buf), "%d,%.6e,%.6e,%.6e,%.6e", rec.k,
                  rec.it_err, rec.eq_err, rec.objective,
                  rec.re.value_or(std::nan("")));
    os << buf;
    if (diagnostics) {
      if (rec.diag) {
        std::snprintf(buf, sizeof(buf), ",%.6e,%.6e,%.6e,%.6e",
                      rec.diag->lyapunov, rec.diag->t_form_a,
                      rec.diag->t_form_b, rec.diag->bound_gap);
        os << buf;
      } else {
        os << ",,,,";
      }
    }
    os << "\n";
  }
}

int cmd_solve(const Config& cfg, const std::string& preset_flag,
              const std::string& load_dir, bool diagnostics_flag,
              const std::string& out) {
  ProblemInstance problem;
  fs::create_directories(out);
  if (load_dir.empty()) {
    problem = gen_instance(cfg.instance_spec());
    write_manifest(out, cfg.instance_spec(), "generated");
  } else {
    problem = load_instance(load_dir);
    std::ofstream(fs::path(out) / "manifest.txt")
        << "source = loaded\nfrom = " << load_dir << "\n";
  }

  SolverParams params = cfg.solver_params();
  const double lam_max = spectral_norm_sq(problem.A);
  params.s = cfg.s_factor * lam_max / params.r;
  std::string preset_choice = preset_flag.empty() ? cfg.preset : preset_flag;
  if (!preset_choice.empty())
    params = preset(preset_from_name(preset_choice), params, cfg.preset_extra);
  params = validate_params(params, problem.A);

  const bool diagnostics = diagnostics_flag || cfg.diagnostics;
  RunOptions options;
  if (diagnostics) {
    // Reference saddle point from a tight run of the same scheme.
    std::cerr << "computing reference saddle point (tol 1e-12)...\n";
    const RunHistory ref_hist =
        run(problem, params, StoppingSpec{1e-12, 1e-12, 1000000});
    if (ref_hist.termination != Termination::converged) {
      std::cerr << "reference solve did not converge; diagnostics skipped\n";
    } else {
      problem.w_ref = ref_hist.final_iterate;
      options.diagnostics = true;
      options.diag_stride = problem.n() > 2000 ? 10 : 1;
    }
  }

  const RunHistory hist = run(problem, params, cfg.stopping(), options);
  if (hist.termination == Termination::error) {
    std::cerr << "numerical failure: " << hist.error_message << "\n";
    return kExitNumerical;
  }

  std::ofstream hf(fs::path(out) / "history.csv");
  write_history_csv(hf, hist, options.diagnostics);

  const IterRecord& last = hist.records.back();
  std::printf("IT=%d It_err=%.6e Eq_err=%.6e RE=%.6e\n", hist.iterations,
              last.it_err, last.eq_err, last.re.value_or(std::nan("")));
  if (hist.termination == Termination::max_iter)
    std::cerr << "warning: stopped at max_iter without reaching tolerances\n";
  return kExitOk;
}

int cmd_sweep(const Config& cfg, const std::string& thetas_csv,
              const std::string& out) {
  const std::vector<double> thetas = parse_double_list(thetas_csv);
  SolverParams base = cfg.solver_params();
  // Resolve s against the generated instance's spectrum.
  const ProblemInstance probe = gen_instance(cfg.instance_spec());
  base.s = cfg.s_factor * spectral_norm_sq(probe.A) / base.r;
  const std::vector<SweepRow> rows =
      theta_sweep(cfg.instance_spec(), thetas, base, cfg.stopping());
  fs::create_directories(out);
  std::ofstream f(fs::path(out) / "sweep.csv");
  write_sweep_csv(f, rows);
  for (const SweepRow& row : rows)
    if (row.failed)
      std::cerr << "theta=" << row.theta << " failed: " << row.error_message
                << "\n";
  std::cerr << "wrote " << (fs::path(out) / "sweep.csv").string() << "\n";
  return kExitOk;
}

int cmd_compare(const Config& cfg, const std::string& algs_csv,
                const std::string& out) {
  std::vector<AlgorithmConfig> configs;
  const auto standard = standard_comparison_configs();
  for (const std::string& label : parse_string_list(algs_csv)) {
    bool found = false;
    for (const AlgorithmConfig& c : standard)
      if (c.label == label) {
        configs.push_back(c);
        found = true;
      }
    if (!found)
      throw ConfigError("unknown algorithm '" + label +
                        "'; valid: rm_ppa, m_ppa, c_ppa, p_ppa");
  }
  SolverParams base = cfg.solver_params();
  const std::vector<CurveRecord> curves =
      compare_algorithms(cfg.instance_spec(), configs, cfg.stopping(), base);
  fs::create_directories(out);
  for (const CurveRecord& curve : curves) {
    std::ofstream f(fs::path(out) / (curve.label + "_curve.csv"));
    write_curve_csv(f, curve);
    if (curve.termination == Termination::error)
      std::cerr << curve.label << " failed: " << curve.error_message << "\n";
    else
      std::cerr << curve.label << ": IT=" << curve.iterations
                << " RE=" << curve.final_re << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"RM-PPA solver for linearly constrained convex minimization"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "generate a sparse-recovery instance");
  InstanceSpec gen_spec;
  std::string gen_out = "instance";
  gen->add_option("--m", gen_spec.m);
  gen->add_option("--n", gen_spec.n);
  gen->add_option("--spikes", gen_spec.spikes);
  gen->add_option("--noise-std", gen_spec.noise_std);
  gen->add_option("--seed", gen_spec.seed);
  gen->add_option("--out", gen_out);

  std::string config_path, preset_flag, load_dir, out_dir, thetas_csv,
      algs_csv = "rm_ppa,m_ppa,c_ppa,p_ppa";
  bool diagnostics_flag = false;

  auto* solve = app.add_subcommand("solve", "run one configuration");
  solve->add_option("--config", config_path);
  solve->add_option("--preset", preset_flag);
  solve->add_option("--load", load_dir);
  solve->add_flag("--diagnostics", diagnostics_flag);
  solve->add_option("--out", out_dir)->required();

  auto* sweep = app.add_subcommand("sweep-theta", "run a theta sweep");
  sweep->add_option("--config", config_path);
  sweep->add_option("--thetas", thetas_csv)->required();
  sweep->add_option("--out", out_dir)->required();

  auto* compare = app.add_subcommand("compare", "compare algorithm presets");
  compare->add_option("--config", config_path);
  compare->add_option("--algs", algs_csv);
  compare->add_option("--out", out_dir)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    Config cfg;
    if (!config_path.empty()) cfg = parse_config(read_file(config_path));
    if (gen->parsed()) return cmd_gen(gen_spec, gen_out);
    if (solve->parsed())
      return cmd_solve(cfg, preset_flag, load_dir, diagnostics_flag, out_dir);
    if (sweep->parsed()) return cmd_sweep(cfg, thetas_csv, out_dir);
    if (compare->parsed()) return cmd_compare(cfg, algs_csv, out_dir);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitConfig;
}
