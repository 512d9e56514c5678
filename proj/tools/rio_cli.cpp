// rio_cli.cpp
// Command-line harness: run, verify, enumerate, classify, route, resources.
// Standard output carries the report, standard error the diagnostics.
// Exit codes: 0 success, 1 usage/input error, 2 verification failure,
// 3 not a generalized permutation matrix.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rio/protocol.hpp"
#include "rio/resources.hpp"
#include "rio/restricted.hpp"
#include "rio/swapnet.hpp"

namespace {

constexpr double kRunFidelityGate = 1.0 - 1e-9;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << text;
}

std::vector<int> parse_bits(const std::string& s) {
  std::vector<int> bits;
  for (char c : s) {
    if (c != '0' && c != '1') throw std::runtime_error("bit strings use only 0 and 1");
    bits.push_back(c - '0');
  }
  return bits;
}

// Each item is either an angle in radians (t = e^{i phi}) or an explicit
// complex pair "re:im".
rio::Vector parse_phases(const std::vector<std::string>& items) {
  rio::Vector t(static_cast<Eigen::Index>(items.size()));
  for (size_t i = 0; i < items.size(); ++i) {
    const auto colon = items[i].find(':');
    if (colon == std::string::npos) {
      const double phi = std::stod(items[i]);
      t[static_cast<Eigen::Index>(i)] = rio::Amplitude(std::cos(phi), std::sin(phi));
    } else {
      t[static_cast<Eigen::Index>(i)] =
          rio::Amplitude(std::stod(items[i].substr(0, colon)),
                         std::stod(items[i].substr(colon + 1)));
    }
  }
  return t;
}

struct RunArgs {
  int n = 1;
  std::string x = "1";
  std::vector<std::string> phases;
  std::string state_path;
  std::string b_bits, a_bits;
  std::uint64_t seed = 0;
  std::string out_state = "final_state.json";
  std::string out_transcript = "transcript.json";
  std::string format = "json";
};

int cmd_run(const RunArgs& args) {
  rio::ProtocolConfig cfg;
  cfg.n_qubits = args.n;
  cfg.x = rio::PermRank(args.x);
  cfg.t = args.phases.empty()
              ? rio::Vector(rio::Vector::Ones(Eigen::Index{1} << args.n))
              : parse_phases(args.phases);
  if (!args.b_bits.empty()) cfg.forced_b = parse_bits(args.b_bits);
  if (!args.a_bits.empty()) cfg.forced_a = parse_bits(args.a_bits);
  cfg.seed = args.seed;

  rio::StateVector xi;
  if (args.state_path.empty()) {
    xi = rio::basis_state(rio::y_labels(args.n), std::string(args.n, '0'));
  } else {
    xi = rio::state_from_json(read_file(args.state_path));
  }

  const rio::RunResult run = rio::run_protocol(cfg, xi);

  // Oracle: dense T applied to xi, tensored with the measured A/B basis state.
  std::string ab_bits;
  for (int m = 0; m < args.n; ++m) {
    ab_bits.push_back(run.transcript.a_bits[m] ? '1' : '0');
    ab_bits.push_back(run.transcript.b_bits[m] ? '1' : '0');
  }
  std::vector<std::string> ab_labels;
  for (int m = 1; m <= args.n; ++m) {
    ab_labels.push_back(rio::alice_label(m));
    ab_labels.push_back(rio::bob_label(m));
  }
  rio::StateVector expected_y;
  expected_y.labels = rio::y_labels(args.n);
  expected_y.amps = rio::build_T(args.n, cfg.x, cfg.t).to_matrix() * xi.amps;
  const rio::StateVector expected =
      rio::tensor(rio::basis_state(ab_labels, ab_bits), expected_y);
  const double fid = rio::fidelity(run.final_state, expected);

  write_file(args.out_state, rio::state_to_json(run.final_state));
  write_file(args.out_transcript,
             rio::transcript_to_json(run.transcript, args.n));

  if (args.format == "text") {
    std::cout << "n=" << args.n << " x=" << cfg.x << "\n";
    std::cout << "b=";
    for (int b : run.transcript.b_bits) std::cout << b;
    std::cout << " a=";
    for (int a : run.transcript.a_bits) std::cout << a;
    std::cout << "\nbranch_prob=" << run.transcript.branch_prob
              << "\nfidelity=" << fid << "\n";
  } else {
    nlohmann::json j;
    j["n"] = args.n;
    j["x"] = cfg.x.str();
    j["b"] = run.transcript.b_bits;
    j["a"] = run.transcript.a_bits;
    j["branch_prob"] = run.transcript.branch_prob;
    j["fidelity"] = fid;
    j["state_file"] = args.out_state;
    j["transcript_file"] = args.out_transcript;
    std::cout << j.dump(2) << "\n";
  }
  return fid >= kRunFidelityGate ? 0 : 2;
}

struct VerifyArgs {
  int n = 2;
  int trials = 100;
  std::uint64_t seed = 0;
  bool exhaustive = false;
  bool sample = false;
  std::string x;
};

int cmd_verify(const VerifyArgs& args) {
  rio::VerifyOptions opts;
  opts.n_qubits = args.n;
  opts.trials = args.trials;
  opts.seed = args.seed;
  opts.exhaustive = args.exhaustive;
  opts.sample_outcomes = args.sample;
  if (!args.x.empty()) opts.x = rio::PermRank(args.x);

  const rio::VerifyReport report = rio::verify(opts);

  nlohmann::json j;
  j["runs"] = report.runs;
  j["min_fidelity"] = report.min_fidelity;
  j["max_deviation"] = report.max_deviation;
  j["max_branch_prob_error"] = report.max_branch_prob_error;
  j["outcome_histogram"] = report.outcome_histogram;
  std::cout << j.dump(2) << "\n";
  return report.min_fidelity >= kRunFidelityGate ? 0 : 2;
}

int cmd_enumerate(int n) {
  const rio::PermRank total = rio::factorial(1 << n);
  for (rio::PermRank x = 1; x <= total; ++x) {
    const auto perm = rio::rank_to_perm(n, x);
    for (size_t i = 0; i < perm.p.size(); ++i)
      std::cout << (i ? "," : "") << perm.p[i];
    std::cout << "\n";
  }
  return 0;
}

int cmd_classify(const std::string& path) {
  const rio::Matrix m = rio::matrix_from_json(read_file(path));
  const auto result = rio::classify(m);
  if (!result) {
    std::cerr << "not a generalized permutation matrix\n";
    return 3;
  }
  nlohmann::json j;
  j["x"] = result->x.str();
  auto& phases = j["t"] = nlohmann::json::array();
  for (Eigen::Index i = 0; i < result->t.size(); ++i)
    phases.push_back({result->t[i].real(), result->t[i].imag()});
  const auto op = rio::build_T(static_cast<int>(std::log2(m.rows())), result->x,
                               result->t);
  j["unitary"] = rio::is_unitary(op);
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_route(const std::string& kind, int n, int i, int j) {
  rio::QubitRouting r;
  if (kind == "s") r = rio::s_adjacent(n, i);
  else if (kind == "f") r = rio::f_forward(n, i, j);
  else if (kind == "p") r = rio::p_backward(n, i, j);
  else if (kind == "lambda") r = rio::lambda_route(n);
  else if (kind == "omega") r = rio::omega_route(n);
  else if (kind == "upsilon") r = rio::upsilon_route(n);
  else if (kind == "gamma") r = rio::gamma_route(n);
  else throw std::runtime_error("unknown routing kind: " + kind);

  for (size_t k = 0; k < r.dest.size(); ++k)
    std::cout << (k ? " " : "") << r.dest[k] + 1;  // 1-based dump
  std::cout << "\n";
  return 0;
}

int cmd_resources(int n, const std::string& encoding, bool fixed_b) {
  const auto enc = encoding == "floor-plus-one" ? rio::XEncoding::FloorPlusOne
                                                : rio::XEncoding::Tight;
  std::cout << rio::ledger_to_json(rio::ledger(n, enc, fixed_b)) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"simulator for remote implementation of restricted-set operations"};
  app.require_subcommand(1);

  RunArgs run_args;
  auto* run = app.add_subcommand("run", "execute one protocol run");
  run->add_option("--n", run_args.n, "qubit count")->required();
  run->add_option("--x", run_args.x, "restricted-set rank (decimal)");
  run->add_option("--phases", run_args.phases,
                  "phases: angles in radians, or re:im pairs")
      ->delimiter(',');
  run->add_option("--state", run_args.state_path, "input state JSON (default |0...0>)");
  run->add_option("--b", run_args.b_bits, "forced b outcomes, e.g. 01");
  run->add_option("--a", run_args.a_bits, "forced a outcomes");
  run->add_option("--seed", run_args.seed, "rng seed");
  run->add_option("--out-state", run_args.out_state, "final state output file");
  run->add_option("--out-transcript", run_args.out_transcript, "transcript output file");
  run->add_option("--format", run_args.format, "json | text");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "sweep runs against the dense oracle");
  verify->add_option("--n", verify_args.n, "qubit count")->required();
  verify->add_option("--trials", verify_args.trials, "random trial count");
  verify->add_option("--seed", verify_args.seed, "rng seed");
  verify->add_flag("--exhaustive", verify_args.exhaustive, "all x and outcomes");
  verify->add_flag("--sample", verify_args.sample, "sample outcomes, histogram them");
  verify->add_option("--x", verify_args.x, "fix the restricted-set rank");

  int enum_n = 2;
  auto* enumerate = app.add_subcommand("enumerate", "list all permutations for N");
  enumerate->add_option("--n", enum_n, "qubit count")->required();

  std::string classify_path;
  auto* classify = app.add_subcommand("classify", "recover (x,t) from a matrix file");
  classify->add_option("matrix", classify_path, "matrix JSON file")->required();

  std::string route_kind;
  int route_n = 2, route_i = 1, route_j = 2;
  auto* route = app.add_subcommand("route", "print a routing's destination map");
  route->add_option("--kind", route_kind, "s|f|p|lambda|omega|upsilon|gamma")->required();
  route->add_option("--n", route_n, "size parameter")->required();
  route->add_option("--i", route_i, "first position (s, f, p)");
  route->add_option("--j", route_j, "second position (f, p)");

  int res_n = 1;
  std::string res_encoding = "floor-plus-one";
  bool res_fixed_b = false;
  auto* resources = app.add_subcommand("resources", "e-bit / c-bit ledger");
  resources->add_option("--n", res_n, "qubit count")->required();
  resources->add_option("--encoding", res_encoding, "floor-plus-one | tight");
  resources->add_flag("--fixed-b", res_fixed_b, "Bob fixes b in advance");

  try {
    app.parse(argc, argv);
    if (*run) return cmd_run(run_args);
    if (*verify) return cmd_verify(verify_args);
    if (*enumerate) return cmd_enumerate(enum_n);
    if (*classify) return cmd_classify(classify_path);
    if (*route) return cmd_route(route_kind, route_n, route_i, route_j);
    if (*resources) return cmd_resources(res_n, res_encoding, res_fixed_b);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
