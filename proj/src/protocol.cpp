#include "rio/protocol.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "rio/swapnet.hpp"

namespace rio {

namespace {

std::string bits_to_string(const std::vector<int>& bits) {
  std::string s;
  s.reserve(bits.size());
  for (int b : bits) s.push_back(b ? '1' : '0');
  return s;
}

std::string encode_x(const PermRank& x, int width) {
  PermRank v = x - 1;
  std::string s(static_cast<size_t>(width), '0');
  for (int i = width - 1; i >= 0 && v != 0; --i) {
    if (boost::multiprecision::bit_test(v, 0)) s[static_cast<size_t>(i)] = '1';
    v >>= 1;
  }
  return s;
}

void check_forced(const std::optional<std::vector<int>>& forced, int n,
                  const char* which) {
  if (forced && static_cast<int>(forced->size()) != n)
    throw std::invalid_argument(std::string("forced ") + which +
                                " length does not match qubit count");
}

Matrix basis_projector(int bit) {
  Matrix m = Matrix::Zero(2, 2);
  m(bit, bit) = 1.0;
  return m;
}

}  // namespace

std::string alice_label(int m) { return "A" + std::to_string(m); }
std::string bob_label(int m) { return "B" + std::to_string(m); }
std::string y_label(int m) { return "Y" + std::to_string(m); }

std::vector<std::string> alice_labels(int n) {
  std::vector<std::string> v;
  for (int m = 1; m <= n; ++m) v.push_back(alice_label(m));
  return v;
}

std::vector<std::string> bob_labels(int n) {
  std::vector<std::string> v;
  for (int m = 1; m <= n; ++m) v.push_back(bob_label(m));
  return v;
}

std::vector<std::string> y_labels(int n) {
  std::vector<std::string> v;
  for (int m = 1; m <= n; ++m) v.push_back(y_label(m));
  return v;
}

int x_message_width(int n_qubits) {
  const PermRank f = factorial(1 << n_qubits);
  if (f <= 1) return 1;
  return static_cast<int>(boost::multiprecision::msb(PermRank(f - 1))) + 1;
}

StateVector init_state(int n_qubits, const StateVector& xi) {
  if (xi.labels != y_labels(n_qubits))
    throw std::invalid_argument("xi must carry labels Y1..YN");
  if (std::abs(xi.norm() - 1.0) > kNormTol)
    throw std::invalid_argument("xi must be normalized");

  StateVector joint = bell_pair(alice_label(1), bob_label(1));
  for (int m = 2; m <= n_qubits; ++m)
    joint = tensor(joint, bell_pair(alice_label(m), bob_label(m)));
  return tensor(joint, xi);
}

StepResult bob_prepare(const StateVector& state,
                       const std::optional<std::vector<int>>& forced_b,
                       std::mt19937_64& rng) {
  const int n = state.num_qubits() / 3;
  check_forced(forced_b, n, "b");

  StepResult r;
  r.state = state;
  for (int m = 1; m <= n; ++m)
    r.state = apply_on(r.state, cnot_last_control(), {bob_label(m), y_label(m)});
  for (int m = 1; m <= n; ++m) {
    const auto forced =
        forced_b ? std::optional<int>((*forced_b)[m - 1]) : std::nullopt;
    MeasureResult mr = measure(r.state, bob_label(m), forced, rng);
    r.state = std::move(mr.post);
    r.bits.push_back(mr.outcome);
    r.prob *= mr.prob;
  }
  return r;
}

StepResult alice_send(const StateVector& state, const std::vector<int>& b_bits,
                      const PermRank& x, const Vector& t,
                      const std::optional<std::vector<int>>& forced_a,
                      std::mt19937_64& rng) {
  const int n = state.num_qubits() / 3;
  if (static_cast<int>(b_bits.size()) != n)
    throw std::invalid_argument("b bit count does not match qubit count");
  check_forced(forced_a, n, "a");

  StepResult r;
  r.state = state;
  for (int m = 1; m <= n; ++m)
    if (b_bits[m - 1]) r.state = apply_on(r.state, pauli(1), {alice_label(m)});

  r.state = apply_restricted_on(r.state, build_T(n, x, t), alice_labels(n));

  for (int m = 1; m <= n; ++m)
    r.state = apply_on(r.state, hadamard(), {alice_label(m)});
  for (int m = 1; m <= n; ++m) {
    const auto forced =
        forced_a ? std::optional<int>((*forced_a)[m - 1]) : std::nullopt;
    MeasureResult mr = measure(r.state, alice_label(m), forced, rng);
    r.state = std::move(mr.post);
    r.bits.push_back(mr.outcome);
    r.prob *= mr.prob;
  }
  return r;
}

StateVector bob_recover(const StateVector& state, const std::vector<int>& a_bits,
                        const PermRank& x) {
  const int n = state.num_qubits() / 3;
  if (static_cast<int>(a_bits.size()) != n)
    throw std::invalid_argument("a bit count does not match qubit count");

  StateVector out = apply_restricted_on(state, build_R(n, x), y_labels(n));
  for (int m = 1; m <= n; ++m)
    if (a_bits[m - 1]) out = apply_on(out, pauli(3), {y_label(m)});
  return out;
}

RunResult run_protocol(const ProtocolConfig& cfg, const StateVector& xi) {
  const int n = cfg.n_qubits;
  if (n < 1 || n > cfg.max_qubits)
    throw std::invalid_argument("qubit count exceeds the configured cap");
  if (cfg.x < 1 || cfg.x > factorial(1 << n))
    throw std::out_of_range("rank out of range");
  if (cfg.t.size() != (Eigen::Index{1} << n))
    throw std::invalid_argument("phase vector length must be 2^N");
  check_forced(cfg.forced_b, n, "b");
  check_forced(cfg.forced_a, n, "a");

  std::mt19937_64 rng(cfg.seed);
  RunResult run;
  auto& tr = run.transcript;

  StateVector state = init_state(n, xi);
  tr.step_log.push_back("init: " + std::to_string(n) + " Bell pairs tensored with xi");

  StepResult prep = bob_prepare(state, cfg.forced_b, rng);
  tr.b_bits = prep.bits;
  tr.branch_prob *= prep.prob;
  tr.step_log.push_back("step one: Bob prepared, b = " + bits_to_string(prep.bits));

  tr.messages.push_back({Message::Dir::BobToAlice, bits_to_string(prep.bits)});
  tr.step_log.push_back("step two: Bob -> Alice " + std::to_string(n) + " c-bits");

  StepResult send = alice_send(prep.state, tr.b_bits, cfg.x, cfg.t, cfg.forced_a, rng);
  tr.a_bits = send.bits;
  tr.branch_prob *= send.prob;
  tr.step_log.push_back("step three: Alice sent, a = " + bits_to_string(send.bits));

  tr.x_message = cfg.x;
  tr.messages.push_back({Message::Dir::AliceToBob, bits_to_string(send.bits)});
  tr.messages.push_back(
      {Message::Dir::AliceToBob, encode_x(cfg.x, x_message_width(n))});
  tr.step_log.push_back("step four: Alice -> Bob a bits and x message");

  run.final_state = bob_recover(send.state, tr.a_bits, cfg.x);
  tr.step_log.push_back("step five: Bob recovered with R(x) and r(a)");
  return run;
}

StateVector y_register(const RunResult& run) {
  const int n = run.final_state.num_qubits() / 3;
  std::vector<std::string> fixed;
  std::vector<int> bits;
  for (int m = 1; m <= n; ++m) {
    fixed.push_back(alice_label(m));
    bits.push_back(run.transcript.a_bits[m - 1]);
    fixed.push_back(bob_label(m));
    bits.push_back(run.transcript.b_bits[m - 1]);
  }
  return extract_register(run.final_state, fixed, bits);
}

StateVector apply_monolithic(const ProtocolConfig& cfg, const StateVector& xi) {
  const int n = cfg.n_qubits;
  if (n < 1 || n > cfg.max_dense_qubits)
    throw std::invalid_argument("qubit count exceeds the dense cross-check cap");
  if (!cfg.forced_b || !cfg.forced_a)
    throw std::invalid_argument("monolithic path requires forced outcomes");

  StateVector init = init_state(n, xi);
  const auto& labels = init.labels;
  const Eigen::Index dim = init.amps.size();

  Matrix prepare = Matrix::Identity(dim, dim);
  for (int m = 1; m <= n; ++m)
    prepare = expand_operator(cnot_last_control(), {bob_label(m), y_label(m)}, labels) *
              prepare;
  for (int m = 1; m <= n; ++m)
    prepare = expand_operator(basis_projector((*cfg.forced_b)[m - 1]),
                              {bob_label(m)}, labels) *
              prepare;

  Matrix send = Matrix::Identity(dim, dim);
  for (int m = 1; m <= n; ++m)
    if ((*cfg.forced_b)[m - 1])
      send = expand_operator(pauli(1), {alice_label(m)}, labels) * send;
  send = expand_operator(build_T(n, cfg.x, cfg.t).to_matrix(), alice_labels(n),
                         labels) *
         send;
  for (int m = 1; m <= n; ++m)
    send = expand_operator(hadamard(), {alice_label(m)}, labels) * send;
  for (int m = 1; m <= n; ++m)
    send = expand_operator(basis_projector((*cfg.forced_a)[m - 1]),
                           {alice_label(m)}, labels) *
           send;

  Matrix recover =
      expand_operator(build_R(n, cfg.x).to_matrix(), y_labels(n), labels);
  for (int m = 1; m <= n; ++m)
    recover = expand_operator(phase_recovery((*cfg.forced_a)[m - 1]),
                              {y_label(m)}, labels) *
              recover;

  const Matrix joint = recover * send * prepare;
  StateVector out;
  out.labels = labels;
  out.amps = joint * init.amps;
  return out;
}

StateVector hpv_original(int d, const Vector& u, const StateVector& xi,
                         std::optional<int> forced_b, std::optional<int> forced_a,
                         std::mt19937_64& rng, bool final_swap) {
  if (xi.num_qubits() != 1) throw std::invalid_argument("xi must be one qubit");
  const RestrictedOp op = single_qubit_u(d, u);

  StateVector xi_y;
  xi_y.labels = {"Y"};
  xi_y.amps = xi.amps;
  StateVector state = tensor(bell_pair("A", "B"), xi_y);

  // Bob: controlled-NOT with B as control and Y as target, measure Y.
  state = apply_on(state, cnot_last_control(), {"Y", "B"});
  MeasureResult mb = measure(state, "Y", forced_b, rng);
  state = std::move(mb.post);
  const int b = mb.outcome;
  if (b) state = apply_on(state, pauli(1), {"B"});

  // Alice: sigma_b, U(d), Hadamard, measure A.
  if (b) state = apply_on(state, pauli(1), {"A"});
  state = apply_on(state, op.to_matrix(), {"A"});
  state = apply_on(state, hadamard(), {"A"});
  MeasureResult ma = measure(state, "A", forced_a, rng);
  state = std::move(ma.post);
  const int a = ma.outcome;

  // Bob's recovery on B: r(a) sigma_d.
  if (d) state = apply_on(state, pauli(1), {"B"});
  if (a) state = apply_on(state, pauli(3), {"B"});

  if (final_swap) {
    // Swap gate on qubits B and Y; the labels stay put, the amplitudes move.
    state = apply_on(state, routing_matrix(s_adjacent(2, 1)), {"B", "Y"});
  }
  return state;
}

VerifyReport verify(const VerifyOptions& opts) {
  const int n = opts.n_qubits;
  const Eigen::Index dim = Eigen::Index{1} << n;
  const PermRank num_sets = factorial(static_cast<int>(dim));
  std::mt19937_64 rng(opts.seed);

  VerifyReport report;
  const double expected_prob = std::pow(0.25, n);

  auto run_one = [&](const PermRank& x, std::optional<std::vector<int>> fb,
                     std::optional<std::vector<int>> fa) {
    ProtocolConfig cfg;
    cfg.n_qubits = n;
    cfg.x = x;
    cfg.t = random_phase_vector(dim, rng);
    cfg.forced_b = std::move(fb);
    cfg.forced_a = std::move(fa);
    cfg.seed = rng();
    const StateVector xi = random_state(y_labels(n), rng);

    const RunResult run = run_protocol(cfg, xi);
    const StateVector y = y_register(run);

    Vector expected = build_T(n, cfg.x, cfg.t).to_matrix() * xi.amps;
    StateVector expected_state;
    expected_state.labels = y.labels;
    expected_state.amps = expected;

    report.runs += 1;
    report.min_fidelity = std::min(report.min_fidelity, fidelity(y, expected_state));
    report.max_deviation =
        std::max(report.max_deviation, (y.amps - expected).cwiseAbs().maxCoeff());
    report.max_branch_prob_error =
        std::max(report.max_branch_prob_error,
                 std::abs(run.transcript.branch_prob - expected_prob));
    report.outcome_histogram[bits_to_string(run.transcript.a_bits) + "|" +
                             bits_to_string(run.transcript.b_bits)] += 1;
  };

  auto random_rank = [&]() {
    // Rejection-free: uniform in [1, num_sets] via modular reduction of a
    // wide random value; bias is negligible for the sizes used here.
    PermRank v = 0;
    const int words = static_cast<int>(boost::multiprecision::msb(num_sets) / 64) + 2;
    for (int i = 0; i < words; ++i) v = (v << 64) | rng();
    return PermRank(v % num_sets) + 1;
  };

  if (opts.exhaustive) {
    for (PermRank x = 1; x <= num_sets; ++x) {
      for (std::uint64_t outcome = 0; outcome < (std::uint64_t{1} << (2 * n)); ++outcome) {
        std::vector<int> fb(n), fa(n);
        for (int m = 0; m < n; ++m) {
          fa[m] = (outcome >> (2 * n - 1 - m)) & 1;
          fb[m] = (outcome >> (n - 1 - m)) & 1;
        }
        run_one(opts.x.value_or(x), fb, fa);
      }
    }
  } else {
    for (int trial = 0; trial < opts.trials; ++trial) {
      const PermRank x = opts.x ? *opts.x : random_rank();
      if (opts.sample_outcomes) {
        run_one(x, std::nullopt, std::nullopt);
      } else {
        std::vector<int> fb(n), fa(n);
        for (int m = 0; m < n; ++m) {
          fb[m] = rng() & 1;
          fa[m] = rng() & 1;
        }
        run_one(x, fb, fa);
      }
    }
  }
  return report;
}

std::string transcript_to_json(const ProtocolTranscript& tr, int n_qubits) {
  nlohmann::json j;
  j["n"] = n_qubits;
  j["x"] = tr.x_message.str();
  j["b"] = tr.b_bits;
  j["a"] = tr.a_bits;
  auto& messages = j["messages"] = nlohmann::json::array();
  for (const auto& m : tr.messages)
    messages.push_back({{"dir", m.dir == Message::Dir::BobToAlice ? "B2A" : "A2B"},
                        {"bits", m.bits}});
  j["branch_prob"] = tr.branch_prob;
  return j.dump(2);
}

ProtocolTranscript transcript_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  ProtocolTranscript tr;
  tr.x_message = PermRank(j.at("x").get<std::string>());
  tr.b_bits = j.at("b").get<std::vector<int>>();
  tr.a_bits = j.at("a").get<std::vector<int>>();
  for (const auto& m : j.at("messages")) {
    Message msg;
    msg.dir = m.at("dir").get<std::string>() == "B2A" ? Message::Dir::BobToAlice
                                                      : Message::Dir::AliceToBob;
    msg.bits = m.at("bits").get<std::string>();
    tr.messages.push_back(std::move(msg));
  }
  tr.branch_prob = j.at("branch_prob").get<double>();
  return tr;
}

}  // namespace rio
