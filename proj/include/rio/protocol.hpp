// protocol.hpp
// The five-step remote-implementation protocol as an executable two-party
// state machine over a shared simulated joint state, the one-qubit
// predecessor variants, and the monolithic-operator cross-check.
//
// Labels follow the initial space structure A1 B1 ... AN BN Y1 ... YN.
// Measurements renormalize; the product of measurement probabilities is
// recorded as the transcript's branch probability (1/4^N for every outcome
// combination when t has unit moduli).

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rio/restricted.hpp"
#include "rio/statevec.hpp"

namespace rio {

struct ProtocolConfig {
  int n_qubits = 1;
  PermRank x = 1;
  Vector t;  // length 2^N
  std::optional<std::vector<int>> forced_b;
  std::optional<std::vector<int>> forced_a;
  std::uint64_t seed = 0;
  int max_qubits = 6;        // run_protocol cap (2^18 amplitudes)
  int max_dense_qubits = 3;  // apply_monolithic cap (dense 2^{3N})
};

struct Message {
  enum class Dir { BobToAlice, AliceToBob };
  Dir dir;
  std::string bits;
};

struct ProtocolTranscript {
  std::vector<int> b_bits;
  std::vector<int> a_bits;
  PermRank x_message;
  std::vector<Message> messages;
  double branch_prob = 1.0;
  std::vector<std::string> step_log;
};

// Qubit label helpers ("A1", "B2", "Y3", ...).
std::string alice_label(int m);
std::string bob_label(int m);
std::string y_label(int m);
std::vector<std::string> alice_labels(int n);
std::vector<std::string> bob_labels(int n);
std::vector<std::string> y_labels(int n);

// N Bell pairs tensored with the unknown state xi (given over Y1..YN).
StateVector init_state(int n_qubits, const StateVector& xi);

struct StepResult {
  StateVector state;
  std::vector<int> bits;
  double prob = 1.0;  // product of measurement probabilities in this step
};

// Step one: controlled-NOT (Y_m control, B_m target) then measure each B_m.
StepResult bob_prepare(const StateVector& state,
                       const std::optional<std::vector<int>>& forced_b,
                       std::mt19937_64& rng);

// Step three: sigma_{b_m} on each A_m, T(x,t) on the A block, Hadamards,
// then measure each A_m. This is the only code path that reads t.
StepResult alice_send(const StateVector& state, const std::vector<int>& b_bits,
                      const PermRank& x, const Vector& t,
                      const std::optional<std::vector<int>>& forced_a,
                      std::mt19937_64& rng);

// Step five: R(x) on the Y block, then r(a_m) on each Y_m. Takes only the
// classical information Bob receives; never sees t.
StateVector bob_recover(const StateVector& state, const std::vector<int>& a_bits,
                        const PermRank& x);

struct RunResult {
  StateVector final_state;  // labels A1 B1 ... AN BN Y1..YN
  ProtocolTranscript transcript;
};

RunResult run_protocol(const ProtocolConfig& cfg, const StateVector& xi);

// Builds the joint projector-containing operator densely and applies it to
// the initial state. Output is unnormalized: it equals sqrt(branch_prob)
// times the step-by-step final state, i.e. (1/2^N)|ab...> (x) T|xi>.
// Requires forced_b and forced_a.
StateVector apply_monolithic(const ProtocolConfig& cfg, const StateVector& xi);

// Original one-qubit protocol: controlled-NOT with B as control, measurement
// of Y, recovery on B, and (optionally) the final B<->Y swap.
StateVector hpv_original(int d, const Vector& u, const StateVector& xi,
                         std::optional<int> forced_b, std::optional<int> forced_a,
                         std::mt19937_64& rng, bool final_swap = true);

// The Y-register state of a completed run (A/B registers are in |a b ...>).
StateVector y_register(const RunResult& run);

struct VerifyOptions {
  int n_qubits = 2;
  int trials = 100;            // random trials (ignored when exhaustive)
  std::uint64_t seed = 0;
  bool exhaustive = false;     // all x and all outcomes (N <= 2)
  bool sample_outcomes = false;  // leave outcomes unforced and histogram them
  std::optional<PermRank> x;   // fix the restricted set, else random per trial
};

struct VerifyReport {
  int runs = 0;
  double min_fidelity = 1.0;
  double max_deviation = 0.0;       // element-wise |Y - T xi|
  double max_branch_prob_error = 0.0;  // | branch_prob - 1/4^N |
  std::map<std::string, int> outcome_histogram;  // key "a...|b..."
};

// Runs trials against the dense-matrix oracle T.to_matrix() * xi.
VerifyReport verify(const VerifyOptions& opts);

// Transcript file format (x as a decimal string).
std::string transcript_to_json(const ProtocolTranscript& tr, int n_qubits);
ProtocolTranscript transcript_from_json(const std::string& text);

// Width of the tight binary encoding of the x message for N qubits.
int x_message_width(int n_qubits);

}  // namespace rio
