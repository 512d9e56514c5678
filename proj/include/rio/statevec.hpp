// statevec.hpp
// Complex state vectors over labeled qubits, gate application on arbitrary
// qubit subsets, and projective computational-basis measurement.

#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace rio {

using Amplitude = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

// Normalization / equality tolerance for double-precision states.
inline constexpr double kNormTol = 1e-12;
// Zero-detection tolerance for structure classification.
inline constexpr double kZeroTol = 1e-10;

struct ForcedOutcomeImpossible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Pure N-qubit state. Index bit j (most significant first) corresponds to
// labels[j]; the label sequence is the "space structure" of the state.
struct StateVector {
  std::vector<std::string> labels;
  Vector amps;

  int num_qubits() const { return static_cast<int>(labels.size()); }
  Eigen::Index dim() const { return amps.size(); }
  double norm() const { return amps.norm(); }

  // Position of a label in the space structure; throws on unknown label.
  int label_pos(const std::string& label) const;
};

StateVector basis_state(std::vector<std::string> labels, const std::string& bits);

// Kronecker product; label sets must be disjoint.
StateVector tensor(const StateVector& s1, const StateVector& s2);

// Applies a 2^k x 2^k operator to the qubits named by `targets` (op index bit
// i, MSB first, acts on targets[i]); identity on the rest. Works by bit-index
// arithmetic on the amplitude array.
StateVector apply_on(const StateVector& state, const Matrix& op,
                     const std::vector<std::string>& targets);

struct MeasureResult {
  int outcome;
  double prob;
  StateVector post;  // projected and renormalized, measured label retained
};

// Projective measurement of one qubit in the computational basis. If `forced`
// is absent the outcome is sampled via `rng`; a forced outcome with
// probability below 1e-14 throws ForcedOutcomeImpossible.
MeasureResult measure(const StateVector& state, const std::string& target,
                      std::optional<int> forced, std::mt19937_64& rng);

// |<s1|s2>|^2; label sequences must be identical.
double fidelity(const StateVector& s1, const StateVector& s2);

// Projects onto the given bit values for `fixed_labels` (amplitudes must be
// supported there) and returns the state of the remaining qubits.
StateVector extract_register(const StateVector& state,
                             const std::vector<std::string>& fixed_labels,
                             const std::vector<int>& fixed_bits);

// Dense 2^Q expansion of an operator on a qubit subset. Cross-check path
// only; never used by the protocol kernels.
Matrix expand_operator(const Matrix& op, const std::vector<std::string>& targets,
                       const std::vector<std::string>& labels);

// Uniform double in [0,1) from the top 53 bits of the generator, so sampled
// runs are reproducible independent of the standard library's distributions.
double uniform01(std::mt19937_64& rng);

// Standard gates.
Matrix pauli(int i);      // sigma_0 .. sigma_3
Matrix hadamard();
Matrix cnot_last_control();  // C^not(0,1): last qubit controls, first is target
Matrix phase_recovery(int a);  // r(a) = (1-a) sigma_0 + a sigma_3

// (|00> + |11>)/sqrt(2) over two labels.
StateVector bell_pair(const std::string& first, const std::string& second);

// Haar-ish random normalized state (Gaussian amplitudes via Box-Muller on
// uniform01, so results are generator-deterministic).
StateVector random_state(std::vector<std::string> labels, std::mt19937_64& rng);

// Random unit-modulus phase vector e^{i phi_m}.
Vector random_phase_vector(Eigen::Index dim, std::mt19937_64& rng);

// JSON state file format: {"labels": [...], "amps": [[re,im], ...]}.
std::string state_to_json(const StateVector& state);
StateVector state_from_json(const std::string& text);

}  // namespace rio
