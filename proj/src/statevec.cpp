#include "rio/statevec.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include <json.hpp>

namespace rio {

namespace {

// Bit weight of the qubit at position `pos` (MSB-first convention).
std::uint64_t bit_weight(int num_qubits, int pos) {
  return std::uint64_t{1} << (num_qubits - 1 - pos);
}

void check_finite(const Vector& amps) {
  for (Eigen::Index i = 0; i < amps.size(); ++i) {
    if (!std::isfinite(amps[i].real()) || !std::isfinite(amps[i].imag()))
      throw std::invalid_argument("non-finite amplitude");
  }
}

}  // namespace

int StateVector::label_pos(const std::string& label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end())
    throw std::invalid_argument("unknown qubit label: " + label);
  return static_cast<int>(it - labels.begin());
}

StateVector basis_state(std::vector<std::string> labels, const std::string& bits) {
  if (bits.size() != labels.size())
    throw std::invalid_argument("bit string length does not match label count");
  std::uint64_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("bad bit character");
    index = (index << 1) | static_cast<std::uint64_t>(c - '0');
  }
  StateVector s;
  s.labels = std::move(labels);
  s.amps = Vector::Zero(Eigen::Index{1} << s.labels.size());
  s.amps[static_cast<Eigen::Index>(index)] = 1.0;
  return s;
}

StateVector tensor(const StateVector& s1, const StateVector& s2) {
  std::unordered_set<std::string> seen(s1.labels.begin(), s1.labels.end());
  for (const auto& l : s2.labels)
    if (!seen.insert(l).second)
      throw std::invalid_argument("overlapping qubit label: " + l);

  StateVector out;
  out.labels = s1.labels;
  out.labels.insert(out.labels.end(), s2.labels.begin(), s2.labels.end());
  out.amps.resize(s1.amps.size() * s2.amps.size());
  for (Eigen::Index i = 0; i < s1.amps.size(); ++i)
    out.amps.segment(i * s2.amps.size(), s2.amps.size()) = s1.amps[i] * s2.amps;
  return out;
}

StateVector apply_on(const StateVector& state, const Matrix& op,
                     const std::vector<std::string>& targets) {
  const int k = static_cast<int>(targets.size());
  if (op.rows() != op.cols() || op.rows() != (Eigen::Index{1} << k))
    throw std::invalid_argument("operator dimension does not match target count");

  std::vector<std::uint64_t> weight(k);
  std::unordered_set<std::string> distinct;
  std::uint64_t target_mask = 0;
  for (int i = 0; i < k; ++i) {
    if (!distinct.insert(targets[i]).second)
      throw std::invalid_argument("duplicate target label: " + targets[i]);
    weight[i] = bit_weight(state.num_qubits(), state.label_pos(targets[i]));
    target_mask |= weight[i];
  }

  const Eigen::Index sub_dim = Eigen::Index{1} << k;
  StateVector out;
  out.labels = state.labels;
  out.amps = state.amps;

  Vector scratch(sub_dim);
  const auto dim = static_cast<std::uint64_t>(state.amps.size());
  for (std::uint64_t base = 0; base < dim; ++base) {
    if (base & target_mask) continue;
    for (Eigen::Index s = 0; s < sub_dim; ++s) {
      std::uint64_t idx = base;
      for (int i = 0; i < k; ++i)
        if ((s >> (k - 1 - i)) & 1) idx |= weight[i];
      scratch[s] = state.amps[static_cast<Eigen::Index>(idx)];
    }
    scratch = (op * scratch).eval();
    for (Eigen::Index s = 0; s < sub_dim; ++s) {
      std::uint64_t idx = base;
      for (int i = 0; i < k; ++i)
        if ((s >> (k - 1 - i)) & 1) idx |= weight[i];
      out.amps[static_cast<Eigen::Index>(idx)] = scratch[s];
    }
  }
  return out;
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

MeasureResult measure(const StateVector& state, const std::string& target,
                      std::optional<int> forced, std::mt19937_64& rng) {
  const std::uint64_t w = bit_weight(state.num_qubits(), state.label_pos(target));

  double p1 = 0.0;
  for (Eigen::Index i = 0; i < state.amps.size(); ++i)
    if (static_cast<std::uint64_t>(i) & w) p1 += std::norm(state.amps[i]);
  const double p0 = std::max(0.0, 1.0 - p1);

  int outcome;
  if (forced) {
    outcome = *forced;
    const double p = outcome ? p1 : p0;
    if (p < 1e-14)
      throw ForcedOutcomeImpossible("forced outcome " + std::to_string(outcome) +
                                    " on " + target + " has zero probability");
  } else {
    outcome = uniform01(rng) < p1 ? 1 : 0;
  }

  const double prob = outcome ? p1 : p0;
  MeasureResult r{outcome, prob, {}};
  r.post.labels = state.labels;
  r.post.amps = Vector::Zero(state.amps.size());
  const double scale = 1.0 / std::sqrt(prob);
  for (Eigen::Index i = 0; i < state.amps.size(); ++i) {
    const bool bit = static_cast<std::uint64_t>(i) & w;
    if (bit == static_cast<bool>(outcome)) r.post.amps[i] = state.amps[i] * scale;
  }
  return r;
}

double fidelity(const StateVector& s1, const StateVector& s2) {
  if (s1.labels != s2.labels)
    throw std::invalid_argument("fidelity requires identical label sequences");
  return std::norm(s1.amps.dot(s2.amps));
}

StateVector extract_register(const StateVector& state,
                             const std::vector<std::string>& fixed_labels,
                             const std::vector<int>& fixed_bits) {
  if (fixed_labels.size() != fixed_bits.size())
    throw std::invalid_argument("fixed label/bit count mismatch");

  std::uint64_t fixed_mask = 0, fixed_value = 0;
  for (size_t i = 0; i < fixed_labels.size(); ++i) {
    const std::uint64_t w = bit_weight(state.num_qubits(), state.label_pos(fixed_labels[i]));
    fixed_mask |= w;
    if (fixed_bits[i]) fixed_value |= w;
  }

  StateVector out;
  std::vector<int> keep_pos;
  for (int j = 0; j < state.num_qubits(); ++j) {
    if (bit_weight(state.num_qubits(), j) & fixed_mask) continue;
    keep_pos.push_back(j);
    out.labels.push_back(state.labels[j]);
  }

  out.amps = Vector::Zero(Eigen::Index{1} << keep_pos.size());
  double dropped = 0.0;
  for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(state.amps.size()); ++i) {
    if ((i & fixed_mask) != fixed_value) {
      dropped += std::norm(state.amps[static_cast<Eigen::Index>(i)]);
      continue;
    }
    std::uint64_t sub = 0;
    for (size_t j = 0; j < keep_pos.size(); ++j)
      if (i & bit_weight(state.num_qubits(), keep_pos[j]))
        sub |= std::uint64_t{1} << (keep_pos.size() - 1 - j);
    out.amps[static_cast<Eigen::Index>(sub)] = state.amps[static_cast<Eigen::Index>(i)];
  }
  if (dropped > kNormTol)
    throw std::invalid_argument("state has support outside the fixed basis assignment");
  return out;
}

Matrix expand_operator(const Matrix& op, const std::vector<std::string>& targets,
                       const std::vector<std::string>& labels) {
  const Eigen::Index dim = Eigen::Index{1} << labels.size();
  StateVector probe;
  probe.labels = labels;
  Matrix full(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    probe.amps = Vector::Zero(dim);
    probe.amps[col] = 1.0;
    full.col(col) = apply_on(probe, op, targets).amps;
  }
  return full;
}

Matrix pauli(int i) {
  Matrix m(2, 2);
  const Amplitude I(0, 1);
  switch (i) {
    case 0: m << 1, 0, 0, 1; break;
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, -I, I, 0; break;
    case 3: m << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("pauli index must be 0..3");
  }
  return m;
}

Matrix hadamard() {
  Matrix m(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  m << s, s, s, -s;
  return m;
}

Matrix cnot_last_control() {
  // Basis order |t c>; the target (first qubit) flips when the control
  // (last qubit) is |1>.
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = 1;  // |00> -> |00>
  m(3, 1) = 1;  // |01> -> |11>
  m(2, 2) = 1;  // |10> -> |10>
  m(1, 3) = 1;  // |11> -> |01>
  return m;
}

Matrix phase_recovery(int a) {
  if (a != 0 && a != 1) throw std::invalid_argument("a must be 0 or 1");
  return a ? pauli(3) : pauli(0);
}

StateVector bell_pair(const std::string& first, const std::string& second) {
  StateVector s;
  s.labels = {first, second};
  s.amps = Vector::Zero(4);
  const double v = 1.0 / std::sqrt(2.0);
  s.amps[0] = v;
  s.amps[3] = v;
  return s;
}

namespace {

double gaussian(std::mt19937_64& rng) {
  double u1 = uniform01(rng);
  while (u1 <= 0.0) u1 = uniform01(rng);
  const double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

}  // namespace

StateVector random_state(std::vector<std::string> labels, std::mt19937_64& rng) {
  StateVector s;
  s.labels = std::move(labels);
  s.amps.resize(Eigen::Index{1} << s.labels.size());
  for (Eigen::Index i = 0; i < s.amps.size(); ++i)
    s.amps[i] = Amplitude(gaussian(rng), gaussian(rng));
  s.amps /= s.amps.norm();
  return s;
}

Vector random_phase_vector(Eigen::Index dim, std::mt19937_64& rng) {
  Vector t(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const double phi = 2.0 * M_PI * uniform01(rng);
    t[i] = Amplitude(std::cos(phi), std::sin(phi));
  }
  return t;
}

std::string state_to_json(const StateVector& state) {
  nlohmann::json j;
  j["labels"] = state.labels;
  auto& amps = j["amps"] = nlohmann::json::array();
  for (Eigen::Index i = 0; i < state.amps.size(); ++i)
    amps.push_back({state.amps[i].real(), state.amps[i].imag()});
  return j.dump();
}

StateVector state_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  StateVector s;
  s.labels = j.at("labels").get<std::vector<std::string>>();
  const auto& amps = j.at("amps");
  if (amps.size() != (size_t{1} << s.labels.size()))
    throw std::invalid_argument("amplitude count does not match label count");
  s.amps.resize(static_cast<Eigen::Index>(amps.size()));
  for (size_t i = 0; i < amps.size(); ++i)
    s.amps[static_cast<Eigen::Index>(i)] =
        Amplitude(amps[i].at(0).get<double>(), amps[i].at(1).get<double>());
  check_finite(s.amps);
  return s;
}

}  // namespace rio
