#include "rio/restricted.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include <json.hpp>

namespace rio {

namespace {

void check_power_of_two(Eigen::Index dim) {
  if (dim < 2 || (dim & (dim - 1)) != 0)
    throw std::invalid_argument("dimension must be a power of two >= 2");
}

int log2_exact(Eigen::Index dim) {
  int k = 0;
  while ((Eigen::Index{1} << k) < dim) ++k;
  return k;
}

void check_perm(const std::vector<int>& p) {
  std::vector<char> hit(p.size(), 0);
  for (int v : p) {
    if (v < 1 || v > static_cast<int>(p.size()) || hit[v - 1])
      throw std::invalid_argument("not a bijection on {1..2^N}");
    hit[v - 1] = 1;
  }
}

}  // namespace

PermRank factorial(int m) {
  PermRank f = 1;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

PermutationN rank_to_perm(int n_qubits, const PermRank& x) {
  const int len = 1 << n_qubits;
  if (x < 1 || x > factorial(len)) throw std::out_of_range("rank out of range");

  std::vector<int> remaining(len);
  for (int i = 0; i < len; ++i) remaining[i] = i + 1;

  PermutationN perm;
  perm.n_qubits = n_qubits;
  perm.p.reserve(len);
  PermRank r = x - 1;
  for (int i = 0; i < len; ++i) {
    const PermRank f = factorial(len - 1 - i);
    const auto d = PermRank(r / f).convert_to<size_t>();
    r %= f;
    perm.p.push_back(remaining[d]);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(d));
  }
  return perm;
}

PermRank perm_to_rank(const PermutationN& perm) {
  check_perm(perm.p);
  const int len = static_cast<int>(perm.p.size());
  if (len != (1 << perm.n_qubits))
    throw std::invalid_argument("permutation length does not match qubit count");

  PermRank rank = 1;
  for (int i = 0; i < len; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < len; ++j)
      if (perm.p[j] < perm.p[i]) ++smaller;
    rank += smaller * factorial(len - 1 - i);
  }
  return rank;
}

Matrix RestrictedOp::to_matrix() const {
  Matrix m = Matrix::Zero(dim(), dim());
  for (Eigen::Index row = 0; row < dim(); ++row) m(row, p[row] - 1) = t[row];
  return m;
}

RestrictedOp build_T(int n_qubits, const PermRank& x, const Vector& t) {
  if (t.size() != (Eigen::Index{1} << n_qubits))
    throw std::invalid_argument("phase vector length must be 2^N");
  RestrictedOp op;
  op.n_qubits = n_qubits;
  op.rank = x;
  op.p = rank_to_perm(n_qubits, x).p;
  op.t = t;
  return op;
}

RestrictedOp build_R(int n_qubits, const PermRank& x) {
  return build_T(n_qubits, x, Vector::Ones(Eigen::Index{1} << n_qubits));
}

Vector apply_restricted(const RestrictedOp& op, const Vector& v) {
  if (v.size() != op.dim()) throw std::invalid_argument("vector dimension mismatch");
  Vector out(op.dim());
  for (Eigen::Index m = 0; m < op.dim(); ++m) out[m] = op.t[m] * v[op.p[m] - 1];
  return out;
}

StateVector apply_restricted_on(const StateVector& state, const RestrictedOp& op,
                                const std::vector<std::string>& targets) {
  if (static_cast<int>(targets.size()) != op.n_qubits)
    throw std::invalid_argument("target count does not match operation arity");

  const int q = state.num_qubits();
  const int k = op.n_qubits;
  std::vector<std::uint64_t> weight(k);
  std::uint64_t target_mask = 0;
  for (int i = 0; i < k; ++i) {
    weight[i] = std::uint64_t{1} << (q - 1 - state.label_pos(targets[i]));
    target_mask |= weight[i];
  }

  auto scatter = [&](std::uint64_t base, Eigen::Index sub) {
    std::uint64_t idx = base;
    for (int i = 0; i < k; ++i)
      if ((sub >> (k - 1 - i)) & 1) idx |= weight[i];
    return static_cast<Eigen::Index>(idx);
  };

  StateVector out;
  out.labels = state.labels;
  out.amps = state.amps;
  for (std::uint64_t base = 0; base < static_cast<std::uint64_t>(state.amps.size()); ++base) {
    if (base & target_mask) continue;
    for (Eigen::Index m = 0; m < op.dim(); ++m)
      out.amps[scatter(base, m)] = op.t[m] * state.amps[scatter(base, op.p[m] - 1)];
  }
  return out;
}

std::optional<Classification> classify(const Matrix& m, double eps) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix must be square");
  check_power_of_two(m.rows());
  const int n_qubits = log2_exact(m.rows());

  PermutationN perm;
  perm.n_qubits = n_qubits;
  Vector t(m.rows());
  std::vector<char> col_used(m.cols(), 0);
  for (Eigen::Index row = 0; row < m.rows(); ++row) {
    int nonzero_col = -1;
    for (Eigen::Index col = 0; col < m.cols(); ++col) {
      if (std::abs(m(row, col)) < eps) continue;
      if (nonzero_col >= 0) return std::nullopt;  // two nonzeros in a row
      nonzero_col = static_cast<int>(col);
    }
    if (nonzero_col < 0 || col_used[nonzero_col]) return std::nullopt;
    col_used[nonzero_col] = 1;
    perm.p.push_back(nonzero_col + 1);
    t[row] = m(row, nonzero_col);
  }
  return Classification{perm_to_rank(perm), std::move(t)};
}

bool compose_check(int n_qubits, const PermRank& x, const Vector& t) {
  const RestrictedOp diag = build_T(n_qubits, 1, t);
  const RestrictedOp r = build_R(n_qubits, x);
  const Matrix product = diag.to_matrix() * r.to_matrix();
  const Matrix direct = build_T(n_qubits, x, t).to_matrix();
  return (product - direct).cwiseAbs().maxCoeff() <= kNormTol;
}

RestrictedOp single_qubit_u(int d, const Vector& u) {
  if (d != 0 && d != 1) throw std::invalid_argument("d must be 0 or 1");
  if (u.size() != 2) throw std::invalid_argument("u must have two entries");
  return build_T(1, d == 0 ? 1 : 2, u);
}

RestrictedOp cc_u(int d, const Vector& u) {
  if (d != 0 && d != 1) throw std::invalid_argument("d must be 0 or 1");
  if (u.size() != 2) throw std::invalid_argument("u must have two entries");
  Vector t = Vector::Ones(8);
  t[6] = u[0];
  t[7] = u[1];
  PermutationN perm;
  perm.n_qubits = 3;
  perm.p = {1, 2, 3, 4, 5, 6, 7, 8};
  if (d == 1) std::swap(perm.p[6], perm.p[7]);
  return build_T(3, perm_to_rank(perm), t);
}

bool is_unitary(const RestrictedOp& op) {
  for (Eigen::Index m = 0; m < op.dim(); ++m)
    if (std::abs(std::abs(op.t[m]) - 1.0) > kNormTol) return false;
  return true;
}

std::string matrix_to_json(const Matrix& m) {
  nlohmann::json j;
  j["dim"] = m.rows();
  auto& entries = j["entries"] = nlohmann::json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      row.push_back({m(r, c).real(), m(r, c).imag()});
    entries.push_back(std::move(row));
  }
  return j.dump();
}

Matrix matrix_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  const auto dim = j.at("dim").get<Eigen::Index>();
  const auto& entries = j.at("entries");
  if (static_cast<Eigen::Index>(entries.size()) != dim)
    throw std::invalid_argument("row count does not match dim");
  Matrix m(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    const auto& row = entries[static_cast<size_t>(r)];
    if (static_cast<Eigen::Index>(row.size()) != dim)
      throw std::invalid_argument("column count does not match dim");
    for (Eigen::Index c = 0; c < dim; ++c)
      m(r, c) = Amplitude(row[static_cast<size_t>(c)].at(0).get<double>(),
                          row[static_cast<size_t>(c)].at(1).get<double>());
  }
  return m;
}

}  // namespace rio
