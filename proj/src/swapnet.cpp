#include "rio/swapnet.hpp"

#include <algorithm>
#include <stdexcept>

namespace rio {

namespace {

void check_bijection(const QubitRouting& r) {
  std::vector<char> hit(r.dest.size(), 0);
  for (int d : r.dest) {
    if (d < 0 || d >= r.n || hit[d]) throw std::invalid_argument("dest is not a bijection");
    hit[d] = 1;
  }
}

// Embeds a routing on r.n qubits into n qubits starting at 1-based position.
QubitRouting embed(const QubitRouting& r, int n, int start) {
  QubitRouting out = identity_routing(n);
  for (int i = 0; i < r.n; ++i) out.dest[start - 1 + i] = start - 1 + r.dest[i];
  return out;
}

}  // namespace

QubitRouting identity_routing(int n) {
  if (n < 0) throw std::invalid_argument("negative qubit count");
  QubitRouting r;
  r.n = n;
  r.dest.resize(n);
  for (int i = 0; i < n; ++i) r.dest[i] = i;
  return r;
}

QubitRouting s_adjacent(int n, int i) {
  if (i < 1 || i > n - 1) throw std::invalid_argument("adjacent swap position out of range");
  QubitRouting r = identity_routing(n);
  std::swap(r.dest[i - 1], r.dest[i]);
  return r;
}

QubitRouting f_forward(int n, int i, int j) {
  if (i < 1 || j > n || i >= j) throw std::invalid_argument("f_forward requires 1 <= i < j <= n");
  QubitRouting r = identity_routing(n);
  r.dest[j - 1] = i - 1;
  for (int k = i; k < j; ++k) r.dest[k - 1] = k;  // shift i..j-1 back by one
  return r;
}

QubitRouting p_backward(int n, int j, int k) {
  if (j < 1 || k > n || j >= k) throw std::invalid_argument("p_backward requires 1 <= j < k <= n");
  QubitRouting r = identity_routing(n);
  r.dest[j - 1] = k - 1;
  for (int m = j + 1; m <= k; ++m) r.dest[m - 1] = m - 2;  // shift j+1..k forward by one
  return r;
}

QubitRouting lambda_route(int pairs) {
  if (pairs < 2) throw std::invalid_argument("lambda_route requires N >= 2");
  const int n = 2 * pairs;
  QubitRouting r = identity_routing(n);
  for (int i = 1; i <= pairs - 1; ++i)
    r = compose(r, p_backward(n, 2 * (pairs - i), 2 * pairs - i));
  return r;
}

QubitRouting omega_route(int pairs) {
  if (pairs < 1) throw std::invalid_argument("omega_route requires N >= 1");
  // Block swap satisfying the defining action; the printed product formula
  // for this transformation has an index-independent body and is not used.
  const int n = 2 * pairs;
  QubitRouting r;
  r.n = n;
  r.dest.resize(n);
  for (int i = 0; i < pairs; ++i) {
    r.dest[i] = i + pairs;
    r.dest[i + pairs] = i;
  }
  return r;
}

QubitRouting upsilon_route(int triples) {
  if (triples < 1) throw std::invalid_argument("upsilon_route requires N >= 1");
  const int n = 3 * triples;
  QubitRouting r = identity_routing(n);
  for (int i = 1; i <= triples - 1; ++i)
    r = compose(r, f_forward(n, 3 * i, 2 * triples + i));
  return r;
}

QubitRouting gamma_route(int triples) {
  if (triples < 1) throw std::invalid_argument("gamma_route requires N >= 1");
  const int n = 3 * triples;
  if (triples == 1) return identity_routing(n);
  const QubitRouting lam = embed(lambda_route(triples), n, 1);
  const QubitRouting omg = embed(omega_route(triples), n, triples + 1);
  return compose(lam, omg);
}

QubitRouting w_route(const std::vector<std::string>& from,
                     const std::vector<std::string>& to) {
  if (from.size() != to.size())
    throw std::invalid_argument("label sequences differ in length");
  QubitRouting r;
  r.n = static_cast<int>(from.size());
  r.dest.resize(r.n);
  for (int i = 0; i < r.n; ++i) {
    auto it = std::find(to.begin(), to.end(), from[i]);
    if (it == to.end())
      throw std::invalid_argument("label sequences are not permutations of each other");
    r.dest[i] = static_cast<int>(it - to.begin());
  }
  check_bijection(r);
  return r;
}

QubitRouting compose(const QubitRouting& first, const QubitRouting& then) {
  if (first.n != then.n) throw std::invalid_argument("routing size mismatch");
  QubitRouting r;
  r.n = first.n;
  r.dest.resize(r.n);
  for (int i = 0; i < r.n; ++i) r.dest[i] = then.dest[first.dest[i]];
  return r;
}

QubitRouting inverse(const QubitRouting& r) {
  QubitRouting inv;
  inv.n = r.n;
  inv.dest.resize(r.n);
  for (int i = 0; i < r.n; ++i) inv.dest[r.dest[i]] = i;
  return inv;
}

StateVector apply_routing(const StateVector& state, const QubitRouting& r) {
  if (r.n != state.num_qubits()) throw std::invalid_argument("routing size mismatch");
  check_bijection(r);

  StateVector out;
  out.labels.resize(r.n);
  for (int i = 0; i < r.n; ++i) out.labels[r.dest[i]] = state.labels[i];

  out.amps = Vector::Zero(state.amps.size());
  for (std::uint64_t v = 0; v < static_cast<std::uint64_t>(state.amps.size()); ++v) {
    std::uint64_t w = 0;
    for (int j = 0; j < r.n; ++j)
      if (v & (std::uint64_t{1} << (r.n - 1 - j)))
        w |= std::uint64_t{1} << (r.n - 1 - r.dest[j]);
    out.amps[static_cast<Eigen::Index>(w)] = state.amps[static_cast<Eigen::Index>(v)];
  }
  return out;
}

Matrix routing_matrix(const QubitRouting& r) {
  const Eigen::Index dim = Eigen::Index{1} << r.n;
  Matrix m = Matrix::Zero(dim, dim);
  for (std::uint64_t v = 0; v < static_cast<std::uint64_t>(dim); ++v) {
    std::uint64_t w = 0;
    for (int j = 0; j < r.n; ++j)
      if (v & (std::uint64_t{1} << (r.n - 1 - j)))
        w |= std::uint64_t{1} << (r.n - 1 - r.dest[j]);
    m(static_cast<Eigen::Index>(w), static_cast<Eigen::Index>(v)) = 1.0;
  }
  return m;
}

}  // namespace rio
