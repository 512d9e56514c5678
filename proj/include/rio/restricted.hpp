// restricted.hpp
// Generalized permutation operations on N qubits: lexicographic permutation
// ranking/unranking over 2^N elements, construction of the phase-carrying
// operation T(x,t) and its fixed form R(x), structure classification, and
// the named controlled-gate constructors.

#pragma once

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rio/statevec.hpp"

namespace rio {

// (2^N)! exceeds 64 bits from N = 5 on.
using PermRank = boost::multiprecision::cpp_int;

struct PermutationN {
  int n_qubits = 0;
  std::vector<int> p;  // length 2^N, values 1..2^N, bijective
};

PermRank factorial(int m);

// The x-th permutation of {1..2^N} in lexicographic order, x 1-based.
PermutationN rank_to_perm(int n_qubits, const PermRank& x);
PermRank perm_to_rank(const PermutationN& perm);

// T(x,t) = sum_m t_m |m,D><p_m(x),D| with |1,D> = |0..0>, row m holding its
// sole nonzero t_m in column p_m(x).
struct RestrictedOp {
  int n_qubits = 0;
  PermRank rank;
  std::vector<int> p;  // cached permutation for rank
  Vector t;            // length 2^N

  Eigen::Index dim() const { return t.size(); }
  Matrix to_matrix() const;
};

RestrictedOp build_T(int n_qubits, const PermRank& x, const Vector& t);
RestrictedOp build_R(int n_qubits, const PermRank& x);

// (T v)_m = t_m v_{p_m(x)}; no matrix is materialized.
Vector apply_restricted(const RestrictedOp& op, const Vector& v);

// Applies the operation to the `targets` sub-register of a larger state by
// index arithmetic.
StateVector apply_restricted_on(const StateVector& state, const RestrictedOp& op,
                                const std::vector<std::string>& targets);

struct Classification {
  PermRank x;
  Vector t;
};

// Recovers (x, t) from a dense matrix with exactly one nonzero per row and
// column; nullopt when the matrix has no such structure.
std::optional<Classification> classify(const Matrix& m, double eps = kZeroTol);

// diag(t) * R(x) == T(x,t) as dense matrices, within 1e-12.
bool compose_check(int n_qubits, const PermRank& x, const Vector& t);

// Controlled-controlled-U(d): identity on the |00>,|01>,|10> control block,
// diagonal (d=0) or antidiagonal (d=1) U with entries u on the |11> block.
RestrictedOp cc_u(int d, const Vector& u);

// 2x2 diagonal (d=0) or antidiagonal (d=1) operation with entries u.
RestrictedOp single_qubit_u(int d, const Vector& u);

bool is_unitary(const RestrictedOp& op);

// Matrix file format: {"dim": d, "entries": [[[re,im],...],...]} row-major.
std::string matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const std::string& text);

}  // namespace rio
