// swapnet.hpp
// Qubit-position routings: adjacent swaps, forward/backward rearrangements,
// and the block-reordering transformations built from them. Routings are
// position permutations; dense matrices exist only in the cross-check path.
// Positions are 1-based at the API boundary, 0-based in `dest`.

#pragma once

#include <string>
#include <vector>

#include "rio/statevec.hpp"

namespace rio {

struct QubitRouting {
  int n = 0;
  std::vector<int> dest;  // dest[i] is the new position of the qubit at i

  bool operator==(const QubitRouting&) const = default;
};

QubitRouting identity_routing(int n);

// Transposes positions i and i+1.
QubitRouting s_adjacent(int n, int i);

// Moves the qubit at position j forward to position i (i < j), shifting
// i..j-1 back by one. Equals the right-to-left product of adjacent swaps.
QubitRouting f_forward(int n, int i, int j);

// Moves the qubit at position j backward to position k (j < k), shifting
// j+1..k forward by one.
QubitRouting p_backward(int n, int j, int k);

// Interleaved pairs to blocks on 2N qubits: |a1 b1 ... aN bN> ->
// (|a1..aN>)(|b1..bN>).
QubitRouting lambda_route(int pairs);

// Swaps the A block and B block on 2N qubits.
QubitRouting omega_route(int pairs);

// |a1 b1 ... aN bN>|y1..yN> -> tensor of |ai bi yi>, on 3N qubits.
QubitRouting upsilon_route(int triples);

// (I x omega)(lambda x I) on 3N qubits: pairs-plus-Y to A, Y, B blocks.
QubitRouting gamma_route(int triples);

// Routing sending each label's position in `from` to its position in `to`.
QubitRouting w_route(const std::vector<std::string>& from,
                     const std::vector<std::string>& to);

// Applies `first`, then `then`.
QubitRouting compose(const QubitRouting& first, const QubitRouting& then);
QubitRouting inverse(const QubitRouting& r);

// Permutes amplitudes and labels so basis bit j moves to dest[j].
StateVector apply_routing(const StateVector& state, const QubitRouting& r);

// Dense 2^n x 2^n expansion. Cross-check path only.
Matrix routing_matrix(const QubitRouting& r);

}  // namespace rio
