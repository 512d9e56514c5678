// resources.hpp
// e-bit and directional c-bit accounting for a protocol run, plus the
// bidirectional-teleportation baseline.

#pragma once

#include <string>

#include "rio/restricted.hpp"

namespace rio {

// Width of the x message: the published count is floor(log2((2^N)!)) + 1,
// which over-allocates one bit whenever (2^N)! is a power of two (N = 1);
// the tight count is ceil(log2((2^N)!)).
enum class XEncoding { FloorPlusOne, Tight };

struct ResourceLedger {
  int n = 0;
  long long ebits = 0;
  long long cbits_b_to_a = 0;
  long long cbits_a_to_b = 0;
  XEncoding encoding = XEncoding::Tight;
  bool bob_fixed_b = false;

  long long cbits_total() const { return cbits_b_to_a + cbits_a_to_b; }
};

long long x_message_bits(int n_qubits, XEncoding encoding);

// N e-bits; N c-bits Bob->Alice (0 when Bob fixes b in advance); N + bits(x)
// c-bits Alice->Bob.
ResourceLedger ledger(int n_qubits, XEncoding encoding, bool bob_fixed_b);

// Teleport there and back: 2N e-bits, 4N c-bits.
ResourceLedger bqst_baseline(int n_qubits);

std::string ledger_to_json(const ResourceLedger& l);

}  // namespace rio
