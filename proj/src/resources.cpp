#include "rio/resources.hpp"

#include <json.hpp>

namespace rio {

long long x_message_bits(int n_qubits, XEncoding encoding) {
  if (n_qubits < 1) throw std::invalid_argument("N must be >= 1");
  const PermRank f = factorial(1 << n_qubits);
  const auto floor_log2 = static_cast<long long>(boost::multiprecision::msb(f));
  if (encoding == XEncoding::FloorPlusOne) return floor_log2 + 1;
  // Tight: ceil(log2 f) = bit length of f - 1 (f is always >= 2 here).
  return static_cast<long long>(boost::multiprecision::msb(PermRank(f - 1))) + 1;
}

ResourceLedger ledger(int n_qubits, XEncoding encoding, bool bob_fixed_b) {
  if (n_qubits < 1) throw std::invalid_argument("N must be >= 1");
  ResourceLedger l;
  l.n = n_qubits;
  l.ebits = n_qubits;
  l.cbits_b_to_a = bob_fixed_b ? 0 : n_qubits;
  l.cbits_a_to_b = n_qubits + x_message_bits(n_qubits, encoding);
  l.encoding = encoding;
  l.bob_fixed_b = bob_fixed_b;
  return l;
}

ResourceLedger bqst_baseline(int n_qubits) {
  if (n_qubits < 1) throw std::invalid_argument("N must be >= 1");
  ResourceLedger l;
  l.n = n_qubits;
  l.ebits = 2LL * n_qubits;
  l.cbits_b_to_a = 2LL * n_qubits;  // receiver teleports the target state over
  l.cbits_a_to_b = 2LL * n_qubits;  // sender teleports the acted state back
  return l;
}

std::string ledger_to_json(const ResourceLedger& l) {
  nlohmann::json j;
  j["n"] = l.n;
  j["ebits"] = l.ebits;
  j["cbits"] = {{"b_to_a", l.cbits_b_to_a},
                {"a_to_b", l.cbits_a_to_b},
                {"total", l.cbits_total()}};
  j["encoding"] = l.encoding == XEncoding::FloorPlusOne ? "floor-plus-one" : "tight";
  j["bob_fixed_b"] = l.bob_fixed_b;
  const ResourceLedger b = bqst_baseline(l.n);
  j["bqst"] = {{"ebits", b.ebits},
               {"cbits", {{"b_to_a", b.cbits_b_to_a},
                          {"a_to_b", b.cbits_a_to_b},
                          {"total", b.cbits_total()}}}};
  return j.dump(2);
}

}  // namespace rio
