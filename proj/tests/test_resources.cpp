#include <doctest.h>

#include "rio/protocol.hpp"
#include "rio/resources.hpp"

using namespace rio;

TEST_CASE("published anchors") {
  // N=2: two e-bits and nine c-bits, x message in five bits.
  const auto two = ledger(2, XEncoding::FloorPlusOne, false);
  CHECK(two.ebits == 2);
  CHECK(two.cbits_b_to_a == 2);
  CHECK(two.cbits_a_to_b == 7);
  CHECK(two.cbits_total() == 9);
  CHECK(x_message_bits(2, XEncoding::FloorPlusOne) == 5);

  // N=1: one e-bit and three c-bits under the tight encoding.
  const auto one = ledger(1, XEncoding::Tight, false);
  CHECK(one.ebits == 1);
  CHECK(one.cbits_total() == 3);

  // N=3: 6 + floor(log2(40320)) + 1 = 22.
  const auto three = ledger(3, XEncoding::FloorPlusOne, false);
  CHECK(three.ebits == 3);
  CHECK(three.cbits_total() == 22);
  CHECK(x_message_bits(3, XEncoding::FloorPlusOne) == 16);
}

TEST_CASE("fixing b in advance drops the receiver-to-sender bits") {
  for (int n = 1; n <= 4; ++n) {
    const auto l = ledger(n, XEncoding::Tight, true);
    CHECK(l.cbits_b_to_a == 0);
    CHECK(l.cbits_a_to_b == ledger(n, XEncoding::Tight, false).cbits_a_to_b);
  }
}

TEST_CASE("bqst baseline and the half-resource ratio") {
  const auto one = bqst_baseline(1);
  CHECK(one.ebits == 2);
  CHECK(one.cbits_total() == 4);

  const auto two = bqst_baseline(2);
  CHECK(two.ebits == 4);
  CHECK(two.cbits_total() == 8);

  for (int n = 1; n <= 6; ++n)
    CHECK(2 * ledger(n, XEncoding::Tight, false).ebits == bqst_baseline(n).ebits);
}

TEST_CASE("floor-plus-one exceeds tight by one exactly when (2^N)! is a power of two") {
  for (int n = 1; n <= 4; ++n) {
    const long long loose = x_message_bits(n, XEncoding::FloorPlusOne);
    const long long tight = x_message_bits(n, XEncoding::Tight);
    const PermRank f = factorial(1 << n);
    const bool power_of_two = (f & (f - 1)) == 0;
    CHECK(loose - tight == (power_of_two ? 1 : 0));
    CHECK(power_of_two == (n == 1));
  }
}

TEST_CASE("e-bit count matches the Bell pairs init_state constructs") {
  std::mt19937_64 rng(1);
  for (int n = 1; n <= 3; ++n) {
    const auto xi = random_state(y_labels(n), rng);
    const auto joint = init_state(n, xi);
    // One A_m/B_m pair per e-bit.
    CHECK(static_cast<long long>((joint.num_qubits() - n) / 2) ==
          ledger(n, XEncoding::Tight, false).ebits);
  }
}

TEST_CASE("transcript bit counts equal the tight ledger, N <= 3") {
  std::mt19937_64 rng(2);
  for (int n = 1; n <= 3; ++n) {
    ProtocolConfig cfg;
    cfg.n_qubits = n;
    cfg.x = 1 + static_cast<int>(rng() % 7);
    cfg.t = random_phase_vector(Eigen::Index{1} << n, rng);
    cfg.seed = rng();
    const auto run = run_protocol(cfg, random_state(y_labels(n), rng));

    long long b2a = 0, a2b = 0;
    for (const auto& m : run.transcript.messages)
      (m.dir == Message::Dir::BobToAlice ? b2a : a2b) +=
          static_cast<long long>(m.bits.size());

    const auto l = ledger(n, XEncoding::Tight, false);
    CHECK(b2a == l.cbits_b_to_a);
    CHECK(a2b == l.cbits_a_to_b);
  }
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(ledger(0, XEncoding::Tight, false), std::invalid_argument);
  CHECK_THROWS_AS(bqst_baseline(0), std::invalid_argument);
}
