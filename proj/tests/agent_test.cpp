#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "hypersim/agent.hpp"
#include "hypersim/error.hpp"

namespace hypersim {
namespace {

std::vector<Action> bits_of(std::string_view s) {
  std::vector<Action> out;
  for (char c : s) out.push_back(static_cast<Action>(c - '0'));
  return out;
}

// Integer oracle: the sum over k of u_k 2^(K-1-k), i.e. the bit string read as
// a binary number, over 2^K.
Rational binary_fraction(const std::vector<Action>& bits) {
  BigInt num = 0;
  for (Action b : bits) num = num * 2 + b;
  BigInt den = BigInt(1) << bits.size();
  return Rational(num, den);
}

TEST(SimulateAgent, KnownValues) {
  EXPECT_EQ(simulate_agent(bits_of("111")), Rational(7, 8));
  EXPECT_EQ(simulate_agent(bits_of("000")), Rational(0));
  EXPECT_EQ(simulate_agent(bits_of("1010101010")), Rational(682, 1024));
  EXPECT_EQ(simulate_agent({}), Rational(0));
  EXPECT_EQ(simulate_agent({}, Rational(3, 5)), Rational(3, 5));
}

TEST(SimulateAgent, AffineInStartAndGain) {
  auto bits = bits_of("1101");
  EXPECT_EQ(simulate_agent(bits, Rational(1, 3), Rational(2)), Rational(1, 3) + 2 * Rational(13, 16));
}

TEST(SimulateAgent, MatchesBinaryFractionOracle) {
  std::mt19937_64 rng(21);
  std::bernoulli_distribution coin;
  for (int i = 0; i < 500; ++i) {
    std::vector<Action> bits(static_cast<std::size_t>(i % 70));
    for (auto& b : bits) b = coin(rng);
    ASSERT_EQ(simulate_agent(bits), binary_fraction(bits));
  }
}

TEST(SimulateAgent, StaysInUnitInterval) {
  std::mt19937_64 rng(22);
  std::bernoulli_distribution coin;
  for (int i = 0; i < 500; ++i) {
    std::vector<Action> bits(40);
    for (auto& b : bits) b = coin(rng);
    Rational x = simulate_agent(bits);
    EXPECT_GE(x, 0);
    EXPECT_LT(x, 1);
  }
}

TEST(SimulateAgent, MonotoneInActions) {
  // Raising any single bit from 0 to 1 raises the final state.
  std::mt19937_64 rng(23);
  std::bernoulli_distribution coin;
  for (int i = 0; i < 200; ++i) {
    std::vector<Action> bits(16);
    for (auto& b : bits) b = coin(rng);
    for (std::size_t k = 0; k < bits.size(); ++k) {
      if (bits[k]) continue;
      auto raised = bits;
      raised[k] = 1;
      EXPECT_GT(simulate_agent(raised), simulate_agent(bits));
    }
  }
}

TEST(LimitState, PeriodicSequences) {
  EXPECT_EQ(limit_state(ActionSequence::parse("(1)")), Rational(1));
  EXPECT_EQ(limit_state(ActionSequence::parse("(0)")), Rational(0));
  EXPECT_EQ(limit_state(ActionSequence::parse("(10)")), Rational(2, 3));
  EXPECT_EQ(limit_state(ActionSequence::parse("(01)")), Rational(1, 3));
  EXPECT_EQ(limit_state(ActionSequence::parse("1(0)")), Rational(1, 2));
  EXPECT_EQ(limit_state(ActionSequence::parse("0(1)")), Rational(1, 2));
  EXPECT_EQ(limit_state(ActionSequence::parse("(10)"), Rational(1), Rational(3)), Rational(3));
}

TEST(LimitState, FiniteSequenceRejected) {
  EXPECT_THROW(limit_state(ActionSequence::parse("101")), DomainError);
}

TEST(LimitState, PrefixesConverge) {
  for (std::string_view text : {"(10)", "(110)", "01(0111)", "1(1)"}) {
    auto seq = ActionSequence::parse(text);
    const Rational limit = limit_state(seq);
    for (std::size_t k : {8u, 16u, 32u}) {
      Rational gap = limit - simulate_agent(seq.prefix(k));
      EXPECT_GE(gap, 0) << text;
      EXPECT_LE(gap, Rational(1, BigInt(1) << k)) << text << " k=" << k;
    }
  }
}

TEST(ActionSequence, ParseAndPrefix) {
  auto seq = ActionSequence::parse("01(10)");
  EXPECT_TRUE(seq.is_periodic());
  EXPECT_EQ(seq.prefix(7), bits_of("0110101"));
  auto finite = ActionSequence::parse("011");
  EXPECT_FALSE(finite.is_periodic());
  EXPECT_EQ(finite.prefix(2), bits_of("01"));
  EXPECT_THROW(finite.prefix(4), InsufficientTape);
  EXPECT_THROW(ActionSequence::parse("012"), DomainError);
  EXPECT_THROW(ActionSequence::parse("0()"), DomainError);
  EXPECT_THROW(ActionSequence::parse("(1"), DomainError);
  EXPECT_THROW(ActionSequence({0}, {}), DomainError);
}

TEST(Reachability, FileSource) {
  ActionSource src = FileSource{ActionSequence::parse("1111111111111111")};
  auto states = reachability_experiment(src, 16, 1);
  ASSERT_EQ(states.size(), 1u);
  EXPECT_EQ(states[0], Rational(65535, 65536));
}

TEST(Reachability, ZeroHorizonIsStart) {
  ActionSource src = FileSource{ActionSequence::parse("")};
  auto states = reachability_experiment(src, 0, 1, Rational(1, 7));
  ASSERT_EQ(states.size(), 1u);
  EXPECT_EQ(states[0], Rational(1, 7));
}

TEST(Reachability, ShortFileRejected) {
  ActionSource src = FileSource{ActionSequence::parse("1010")};
  EXPECT_THROW(reachability_experiment(src, 5, 1), InsufficientTape);
}

TEST(Reachability, ShortAbhiTapeRejected) {
  AbhiSource abhi{{Hamiltonian2::sigma_x(), QubitState::zero()}, MeasurementTape::uniform(Rational(1), 3), 1, 1};
  EXPECT_THROW(reachability_experiment(abhi, 4, 10), InsufficientTape);
}

TEST(Reachability, AbhiSourceIsFairOnAverage) {
  AbhiSource abhi{{Hamiltonian2::sigma_x(), QubitState::zero()},
                  MeasurementTape::uniform(rational_from_double(std::numbers::pi / 4), 16), 99, 2};
  auto states = reachability_experiment(abhi, 16, 10'000);
  ASSERT_EQ(states.size(), 10'000u);
  Rational sum = 0;
  for (const auto& x : states) {
    ASSERT_GE(x, 0);
    ASSERT_LE(x, 1);
    ASSERT_EQ(denominator(Rational(x * 65536)), 1);
    sum += x;
  }
  const double mean = to_double(sum / 10'000);
  EXPECT_NEAR(mean, 0.5, 0.01);
}

TEST(Reachability, AbhiSourceReproducible) {
  AbhiSource abhi{{Hamiltonian2(0.2, -0.4, Complex(0.5, 0.5)), QubitState::zero()},
                  MeasurementTape::uniform(Rational(1, 2), 8), 5, 1};
  auto a = reachability_experiment(abhi, 8, 500);
  abhi.threads = 3;
  auto b = reachability_experiment(abhi, 8, 500);
  EXPECT_EQ(a, b);
}

}  // namespace
}  // namespace hypersim
