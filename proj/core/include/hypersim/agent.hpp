#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <variant>
#include <vector>

#include "hypersim/abhi.hpp"
#include "hypersim/rational.hpp"

namespace hypersim {

using Action = std::uint8_t;

/// Binary action sequence u_0, u_1, ...: a finite preamble optionally
/// followed by a period repeated forever.
class ActionSequence {
 public:
  ActionSequence() = default;
  /// Finite sequence. Throws DomainError on values other than 0 and 1.
  explicit ActionSequence(std::vector<Action> bits);
  /// Eventually periodic. Throws DomainError if `period` is empty.
  ActionSequence(std::vector<Action> preamble, std::vector<Action> period);

  /// "0110"; with a period, "01(10)" means 01 then 10 repeated.
  static ActionSequence parse(std::string_view text);

  bool is_periodic() const noexcept { return !period_.empty(); }
  /// Length of a finite sequence; the preamble length when periodic.
  std::size_t finite_length() const noexcept { return preamble_.size(); }
  const std::vector<Action>& preamble() const noexcept { return preamble_; }
  const std::vector<Action>& period() const noexcept { return period_; }

  /// First `k` actions. Throws InsufficientTape if a finite sequence is
  /// shorter than `k`.
  std::vector<Action> prefix(std::size_t k) const;

 private:
  std::vector<Action> preamble_;
  std::vector<Action> period_;
};

/// x0 + alpha * sum_k u_k / 2^(k+1): the exact state after applying each
/// action over the halving interval dt_k = 2^-(k+1).
Rational simulate_agent(const std::vector<Action>& actions, const Rational& x0 = Rational(0),
                        const Rational& alpha = Rational(1));

/// Exact infinite-horizon state of an eventually periodic sequence.
/// Throws DomainError for a finite sequence.
Rational limit_state(const ActionSequence& actions, const Rational& x0 = Rational(0),
                     const Rational& alpha = Rational(1));

struct FileSource {
  ActionSequence actions;
};

struct AbhiSource {
  AbhiSetup setup;
  MeasurementTape tape;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

using ActionSource = std::variant<FileSource, AbhiSource>;

/// Terminal states after `horizon` actions. A file source yields one state;
/// an Abhi source yields `shots` states, each from an independently sampled
/// output tape read as action bits. Throws InsufficientTape if the source
/// provides fewer than `horizon` actions.
std::vector<Rational> reachability_experiment(const ActionSource& source, std::size_t horizon,
                                              std::size_t shots,
                                              const Rational& x0 = Rational(0),
                                              const Rational& alpha = Rational(1));

}  // namespace hypersim
