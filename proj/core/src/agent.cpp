#include "hypersim/agent.hpp"

#include "hypersim/error.hpp"

namespace hypersim {
namespace {

void check_bits(const std::vector<Action>& bits) {
  for (Action a : bits) {
    if (a > 1) throw DomainError("actions must be 0 or 1");
  }
}

std::vector<Action> parse_bits(std::string_view text) {
  std::vector<Action> out;
  for (char c : text) {
    if (c == '0' || c == '1') {
      out.push_back(static_cast<Action>(c - '0'));
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      throw DomainError(std::string("unexpected character '") + c + "' in action sequence");
    }
  }
  return out;
}

Rational power_of_two(std::size_t exponent) {
  return Rational(boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(exponent)));
}

}  // namespace

ActionSequence::ActionSequence(std::vector<Action> bits) : preamble_(std::move(bits)) {
  check_bits(preamble_);
}

ActionSequence::ActionSequence(std::vector<Action> preamble, std::vector<Action> period)
    : preamble_(std::move(preamble)), period_(std::move(period)) {
  if (period_.empty()) throw DomainError("period must contain at least one action");
  check_bits(preamble_);
  check_bits(period_);
}

ActionSequence ActionSequence::parse(std::string_view text) {
  auto open = text.find('(');
  if (open == std::string_view::npos) return ActionSequence(parse_bits(text));
  auto close = text.find(')', open);
  if (close == std::string_view::npos ||
      text.find_first_not_of(" \t\r\n", close + 1) != std::string_view::npos) {
    throw DomainError("periodic part must be written last, as '(bits)'");
  }
  return ActionSequence(parse_bits(text.substr(0, open)),
                        parse_bits(text.substr(open + 1, close - open - 1)));
}

std::vector<Action> ActionSequence::prefix(std::size_t k) const {
  if (!is_periodic()) {
    if (k > preamble_.size()) {
      throw InsufficientTape("need " + std::to_string(k) + " actions, sequence has " +
                             std::to_string(preamble_.size()));
    }
    return {preamble_.begin(), preamble_.begin() + static_cast<std::ptrdiff_t>(k)};
  }
  std::vector<Action> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    out.push_back(i < preamble_.size() ? preamble_[i]
                                       : period_[(i - preamble_.size()) % period_.size()]);
  }
  return out;
}

Rational simulate_agent(const std::vector<Action>& actions, const Rational& x0,
                        const Rational& alpha) {
  Rational x = x0;
  Rational dt(1, 2);
  for (Action u : actions) {
    if (u > 1) throw DomainError("actions must be 0 or 1");
    if (u) x += alpha * dt;
    dt /= 2;
  }
  return x;
}

Rational limit_state(const ActionSequence& actions, const Rational& x0, const Rational& alpha) {
  if (!actions.is_periodic()) throw DomainError("limit state needs an eventually periodic sequence");

  // Preamble contributes a finite dyadic sum; the period is a geometric
  // series with ratio 2^-L starting at 2^-p.
  const Rational head = simulate_agent(actions.preamble(), Rational(0), Rational(1));
  const Rational one_period = simulate_agent(actions.period(), Rational(0), Rational(1));
  const std::size_t p = actions.preamble().size();
  const std::size_t len = actions.period().size();
  const Rational ratio = Rational(1) / power_of_two(len);
  const Rational tail = one_period / power_of_two(p) / (Rational(1) - ratio);
  return x0 + alpha * (head + tail);
}

std::vector<Rational> reachability_experiment(const ActionSource& source, std::size_t horizon,
                                              std::size_t shots, const Rational& x0,
                                              const Rational& alpha) {
  if (const auto* file = std::get_if<FileSource>(&source)) {
    return {simulate_agent(file->actions.prefix(horizon), x0, alpha)};
  }
  const auto& abhi = std::get<AbhiSource>(source);
  if (abhi.tape.size() < horizon) {
    throw InsufficientTape("Abhi tape has " + std::to_string(abhi.tape.size()) +
                           " measurements, horizon needs " + std::to_string(horizon));
  }
  std::vector<Rational> times(abhi.tape.times().begin(),
                              abhi.tape.times().begin() + static_cast<std::ptrdiff_t>(horizon));
  const MeasurementTape tape(std::move(times));
  const auto tapes = sample_shots(abhi.setup.hamiltonian, abhi.setup.psi0, tape, shots,
                                  abhi.seed, abhi.threads);
  std::vector<Rational> out;
  out.reserve(tapes.size());
  for (const auto& t : tapes) out.push_back(simulate_agent(t.bits, x0, alpha));
  return out;
}

}  // namespace hypersim
