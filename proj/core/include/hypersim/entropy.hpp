#pragma once

#include <cstdint>
#include <istream>
#include <random>

namespace hypersim {

/// Supplier of uniform reals in [0, 1) for measurement collapse.
///
/// Software cannot reproduce physically random collapse; the default source
/// is a seeded pseudorandom generator so every experiment is repeatable.
/// StreamEntropy accepts externally produced randomness instead.
class EntropySource {
 public:
  virtual ~EntropySource() = default;
  virtual double next_uniform() = 0;
};

/// SplitMix64 finalizer over (seed, stream); gives each shot its own stream.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

class SeededEntropy final : public EntropySource {
 public:
  explicit SeededEntropy(std::uint64_t seed) : engine_(seed) {}

  /// Top 53 bits of one 64-bit draw, so the sequence is identical across
  /// standard library implementations.
  double next_uniform() override {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

 private:
  std::mt19937_64 engine_;
};

/// Reads whitespace-separated reals in [0, 1) from a stream. Throws Error when
/// the stream runs dry or yields a value outside the interval.
class StreamEntropy final : public EntropySource {
 public:
  explicit StreamEntropy(std::istream& in) : in_(in) {}
  double next_uniform() override;

 private:
  std::istream& in_;
};

}  // namespace hypersim
