#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hypersim/entropy.hpp"
#include "hypersim/rational.hpp"

namespace hypersim {

using Complex = std::complex<double>;

/// Hermitian 2x2 generator [[a, c], [conj(c), d]] with c != 0.
class Hamiltonian2 {
 public:
  /// Throws DomainError if c == 0 or any entry is not finite.
  Hamiltonian2(double a, double d, Complex c);

  double a() const noexcept { return a_; }
  double d() const noexcept { return d_; }
  Complex c() const noexcept { return c_; }

  /// Length of the Bloch vector b in H = alpha*I + b.sigma; always > 0.
  double bloch_norm() const noexcept;

  /// sigma_x scaled by `strength`.
  static Hamiltonian2 sigma_x(double strength = 1.0) { return {0.0, 0.0, Complex(strength, 0.0)}; }

 private:
  double a_;
  double d_;
  Complex c_;
};

class QubitState {
 public:
  static constexpr double kNormTolerance = 1e-12;

  /// |0>.
  QubitState() = default;
  /// Throws DomainError unless |amp0|^2 + |amp1|^2 = 1 within kNormTolerance.
  QubitState(Complex amp0, Complex amp1);

  static QubitState zero() { return {}; }
  static QubitState one() { return QubitState(Complex(0.0), Complex(1.0), Unchecked{}); }
  static QubitState basis(int bit) { return bit ? one() : zero(); }
  /// Rescales any nonzero pair; throws DomainError on a zero vector.
  static QubitState normalized(Complex amp0, Complex amp1);

  Complex amp0() const noexcept { return amp0_; }
  Complex amp1() const noexcept { return amp1_; }
  double prob_one() const noexcept { return std::norm(amp1_); }
  double norm_squared() const noexcept { return std::norm(amp0_) + std::norm(amp1_); }

 private:
  struct Unchecked {};
  QubitState(Complex amp0, Complex amp1, Unchecked) : amp0_(amp0), amp1_(amp1) {}

  Complex amp0_{1.0, 0.0};
  Complex amp1_{0.0, 0.0};
};

/// Row-major 2x2 complex matrix.
struct Matrix2 {
  std::array<Complex, 4> m{};

  Complex operator()(int row, int col) const { return m[static_cast<std::size_t>(2 * row + col)]; }
  /// Raw product; no renormalization.
  std::array<Complex, 2> apply(Complex v0, Complex v1) const {
    return {m[0] * v0 + m[1] * v1, m[2] * v0 + m[3] * v1};
  }
};

/// exp(-i H t) in closed form: with H = alpha I + b.sigma and
/// theta = |b| t, U = exp(-i alpha t) (cos(theta) I - i sin(theta) b.sigma / |b|).
Matrix2 propagator(const Hamiltonian2& h, double t);

/// propagator(h, dt) applied to psi, renormalized. Throws DomainError if dt
/// is negative or not finite.
QubitState evolve(const QubitState& psi, const Hamiltonian2& h, double dt);

struct Measurement {
  int bit;
  QubitState state;
};

/// Born-rule measurement in the computational basis: bit = 1 iff
/// u < |amp1|^2 for u drawn from `entropy`; the state collapses to |bit>.
Measurement measure(const QubitState& psi, EntropySource& entropy);

/// Strictly increasing positive measurement times t_1 < ... < t_N (t_0 = 0).
class MeasurementTape {
 public:
  MeasurementTape() = default;
  /// Throws DomainError unless the times are positive and strictly increasing.
  explicit MeasurementTape(std::vector<Rational> times);

  /// Comma-separated rationals, e.g. "1/2,1,3/2". Empty text is an empty tape.
  static MeasurementTape parse(std::string_view text);
  /// Times interval, 2*interval, ..., count*interval.
  static MeasurementTape uniform(const Rational& interval, std::size_t count);

  const std::vector<Rational>& times() const noexcept { return times_; }
  std::size_t size() const noexcept { return times_.size(); }
  /// t_k - t_{k-1}, exact.
  std::vector<Rational> intervals() const;

 private:
  std::vector<Rational> times_;
};

struct OutputTape {
  std::vector<std::uint8_t> bits;

  std::string str() const;
  bool operator==(const OutputTape&) const = default;
};

/// Evolves between scheduled times and measures at each one, continuing from
/// the collapsed state.
OutputTape run_tape(const Hamiltonian2& h, const QubitState& psi0, const MeasurementTape& tape,
                    EntropySource& entropy);

inline constexpr std::size_t kMaxExactTapeLength = 24;

/// Probability of each of the 2^N output strings. Index bit N-1-k holds
/// measurement k, so index order matches lexicographic bit-string order.
/// Throws TooLarge when N exceeds kMaxExactTapeLength.
std::vector<double> exact_distribution(const Hamiltonian2& h, const QubitState& psi0,
                                       const MeasurementTape& tape);

/// Bit string of `index` in the ordering used by exact_distribution.
std::string bitstring(std::size_t index, std::size_t length);

/// `shots` independent runs; shot i draws from SeededEntropy(derive_seed(seed, i)).
/// Result order is by shot index whatever the thread count.
std::vector<OutputTape> sample_shots(const Hamiltonian2& h, const QubitState& psi0,
                                     const MeasurementTape& tape, std::size_t shots,
                                     std::uint64_t seed, unsigned threads = 1);

struct AbhiSetup {
  Hamiltonian2 hamiltonian;
  QubitState psi0;
};

/// Parses {"a":..,"d":..,"c_re":..,"c_im":..,"psi0":[amp0, amp1]}. Each
/// amplitude is a number or [re, im]; psi0 is optional (|0>) and is
/// normalized on load. Throws DomainError on malformed documents.
AbhiSetup parse_abhi_setup(std::string_view json_text);

}  // namespace hypersim
