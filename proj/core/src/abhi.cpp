#include "hypersim/abhi.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

#include "hypersim/error.hpp"
#include "hypersim/parallel.hpp"

namespace hypersim {

Hamiltonian2::Hamiltonian2(double a, double d, Complex c) : a_(a), d_(d), c_(c) {
  if (!std::isfinite(a) || !std::isfinite(d) || !std::isfinite(c.real()) ||
      !std::isfinite(c.imag())) {
    throw DomainError("Hamiltonian entries must be finite");
  }
  if (c == Complex(0.0, 0.0)) throw DomainError("off-diagonal entry H12 must be nonzero");
}

double Hamiltonian2::bloch_norm() const noexcept {
  return std::hypot(std::abs(c_), 0.5 * (a_ - d_));
}

QubitState::QubitState(Complex amp0, Complex amp1) : amp0_(amp0), amp1_(amp1) {
  if (!(std::abs(norm_squared() - 1.0) <= kNormTolerance)) {
    throw DomainError("qubit state is not normalized");
  }
}

QubitState QubitState::normalized(Complex amp0, Complex amp1) {
  double n = std::sqrt(std::norm(amp0) + std::norm(amp1));
  if (!(n > 0.0) || !std::isfinite(n)) throw DomainError("cannot normalize a zero state");
  return QubitState(amp0 / n, amp1 / n, Unchecked{});
}

Matrix2 propagator(const Hamiltonian2& h, double t) {
  const double alpha = 0.5 * (h.a() + h.d());
  const double b = h.bloch_norm();
  const double theta = b * t;
  const double cos_t = std::cos(theta);
  const double sin_t = std::sin(theta);
  const Complex phase = std::polar(1.0, -alpha * t);
  const Complex minus_i(0.0, -1.0);

  // b.sigma / |b| = [[nz, c/|b|], [conj(c)/|b|, -nz]]
  const double nz = 0.5 * (h.a() - h.d()) / b;
  const Complex upper = h.c() / b;
  const Complex lower = std::conj(h.c()) / b;

  Matrix2 u;
  u.m[0] = phase * (cos_t + minus_i * sin_t * nz);
  u.m[1] = phase * (minus_i * sin_t * upper);
  u.m[2] = phase * (minus_i * sin_t * lower);
  u.m[3] = phase * (cos_t - minus_i * sin_t * nz);
  return u;
}

QubitState evolve(const QubitState& psi, const Hamiltonian2& h, double dt) {
  if (!(dt >= 0.0) || !std::isfinite(dt)) throw DomainError("evolution time must be >= 0");
  if (dt == 0.0) return psi;
  auto [v0, v1] = propagator(h, dt).apply(psi.amp0(), psi.amp1());
  return QubitState::normalized(v0, v1);
}

Measurement measure(const QubitState& psi, EntropySource& entropy) {
  const int bit = entropy.next_uniform() < psi.prob_one() ? 1 : 0;
  return {bit, QubitState::basis(bit)};
}

MeasurementTape::MeasurementTape(std::vector<Rational> times) : times_(std::move(times)) {
  Rational previous(0);
  for (std::size_t k = 0; k < times_.size(); ++k) {
    if (times_[k] <= previous) {
      throw DomainError("measurement time " + std::to_string(k + 1) + " (" + to_string(times_[k]) +
                        ") is not after " + to_string(previous));
    }
    previous = times_[k];
  }
}

MeasurementTape MeasurementTape::parse(std::string_view text) {
  std::vector<Rational> times;
  bool blank = text.find_first_not_of(" \t\r\n") == std::string_view::npos;
  if (!blank) {
    std::size_t pos = 0;
    for (;;) {
      std::size_t comma = text.find(',', pos);
      times.push_back(parse_rational(text.substr(pos, comma - pos)));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
  }
  return MeasurementTape(std::move(times));
}

MeasurementTape MeasurementTape::uniform(const Rational& interval, std::size_t count) {
  std::vector<Rational> times;
  times.reserve(count);
  for (std::size_t k = 1; k <= count; ++k) times.push_back(interval * k);
  return MeasurementTape(std::move(times));
}

std::vector<Rational> MeasurementTape::intervals() const {
  std::vector<Rational> out;
  out.reserve(times_.size());
  Rational previous(0);
  for (const Rational& t : times_) {
    out.push_back(t - previous);
    previous = t;
  }
  return out;
}

std::string OutputTape::str() const {
  std::string s;
  s.reserve(bits.size());
  for (auto b : bits) s += b ? '1' : '0';
  return s;
}

namespace {

std::vector<double> interval_seconds(const MeasurementTape& tape) {
  std::vector<double> out;
  for (const Rational& dt : tape.intervals()) out.push_back(to_double(dt));
  return out;
}

OutputTape run_intervals(const Hamiltonian2& h, const QubitState& psi0,
                         const std::vector<double>& intervals, EntropySource& entropy) {
  OutputTape out;
  out.bits.reserve(intervals.size());
  QubitState psi = psi0;
  for (double dt : intervals) {
    Measurement m = measure(evolve(psi, h, dt), entropy);
    out.bits.push_back(static_cast<std::uint8_t>(m.bit));
    psi = m.state;
  }
  return out;
}

}  // namespace

OutputTape run_tape(const Hamiltonian2& h, const QubitState& psi0, const MeasurementTape& tape,
                    EntropySource& entropy) {
  return run_intervals(h, psi0, interval_seconds(tape), entropy);
}

std::vector<double> exact_distribution(const Hamiltonian2& h, const QubitState& psi0,
                                       const MeasurementTape& tape) {
  const std::size_t n = tape.size();
  if (n > kMaxExactTapeLength) {
    throw TooLarge("exact distribution limited to " + std::to_string(kMaxExactTapeLength) +
                   " measurements, got " + std::to_string(n));
  }
  std::vector<double> probs(std::size_t{1} << n, 0.0);
  if (n == 0) {
    probs[0] = 1.0;
    return probs;
  }

  const std::vector<double> dts = interval_seconds(tape);
  std::vector<Matrix2> step(n);
  for (std::size_t k = 0; k < n; ++k) step[k] = propagator(h, dts[k]);

  // Depth-first over the outcome tree; each branch carries its collapsed state.
  auto descend = [&](auto&& self, std::size_t level, std::size_t prefix, double weight,
                     Complex v0, Complex v1) -> void {
    auto [w0, w1] = step[level].apply(v0, v1);
    const double norm = std::norm(w0) + std::norm(w1);
    const double p1 = std::norm(w1) / norm;
    const double branch[2] = {1.0 - p1, p1};
    for (int bit = 0; bit < 2; ++bit) {
      const std::size_t index = (prefix << 1) | static_cast<std::size_t>(bit);
      const double w = weight * branch[bit];
      if (level + 1 == n) {
        probs[index] = w;
      } else if (w > 0.0) {
        self(self, level + 1, index, w, Complex(bit ? 0.0 : 1.0), Complex(bit ? 1.0 : 0.0));
      }
    }
  };
  descend(descend, 0, 0, 1.0, psi0.amp0(), psi0.amp1());
  return probs;
}

std::string bitstring(std::size_t index, std::size_t length) {
  std::string s(length, '0');
  for (std::size_t k = 0; k < length; ++k) {
    if ((index >> (length - 1 - k)) & 1u) s[k] = '1';
  }
  return s;
}

std::vector<OutputTape> sample_shots(const Hamiltonian2& h, const QubitState& psi0,
                                     const MeasurementTape& tape, std::size_t shots,
                                     std::uint64_t seed, unsigned threads) {
  const std::vector<double> dts = interval_seconds(tape);
  std::vector<OutputTape> out(shots);
  parallel_for(shots, threads, [&](std::size_t i) {
    SeededEntropy entropy(derive_seed(seed, i));
    out[i] = run_intervals(h, psi0, dts, entropy);
  });
  return out;
}

namespace {

double number_field(const nlohmann::json& doc, const char* key, bool required) {
  if (!doc.contains(key)) {
    if (required) throw DomainError(std::string("missing field '") + key + "'");
    return 0.0;
  }
  const auto& v = doc.at(key);
  if (!v.is_number()) throw DomainError(std::string("field '") + key + "' must be a number");
  return v.get<double>();
}

Complex amplitude(const nlohmann::json& v) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return {v[0].get<double>(), v[1].get<double>()};
  }
  throw DomainError("amplitude must be a number or [re, im]");
}

}  // namespace

AbhiSetup parse_abhi_setup(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(std::string("malformed Hamiltonian JSON: ") + e.what());
  }
  if (!doc.is_object()) throw DomainError("Hamiltonian JSON must be an object");

  Hamiltonian2 h(number_field(doc, "a", true), number_field(doc, "d", true),
                 Complex(number_field(doc, "c_re", true), number_field(doc, "c_im", false)));
  QubitState psi0;
  if (doc.contains("psi0")) {
    const auto& p = doc.at("psi0");
    if (!p.is_array() || p.size() != 2) throw DomainError("psi0 must be [amp0, amp1]");
    psi0 = QubitState::normalized(amplitude(p[0]), amplitude(p[1]));
  }
  return {h, psi0};
}

}  // namespace hypersim
