#include "hypersim/entropy.hpp"

#include "hypersim/error.hpp"

namespace hypersim {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

double StreamEntropy::next_uniform() {
  double value = 0.0;
  if (!(in_ >> value)) throw Error("entropy stream exhausted");
  if (!(value >= 0.0 && value < 1.0)) throw Error("entropy value outside [0, 1)");
  return value;
}

}  // namespace hypersim
