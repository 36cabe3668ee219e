#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace hypersim::cli {

struct DemoCheck {
  std::string name;
  bool passed;
  std::string summary;
  nlohmann::json details;
};

struct DemoReport {
  std::uint64_t seed = 0;
  std::vector<DemoCheck> checks;

  bool all_passed() const;
  std::string to_json() const;
  std::string to_csv() const;
};

/// The full narrative: memory measurement on bounded and unbounded tapes,
/// the lookup-table contradiction, the classification trio, Abhi
/// uniformity, agent reachability and Goedel numbering.
DemoReport run_demo(std::uint64_t seed, std::size_t shots, unsigned threads);

}  // namespace hypersim::cli
