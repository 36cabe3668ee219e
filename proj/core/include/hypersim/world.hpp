#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hypersim/rational.hpp"

namespace hypersim {

using Parameter = std::uint64_t;

/// An object described by finitely many natural parameters, each >= 1.
/// What the parameters mean (geometry, mass) is opaque here.
struct ObjectSpec {
  std::vector<Parameter> params;
  bool operator==(const ObjectSpec&) const = default;
};

/// prod_i q_i^p_i over the first |params| primes. Throws DomainError on a
/// zero parameter or when the result would exceed 2^24 bits.
BigInt godel_encode(std::span<const Parameter> params);

/// Inverse of godel_encode. Throws DomainError for n < 1 and NotAnEncoding
/// when the prime support of n is not {2, 3, ..., q_k} for some k.
std::vector<Parameter> godel_decode(const BigInt& n);

/// Position (x, y, z) followed by orientation (rx, ry, rz).
struct Pose {
  std::array<Rational, 6> values;
  bool operator==(const Pose&) const = default;
};

struct Box {
  Rational width;
  Rational height;
  Rational depth;
};

struct BoxBounds {
  Rational l_min;
  Rational l_max;
  Rational d0;
};

struct EnvironmentSpec {
  std::vector<ObjectSpec> objects;
  std::vector<Pose> configs;
  Box box;
};

struct Violation {
  std::string field;
  std::string message;
};

/// Every violated constraint; empty means the environment is valid. Width and
/// height must lie in [l_min, l_max]; depth is only bounded below by d0.
std::vector<Violation> validate_environment(const EnvironmentSpec& env, const BoxBounds& bounds);

using Snapshot = std::vector<Pose>;

/// Pose snapshots of one fixed object list over time.
class Trajectory {
 public:
  /// Throws DomainError if a snapshot's size differs from the object count.
  Trajectory(std::vector<ObjectSpec> objects, std::vector<Snapshot> snapshots);

  const std::vector<ObjectSpec>& objects() const noexcept { return objects_; }
  const std::vector<Snapshot>& snapshots() const noexcept { return snapshots_; }

 private:
  std::vector<ObjectSpec> objects_;
  std::vector<Snapshot> snapshots_;
};

/// True iff two snapshots differ somewhere. Throws DomainError on an empty
/// trajectory.
bool is_task(const Trajectory& trajectory);

/// `first` followed by `second` with the shared junction snapshot kept once.
/// Throws MismatchedJunction unless both use the same objects and `second`
/// starts where `first` ends.
Trajectory cascade(const Trajectory& first, const Trajectory& second);

struct EnvironmentDocument {
  EnvironmentSpec environment;
  std::optional<BoxBounds> bounds;
};

// JSON shapes. Rationals are strings ("3/2", "0.25") or JSON numbers.
//   environment: {"box": {"w", "h", "d"}, "bounds": {"l_min", "l_max", "d0"},
//                 "objects": [{"params": [..], "pose": [x, y, z, rx, ry, rz]}]}
//   trajectory:  {"objects": [{"params": [..]}], "snapshots": [[pose, ...], ...]}
EnvironmentDocument parse_environment(std::string_view json_text);
Trajectory parse_trajectory(std::string_view json_text);
std::string trajectory_to_json(const Trajectory& trajectory);

}  // namespace hypersim
