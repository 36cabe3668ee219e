#include "hypersim/world.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

#include "hypersim/error.hpp"

namespace hypersim {
namespace {

constexpr double kMaxEncodingBits = 1 << 24;

// Consecutive primes by trial division against the primes found so far.
class PrimeSequence {
 public:
  std::uint64_t next() {
    std::uint64_t candidate = primes_.empty() ? 2 : primes_.back() + 1;
    for (;; ++candidate) {
      bool prime = true;
      for (std::uint64_t p : primes_) {
        if (p * p > candidate) break;
        if (candidate % p == 0) {
          prime = false;
          break;
        }
      }
      if (prime) break;
    }
    primes_.push_back(candidate);
    return candidate;
  }

 private:
  std::vector<std::uint64_t> primes_;
};

}  // namespace

BigInt godel_encode(std::span<const Parameter> params) {
  PrimeSequence primes;
  std::vector<std::uint64_t> bases;
  double bits = 0.0;
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (params[i] == 0) {
      throw DomainError("parameter " + std::to_string(i) + " is 0; parameters must be >= 1");
    }
    bases.push_back(primes.next());
    bits += static_cast<double>(params[i]) * std::log2(static_cast<double>(bases.back()));
    if (bits > kMaxEncodingBits) throw DomainError("Goedel number too large to materialize");
  }
  BigInt result = 1;
  for (std::size_t i = 0; i < params.size(); ++i) {
    result *= boost::multiprecision::pow(BigInt(bases[i]), static_cast<unsigned>(params[i]));
  }
  return result;
}

std::vector<Parameter> godel_decode(const BigInt& n) {
  if (n < 1) throw DomainError("Goedel numbers are >= 1");
  std::vector<Parameter> params;
  BigInt rest = n;
  PrimeSequence primes;
  while (rest > 1) {
    const std::uint64_t q = primes.next();
    Parameter exponent = 0;
    BigInt quotient, remainder;
    for (;;) {
      boost::multiprecision::divide_qr(rest, BigInt(q), quotient, remainder);
      if (remainder != 0) break;
      rest = quotient;
      ++exponent;
    }
    if (exponent == 0) {
      throw NotAnEncoding(n.str() + " is not an encoding: prime " + std::to_string(q) +
                          " is missing from its factorization");
    }
    params.push_back(exponent);
  }
  return params;
}

std::vector<Violation> validate_environment(const EnvironmentSpec& env, const BoxBounds& bounds) {
  std::vector<Violation> out;
  if (!(bounds.l_min > 0)) out.push_back({"l_min", "must be > 0"});
  if (!(bounds.l_max > bounds.l_min)) out.push_back({"l_max", "must exceed l_min"});

  auto check_side = [&](const char* name, const Rational& v) {
    if (v < bounds.l_min) {
      out.push_back({name, to_string(v) + " < l_min " + to_string(bounds.l_min)});
    }
    if (v > bounds.l_max) {
      out.push_back({name, to_string(v) + " > l_max " + to_string(bounds.l_max)});
    }
  };
  check_side("w", env.box.width);
  check_side("h", env.box.height);
  if (env.box.depth < bounds.d0) {
    out.push_back({"d", to_string(env.box.depth) + " < d0 " + to_string(bounds.d0)});
  }

  if (env.configs.size() != env.objects.size()) {
    out.push_back({"configs", std::to_string(env.configs.size()) + " poses for " +
                                  std::to_string(env.objects.size()) + " objects"});
  }
  for (std::size_t i = 0; i < env.objects.size(); ++i) {
    const auto& params = env.objects[i].params;
    const std::string field = "objects[" + std::to_string(i) + "]";
    if (params.empty()) out.push_back({field, "has no parameters"});
    for (Parameter p : params) {
      if (p == 0) {
        out.push_back({field, "has a zero parameter"});
        break;
      }
    }
  }
  return out;
}

Trajectory::Trajectory(std::vector<ObjectSpec> objects, std::vector<Snapshot> snapshots)
    : objects_(std::move(objects)), snapshots_(std::move(snapshots)) {
  for (std::size_t k = 0; k < snapshots_.size(); ++k) {
    if (snapshots_[k].size() != objects_.size()) {
      throw DomainError("snapshot " + std::to_string(k) + " has " +
                        std::to_string(snapshots_[k].size()) + " poses for " +
                        std::to_string(objects_.size()) + " objects");
    }
  }
}

bool is_task(const Trajectory& trajectory) {
  const auto& snaps = trajectory.snapshots();
  if (snaps.empty()) throw DomainError("empty trajectory");
  for (std::size_t k = 1; k < snaps.size(); ++k) {
    if (snaps[k] != snaps.front()) return true;
  }
  return false;
}

Trajectory cascade(const Trajectory& first, const Trajectory& second) {
  if (first.objects() != second.objects()) {
    throw MismatchedJunction("trajectories describe different objects");
  }
  if (first.snapshots().empty() || second.snapshots().empty()) {
    throw MismatchedJunction("cannot join an empty trajectory");
  }
  if (first.snapshots().back() != second.snapshots().front()) {
    throw MismatchedJunction("second trajectory does not start where the first ends");
  }
  std::vector<Snapshot> joined = first.snapshots();
  joined.insert(joined.end(), second.snapshots().begin() + 1, second.snapshots().end());
  return Trajectory(first.objects(), std::move(joined));
}

namespace {

using nlohmann::json;

Rational rational_field(const json& v, const std::string& where) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return parse_rational(v.dump());
  if (v.is_number_float()) return rational_from_double(v.get<double>());
  throw DomainError(where + " must be a rational string or a number");
}

const json& member(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw DomainError(where + " is missing '" + key + "'");
  }
  return obj.at(key);
}

ObjectSpec object_from_json(const json& v, const std::string& where) {
  const json& params = member(v, "params", where);
  if (!params.is_array()) throw DomainError(where + ".params must be an array");
  ObjectSpec obj;
  for (const auto& p : params) {
    if (!p.is_number_unsigned()) throw DomainError(where + ".params must be naturals");
    obj.params.push_back(p.get<Parameter>());
  }
  return obj;
}

Pose pose_from_json(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 6) throw DomainError(where + " must hold 6 values");
  Pose pose;
  for (std::size_t i = 0; i < 6; ++i) pose.values[i] = rational_field(v[i], where);
  return pose;
}

json parse_document(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw DomainError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

EnvironmentDocument parse_environment(std::string_view json_text) {
  const json doc = parse_document(json_text);
  EnvironmentDocument out;
  const json& box = member(doc, "box", "environment");
  out.environment.box = {rational_field(member(box, "w", "box"), "box.w"),
                         rational_field(member(box, "h", "box"), "box.h"),
                         rational_field(member(box, "d", "box"), "box.d")};
  if (doc.contains("bounds")) {
    const json& b = doc.at("bounds");
    out.bounds = BoxBounds{rational_field(member(b, "l_min", "bounds"), "bounds.l_min"),
                           rational_field(member(b, "l_max", "bounds"), "bounds.l_max"),
                           rational_field(member(b, "d0", "bounds"), "bounds.d0")};
  }
  const json& objects = member(doc, "objects", "environment");
  if (!objects.is_array()) throw DomainError("objects must be an array");
  for (std::size_t i = 0; i < objects.size(); ++i) {
    const std::string where = "objects[" + std::to_string(i) + "]";
    out.environment.objects.push_back(object_from_json(objects[i], where));
    if (objects[i].contains("pose")) {
      out.environment.configs.push_back(pose_from_json(objects[i].at("pose"), where + ".pose"));
    }
  }
  return out;
}

Trajectory parse_trajectory(std::string_view json_text) {
  const json doc = parse_document(json_text);
  const json& objects = member(doc, "objects", "trajectory");
  const json& snapshots = member(doc, "snapshots", "trajectory");
  if (!objects.is_array() || !snapshots.is_array()) {
    throw DomainError("objects and snapshots must be arrays");
  }
  std::vector<ObjectSpec> objs;
  for (std::size_t i = 0; i < objects.size(); ++i) {
    objs.push_back(object_from_json(objects[i], "objects[" + std::to_string(i) + "]"));
  }
  std::vector<Snapshot> snaps;
  for (std::size_t k = 0; k < snapshots.size(); ++k) {
    const std::string where = "snapshots[" + std::to_string(k) + "]";
    if (!snapshots[k].is_array()) throw DomainError(where + " must be an array of poses");
    Snapshot snap;
    for (std::size_t i = 0; i < snapshots[k].size(); ++i) {
      snap.push_back(pose_from_json(snapshots[k][i], where + "[" + std::to_string(i) + "]"));
    }
    snaps.push_back(std::move(snap));
  }
  return Trajectory(std::move(objs), std::move(snaps));
}

std::string trajectory_to_json(const Trajectory& trajectory) {
  json doc;
  doc["objects"] = json::array();
  for (const auto& o : trajectory.objects()) doc["objects"].push_back({{"params", o.params}});
  doc["snapshots"] = json::array();
  for (const auto& snap : trajectory.snapshots()) {
    json poses = json::array();
    for (const auto& pose : snap) {
      json values = json::array();
      for (const auto& v : pose.values) values.push_back(to_string(v));
      poses.push_back(values);
    }
    doc["snapshots"].push_back(poses);
  }
  return doc.dump();
}

}  // namespace hypersim
