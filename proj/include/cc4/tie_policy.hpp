#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace cc4 {

enum class TieBreak { Zero, One, SeededRandom };

/// Rule for an output bit whose affirmative and negative votes exactly
/// cancel. Zero and One are deterministic; SeededRandom draws from a stream
/// seeded once, so a sequence of classifications is reproducible but
/// order-sensitive.
struct TiePolicy {
  TieBreak kind = TieBreak::Zero;
  std::uint64_t seed = 0;  // consumed only by SeededRandom

  static TiePolicy zero() { return {TieBreak::Zero, 0}; }
  static TiePolicy one() { return {TieBreak::One, 0}; }
  static TiePolicy seeded_random(std::uint64_t seed) {
    return {TieBreak::SeededRandom, seed};
  }

  bool deterministic() const { return kind != TieBreak::SeededRandom; }

  friend bool operator==(const TiePolicy&, const TiePolicy&) = default;
};

inline std::string to_string(TieBreak kind) {
  switch (kind) {
    case TieBreak::Zero:
      return "zero";
    case TieBreak::One:
      return "one";
    case TieBreak::SeededRandom:
      return "seeded_random";
  }
  return "zero";
}

inline TieBreak tie_break_from_string(const std::string& name) {
  if (name == "zero") return TieBreak::Zero;
  if (name == "one") return TieBreak::One;
  if (name == "seeded_random" || name == "random") return TieBreak::SeededRandom;
  throw std::invalid_argument("unknown tie policy '" + name + "'");
}

/// Resolves ties for one consumer. Stateless under the deterministic kinds;
/// under SeededRandom each resolve() consumes one draw.
class TieBreaker {
 public:
  explicit TieBreaker(const TiePolicy& policy)
      : policy_(policy), rng_(policy.seed) {}

  int resolve() {
    switch (policy_.kind) {
      case TieBreak::Zero:
        return 0;
      case TieBreak::One:
        return 1;
      case TieBreak::SeededRandom:
        return static_cast<int>(rng_() & 1u);
    }
    return 0;
  }

  void reset() { rng_.seed(policy_.seed); }

  const TiePolicy& policy() const { return policy_; }

 private:
  TiePolicy policy_;
  std::mt19937_64 rng_;
};

}  // namespace cc4
