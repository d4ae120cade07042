#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace gdd {

enum class Errc {
  structural,           // malformed input, distinct from design-invalid
  not_admissible,       // triple fails an existence condition
  does_not_exist,       // known nonexistence (e.g. disjoint pair of type 1^3)
  search_exhausted,     // complete search ran out at desk scale
  no_pair,              // pair variant refused (t=3 MGDD etc.)
  unsupported,          // parameter outside the construction's regime
  precondition,         // caller violated a stated precondition
  good_difference_required,
  factor_alignment,     // F_i^1 cap F_i^2 != empty and no fix found
  provider_cycle,       // recursion cycle in ingredient requests
  internal_gap,         // admissible triple no branch accepts: completeness alarm
  io,
};

class Error : public std::runtime_error {
 public:
  Error(Errc c, const std::string& msg) : std::runtime_error(msg), code_(c) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

// All randomized search is seeded from the query it serves, never from the
// clock, so identical queries replay identically across runs.
inline std::uint64_t stable_hash(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::mt19937_64 seeded_rng(const std::string& key) {
  return std::mt19937_64(stable_hash(key));
}

}  // namespace gdd
