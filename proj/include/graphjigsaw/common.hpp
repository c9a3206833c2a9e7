#pragma once

#include <cstdint>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

namespace graphjigsaw {

// Error taxonomy mirrored by the CLI exit codes: config 2, data 3, numeric 4.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Seedable random source. Every subsystem owns its own stream, derived from
// the run seed plus a tag, so e.g. disabling the jigsaw branch never shifts
// the data-loading or weight-init sequences.
class RngStream {
 public:
  RngStream() : gen_(0) {}
  explicit RngStream(std::uint64_t seed) : gen_(seed) {}
  RngStream(std::uint64_t seed, const std::string& tag)
      : gen_(splitmix64(seed ^ fnv1a(tag))) {}

  // Uniform in [0, 1). 53-bit mantissa path, identical across platforms.
  double next01() { return double(gen_() >> 11) * 0x1.0p-53; }

  // Uniform in [-s, s].
  double uniform_sym(double s) { return (next01() * 2.0 - 1.0) * s; }

  // Uniform integer in [0, n). Rejection sampling, no modulo bias.
  std::uint64_t next_below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = gen_();
    } while (x >= limit);
    return x % n;
  }

  bool coin() { return (gen_() & 1u) != 0; }

  std::string save_state() const {
    std::ostringstream os;
    os << gen_;
    return os.str();
  }
  void load_state(const std::string& s) {
    std::istringstream is(s);
    is >> gen_;
    if (!is) throw DataError("corrupt random-source state");
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace graphjigsaw
