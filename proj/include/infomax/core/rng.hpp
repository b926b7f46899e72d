#pragma once

#include <array>
#include <cstdint>

namespace infomax {

/// Deterministic random stream keyed by (seed, stream id). The same key
/// always reproduces the same draw sequence; distinct stream ids give
/// statistically independent streams. All randomness in the library flows
/// through explicitly passed RngStream objects.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id);

  /// Derives an independent child stream. Children of distinct ids (and of
  /// distinct parents) do not collide in practice.
  RngStream sub(std::uint64_t child_id) const;

  std::uint64_t seed_key() const { return seed_; }
  std::uint64_t stream_key() const { return stream_; }

  std::uint64_t next_u64();

  /// Uniform on [0, 1).
  double uniform();

  /// Standard normal (polar method).
  double normal();

  /// Uniform integer in [0, n).
  int uniform_int(int n);

 private:
  std::array<std::uint64_t, 4> state_{};
  std::uint64_t seed_ = 0;
  std::uint64_t stream_ = 0;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace infomax
