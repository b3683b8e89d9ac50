#pragma once

// Deterministic random group elements built as seeded random words.
//
// PRNG: std::mt19937_64 seeded with SampleSpec::seed; bounded draws use
// lo + (x mod (hi - lo + 1)), so streams are identical on every platform.
// Every sample is re-validated by member() before it is returned.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>

#include "sp4cert/groups.hpp"
#include "sp4cert/matrix_io.hpp"

namespace sp4cert {

struct SampleSpec {
  GroupLabel group;
  OddPrime p;
  std::uint64_t seed = 0;
  std::size_t word_length = 0;
};

std::string describe(const SampleSpec& spec);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  long uniform(long lo, long hi);
  /// Nonzero integer in [-bound, bound].
  long nonzero(long bound);
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Throws InternalPredicateFailure if the word left the requested group.
AnyMatrix sample(const SampleSpec& spec);
Matrix4 sample4(const SampleSpec& spec);
Matrix2 sample2(const SampleSpec& spec);

}  // namespace sp4cert
