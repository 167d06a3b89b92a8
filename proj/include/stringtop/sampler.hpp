// Seeded random cyclic words: uniform letters with rejection of immediate
// cancellations, then cyclic reduction and canonical form. Every trial owns
// an independent generator derived from (seed, trial index), so parallel
// suites are schedule-independent.
#pragma once

#include <cstdint>
#include <random>

#include "words.hpp"

namespace stringtop {

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline uint64_t trial_seed(uint64_t seed, uint64_t trial) {
  return splitmix64(seed * 0x2545f4914f6cdd1dull + splitmix64(trial + 1));
}

class WordSampler {
 public:
  explicit WordSampler(uint64_t seed) : rng_(seed) {}

  uint64_t below(uint64_t n) { return rng_() % n; }

  // Nonempty cyclically reduced canonical word over generators 1..rank.
  CyclicWord sample(int rank, int max_len) {
    const int darts = 2 * rank;
    for (;;) {
      int len = 1 + static_cast<int>(below(static_cast<uint64_t>(max_len)));
      Letters w;
      w.reserve(len);
      for (int k = 0; k < len; ++k) {
        if (w.empty()) {
          w.push_back(Letter::from_code(static_cast<int>(below(darts))));
          continue;
        }
        // Uniform over the darts that do not cancel the previous letter.
        int forbidden = w.back().inverted().code();
        int pick = static_cast<int>(below(darts - 1));
        if (pick >= forbidden) ++pick;
        w.push_back(Letter::from_code(pick));
      }
      CyclicWord c = make_class(w);
      if (!c.trivial()) return c;
    }
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace stringtop
