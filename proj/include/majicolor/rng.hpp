#pragma once

#include <cstdint>
#include <random>

namespace majicolor {

// All randomized operations take an explicit seed so identical seeds
// reproduce identical outputs.
class Rng {
  public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    // uniform in [0, n)
    int below(int n) { return (int)(eng_() % (uint64_t)n); }
    uint64_t next() { return eng_(); }

    template <typename T> void shuffle(std::vector<T> &v) {
        for (int i = (int)v.size() - 1; i > 0; --i) std::swap(v[i], v[below(i + 1)]);
    }

    Rng fork() { return Rng(eng_()); }

  private:
    std::mt19937_64 eng_;
};

} // namespace majicolor
