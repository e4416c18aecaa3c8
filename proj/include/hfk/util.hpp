#ifndef HFK_UTIL_HPP
#define HFK_UTIL_HPP

#include <cstdint>
#include <random>

namespace hfk {

// Worker-pool cap used by the OpenMP kernels.  0 means "use the OpenMP
// default", 1 forces the serial reference paths.
void set_threads(int n);
int threads();
bool parallel_enabled();

// Deterministic RNG wrapper.  std::uniform_int_distribution is not pinned
// across standard libraries, so bounded draws go through the raw engine.
class Rng {
  public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    uint64_t next() { return engine_(); }

    // Uniform draw from [0, bound).  bound must be positive.
    uint64_t below(uint64_t bound) { return engine_() % bound; }

    // True with probability num/den.
    bool chance(uint64_t num, uint64_t den) { return below(den) < num; }

  private:
    std::mt19937_64 engine_;
};

} // namespace hfk

#endif
