#ifndef MDR_UTIL_HPP
#define MDR_UTIL_HPP

#include <cmath>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace mdr {

inline constexpr double kLn2 = 0.69314718055994530941723212145818;

// Stable log2-sum-exp2: log2(sum_i 2^{x[i]}). Empty input -> -inf.
inline double lse2(std::span<const double> xs) {
  double m = -std::numeric_limits<double>::infinity();
  for (double x : xs) m = std::max(m, x);
  if (!std::isfinite(m)) return m;
  double s = 0.0;
  for (double x : xs) s += std::exp2(x - m);
  return m + std::log2(s);
}

// Counter-based generator so that parallel work items can derive independent,
// schedule-invariant streams from (seed, index).
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  Rng derive(std::uint64_t index) const {
    std::uint64_t s = state_ ^ (0x2545f4914f6cdd1dULL * (index + 1));
    splitmix64(s);
    return Rng(s);
  }

  std::uint64_t next_u64() { return splitmix64(state_); }

  // Uniform in [0, 1).
  double next_u01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in (0, 1]; safe as a log argument.
  double next_u01_open() { return 1.0 - next_u01(); }

  std::size_t next_index(std::size_t n) { return static_cast<std::size_t>(next_u64() % n); }

  // Dirichlet(1,...,1) via normalized exponentials.
  std::vector<double> next_simplex(std::size_t n) {
    std::vector<double> v(n);
    double total = 0.0;
    for (auto& x : v) {
      x = -std::log(next_u01_open());
      total += x;
    }
    for (auto& x : v) x /= total;
    return v;
  }

 private:
  std::uint64_t state_;
};

// Runs fn(i) for i in [0, n) on up to `threads` workers. Results must be
// written to per-index slots by the caller; the schedule carries no state,
// so output is identical for any thread count.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn);

}  // namespace mdr

#endif  // MDR_UTIL_HPP
