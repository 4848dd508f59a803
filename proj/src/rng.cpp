#include "geocascade/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace geocascade {

std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t grid_index,
                          std::uint64_t replicate, StreamPurpose purpose) {
  // Distinct odd offsets per position keep (a,b) and (b,a) keys apart.
  std::uint64_t s = mix64(master);
  s = mix64(s ^ (grid_index * 0xa24baed4963ee407ULL + 1));
  s = mix64(s ^ (replicate * 0x9fb21c651e98df25ULL + 3));
  s = mix64(s ^ static_cast<std::uint64_t>(purpose));
  return s;
}

double RandomStream::uniform01() {
  return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

double RandomStream::uniform(double lo, double hi) {
  // (0,1] flipped to [0,1) so the result can hit lo but never hi.
  return lo + (hi - lo) * (1.0 - uniform01());
}

double RandomStream::exponential(double rate) {
  if (rate <= 0.0) throw std::invalid_argument("exponential rate must be > 0");
  return -std::log(uniform01()) / rate;
}

long long RandomStream::poisson(double mean) {
  if (mean < 0.0) throw std::invalid_argument("poisson mean must be >= 0");
  // Count unit-rate arrivals in [0, mean]; exact for any mean, O(mean) work.
  long long count = 0;
  double t = -std::log(uniform01());
  while (t <= mean) {
    ++count;
    t += -std::log(uniform01());
  }
  return count;
}

long long RandomStream::uniform_int(long long n) {
  if (n <= 0) throw std::invalid_argument("uniform_int needs n >= 1");
  const auto un = static_cast<std::uint64_t>(n);
  std::uint64_t mask = un - 1;
  mask |= mask >> 1;
  mask |= mask >> 2;
  mask |= mask >> 4;
  mask |= mask >> 8;
  mask |= mask >> 16;
  mask |= mask >> 32;
  std::uint64_t r;
  do {
    r = next_u64() & mask;
  } while (r >= un);
  return static_cast<long long>(r);
}

}  // namespace geocascade
