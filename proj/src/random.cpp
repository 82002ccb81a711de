#include "plclique/random.hpp"

namespace plclique {

std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Seed derive_seed(Seed master, Stream purpose,
                 std::initializer_list<std::uint64_t> counters) noexcept {
  std::uint64_t h = mix64(master);
  h = mix64(h ^ static_cast<std::uint64_t>(purpose));
  for (std::uint64_t c : counters) h = mix64(h ^ mix64(c));
  return h;
}

std::uint64_t poisson(Rng& rng, double mean) {
  if (!(mean > 0.0)) return 0;
  std::poisson_distribution<std::uint64_t> dist(mean);
  return dist(rng);
}

}  // namespace plclique
