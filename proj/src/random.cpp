#include "hyperarea/random.hpp"

namespace hyperarea::random {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t substream_seed(std::uint64_t seed, std::string_view name, std::uint64_t index) {
  // FNV-1a over the name
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : name) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return mix64(mix64(seed) ^ mix64(h) ^ mix64(index + 0x632be59bd9b4e019ULL));
}

Engine substream(std::uint64_t seed, std::string_view name, std::uint64_t index) {
  return Engine(substream_seed(seed, name, index));
}

double uniform01(Engine& rng) {
  // 53 random bits; independent of the standard library's distribution code.
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

namespace {

// Marsaglia polar method on top of uniform01, so the stream is portable.
double standard_normal(Engine& rng) {
  for (;;) {
    const double u = 2 * uniform01(rng) - 1;
    const double v = 2 * uniform01(rng) - 1;
    const double s = u * u + v * v;
    if (s > 0 && s < 1) return u * std::sqrt(-2 * std::log(s) / s);
  }
}

}  // namespace

Eigen::VectorXd uniform_direction(Engine& rng, int dim) {
  Eigen::VectorXd v(dim);
  for (;;) {
    for (int i = 0; i < dim; ++i) v[i] = standard_normal(rng);
    const double norm = v.norm();
    if (norm > 1e-300) return v / norm;
  }
}

}  // namespace hyperarea::random
