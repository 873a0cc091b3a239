#pragma once

// Deterministic randomness: every stochastic operation draws from a named
// substream of one 64-bit seed, so results do not depend on call order.

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <string_view>

namespace hyperarea::random {

using Engine = std::mt19937_64;

/// SplitMix64 finaliser.
std::uint64_t mix64(std::uint64_t x);

/// Seed for substream (name, index) of `seed`.
std::uint64_t substream_seed(std::uint64_t seed, std::string_view name, std::uint64_t index = 0);

Engine substream(std::uint64_t seed, std::string_view name, std::uint64_t index = 0);

/// Uniform unit vector in R^dim (normalised standard Gaussian).
Eigen::VectorXd uniform_direction(Engine& rng, int dim);

double uniform01(Engine& rng);

}  // namespace hyperarea::random
