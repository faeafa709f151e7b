#pragma once

#include <cstdint>
#include <random>

namespace sosa {

/// Every stochastic component draws from one explicitly passed stream, so a
/// run is reproducible from its seed.
using Rng = std::mt19937_64;

inline double uniform01(Rng& rng)
{
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

} // namespace sosa
