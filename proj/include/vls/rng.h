#ifndef VLS_RNG_H
#define VLS_RNG_H

#include <cstdint>
#include <random>

namespace vls {

/**
 * Independent, reproducible random stream. Each (seed, stream) pair yields
 * its own sequence, so adding a station never perturbs another's draws.
 */
class RngStream
{
  public:
    RngStream(std::uint64_t seed, std::uint64_t stream);

    /// Uniform integer in [0, n). n must be positive.
    std::uint32_t UniformInt(std::uint32_t n);
    double Uniform01();
    bool Bernoulli(double p);
    /// Exponential variate with the given rate (events per unit).
    double Exponential(double rate);

  private:
    std::mt19937_64 m_engine;
};

} // namespace vls

#endif
