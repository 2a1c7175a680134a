#include "vls/rng.h"

#include <limits>
#include <stdexcept>

namespace vls {

namespace {

std::mt19937_64
MakeEngine(std::uint64_t seed, std::uint64_t stream)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream),
                      static_cast<std::uint32_t>(stream >> 32),
                      0x5eedu};
    return std::mt19937_64(seq);
}

} // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream)
    : m_engine(MakeEngine(seed, stream))
{
}

std::uint32_t
RngStream::UniformInt(std::uint32_t n)
{
    if (n == 0)
    {
        throw std::invalid_argument("UniformInt: empty range");
    }
    std::uniform_int_distribution<std::uint32_t> dist(0, n - 1);
    return dist(m_engine);
}

double
RngStream::Uniform01()
{
    return std::uniform_real_distribution<double>(0.0, 1.0)(m_engine);
}

bool
RngStream::Bernoulli(double p)
{
    if (p <= 0.0)
    {
        return false;
    }
    if (p >= 1.0)
    {
        return true;
    }
    return Uniform01() < p;
}

double
RngStream::Exponential(double rate)
{
    if (rate == std::numeric_limits<double>::infinity())
    {
        return 0.0;
    }
    return std::exponential_distribution<double>(rate)(m_engine);
}

} // namespace vls
