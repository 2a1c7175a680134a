#ifndef VLS_FIXED_H
#define VLS_FIXED_H

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace vls {

/// Non-integer decimal with exactly six fractional digits (value * 1e6 stored).
class Fixed6
{
  public:
    static constexpr std::int64_t kScale = 1'000'000;

    constexpr Fixed6() = default;
    static constexpr Fixed6 FromMicros(std::int64_t micros)
    {
        Fixed6 f;
        f.m_micros = micros;
        return f;
    }
    static constexpr Fixed6 FromInt(std::int64_t v) { return FromMicros(v * kScale); }
    /// Rounds to the nearest millionth.
    static Fixed6 FromDouble(double v);
    /// Accepts "[-]digits[.digits]" with at most six fractional digits; throws std::invalid_argument otherwise.
    static Fixed6 Parse(std::string_view text);

    constexpr std::int64_t Micros() const { return m_micros; }
    double ToDouble() const { return static_cast<double>(m_micros) / kScale; }
    /// Shortest decimal form that parses back to the same value ("0.25", "3").
    std::string ToString() const;

    constexpr auto operator<=>(const Fixed6&) const = default;

  private:
    std::int64_t m_micros = 0;
};

} // namespace vls

#endif
