#include "vls/fixed.h"

#include <cctype>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace vls {

Fixed6
Fixed6::FromDouble(double v)
{
    if (!std::isfinite(v) || std::fabs(v) > 9.0e12)
    {
        throw std::invalid_argument("Fixed6: value out of range");
    }
    return FromMicros(static_cast<std::int64_t>(std::llround(v * kScale)));
}

Fixed6
Fixed6::Parse(std::string_view text)
{
    const std::string original(text);
    auto fail = [&original]() {
        return std::invalid_argument("not a decimal with <= 6 fractional digits: '" + original + "'");
    };
    if (text.empty())
    {
        throw fail();
    }
    bool negative = false;
    if (text.front() == '-' || text.front() == '+')
    {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    std::int64_t whole = 0;
    std::int64_t frac = 0;
    int fracDigits = 0;
    bool seenDot = false;
    bool seenDigit = false;
    for (char ch : text)
    {
        if (ch == '.')
        {
            if (seenDot)
            {
                throw fail();
            }
            seenDot = true;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(ch)))
        {
            throw fail();
        }
        seenDigit = true;
        const int d = ch - '0';
        if (seenDot)
        {
            if (++fracDigits > 6)
            {
                throw fail();
            }
            frac = frac * 10 + d;
        }
        else
        {
            if (whole > (std::numeric_limits<std::int64_t>::max() / kScale - d) / 10)
            {
                throw fail();
            }
            whole = whole * 10 + d;
        }
    }
    if (!seenDigit)
    {
        throw fail();
    }
    for (int i = fracDigits; i < 6; ++i)
    {
        frac *= 10;
    }
    const std::int64_t micros = whole * kScale + frac;
    return FromMicros(negative ? -micros : micros);
}

std::string
Fixed6::ToString() const
{
    const bool negative = m_micros < 0;
    const std::uint64_t mag = negative ? 0ULL - static_cast<std::uint64_t>(m_micros)
                                       : static_cast<std::uint64_t>(m_micros);
    std::string out = negative ? "-" : "";
    out += std::to_string(mag / kScale);
    std::uint64_t frac = mag % kScale;
    if (frac != 0)
    {
        std::string digits = std::to_string(frac);
        digits.insert(0, 6 - digits.size(), '0');
        while (digits.back() == '0')
        {
            digits.pop_back();
        }
        out += "." + digits;
    }
    return out;
}

} // namespace vls
