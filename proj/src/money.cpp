// Copyright 2026 the cbdcsim developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "cbdcsim/money.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>

namespace cbdcsim
{

Result<Money> money_add(Money a, std::int64_t delta, bool forbid_negative)
{
    std::int64_t out = 0;
    if (__builtin_add_overflow(a.minor_units, delta, &out))
    {
        return Error{errc::Overflow, "money addition overflows 64-bit minor units"};
    }
    if (forbid_negative && out < 0)
    {
        return Error{errc::NegativeResult, "balance would go negative"};
    }
    return Money{out};
}

std::string format_pence(std::int64_t minor_units)
{
    bool neg = minor_units < 0;
    // careful around INT64_MIN: negate via unsigned
    std::uint64_t mag = neg ? 0ull - static_cast<std::uint64_t>(minor_units)
                            : static_cast<std::uint64_t>(minor_units);
    std::uint64_t pounds = mag / 100;
    std::uint64_t pence = mag % 100;
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%s%llu.%02llu", neg ? "-" : "",
                  static_cast<unsigned long long>(pounds), static_cast<unsigned long long>(pence));
    return buf;
}

Result<std::int64_t> parse_amount(std::string_view text, bool allow_negative)
{
    Error malformed{"MALFORMED_AMOUNT", "amount must match \\d+\\.\\d{2}"};
    std::string_view t = text;
    bool neg = false;
    if (allow_negative && !t.empty() && t.front() == '-')
    {
        neg = true;
        t.remove_prefix(1);
    }
    if (t.size() < 4)
    {
        return malformed;
    }
    auto dot = t.size() - 3;
    if (t[dot] != '.')
    {
        return malformed;
    }
    std::uint64_t pounds = 0;
    if (dot == 0 || dot > 18)
    {
        return malformed;
    }
    for (std::size_t i = 0; i < dot; ++i)
    {
        if (!std::isdigit(static_cast<unsigned char>(t[i])))
        {
            return malformed;
        }
        pounds = pounds * 10 + static_cast<std::uint64_t>(t[i] - '0');
    }
    if (!std::isdigit(static_cast<unsigned char>(t[dot + 1])) ||
        !std::isdigit(static_cast<unsigned char>(t[dot + 2])))
    {
        return malformed;
    }
    std::uint64_t pence = static_cast<std::uint64_t>(t[dot + 1] - '0') * 10 +
                          static_cast<std::uint64_t>(t[dot + 2] - '0');
    std::uint64_t mag = 0;
    if (__builtin_mul_overflow(pounds, 100ull, &mag) || __builtin_add_overflow(mag, pence, &mag) ||
        mag > static_cast<std::uint64_t>(INT64_MAX))
    {
        return Error{errc::Overflow, "amount does not fit in 64-bit minor units"};
    }
    auto v = static_cast<std::int64_t>(mag);
    return neg ? -v : v;
}

} // namespace cbdcsim
