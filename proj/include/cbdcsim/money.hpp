// Copyright 2026 the cbdcsim developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "cbdcsim/result.hpp"

#include <cstdint>
#include <string>
#include <string_view>

namespace cbdcsim
{

// The only currency in v1. Everything is integer pence; no floating point
// touches a money value anywhere in the system.
inline constexpr char const* kCurrency = "GBP";

struct Money
{
    std::int64_t minor_units = 0;

    friend bool operator==(Money a, Money b)
    {
        return a.minor_units == b.minor_units;
    }
    friend auto operator<=>(Money a, Money b) = default;
};

// Checked addition of a signed delta. Fails with Overflow instead of
// wrapping; NegativeResult when the caller requires a balance-like result.
Result<Money> money_add(Money a, std::int64_t delta, bool forbid_negative = false);

// "1250" pence -> "12.50"; negative deltas render as "-12.50".
std::string format_pence(std::int64_t minor_units);

inline std::string format_money(Money m)
{
    return format_pence(m.minor_units);
}

// Strict wire format: \d+\.\d{2} (optionally -' prefixed when
// allow_negative). Rejects anything else, including "12.5" and "12.500".
Result<std::int64_t> parse_amount(std::string_view text, bool allow_negative = false);

} // namespace cbdcsim
