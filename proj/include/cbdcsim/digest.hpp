// Copyright 2026 the cbdcsim developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <string>
#include <string_view>

namespace cbdcsim
{

inline constexpr char const* kZeroHash =
    "0000000000000000000000000000000000000000000000000000000000000000";

// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view data);

// 16 random-looking but caller-seeded bytes rendered as 32 hex chars.
std::string to_hex(std::string_view bytes);

} // namespace cbdcsim
