// Copyright 2026 the cbdcsim developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <json.hpp>

#include <string>

namespace cbdcsim
{

using Json = nlohmann::json;

// Canonical serialization: object keys sorted ascending (nlohmann's ordered
// tree), no insignificant whitespace. Every digest in the system is computed
// over this form.
inline std::string canonical(Json const& j)
{
    return j.dump();
}

inline std::string get_str(Json const& j, std::string const& key)
{
    auto it = j.find(key);
    if (it == j.end() || !it->is_string())
    {
        return {};
    }
    return it->get<std::string>();
}

inline std::int64_t get_int(Json const& j, std::string const& key, std::int64_t dflt = 0)
{
    auto it = j.find(key);
    if (it == j.end() || !it->is_number_integer())
    {
        return dflt;
    }
    return it->get<std::int64_t>();
}

} // namespace cbdcsim
