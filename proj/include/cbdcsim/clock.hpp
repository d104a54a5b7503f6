// Copyright 2026 the cbdcsim developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <atomic>
#include <cstdint>

namespace cbdcsim
{

// Logical time. The harness is the only writer; services read the current
// tick when journaling. One "day" for policy windows is 86400 ticks.
class LogicalClock
{
  public:
    std::int64_t now() const
    {
        return tick_.load(std::memory_order_relaxed);
    }
    void advance_to(std::int64_t t)
    {
        tick_.store(t, std::memory_order_relaxed);
    }

  private:
    std::atomic<std::int64_t> tick_{0};
};

inline constexpr std::int64_t kTicksPerDay = 86400;

} // namespace cbdcsim
