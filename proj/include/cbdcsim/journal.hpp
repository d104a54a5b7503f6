// Copyright 2026 the cbdcsim developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "cbdcsim/digest.hpp"
#include "cbdcsim/json_util.hpp"
#include "cbdcsim/result.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <vector>

namespace cbdcsim
{

// One line of a service journal. File fields are exactly
// {"seq","ts","kind","payload","prev_hash","hash"}, serialized with sorted
// keys. hash = SHA-256(prev_hash || canonical({"kind","payload","seq","ts"})).
struct JournalEvent
{
    std::uint64_t seq = 0;
    std::int64_t ts = 0;
    std::string kind;
    Json payload;
    std::string prev_hash;
    std::string hash;

    Json to_json() const;
};

// Recomputes the digest an event must carry given its predecessor.
std::string chain_hash(std::string const& prev_hash, std::uint64_t seq, std::int64_t ts,
                       std::string const& kind, Json const& payload);

struct ChainVerdict
{
    bool ok = true;
    std::uint64_t first_bad_seq = 0; // meaningful when !ok
    std::uint64_t events = 0;        // events covered by the verdict
};

// Append-only hash-chained JSONL log, one per service. Appends are flushed
// before the caller acknowledges the state change they describe. A failed
// append poisons the journal: every later append reports StorageFailure and
// the owning service must refuse further mutations.
class Journal
{
  public:
    Journal() = default;

    // Opens (creating if needed) and folds any existing events through
    // on_replay in order. Fails with ChainBroken if the existing chain does
    // not verify. A trailing line that does not parse is treated as a torn
    // write and dropped.
    Result<Ok> open(std::filesystem::path const& file, std::function<void(JournalEvent const&)> const& on_replay);

    Result<JournalEvent> append(std::string const& kind, Json payload, std::int64_t ts);

    std::string const& head_hash() const
    {
        return head_hash_;
    }
    std::uint64_t count() const
    {
        return next_seq_ - 1;
    }
    std::filesystem::path const& path() const
    {
        return path_;
    }
    bool poisoned() const
    {
        return poisoned_;
    }

    // Reads events up to the first torn/missing line; does not check hashes.
    static std::vector<JournalEvent> read_all(std::filesystem::path const& file);

    // Recomputes every digest; reports the first seq whose stored fields do
    // not match the recomputed chain.
    static ChainVerdict verify_chain(std::filesystem::path const& file);

  private:
    std::filesystem::path path_;
    std::ofstream out_;
    std::string head_hash_ = kZeroHash;
    std::uint64_t next_seq_ = 1;
    bool poisoned_ = false;
    std::mutex mu_;
};

} // namespace cbdcsim
