// Copyright 2026 the cbdcsim developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "cbdcsim/journal.hpp"

namespace cbdcsim
{

Json JournalEvent::to_json() const
{
    return Json{{"seq", seq},       {"ts", ts},
                {"kind", kind},     {"payload", payload},
                {"prev_hash", prev_hash}, {"hash", hash}};
}

std::string chain_hash(std::string const& prev_hash, std::uint64_t seq, std::int64_t ts,
                       std::string const& kind, Json const& payload)
{
    Json body{{"kind", kind}, {"payload", payload}, {"seq", seq}, {"ts", ts}};
    return sha256_hex(prev_hash + canonical(body));
}

namespace
{

// Parses one journal line; returns false on torn/garbage lines.
bool parse_line(std::string const& line, JournalEvent& ev)
{
    Json j = Json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object())
    {
        return false;
    }
    if (!j.contains("seq") || !j.contains("ts") || !j.contains("kind") || !j.contains("payload") ||
        !j.contains("prev_hash") || !j.contains("hash"))
    {
        return false;
    }
    ev.seq = j["seq"].get<std::uint64_t>();
    ev.ts = j["ts"].get<std::int64_t>();
    ev.kind = j["kind"].get<std::string>();
    ev.payload = j["payload"];
    ev.prev_hash = j["prev_hash"].get<std::string>();
    ev.hash = j["hash"].get<std::string>();
    return true;
}

} // namespace

Result<Ok> Journal::open(std::filesystem::path const& file,
                         std::function<void(JournalEvent const&)> const& on_replay)
{
    path_ = file;
    head_hash_ = kZeroHash;
    next_seq_ = 1;

    std::uintmax_t good_bytes = 0;
    bool torn = false;
    {
        std::ifstream in(file);
        if (in)
        {
            std::string line;
            while (std::getline(in, line))
            {
                if (line.empty())
                {
                    good_bytes += 1;
                    continue;
                }
                JournalEvent ev;
                if (!parse_line(line, ev))
                {
                    torn = true; // torn trailing write; drop it before appending
                    break;
                }
                if (ev.seq != next_seq_ || ev.prev_hash != head_hash_ ||
                    ev.hash != chain_hash(head_hash_, ev.seq, ev.ts, ev.kind, ev.payload))
                {
                    return Error{errc::ChainBroken,
                                 "journal chain broken at seq " + std::to_string(next_seq_)};
                }
                if (on_replay)
                {
                    on_replay(ev);
                }
                head_hash_ = ev.hash;
                ++next_seq_;
                good_bytes += line.size() + 1;
            }
        }
    }

    std::error_code ec;
    if (torn)
    {
        std::filesystem::resize_file(file, good_bytes, ec);
    }
    if (!file.parent_path().empty())
    {
        std::filesystem::create_directories(file.parent_path(), ec);
    }
    out_.open(file, std::ios::app);
    if (!out_)
    {
        poisoned_ = true;
        return Error{errc::StorageFailure, "cannot open journal for append: " + file.string()};
    }
    return Ok{};
}

Result<JournalEvent> Journal::append(std::string const& kind, Json payload, std::int64_t ts)
{
    std::lock_guard<std::mutex> lock(mu_);
    if (poisoned_)
    {
        return Error{errc::StorageFailure, "journal is poisoned; refusing writes"};
    }
    JournalEvent ev;
    ev.seq = next_seq_;
    ev.ts = ts;
    ev.kind = kind;
    ev.payload = std::move(payload);
    ev.prev_hash = head_hash_;
    ev.hash = chain_hash(ev.prev_hash, ev.seq, ev.ts, ev.kind, ev.payload);

    out_ << canonical(ev.to_json()) << '\n';
    out_.flush();
    if (!out_)
    {
        poisoned_ = true;
        return Error{errc::StorageFailure, "journal append failed: " + path_.string()};
    }
    head_hash_ = ev.hash;
    ++next_seq_;
    return ev;
}

std::vector<JournalEvent> Journal::read_all(std::filesystem::path const& file)
{
    std::vector<JournalEvent> out;
    std::ifstream in(file);
    std::string line;
    while (std::getline(in, line))
    {
        if (line.empty())
        {
            continue;
        }
        JournalEvent ev;
        if (!parse_line(line, ev))
        {
            break;
        }
        out.push_back(std::move(ev));
    }
    return out;
}

ChainVerdict Journal::verify_chain(std::filesystem::path const& file)
{
    ChainVerdict verdict;
    std::string prev = kZeroHash;
    std::uint64_t expect_seq = 1;
    std::ifstream in(file);
    std::string line;
    while (std::getline(in, line))
    {
        if (line.empty())
        {
            continue;
        }
        JournalEvent ev;
        if (!parse_line(line, ev))
        {
            // A line that does not even parse is counted as corruption when it
            // is followed by more data, and as clean truncation at EOF.
            if (in.peek() == std::char_traits<char>::eof())
            {
                break;
            }
            verdict.ok = false;
            verdict.first_bad_seq = expect_seq;
            return verdict;
        }
        if (ev.seq != expect_seq || ev.prev_hash != prev ||
            ev.hash != chain_hash(prev, ev.seq, ev.ts, ev.kind, ev.payload))
        {
            verdict.ok = false;
            verdict.first_bad_seq = expect_seq;
            return verdict;
        }
        prev = ev.hash;
        ++expect_seq;
        ++verdict.events;
    }
    return verdict;
}

} // namespace cbdcsim
