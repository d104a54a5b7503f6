// Copyright 2026 the cbdcsim developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include "cbdcsim/clock.hpp"
#include "cbdcsim/http.hpp"
#include "cbdcsim/journal.hpp"
#include "cbdcsim/money.hpp"

#include <filesystem>
#include <map>
#include <set>
#include <shared_mutex>
#include <string>
#include <vector>

namespace cbdcsim::core
{

struct CbdcAccount
{
    std::string account_id;
    std::string pseudonym;
    std::int64_t balance = 0;   // excludes earmarked funds
    std::int64_t earmarked = 0; // held by prepared transfers
    bool open = true;
};

struct Posting
{
    std::string account; // "cbdc:<account_id>" or "reserve:<bank_id>"
    std::int64_t delta = 0;
};

struct CoreTransaction
{
    std::string tx_id;
    std::string instruction_id;
    std::string kind; // transfer | fund | defund
    std::string from; // cbdc account (transfer/prepare); defund source
    std::string to;   // cbdc account (transfer/prepare); fund target
    std::string bank; // reserve counterparty (fund/defund)
    std::int64_t amount = 0;
    std::string state; // prepared | committed | aborted
    std::vector<Posting> legs;

    Json to_json() const;
};

struct TxRef
{
    std::string tx_id;
    bool replayed = false; // instruction_id seen before; no new posting
};

// The central-bank service: pseudonymous CBDC accounts, bank reserve
// accounts, double-entry transactions, and the earmark-based two-phase
// transfer used by cross-ledger sagas. Every state change is journaled
// before it is acknowledged; the journal fold rebuilds identical state.
class CoreLedger
{
  public:
    CoreLedger(std::string service_name, LogicalClock const& clock);

    Result<Ok> open_journal(std::filesystem::path const& file);

    Result<std::string> open_account(std::string const& pseudonym, std::string const& caller);
    Result<Ok> close_account(std::string const& account_id, std::string const& caller);

    Result<TxRef> transfer(std::string const& instruction_id, std::string const& from,
                           std::string const& to, std::int64_t amount);
    Result<TxRef> prepare_transfer(std::string const& instruction_id, std::string const& from,
                                   std::string const& to, std::int64_t amount);
    Result<Ok> commit_tx(std::string const& tx_id);
    Result<Ok> abort_tx(std::string const& tx_id);

    Result<TxRef> fund(std::string const& instruction_id, std::string const& bank_id,
                       std::string const& account_id, std::int64_t amount);
    Result<TxRef> defund(std::string const& instruction_id, std::string const& bank_id,
                         std::string const& account_id, std::int64_t amount);

    Result<Money> balance(std::string const& account_id) const;
    Result<Json> list_transactions(std::string const& account_id, std::uint64_t page,
                                   std::uint64_t page_size) const;

    // Harness surface.
    Result<Ok> register_bank(std::string const& bank_id);
    Result<Ok> inject_reserves(std::string const& bank_id, std::int64_t amount);
    Result<Ok> inject_canary(Json payload); // test hook: journals an arbitrary payload

    Json totals() const;
    Json export_state() const;

    std::string const& name() const
    {
        return name_;
    }
    Journal const& journal() const
    {
        return journal_;
    }
    std::int64_t outstanding() const;

  private:
    Result<Ok> record(std::string const& kind, Json payload);
    void apply(std::string const& kind, Json const& payload);
    CoreTransaction* find_tx(std::string const& tx_id);

    std::string name_;
    LogicalClock const& clock_;
    Journal journal_;

    std::map<std::string, CbdcAccount> accounts_;
    std::map<std::string, std::string> pseudonym_index_; // pseudonym -> account, incl. tombstones
    std::map<std::string, std::int64_t> reserves_;
    std::map<std::string, CoreTransaction> txs_;
    std::map<std::string, std::string> by_instruction_;
    std::map<std::string, std::vector<std::string>> account_history_; // commit order per account
    std::uint64_t next_account_ = 1;
    std::uint64_t next_tx_ = 1;
    std::int64_t funded_total_ = 0;
    std::int64_t defunded_total_ = 0;
    std::int64_t reserves_injected_total_ = 0;

    mutable std::shared_mutex mu_;
};

struct ApiKey
{
    std::string key;
    std::string caller; // journaled name, e.g. "pip-1"
    std::string role;   // "pip" | "ecosystem" | "harness"
};

// HTTP/JSON adapter over CoreLedger. Account lifecycle routes accept PIP
// callers only; payment/funding routes accept ecosystem callers; admin
// routes accept the harness.
class CoreLedgerApi : public ApiRouter
{
  public:
    CoreLedgerApi(CoreLedger& ledger, std::vector<ApiKey> keys);

  private:
    ApiKey const* authenticate(HttpRequest const& req) const;

    CoreLedger& ledger_;
    std::vector<ApiKey> keys_;
};

} // namespace cbdcsim::core
