// Copyright 2026 the cbdcsim developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "cbdcsim/core_ledger.hpp"

#include <algorithm>
#include <cstdio>

namespace cbdcsim::core
{

namespace
{

std::string padded_id(char const* prefix, std::uint64_t n)
{
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%s%08llu", prefix, static_cast<unsigned long long>(n));
    return buf;
}

Json legs_to_json(std::vector<Posting> const& legs)
{
    Json out = Json::array();
    for (auto const& l : legs)
    {
        out.push_back(Json{{"account", l.account}, {"delta", l.delta}});
    }
    return out;
}

std::vector<Posting> legs_from_json(Json const& j)
{
    std::vector<Posting> out;
    for (auto const& l : j)
    {
        out.push_back(Posting{get_str(l, "account"), get_int(l, "delta")});
    }
    return out;
}

} // namespace

Json CoreTransaction::to_json() const
{
    return Json{{"tx_id", tx_id}, {"instruction_id", instruction_id}, {"kind", kind},
                {"from", from},   {"to", to},
                {"bank", bank},   {"amount", amount},
                {"state", state}, {"legs", legs_to_json(legs)}};
}

CoreLedger::CoreLedger(std::string service_name, LogicalClock const& clock)
    : name_(std::move(service_name)), clock_(clock)
{
}

Result<Ok> CoreLedger::open_journal(std::filesystem::path const& file)
{
    std::unique_lock lock(mu_);
    return journal_.open(file, [this](JournalEvent const& ev) { apply(ev.kind, ev.payload); });
}

Result<Ok> CoreLedger::record(std::string const& kind, Json payload)
{
    auto appended = journal_.append(kind, payload, clock_.now());
    if (!appended)
    {
        return appended.error();
    }
    apply(kind, payload);
    return Ok{};
}

void CoreLedger::apply(std::string const& kind, Json const& payload)
{
    if (kind == "account_opened")
    {
        CbdcAccount acct;
        acct.account_id = get_str(payload, "account_id");
        acct.pseudonym = get_str(payload, "pseudonym");
        accounts_[acct.account_id] = acct;
        pseudonym_index_[acct.pseudonym] = acct.account_id;
        account_history_[acct.account_id];
        next_account_ = static_cast<std::uint64_t>(get_int(payload, "n")) + 1;
    }
    else if (kind == "account_closed")
    {
        accounts_[get_str(payload, "account_id")].open = false;
    }
    else if (kind == "bank_registered")
    {
        reserves_.emplace(get_str(payload, "bank_id"), 0);
    }
    else if (kind == "reserves_injected")
    {
        reserves_[get_str(payload, "bank_id")] += get_int(payload, "amount");
        reserves_injected_total_ += get_int(payload, "amount");
    }
    else if (kind == "tx_committed" || kind == "tx_prepared")
    {
        Json const& tj = payload.at("tx");
        CoreTransaction tx;
        tx.tx_id = get_str(tj, "tx_id");
        tx.instruction_id = get_str(tj, "instruction_id");
        tx.kind = get_str(tj, "kind");
        tx.from = get_str(tj, "from");
        tx.to = get_str(tj, "to");
        tx.bank = get_str(tj, "bank");
        tx.amount = get_int(tj, "amount");
        tx.state = get_str(tj, "state");
        tx.legs = legs_from_json(tj.at("legs"));
        next_tx_ = static_cast<std::uint64_t>(get_int(payload, "n")) + 1;
        by_instruction_[tx.instruction_id] = tx.tx_id;

        if (kind == "tx_prepared")
        {
            auto& from = accounts_[tx.from];
            from.balance -= tx.amount;
            from.earmarked += tx.amount;
        }
        else
        {
            for (auto const& leg : tx.legs)
            {
                auto sep = leg.account.find(':');
                auto type = leg.account.substr(0, sep);
                auto id = leg.account.substr(sep + 1);
                if (type == "cbdc")
                {
                    accounts_[id].balance += leg.delta;
                    account_history_[id].push_back(tx.tx_id);
                }
                else
                {
                    reserves_[id] += leg.delta;
                }
            }
            if (tx.kind == "fund")
            {
                funded_total_ += tx.amount;
            }
            else if (tx.kind == "defund")
            {
                defunded_total_ += tx.amount;
            }
        }
        txs_[tx.tx_id] = std::move(tx);
    }
    else if (kind == "tx_commit")
    {
        auto& tx = txs_[get_str(payload, "tx_id")];
        tx.state = "committed";
        tx.legs = {{"cbdc:" + tx.from, -tx.amount}, {"cbdc:" + tx.to, tx.amount}};
        accounts_[tx.from].earmarked -= tx.amount;
        accounts_[tx.to].balance += tx.amount;
        account_history_[tx.from].push_back(tx.tx_id);
        account_history_[tx.to].push_back(tx.tx_id);
    }
    else if (kind == "tx_abort")
    {
        auto& tx = txs_[get_str(payload, "tx_id")];
        tx.state = "aborted";
        accounts_[tx.from].earmarked -= tx.amount;
        accounts_[tx.from].balance += tx.amount;
    }
    // "canary" carries no state transition; it exists so tests can plant
    // forbidden content in the journal.
}

Result<std::string> CoreLedger::open_account(std::string const& pseudonym,
                                             std::string const& caller)
{
    std::unique_lock lock(mu_);
    if (pseudonym.empty())
    {
        return Error{errc::BadRequest, "pseudonym required"};
    }
    if (pseudonym_index_.count(pseudonym))
    {
        return Error{errc::DuplicatePseudonym,
                     "pseudonym already has an account (closed accounts are tombstoned)"};
    }
    auto id = padded_id("cba-", next_account_);
    auto rec = record("account_opened", Json{{"account_id", id},
                                             {"pseudonym", pseudonym},
                                             {"caller", caller},
                                             {"n", next_account_}});
    if (!rec)
    {
        return rec.error();
    }
    return id;
}

Result<Ok> CoreLedger::close_account(std::string const& account_id, std::string const& caller)
{
    std::unique_lock lock(mu_);
    auto it = accounts_.find(account_id);
    if (it == accounts_.end())
    {
        return Error{errc::UnknownAccount, "no such account: " + account_id};
    }
    if (!it->second.open)
    {
        return Error{errc::WrongState, "account already closed"};
    }
    if (it->second.balance != 0 || it->second.earmarked != 0)
    {
        return Error{errc::NonZeroBalance, "account must be empty to close"};
    }
    return record("account_closed", Json{{"account_id", account_id}, {"caller", caller}});
}

CoreTransaction* CoreLedger::find_tx(std::string const& tx_id)
{
    auto it = txs_.find(tx_id);
    return it == txs_.end() ? nullptr : &it->second;
}

Result<TxRef> CoreLedger::transfer(std::string const& instruction_id, std::string const& from,
                                   std::string const& to, std::int64_t amount)
{
    std::unique_lock lock(mu_);
    if (auto it = by_instruction_.find(instruction_id); it != by_instruction_.end())
    {
        return TxRef{it->second, true};
    }
    if (amount <= 0)
    {
        return Error{errc::NonPositiveAmount, "transfer amount must be positive"};
    }
    auto f = accounts_.find(from);
    auto t = accounts_.find(to);
    if (f == accounts_.end() || !f->second.open || t == accounts_.end() || !t->second.open)
    {
        return Error{errc::UnknownAccount, "transfer requires two open accounts"};
    }
    if (from == to)
    {
        return Error{errc::BadRequest, "transfer to self"};
    }
    if (f->second.balance < amount)
    {
        return Error{errc::InsufficientFunds, "balance " + format_pence(f->second.balance) +
                                                  " < " + format_pence(amount)};
    }
    if (!money_add(Money{t->second.balance}, amount))
    {
        return Error{errc::Overflow, "credit overflows"};
    }
    CoreTransaction tx;
    tx.tx_id = padded_id("ctx-", next_tx_);
    tx.instruction_id = instruction_id;
    tx.kind = "transfer";
    tx.from = from;
    tx.to = to;
    tx.amount = amount;
    tx.state = "committed";
    tx.legs = {{"cbdc:" + from, -amount}, {"cbdc:" + to, amount}};
    auto rec = record("tx_committed", Json{{"tx", tx.to_json()}, {"n", next_tx_}});
    if (!rec)
    {
        return rec.error();
    }
    return TxRef{tx.tx_id, false};
}

Result<TxRef> CoreLedger::prepare_transfer(std::string const& instruction_id,
                                           std::string const& from, std::string const& to,
                                           std::int64_t amount)
{
    std::unique_lock lock(mu_);
    if (auto it = by_instruction_.find(instruction_id); it != by_instruction_.end())
    {
        return TxRef{it->second, true};
    }
    if (amount <= 0)
    {
        return Error{errc::NonPositiveAmount, "transfer amount must be positive"};
    }
    auto f = accounts_.find(from);
    auto t = accounts_.find(to);
    if (f == accounts_.end() || !f->second.open || t == accounts_.end() || !t->second.open)
    {
        return Error{errc::UnknownAccount, "prepare requires two open accounts"};
    }
    if (from == to)
    {
        return Error{errc::BadRequest, "transfer to self"};
    }
    if (f->second.balance < amount)
    {
        return Error{errc::InsufficientFunds, "balance " + format_pence(f->second.balance) +
                                                  " < " + format_pence(amount)};
    }
    CoreTransaction tx;
    tx.tx_id = padded_id("ctx-", next_tx_);
    tx.instruction_id = instruction_id;
    tx.kind = "transfer";
    tx.from = from;
    tx.to = to;
    tx.amount = amount;
    tx.state = "prepared";
    auto rec = record("tx_prepared", Json{{"tx", tx.to_json()}, {"n", next_tx_}});
    if (!rec)
    {
        return rec.error();
    }
    return TxRef{tx.tx_id, false};
}

Result<Ok> CoreLedger::commit_tx(std::string const& tx_id)
{
    std::unique_lock lock(mu_);
    auto* tx = find_tx(tx_id);
    if (!tx)
    {
        return Error{errc::UnknownTransaction, "no such transaction: " + tx_id};
    }
    if (tx->state == "committed")
    {
        return Ok{}; // idempotent retry
    }
    if (tx->state != "prepared")
    {
        return Error{errc::WrongState, "cannot commit from state " + tx->state};
    }
    auto to = accounts_.find(tx->to);
    if (to == accounts_.end() || !to->second.open)
    {
        return Error{errc::UnknownAccount, "beneficiary closed before commit"};
    }
    return record("tx_commit", Json{{"tx_id", tx_id}});
}

Result<Ok> CoreLedger::abort_tx(std::string const& tx_id)
{
    std::unique_lock lock(mu_);
    auto* tx = find_tx(tx_id);
    if (!tx)
    {
        return Error{errc::UnknownTransaction, "no such transaction: " + tx_id};
    }
    if (tx->state == "aborted")
    {
        return Ok{}; // idempotent retry
    }
    if (tx->state != "prepared")
    {
        return Error{errc::WrongState, "cannot abort from state " + tx->state};
    }
    return record("tx_abort", Json{{"tx_id", tx_id}});
}

Result<TxRef> CoreLedger::fund(std::string const& instruction_id, std::string const& bank_id,
                               std::string const& account_id, std::int64_t amount)
{
    std::unique_lock lock(mu_);
    if (auto it = by_instruction_.find(instruction_id); it != by_instruction_.end())
    {
        return TxRef{it->second, true};
    }
    if (amount <= 0)
    {
        return Error{errc::NonPositiveAmount, "funding amount must be positive"};
    }
    auto r = reserves_.find(bank_id);
    if (r == reserves_.end())
    {
        return Error{errc::UnknownBank, "no reserve account for " + bank_id};
    }
    auto a = accounts_.find(account_id);
    if (a == accounts_.end() || !a->second.open)
    {
        return Error{errc::UnknownAccount, "no open CBDC account " + account_id};
    }
    if (r->second < amount)
    {
        return Error{errc::InsufficientReserves,
                     "reserves " + format_pence(r->second) + " < " + format_pence(amount)};
    }
    CoreTransaction tx;
    tx.tx_id = padded_id("ctx-", next_tx_);
    tx.instruction_id = instruction_id;
    tx.kind = "fund";
    tx.bank = bank_id;
    tx.to = account_id;
    tx.amount = amount;
    tx.state = "committed";
    tx.legs = {{"reserve:" + bank_id, -amount}, {"cbdc:" + account_id, amount}};
    auto rec = record("tx_committed", Json{{"tx", tx.to_json()}, {"n", next_tx_}});
    if (!rec)
    {
        return rec.error();
    }
    return TxRef{tx.tx_id, false};
}

Result<TxRef> CoreLedger::defund(std::string const& instruction_id, std::string const& bank_id,
                                 std::string const& account_id, std::int64_t amount)
{
    std::unique_lock lock(mu_);
    if (auto it = by_instruction_.find(instruction_id); it != by_instruction_.end())
    {
        return TxRef{it->second, true};
    }
    if (amount <= 0)
    {
        return Error{errc::NonPositiveAmount, "defunding amount must be positive"};
    }
    auto r = reserves_.find(bank_id);
    if (r == reserves_.end())
    {
        return Error{errc::UnknownBank, "no reserve account for " + bank_id};
    }
    auto a = accounts_.find(account_id);
    if (a == accounts_.end() || !a->second.open)
    {
        return Error{errc::UnknownAccount, "no open CBDC account " + account_id};
    }
    if (a->second.balance < amount)
    {
        return Error{errc::InsufficientFunds, "balance " + format_pence(a->second.balance) +
                                                  " < " + format_pence(amount)};
    }
    CoreTransaction tx;
    tx.tx_id = padded_id("ctx-", next_tx_);
    tx.instruction_id = instruction_id;
    tx.kind = "defund";
    tx.bank = bank_id;
    tx.from = account_id;
    tx.amount = amount;
    tx.state = "committed";
    tx.legs = {{"reserve:" + bank_id, amount}, {"cbdc:" + account_id, -amount}};
    auto rec = record("tx_committed", Json{{"tx", tx.to_json()}, {"n", next_tx_}});
    if (!rec)
    {
        return rec.error();
    }
    return TxRef{tx.tx_id, false};
}

Result<Money> CoreLedger::balance(std::string const& account_id) const
{
    std::shared_lock lock(mu_);
    auto it = accounts_.find(account_id);
    if (it == accounts_.end())
    {
        return Error{errc::UnknownAccount, "no such account: " + account_id};
    }
    return Money{it->second.balance};
}

Result<Json> CoreLedger::list_transactions(std::string const& account_id, std::uint64_t page,
                                           std::uint64_t page_size) const
{
    std::shared_lock lock(mu_);
    auto it = account_history_.find(account_id);
    if (it == account_history_.end())
    {
        return Error{errc::UnknownAccount, "no such account: " + account_id};
    }
    if (page == 0 || page_size == 0)
    {
        return Error{errc::BadRequest, "page and page_size are 1-based"};
    }
    auto const& ids = it->second;
    Json txs = Json::array();
    auto begin = (page - 1) * page_size;
    for (auto i = begin; i < ids.size() && i < begin + page_size; ++i)
    {
        txs.push_back(txs_.at(ids[i]).to_json());
    }
    return Json{{"transactions", txs},
                {"page", page},
                {"page_size", page_size},
                {"total", ids.size()}};
}

Result<Ok> CoreLedger::register_bank(std::string const& bank_id)
{
    std::unique_lock lock(mu_);
    if (reserves_.count(bank_id))
    {
        return Ok{};
    }
    return record("bank_registered", Json{{"bank_id", bank_id}});
}

Result<Ok> CoreLedger::inject_reserves(std::string const& bank_id, std::int64_t amount)
{
    std::unique_lock lock(mu_);
    if (!reserves_.count(bank_id))
    {
        return Error{errc::UnknownBank, "no reserve account for " + bank_id};
    }
    if (amount <= 0)
    {
        return Error{errc::NonPositiveAmount, "injection must be positive"};
    }
    return record("reserves_injected", Json{{"bank_id", bank_id}, {"amount", amount}});
}

Result<Ok> CoreLedger::inject_canary(Json payload)
{
    std::unique_lock lock(mu_);
    return record("canary", std::move(payload));
}

std::int64_t CoreLedger::outstanding() const
{
    std::shared_lock lock(mu_);
    return funded_total_ - defunded_total_;
}

Json CoreLedger::totals() const
{
    std::shared_lock lock(mu_);
    std::int64_t balances = 0;
    std::int64_t earmarked = 0;
    for (auto const& [id, acct] : accounts_)
    {
        balances += acct.balance;
        earmarked += acct.earmarked;
    }
    std::int64_t reserves = 0;
    for (auto const& [id, r] : reserves_)
    {
        reserves += r;
    }
    return Json{{"cbdc_balances_total", balances},
                {"earmarked_total", earmarked},
                {"reserves_total", reserves},
                {"outstanding", funded_total_ - defunded_total_},
                {"funded_total", funded_total_},
                {"defunded_total", defunded_total_},
                {"reserves_injected_total", reserves_injected_total_}};
}

Json CoreLedger::export_state() const
{
    std::shared_lock lock(mu_);
    Json accounts = Json::object();
    for (auto const& [id, a] : accounts_)
    {
        accounts[id] = Json{{"account_id", a.account_id},
                            {"pseudonym", a.pseudonym},
                            {"balance", a.balance},
                            {"earmarked", a.earmarked},
                            {"status", a.open ? "open" : "closed"}};
    }
    Json txs = Json::object();
    for (auto const& [id, tx] : txs_)
    {
        txs[id] = tx.to_json();
    }
    Json history = Json::object();
    for (auto const& [id, ids] : account_history_)
    {
        history[id] = ids;
    }
    return Json{{"service", name_},
                {"accounts", accounts},
                {"reserves", reserves_},
                {"pseudonym_index", pseudonym_index_},
                {"transactions", txs},
                {"by_instruction", by_instruction_},
                {"account_history", history},
                {"counters", Json{{"next_account", next_account_}, {"next_tx", next_tx_}}},
                {"funded_total", funded_total_},
                {"defunded_total", defunded_total_},
                {"reserves_injected_total", reserves_injected_total_}};
}

CoreLedgerApi::CoreLedgerApi(CoreLedger& ledger, std::vector<ApiKey> keys)
    : ledger_(ledger), keys_(std::move(keys))
{
    auto amount_of = [](Json const& j, char const* field = "amount") {
        return parse_amount(get_str(j, field));
    };
    auto require = [this](HttpRequest const& req,
                          std::initializer_list<char const*> roles) -> Result<ApiKey const*> {
        auto const* key = authenticate(req);
        if (!key)
        {
            return Error{errc::Unauthorized, "missing or unknown x-api-key"};
        }
        for (auto const* role : roles)
        {
            if (key->role == role)
            {
                return key;
            }
        }
        return Error{errc::Unauthorized, "role " + key->role + " may not call this endpoint"};
    };

    route("POST", "/cbdc/accounts", [this, require](HttpRequest const& req, Params const&) {
        auto caller = require(req, {"pip"});
        if (!caller)
        {
            return error_response(caller.error());
        }
        auto r = ledger_.open_account(get_str(req.json(), "pseudonym"), caller.value()->caller);
        if (!r)
        {
            return error_response(r.error());
        }
        return ok_json(Json{{"account_id", r.value()}});
    });

    route("DELETE", "/cbdc/accounts/{id}",
          [this, require](HttpRequest const& req, Params const& p) {
              auto caller = require(req, {"pip"});
              if (!caller)
              {
                  return error_response(caller.error());
              }
              auto r = ledger_.close_account(p.at("id"), caller.value()->caller);
              if (!r)
              {
                  return error_response(r.error());
              }
              return ok_json(Json{{"closed", p.at("id")}});
          });

    route("GET", "/cbdc/accounts/{id}/balance",
          [this, require](HttpRequest const& req, Params const& p) {
              auto caller = require(req, {"pip", "ecosystem", "harness"});
              if (!caller)
              {
                  return error_response(caller.error());
              }
              auto r = ledger_.balance(p.at("id"));
              if (!r)
              {
                  return error_response(r.error());
              }
              return ok_json(Json{{"amount", format_money(r.value())}, {"currency", kCurrency}});
          });

    route("GET", "/cbdc/accounts/{id}/transactions",
          [this, require](HttpRequest const& req, Params const& p) {
              auto caller = require(req, {"pip", "ecosystem", "harness"});
              if (!caller)
              {
                  return error_response(caller.error());
              }
              std::uint64_t page = 1;
              std::uint64_t page_size = 10;
              if (auto it = req.query.find("page"); it != req.query.end())
              {
                  page = std::strtoull(it->second.c_str(), nullptr, 10);
              }
              if (auto it = req.query.find("page_size"); it != req.query.end())
              {
                  page_size = std::strtoull(it->second.c_str(), nullptr, 10);
              }
              auto r = ledger_.list_transactions(p.at("id"), page, page_size);
              if (!r)
              {
                  return error_response(r.error());
              }
              return ok_json(r.value());
          });

    auto tx_ref_response = [](Result<TxRef> const& r) {
        if (!r)
        {
            return error_response(r.error());
        }
        return ok_json(Json{{"tx_id", r.value().tx_id}, {"replay", r.value().replayed}});
    };

    route("POST", "/cbdc/payments",
          [this, require, amount_of, tx_ref_response](HttpRequest const& req, Params const&) {
              auto caller = require(req, {"ecosystem", "harness"});
              if (!caller)
              {
                  return error_response(caller.error());
              }
              auto j = req.json();
              auto amount = amount_of(j);
              if (!amount)
              {
                  return error_response(amount.error());
              }
              return tx_ref_response(ledger_.transfer(get_str(j, "instruction_id"),
                                                      get_str(j, "from"), get_str(j, "to"),
                                                      amount.value()));
          });

    route("POST", "/cbdc/payments/prepare",
          [this, require, amount_of, tx_ref_response](HttpRequest const& req, Params const&) {
              auto caller = require(req, {"ecosystem", "harness"});
              if (!caller)
              {
                  return error_response(caller.error());
              }
              auto j = req.json();
              auto amount = amount_of(j);
              if (!amount)
              {
                  return error_response(amount.error());
              }
              return tx_ref_response(ledger_.prepare_transfer(get_str(j, "instruction_id"),
                                                              get_str(j, "from"),
                                                              get_str(j, "to"), amount.value()));
          });

    route("POST", "/cbdc/payments/{tx}/commit",
          [this, require](HttpRequest const& req, Params const& p) {
              auto caller = require(req, {"ecosystem", "harness"});
              if (!caller)
              {
                  return error_response(caller.error());
              }
              auto r = ledger_.commit_tx(p.at("tx"));
              if (!r)
              {
                  return error_response(r.error());
              }
              return ok_json(Json{{"tx_id", p.at("tx")}, {"state", "committed"}});
          });

    route("POST", "/cbdc/payments/{tx}/abort",
          [this, require](HttpRequest const& req, Params const& p) {
              auto caller = require(req, {"ecosystem", "harness"});
              if (!caller)
              {
                  return error_response(caller.error());
              }
              auto r = ledger_.abort_tx(p.at("tx"));
              if (!r)
              {
                  return error_response(r.error());
              }
              return ok_json(Json{{"tx_id", p.at("tx")}, {"state", "aborted"}});
          });

    route("POST", "/cbdc/funding",
          [this, require, amount_of, tx_ref_response](HttpRequest const& req, Params const&) {
              auto caller = require(req, {"ecosystem", "harness"});
              if (!caller)
              {
                  return error_response(caller.error());
              }
              auto j = req.json();
              auto amount = amount_of(j);
              if (!amount)
              {
                  return error_response(amount.error());
              }
              auto direction = get_str(j, "direction");
              if (direction != "fund" && direction != "defund")
              {
                  return error_response(Error{errc::BadRequest, "direction must be fund|defund"});
              }
              auto op = direction == "fund" ? &CoreLedger::fund : &CoreLedger::defund;
              return tx_ref_response((ledger_.*op)(get_str(j, "instruction_id"),
                                                   get_str(j, "bank_id"),
                                                   get_str(j, "account_id"), amount.value()));
          });

    route("GET", "/cbdc/admin/totals", [this, require](HttpRequest const& req, Params const&) {
        auto caller = require(req, {"pip", "ecosystem", "harness"});
        if (!caller)
        {
            return error_response(caller.error());
        }
        return ok_json(ledger_.totals());
    });

    route("POST", "/cbdc/admin/banks", [this, require](HttpRequest const& req, Params const&) {
        auto caller = require(req, {"harness"});
        if (!caller)
        {
            return error_response(caller.error());
        }
        auto r = ledger_.register_bank(get_str(req.json(), "bank_id"));
        if (!r)
        {
            return error_response(r.error());
        }
        return ok_json(Json{{"registered", get_str(req.json(), "bank_id")}});
    });

    route("POST", "/cbdc/admin/reserves",
          [this, require, amount_of](HttpRequest const& req, Params const&) {
              auto caller = require(req, {"harness"});
              if (!caller)
              {
                  return error_response(caller.error());
              }
              auto j = req.json();
              auto amount = amount_of(j);
              if (!amount)
              {
                  return error_response(amount.error());
              }
              auto r = ledger_.inject_reserves(get_str(j, "bank_id"), amount.value());
              if (!r)
              {
                  return error_response(r.error());
              }
              return ok_json(Json{{"injected", get_str(j, "amount")}});
          });
}

ApiKey const* CoreLedgerApi::authenticate(HttpRequest const& req) const
{
    auto presented = req.header("x-api-key");
    for (auto const& k : keys_)
    {
        if (k.key == presented)
        {
            return &k;
        }
    }
    return nullptr;
}

} // namespace cbdcsim::core
