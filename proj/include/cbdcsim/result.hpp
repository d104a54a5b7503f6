// Copyright 2026 the cbdcsim developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <string>
#include <utility>
#include <variant>

namespace cbdcsim
{

// Machine-readable failure. `code` values are stable API strings
// ("InsufficientFunds", "UnknownAccount", ...) surfaced verbatim on the wire.
struct Error
{
    std::string code;
    std::string message;
};

template <typename T> class Result
{
  public:
    Result(T value) : v_(std::move(value))
    {
    }
    Result(Error err) : v_(std::move(err))
    {
    }

    bool ok() const
    {
        return std::holds_alternative<T>(v_);
    }
    explicit operator bool() const
    {
        return ok();
    }

    T const& value() const
    {
        return std::get<T>(v_);
    }
    T& value()
    {
        return std::get<T>(v_);
    }
    Error const& error() const
    {
        return std::get<Error>(v_);
    }

  private:
    std::variant<T, Error> v_;
};

// Unit result for operations with no payload.
struct Ok
{
};

namespace errc
{
// Shared error code strings. Kept as plain strings so journal payloads and
// HTTP bodies carry them unmodified.
inline constexpr char const* Overflow = "Overflow";
inline constexpr char const* NegativeResult = "NegativeResult";
inline constexpr char const* StorageFailure = "StorageFailure";
inline constexpr char const* DuplicatePseudonym = "DuplicatePseudonym";
inline constexpr char const* NonZeroBalance = "NonZeroBalance";
inline constexpr char const* UnknownAccount = "UnknownAccount";
inline constexpr char const* UnknownBank = "UnknownBank";
inline constexpr char const* UnknownTransaction = "UnknownTransaction";
inline constexpr char const* InsufficientFunds = "InsufficientFunds";
inline constexpr char const* InsufficientReserves = "InsufficientReserves";
inline constexpr char const* NonPositiveAmount = "NonPositiveAmount";
inline constexpr char const* WrongState = "WrongState";
inline constexpr char const* Unauthorized = "Unauthorized";
inline constexpr char const* DuplicateUser = "DuplicateUser";
inline constexpr char const* KycFailed = "KycFailed";
inline constexpr char const* UserNotOnboarded = "UserNotOnboarded";
inline constexpr char const* UnauthorizedAccounts = "UnauthorizedAccounts";
inline constexpr char const* InvalidProgram = "InvalidProgram";
inline constexpr char const* NoViableRoute = "NoViableRoute";
inline constexpr char const* StepUnrecoverable = "StepUnrecoverable";
inline constexpr char const* InvalidInstruction = "InvalidInstruction";
inline constexpr char const* ChainBroken = "ChainBroken";
inline constexpr char const* NotFound = "NotFound";
inline constexpr char const* BadRequest = "BadRequest";
}

} // namespace cbdcsim
