#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rw {

/// Base class for every error the library reports.
class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: dangling references, repeated vertices, wrong sizes, bad files.
class ValidationError : public Error
{
  public:
    using Error::Error;
};

/// An operation was called outside its documented preconditions.
class ParameterError : public Error
{
  public:
    using Error::Error;
};

/// A search would examine (or has examined) more primitive checks than allowed.
class BudgetExceeded : public Error
{
  public:
    BudgetExceeded(const std::string & what, std::uint64_t estimate, std::uint64_t limit) :
        Error(what + ": needs about " + std::to_string(estimate) + " checks, budget is " + std::to_string(limit)),
        estimate_(estimate),
        limit_(limit)
    {
    }

    auto estimate() const noexcept -> std::uint64_t { return estimate_; }
    auto limit() const noexcept -> std::uint64_t { return limit_; }

  private:
    std::uint64_t estimate_;
    std::uint64_t limit_;
};

/// Default cap on primitive checks for the exhaustive searches.
inline constexpr std::uint64_t default_budget = 100'000'000;

/// Counts primitive checks against a fixed cap.
class BudgetMeter
{
  public:
    BudgetMeter(std::string what, std::uint64_t limit) : what_(std::move(what)), limit_(limit) {}

    auto charge(std::uint64_t n = 1) -> void
    {
        used_ += n;
        if (used_ > limit_)
            throw BudgetExceeded(what_, used_, limit_);
    }

    auto used() const noexcept -> std::uint64_t { return used_; }
    auto limit() const noexcept -> std::uint64_t { return limit_; }

  private:
    std::string what_;
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
};

}
