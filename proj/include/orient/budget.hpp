#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace orient {

/// Signals that an exact search would exceed its configured resources.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when an operation's documented precondition does not hold.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a self-check on a computed result fails. Always a bug.
class VerificationError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct Budget {
    std::uint64_t node_limit = 200'000'000;
    std::size_t max_subset_vertices = 20;   // 2^n subset tables
    std::size_t max_perfect_vertices = 10;
    std::size_t max_robust_vertices = 15;
};

/// Counts search nodes against a Budget's node limit.
class NodeMeter {
public:
    explicit NodeMeter(const Budget& budget, const char* what)
        : limit_(budget.node_limit), what_(what)
    {
    }

    void tick()
    {
        if (++nodes_ > limit_)
            throw BudgetExceeded(std::string(what_) + ": node limit of " + std::to_string(limit_) + " exceeded");
    }

    std::uint64_t nodes() const noexcept { return nodes_; }

private:
    std::uint64_t nodes_ = 0;
    std::uint64_t limit_;
    const char* what_;
};

}  // namespace orient
