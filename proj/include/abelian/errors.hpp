#pragma once

#include <stdexcept>
#include <string>

namespace abelian {

// Rejected input: bad ranges, ill-defined maps, unmet hypotheses.
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration would exceed the configured element budget.
class BudgetError : public std::runtime_error {
public:
    BudgetError(const std::string& what, std::string required)
        : std::runtime_error(what), required_count(std::move(required)) {}
    std::string required_count;
};

// A computed value violated an invariant the engine guarantees. Always a bug.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace abelian
