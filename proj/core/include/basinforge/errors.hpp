#pragma once
#include <stdexcept>
#include <string>

namespace basinforge {

// Bad user input: unknown scenario, out-of-range parameter, malformed file.
// The CLI maps this to exit code 3.
class UsageError : public std::invalid_argument {
public:
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

// A pipeline stage could not satisfy its postcondition (separation too
// tight, schedule exhausted, node budget exceeded, ...). Exit code 2.
class ConstructionError : public std::runtime_error {
public:
    explicit ConstructionError(const std::string& what) : std::runtime_error(what) {}
    ConstructionError(const std::string& stage, const std::string& what)
        : std::runtime_error(stage + ": " + what), stage_(stage) {}
    const std::string& stage() const { return stage_; }

private:
    std::string stage_;
};

} // namespace basinforge
