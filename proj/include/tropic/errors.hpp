#pragma once

#include <stdexcept>
#include <string>

namespace tropic {

/// Invalid input: malformed graph, bad edge id, schema violation, ...
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

/// A configured search/enumeration cap was exceeded.
class limit_error : public std::runtime_error {
public:
    explicit limit_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace tropic
