#pragma once

#include <stdexcept>
#include <string>

namespace paralift {

// Base for all domain errors so the CLI can separate bad input (exit 2)
// from verification mismatches (exit 1) and from genuine bugs.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define PARALIFT_ERROR(Name)                                       \
    struct Name : ::paralift::Error {                              \
        explicit Name(const std::string& what) : Error(what) {}    \
    }

} // namespace paralift
