#pragma once

#include <string>
#include <vector>

#include "brauer/error.hpp"

namespace brauer {

// Size limits. Every cap is named so a CapExceeded error can report it.
struct Caps {
    i64 table_order = 4096;          // table groups built from job input
    i64 closure = 1000000;           // permutation closure
    i64 h2_base = 64;                // |G| for H^2 and class-module work
    i64 h1_enumeration = 10000000;   // candidate tables in nonabelian H^1
    i64 extension_order = 4096;      // N*|G| for explicit extension groups
    i64 exhaustive_quotient = 65536; // element-by-element unramified scan
    i64 example_prime = 3;           // largest p for the group-ring example
    int threads = 1;

    // name=value; returns false for an unknown name
    bool set(const std::string& name, i64 value);
    std::vector<std::pair<std::string, i64>> list() const;
};

[[noreturn]] void cap_exceeded(const std::string& cap, i64 measured, i64 limit);

inline void check_cap(const std::string& cap, i64 measured, i64 limit)
{
    if (measured > limit)
        cap_exceeded(cap, measured, limit);
}

} // namespace brauer
