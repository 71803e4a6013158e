#pragma once

#include <stdexcept>
#include <string>

namespace cattab {

// Limits guarding the exhaustive routines. They are configuration, not
// hard limits: callers that know what they are doing may raise them.
struct resource_caps {
    int max_enumeration_size = 12;  // tableau index / tree size
    int max_path_length = 14;       // brute-force path counting
    int max_chain_size = 8;         // dense 2^n x 2^n exact chain
};

// An object that parsed fine but breaks one of its invariants.
class invalid_object : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class resource_cap_exceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline void check_cap(int value, int cap, const char* what)
{
    if (value > cap) {
        throw resource_cap_exceeded(std::string(what) + " " + std::to_string(value) +
                                    " exceeds configured cap " + std::to_string(cap));
    }
}

} // namespace cattab
