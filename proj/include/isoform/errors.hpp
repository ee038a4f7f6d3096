#pragma once

#include <stdexcept>
#include <string>

namespace isoform {

// Caller error: incompatible inputs, bad labels, poles, domain violations.
struct domain_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct conductor_mismatch : domain_error {
    using domain_error::domain_error;
};

struct division_by_zero : domain_error {
    using domain_error::domain_error;
};

// A validated mathematical fact failed to hold; indicates a construction bug
// or corrupted data, never user input.
struct consistency_error : std::logic_error {
    using std::logic_error::logic_error;
};

struct usage_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace isoform
