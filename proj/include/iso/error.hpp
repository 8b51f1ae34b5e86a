#pragma once

#include <stdexcept>
#include <string>

namespace iso {

// Violated precondition or unrepresentable request (overflow, caps, degenerate
// input where a full-dimensional one is required). The CLI maps this to exit
// code 1; malformed input is reported separately as a usage error.
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace iso
