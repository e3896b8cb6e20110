#pragma once

#include <stdexcept>
#include <string>

namespace tybraid {

// Input exceeds an enumeration/search bound (dimension caps, oracle sizes).
struct capacity_error : std::runtime_error {
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// The ambient cyclotomic modulus N is too small to represent a required root.
struct modulus_error : std::runtime_error {
    explicit modulus_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tybraid
