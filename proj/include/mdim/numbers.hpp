#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>

namespace mdim {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

// Exit-code contract of the CLI maps onto these error classes.
struct invariant_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct resource_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::string version_string() { return "mdim 0.1.0"; }

}  // namespace mdim
