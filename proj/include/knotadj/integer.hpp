#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace knotadj {

using Integer = boost::multiprecision::cpp_int;

/// Base of every error the library throws.
class error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (bad text, wrong sizes, failed preconditions).
class input_error : public error {
   public:
    using error::error;
};

/// An internal identity failed; always indicates a bug, never bad input.
class invariant_violation : public error {
   public:
    using error::error;
};

inline bool fits_int64(const Integer& v) {
    return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace knotadj
