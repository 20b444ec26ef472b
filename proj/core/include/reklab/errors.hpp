#pragma once

#include <stdexcept>
#include <string>

namespace reklab {

// Base class for every error thrown by the library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input: unreadable files, parse failures, violated preconditions.
struct input_error : error {
    using error::error;
};

// Exhaustive enumeration refused because the graph exceeds the configured limit.
struct oracle_limit_error : error {
    int order;
    int limit;

    oracle_limit_error(int order_, int limit_)
        : error("oracle refused: graph order " + std::to_string(order_) +
                " exceeds the oracle limit " + std::to_string(limit_)),
          order(order_), limit(limit_) {}
};

} // namespace reklab
