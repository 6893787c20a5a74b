#pragma once

#include <stdexcept>
#include <string>

namespace hvb {

struct InadmissibleBasis : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ArityMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A table-backed rule was asked for an image outside its support.
struct OutOfWindow : std::out_of_range {
    using std::out_of_range::out_of_range;
};

/// A family selector (z1, w1, ...) is not a central basis vector.
struct InvalidSelector : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SyntaxError : std::invalid_argument {
    SyntaxError(const std::string& msg, int line, int column, std::string token)
        : std::invalid_argument(msg + " at " + std::to_string(line) + ":" + std::to_string(column) +
                                (token.empty() ? std::string() : " near '" + token + "'")),
          line(line), column(column), token(std::move(token))
    {
    }
    int line;
    int column;
    std::string token;
};

}  // namespace hvb
