#pragma once
#include <stdexcept>
#include <string>

namespace teachdim {

// error taxonomy, mapped to CLI exit codes in cli.cpp:
//   parse_error -> 2, the semantic errors -> 3, internal_error -> 4
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// definitional misuse of an operation (length mismatch, concept not in class, ...)
struct input_error : error {
    using error::error;
};

// numeric precondition violated (alpha out of range, k > n, infeasible experiment, ...)
struct parameter_error : error {
    using error::error;
};

// representation limits (n > 30, product too wide, binomial overflow)
struct capacity_error : error {
    using error::error;
};

// operation undefined on the value (measures of the empty class)
struct domain_error : error {
    using error::error;
};

// concept-class text format violation; carries the 1-based line number
struct parse_error : error {
    int line;
    parse_error(int line_, const std::string& what_)
        : error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

// a proof-guaranteed invariant failed; always a bug, never a user error
struct internal_error : error {
    using error::error;
};

} // namespace teachdim
