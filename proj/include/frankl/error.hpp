#pragma once

#include <stdexcept>
#include <string>

namespace frankl {

// Malformed input: unknown vertex, out-of-range index, duplicate edge or member.
struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ParseError : InvalidInput {
    ParseError(std::size_t line, const std::string& what)
        : InvalidInput("line " + std::to_string(line) + ": " + what), line(line) {}
    std::size_t line;
};

// A driver or lemma was invoked on a graph outside its stated class.
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A theorem-backed guarantee failed to materialise. Always a bug in this library.
struct GuaranteeViolation : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace frankl
