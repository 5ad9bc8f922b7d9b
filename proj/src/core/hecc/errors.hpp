#ifndef HECC_ERRORS_HPP
#define HECC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hecc {

// Precondition or invariant breach by the caller.
struct ContractViolation : std::logic_error {
    explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

// Parse failure in any of the text grammars; carries line/column when known.
struct ParseError : std::runtime_error {
    int line = 0, column = 0;
    explicit ParseError(const std::string& what, int line_ = 0, int col_ = 0)
        : std::runtime_error(what), line(line_), column(col_) {}
};

// Curve/spec validation failure (non-squarefree f, genus < 2, bad hint, ...).
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// A documented search budget was exhausted without success.
struct SearchExhausted : std::runtime_error {
    explicit SearchExhausted(const std::string& what) : std::runtime_error(what) {}
};

// No admissible split of D into (D_Q, D_R) exists.
struct NoValidSplit : std::runtime_error {
    explicit NoValidSplit(const std::string& what) : std::runtime_error(what) {}
};

// H^1(O(D)) carries no nonzero class (h1 = 0).
struct NoNonzeroClass : std::runtime_error {
    explicit NoNonzeroClass(const std::string& what) : std::runtime_error(what) {}
};

// Invariant the library itself guarantees was found broken.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace hecc

#endif
