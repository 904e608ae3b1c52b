#ifndef IALC_ERRORS_HPP
#define IALC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ialc {

// 1-based position inside a source string or file.
struct SourcePos {
    int line = 1;
    int column = 1;
};

inline std::string to_string(SourcePos p) {
    return "line " + std::to_string(p.line) + ", column " + std::to_string(p.column);
}

/// Malformed concrete syntax. what() carries the position.
class ParseError : public std::runtime_error {
public:
    ParseError(SourcePos pos, const std::string& message)
        : std::runtime_error(to_string(pos) + ": " + message), pos_(pos) {}

    SourcePos pos() const noexcept { return pos_; }

private:
    SourcePos pos_;
};

/// Structurally broken model file or model-level precondition failure.
class ModelError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Evaluation prerequisite missing (e.g. a nominal with no anchored entity).
class EvalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A bounded search was asked to exceed its configured cap.
class CapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace ialc

#endif  // IALC_ERRORS_HPP
