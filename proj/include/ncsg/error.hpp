#ifndef NCSG_ERROR_HPP
#define NCSG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ncsg {

enum class ErrorKind {
    Validation,      // malformed quiver, duplicate or reserved names
    QuiverMismatch,  // operands built over different quivers
    UnknownArrow,
    UnknownVertex,
    NotComposable,
    NotClosed,       // form not d-closed, or a path that is not a cycle
    ZeroWeight,
    Degenerate,      // leading symplectic term is degenerate
    NotHomogeneous,
    ShapeMismatch,
    Parse,
};

inline const char* kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::Validation: return "validation";
        case ErrorKind::QuiverMismatch: return "quiver-mismatch";
        case ErrorKind::UnknownArrow: return "unknown-arrow";
        case ErrorKind::UnknownVertex: return "unknown-vertex";
        case ErrorKind::NotComposable: return "not-composable";
        case ErrorKind::NotClosed: return "not-closed";
        case ErrorKind::ZeroWeight: return "zero-weight";
        case ErrorKind::Degenerate: return "degenerate";
        case ErrorKind::NotHomogeneous: return "not-homogeneous";
        case ErrorKind::ShapeMismatch: return "shape-mismatch";
        case ErrorKind::Parse: return "parse";
    }
    return "unknown";
}

/// Every failure in the library is reported as an Error carrying a kind tag
/// that callers (and the CLI) can switch on.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace ncsg

#endif  // NCSG_ERROR_HPP
