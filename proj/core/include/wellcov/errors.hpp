#pragma once

#include <stdexcept>
#include <string>

namespace wellcov {

struct MalformedInput : std::runtime_error {
    explicit MalformedInput(const std::string& what) : std::runtime_error(what) {}
};

struct VertexOutOfRange : std::out_of_range {
    explicit VertexOutOfRange(const std::string& what) : std::out_of_range(what) {}
};

struct NotStable : std::invalid_argument {
    explicit NotStable(const std::string& what) : std::invalid_argument(what) {}
};

struct EmptySource : std::invalid_argument {
    explicit EmptySource(const std::string& what) : std::invalid_argument(what) {}
};

struct BadParams : std::invalid_argument {
    explicit BadParams(const std::string& what) : std::invalid_argument(what) {}
};

struct TooLarge : std::invalid_argument {
    explicit TooLarge(const std::string& what) : std::invalid_argument(what) {}
};

struct InvalidMatching : std::invalid_argument {
    explicit InvalidMatching(const std::string& what) : std::invalid_argument(what) {}
};

struct NotAPermutation : std::invalid_argument {
    explicit NotAPermutation(const std::string& what) : std::invalid_argument(what) {}
};

struct PreconditionViolated : std::invalid_argument {
    explicit PreconditionViolated(const std::string& what) : std::invalid_argument(what) {}
};

// A characterization theorem's internally cross-checked conditions disagreed.
// This signals an implementation bug, not a property of the input graph.
struct InternalInconsistency : std::logic_error {
    explicit InternalInconsistency(const std::string& what) : std::logic_error(what) {}
};

struct StructureNotFound : std::logic_error {
    explicit StructureNotFound(const std::string& what) : std::logic_error(what) {}
};

}  // namespace wellcov
