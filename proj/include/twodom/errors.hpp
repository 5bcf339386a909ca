#pragma once

#include <stdexcept>
#include <string>

namespace twodom {

struct NotATree : std::runtime_error {
    explicit NotATree(const std::string& what) : std::runtime_error("not a tree: " + what) {}
};

struct MalformedGraph6 : std::runtime_error {
    explicit MalformedGraph6(const std::string& what)
        : std::runtime_error("malformed graph6: " + what) {}
};

struct TooLarge : std::runtime_error {
    explicit TooLarge(const std::string& what) : std::runtime_error("too large: " + what) {}
};

struct SelfCheckFailed : std::runtime_error {
    explicit SelfCheckFailed(const std::string& what)
        : std::runtime_error("pattern self-check failed: " + what) {}
};

struct InadmissiblePattern : std::runtime_error {
    explicit InadmissiblePattern(const std::string& what)
        : std::runtime_error("inadmissible pattern: " + what) {}
};

struct NoSuchEmbedding : std::runtime_error {
    explicit NoSuchEmbedding(const std::string& what)
        : std::runtime_error("no such embedding: " + what) {}
};

struct InvalidAttacher : std::runtime_error {
    explicit InvalidAttacher(const std::string& what)
        : std::runtime_error("invalid attacher: " + what) {}
};

struct PreconditionViolated : std::runtime_error {
    explicit PreconditionViolated(const std::string& clause)
        : std::runtime_error("precondition violated: " + clause) {}
};

struct InternalInconsistency : std::runtime_error {
    explicit InternalInconsistency(const std::string& what)
        : std::runtime_error("internal inconsistency: " + what) {}
};

}  // namespace twodom
