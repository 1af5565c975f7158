#ifndef HOMSTAR_COMMON_HPP
#define HOMSTAR_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace homstar {

// Input data is malformed or two values live on incompatible ambients.
struct StructuralError : std::runtime_error {
    explicit StructuralError(const std::string& msg) : std::runtime_error(msg) {}
};

// A documented precondition of an operation does not hold.
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

// A solve or construction failed in a way that carries diagnostic payload.
struct DiagnosticError : std::runtime_error {
    std::string residual;
    DiagnosticError(const std::string& msg, std::string res)
        : std::runtime_error(msg + (res.empty() ? "" : ("\nresidual: " + res))), residual(std::move(res)) {}
};

// Two theorem-backed computations disagree: a bug, never a user error.
struct TheoremViolation : std::runtime_error {
    explicit TheoremViolation(const std::string& msg) : std::runtime_error(msg) {}
};

inline std::uint64_t fnv1a_init() { return 1469598103934665603ULL; }

inline std::uint64_t fnv1a(std::uint64_t h, const std::string& s) {
    for (unsigned char c : s) {
        h ^= static_cast<std::uint64_t>(c);
        h *= 1099511628211ULL;
    }
    return h;
}

} // namespace homstar

#endif
