#ifndef FDTC_ERRORS_HPP
#define FDTC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fdtc {

// Category drives the CLI exit code: input errors exit 2, guard errors
// (a hypothesis of the covering formula fails) exit 3, internal errors exit 4.
enum class ErrorCategory { input, guard, internal };

class Error : public std::runtime_error {
public:
    Error(std::string code, ErrorCategory category, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)), category_(category) {}

    const std::string& code() const noexcept { return code_; }
    ErrorCategory category() const noexcept { return category_; }

    // Optional machine-readable context, stored as serialized JSON so this
    // header stays free of JSON dependencies. Empty when absent.
    const std::string& detail_json() const noexcept { return detail_json_; }
    void set_detail_json(std::string detail) { detail_json_ = std::move(detail); }

private:
    std::string code_;
    ErrorCategory category_;
    std::string detail_json_;
};

struct SyntaxError : Error {
    explicit SyntaxError(const std::string& msg)
        : Error("syntax_error", ErrorCategory::input, msg) {}
};

struct IndexOutOfRangeError : Error {
    explicit IndexOutOfRangeError(const std::string& msg)
        : Error("index_out_of_range", ErrorCategory::input, msg) {}
};

struct StrandMismatchError : Error {
    explicit StrandMismatchError(const std::string& msg)
        : Error("strand_mismatch", ErrorCategory::input, msg) {}
};

struct DegenerateStrandsError : Error {
    explicit DegenerateStrandsError(const std::string& msg)
        : Error("degenerate_strands", ErrorCategory::input, msg) {}
};

struct BadDegreeError : Error {
    explicit BadDegreeError(const std::string& msg)
        : Error("bad_degree", ErrorCategory::input, msg) {}
};

struct NotConnectedError : Error {
    explicit NotConnectedError(const std::string& msg)
        : Error("not_connected", ErrorCategory::input, msg) {}
};

// Monodromy data that is structurally well formed but cannot describe any
// orientable branched cover (for example boundary words inconsistent with
// an integral genus).
struct InvalidCoverError : Error {
    explicit InvalidCoverError(const std::string& msg)
        : Error("invalid_cover", ErrorCategory::input, msg) {}
};

// The covering has a local monodromy with a fixed point, so some branch
// preimage is unramified and the FDTC division formula is not licensed.
struct NotFullyRamifiedError : Error {
    explicit NotFullyRamifiedError(const std::string& msg)
        : Error("not_fully_ramified", ErrorCategory::guard, msg) {}
};

// The covering surface has nonnegative Euler characteristic (disk or
// annulus), where the division formula is genuinely false.
struct AnnulusError : Error {
    explicit AnnulusError(const std::string& msg)
        : Error("annulus_exception", ErrorCategory::guard, msg) {}
};

struct BudgetExceededError : Error {
    explicit BudgetExceededError(const std::string& msg)
        : Error("budget_exceeded", ErrorCategory::internal, msg) {}
};

struct EmptyIntersectionError : Error {
    explicit EmptyIntersectionError(const std::string& msg)
        : Error("empty_intersection", ErrorCategory::internal, msg) {}
};

// Test oracles throw this when a scan window provably missed its target.
struct BoundTooSmallError : Error {
    explicit BoundTooSmallError(const std::string& msg)
        : Error("bound_too_small", ErrorCategory::internal, msg) {}
};

struct InternalError : Error {
    explicit InternalError(const std::string& msg)
        : Error("internal_invariant", ErrorCategory::internal, msg) {}
};

} // namespace fdtc

#endif
