#ifndef EQEULER_ERRORS_HPP
#define EQEULER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace eqeuler {

// All library failures carry a stable machine-readable code so the CLI can
// emit structured error JSON. Codes are listed in err_codes below.
class EqError : public std::runtime_error {
public:
    EqError(std::string code, const std::string& msg)
        : std::runtime_error(msg), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

namespace err {
inline constexpr const char* InvalidPermutation = "InvalidPermutation";
inline constexpr const char* OrderCapExceeded = "OrderCapExceeded";
inline constexpr const char* NotSimplicialAction = "NotSimplicialAction";
inline constexpr const char* InvalidActionData = "InvalidActionData";
inline constexpr const char* InternalInconsistency = "InternalInconsistency";
inline constexpr const char* NotIrreducible = "NotIrreducible";
inline constexpr const char* SchurIndexUnknown = "SchurIndexUnknown";
inline constexpr const char* DecompositionNotIntegral = "DecompositionNotIntegral";
inline constexpr const char* BijectionFailure = "BijectionFailure";
inline constexpr const char* RelationMismatch = "RelationMismatch";
inline constexpr const char* SingularMatrix = "SingularMatrix";
inline constexpr const char* NotEquivariant = "NotEquivariant";
inline constexpr const char* InvalidInput = "InvalidInput";
}  // namespace err

[[noreturn]] inline void fail(const char* code, const std::string& msg) {
    throw EqError(code, msg);
}

inline void check(bool cond, const char* code, const std::string& msg) {
    if (!cond) fail(code, msg);
}

// Internal consistency assertion: a failure here is a bug, not bad input.
inline void icheck(bool cond, const std::string& msg) {
    if (!cond) fail(err::InternalInconsistency, msg);
}

}  // namespace eqeuler

#endif
