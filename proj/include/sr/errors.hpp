#ifndef SR_ERRORS_HPP
#define SR_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sr {

/// Input-side failure (manifest syntax, unknown identifier, arity mismatch).
/// Carries a byte offset into the offending source text when known.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t offset)
        : std::runtime_error(msg + " at offset " + std::to_string(offset)), offset_(offset) {}
    explicit ParseError(const std::string& msg)
        : std::runtime_error(msg), offset_(npos) {}

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Analysis-side failure (preconditions, caps, degenerate inputs).
class AnalysisError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The flag did not reach the full tangent space within the bracket cap.
class NotBracketGeneratingWithinCap : public AnalysisError {
public:
    NotBracketGeneratingWithinCap(int reached, int needed, int cap)
        : AnalysisError("flag stalled at dimension " + std::to_string(reached) + " of " +
                        std::to_string(needed) + " within bracket cap " + std::to_string(cap)),
          reached_(reached), cap_(cap) {}
    int reached() const { return reached_; }
    int cap() const { return cap_; }

private:
    int reached_, cap_;
};

/// Family enumeration exceeded the configured budget (reported, not truncated).
class EnumerationOverflow : public AnalysisError {
public:
    explicit EnumerationOverflow(std::size_t budget)
        : AnalysisError("bracket family enumeration exceeded budget of " + std::to_string(budget)) {}
};

}  // namespace sr

#endif
