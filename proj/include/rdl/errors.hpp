#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace rdl {

/// Base class for all domain errors.  The `name()` is a stable identifier
/// (e.g. "EmptySupport") used by the CLI diagnostics and by tests; `what()`
/// carries the human-readable detail.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

#define RDL_DEFINE_ERROR(NAME)                                            \
    struct NAME : Error {                                                 \
        explicit NAME(const std::string& what) : Error(#NAME, what) {}    \
    }

RDL_DEFINE_ERROR(EmptySupport);
RDL_DEFINE_ERROR(OutOfRange);
RDL_DEFINE_ERROR(NonMonotone);
RDL_DEFINE_ERROR(InvariantViolation);
RDL_DEFINE_ERROR(GridMismatch);
RDL_DEFINE_ERROR(ChainViolation);
RDL_DEFINE_ERROR(NegativeInput);
RDL_DEFINE_ERROR(BracketFailure);
RDL_DEFINE_ERROR(RecursionInconsistency);
RDL_DEFINE_ERROR(InvalidBin);
RDL_DEFINE_ERROR(EpsilonTooLarge);
RDL_DEFINE_ERROR(ThresholdViolation);
RDL_DEFINE_ERROR(ParseError);
RDL_DEFINE_ERROR(UnknownSuite);

#undef RDL_DEFINE_ERROR

} // namespace rdl
