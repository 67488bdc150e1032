#ifndef ROTLAT_ERROR_HPP
#define ROTLAT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace rotlat {

enum class ErrorCode {
    UnsupportedConductor,
    BadParam,
    ParamsMismatch,
    ZeroElement,
    SingularBasis,
    ZeroGenerator,
    NotTotallyPositive,
    NonIntegralGram,
    UncertifiedMinimum,
    InvariantViolation,
    InvalidArgument,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

}  // namespace rotlat

#endif
