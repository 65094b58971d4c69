// errors.hpp — typed error hierarchy shared by the whole library.
#pragma once

#include <stdexcept>
#include <string>

namespace lopt {

// Every library error carries a stable machine-readable code (its class name)
// next to the human message; the CLI maps codes to exit classes.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define LOPT_DEFINE_ERROR(Name)                                              \
    class Name : public Error {                                              \
    public:                                                                  \
        explicit Name(const std::string& message) : Error(#Name, message) {} \
    }

// Input / validation problems (CLI exit code 2).
LOPT_DEFINE_ERROR(DegenerateBasis);
LOPT_DEFINE_ERROR(NonPositiveArea);
LOPT_DEFINE_ERROR(DomainError);
LOPT_DEFINE_ERROR(ValidationError);
LOPT_DEFINE_ERROR(ParseError);
LOPT_DEFINE_ERROR(UnsupportedFamily);
LOPT_DEFINE_ERROR(NotApplicable);
LOPT_DEFINE_ERROR(NoNegativeTerm);

// Computation did not converge / is impossible (CLI exit code 3).
LOPT_DEFINE_ERROR(BudgetExceeded);
LOPT_DEFINE_ERROR(SlowConvergence);
LOPT_DEFINE_ERROR(QuadratureFailure);
LOPT_DEFINE_ERROR(UnboundedBelow);
LOPT_DEFINE_ERROR(NoWell);

#undef LOPT_DEFINE_ERROR

}  // namespace lopt
