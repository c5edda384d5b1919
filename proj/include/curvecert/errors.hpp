#ifndef CURVECERT_ERRORS_HPP
#define CURVECERT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace curvecert {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ZeroFormError : Error {
    explicit ZeroFormError(const std::string& msg = "form is identically zero") : Error(msg) {}
};

struct DegreeMismatchError : Error {
    explicit DegreeMismatchError(const std::string& msg = "degree mismatch") : Error(msg) {}
};

struct BidegreeMismatchError : Error {
    explicit BidegreeMismatchError(const std::string& msg = "bidegree mismatch") : Error(msg) {}
};

struct DegreeOrderError : Error {
    explicit DegreeOrderError(const std::string& msg = "deg f < deg g") : Error(msg) {}
};

struct CommonComponentError : Error {
    explicit CommonComponentError(const std::string& msg = "inputs share a common component") : Error(msg) {}
};

struct NotHomogeneousError : Error {
    explicit NotHomogeneousError(const std::string& msg = "polynomial is not homogeneous") : Error(msg) {}
};

struct NotInterlacingError : Error {
    explicit NotInterlacingError(const std::string& msg = "pair is not strictly interlacing") : Error(msg) {}
};

struct NotCoprimeError : Error {
    explicit NotCoprimeError(const std::string& msg = "forms are not coprime") : Error(msg) {}
};

struct NonPositiveParameterError : Error {
    explicit NonPositiveParameterError(const std::string& msg = "parameter must be positive") : Error(msg) {}
};

struct DuplicateParameterError : Error {
    explicit DuplicateParameterError(const std::string& msg = "duplicate parameter") : Error(msg) {}
};

struct DegenerateHyperplaneError : Error {
    explicit DegenerateHyperplaneError(const std::string& msg = "curve is contained in the hyperplane") : Error(msg) {}
};

struct DegenerateInputError : Error {
    explicit DegenerateInputError(const std::string& msg = "degenerate input") : Error(msg) {}
};

struct NondegeneracyFailureError : Error {
    explicit NondegeneracyFailureError(const std::string& msg = "components are linearly dependent") : Error(msg) {}
};

struct NotSmoothError : Error {
    explicit NotSmoothError(const std::string& msg = "curve is not certified smooth") : Error(msg) {}
};

struct TracingUnresolvedError : Error {
    explicit TracingUnresolvedError(const std::string& msg = "tracing could not separate a collision") : Error(msg) {}
};

struct HarnackViolationError : Error {
    explicit HarnackViolationError(const std::string& msg = "branch count exceeds Harnack bound") : Error(msg) {}
};

struct ExhaustedScheduleError : Error {
    explicit ExhaustedScheduleError(const std::string& msg = "no epsilon in the schedule passed") : Error(msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

} // namespace curvecert

#endif
