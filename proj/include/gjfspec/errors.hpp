#ifndef GJFSPEC_ERRORS_HPP
#define GJFSPEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gjfs {

struct PoleError : std::domain_error {
    explicit PoleError(const std::string& msg) : std::domain_error(msg) {}
};

struct InadmissibleParam : std::invalid_argument {
    explicit InadmissibleParam(const std::string& msg) : std::invalid_argument(msg) {}
};

struct DomainError : std::domain_error {
    explicit DomainError(const std::string& msg) : std::domain_error(msg) {}
};

struct ConvergenceError : std::runtime_error {
    explicit ConvergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

struct FamilyMismatch : std::invalid_argument {
    explicit FamilyMismatch(const std::string& msg) : std::invalid_argument(msg) {}
};

struct SingularQuadrature : std::runtime_error {
    explicit SingularQuadrature(const std::string& msg) : std::runtime_error(msg) {}
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct DegenerateFit : std::invalid_argument {
    explicit DegenerateFit(const std::string& msg) : std::invalid_argument(msg) {}
};

} // namespace gjfs

#endif
