#ifndef KESTEN_ERRORS_HPP
#define KESTEN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kesten {

// Base error carrying a stable machine-readable code alongside the message.
class KestenError : public std::runtime_error {
public:
    KestenError(std::string code, const std::string& msg)
        : std::runtime_error(msg), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

class UsageError : public KestenError {
public:
    explicit UsageError(const std::string& msg) : KestenError("Usage", msg) {}
};

class ParameterError : public KestenError {
public:
    explicit ParameterError(const std::string& msg) : KestenError("Parameter", msg) {}
};

class DomainError : public KestenError {
public:
    explicit DomainError(const std::string& msg) : KestenError("Domain", msg) {}
};

class BoundaryConvergenceError : public KestenError {
public:
    explicit BoundaryConvergenceError(const std::string& msg)
        : KestenError("BoundaryConvergence", msg) {}
};

class DegenerateDenominatorError : public KestenError {
public:
    explicit DegenerateDenominatorError(const std::string& msg)
        : KestenError("DegenerateDenominator", msg) {}
};

class BudgetExceededError : public KestenError {
public:
    explicit BudgetExceededError(const std::string& msg)
        : KestenError("BudgetExceeded", msg) {}
};

} // namespace kesten

#endif
