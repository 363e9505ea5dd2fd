#ifndef QFI_ERRORS_HPP
#define QFI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qfi {

/* Input outside an operation's domain (non-squarefree D, q = 2, ...). */
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/* A bounded search was asked to do more work than its budget allows. */
struct SearchBudgetExceeded : DomainError {
    using DomainError::DomainError;
};

/* Raised when checked 64-bit arithmetic would overflow. */
struct OverflowError : std::overflow_error {
    using std::overflow_error::overflow_error;
};

/* A postcondition that the mathematics guarantees did not hold. */
struct InvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace qfi

#endif
