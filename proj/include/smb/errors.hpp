#ifndef SMB_ERRORS_HPP
#define SMB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace smb {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input: bad config, non-monic modulus, reducible place, ...
class ValidationError : public Error {
public:
    using Error::Error;
};

// The mathematical hypotheses a formula needs do not hold.
class HypothesisError : public Error {
public:
    using Error::Error;
};

class AmbiguousCancellation : public HypothesisError {
public:
    using HypothesisError::HypothesisError;
};

class UnsupportedShape : public Error {
public:
    using Error::Error;
};

class BudgetExceeded : public Error {
public:
    using Error::Error;
};

} // namespace smb

#endif
