#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace wk {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class OrderBoundExceeded : public Error {
public:
    using Error::Error;
};

class NotAPermutation : public Error {
public:
    using Error::Error;
};

class InvalidParameters : public Error {
public:
    using Error::Error;
};

class NotNormal : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

class IncompatibleLevels : public Error {
public:
    using Error::Error;
};

class LevelMismatch : public Error {
public:
    using Error::Error;
};

class GroupMismatch : public Error {
public:
    using Error::Error;
};

class NotAShodaPair : public Error {
public:
    using Error::Error;
};

class VerificationFailed : public Error {
public:
    using Error::Error;
};

class CharacteristicDividesOrder : public Error {
public:
    using Error::Error;
};

class HypothesesNotMet : public Error {
public:
    using Error::Error;
};

// Raised when the collected strong pairs do not account for the whole
// group algebra.  Carries enough data for a diagnostic listing.
class NotStronglyMonomialOrIncomplete : public Error {
public:
    NotStronglyMonomialOrIncomplete(const std::string& what,
                                    std::vector<std::string> pairs_found,
                                    std::string residual)
        : Error(what),
          pairs_found_(std::move(pairs_found)),
          residual_(std::move(residual)) {}

    const std::vector<std::string>& pairs_found() const { return pairs_found_; }
    const std::string& residual() const { return residual_; }

private:
    std::vector<std::string> pairs_found_;
    std::string residual_;
};

}  // namespace wk
