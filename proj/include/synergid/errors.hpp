#pragma once

#include <stdexcept>
#include <string>

namespace synergid {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A configuration field failed validation. Carries the field name.
class InvalidConfigError : public Error {
public:
    InvalidConfigError(std::string field, const std::string& detail)
        : Error("invalid config field '" + field + "': " + detail), field_(std::move(field)) {}
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// Malformed input data. Carries the 1-based line number when known.
class FormatError : public Error {
public:
    FormatError(std::size_t line, const std::string& detail)
        : Error("format error at line " + std::to_string(line) + ": " + detail), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_ = 0;
};

class EmptyFileError : public Error {
public:
    using Error::Error;
};

class UnreachableError : public Error {
public:
    using Error::Error;
};

class EmptySeriesError : public Error {
public:
    using Error::Error;
};

class SiteMissingError : public Error {
public:
    explicit SiteMissingError(const std::string& site)
        : Error("required IMU site missing from trial: " + site) {}
};

class DegenerateTrialError : public Error {
public:
    using Error::Error;
};

class InsufficientDataError : public Error {
public:
    using Error::Error;
};

class DegenerateDesignError : public Error {
public:
    using Error::Error;
};

class NonFiniteCostError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace synergid
