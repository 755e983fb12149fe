#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace xsb {

// Base of every error raised by the checker.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An operation was called outside its domain (zero frequency, theta outside
// [0,1], empty meet, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// A reduction or tactic refused to fire because its side conditions fail.
class Rejected : public Error {
public:
    using Error::Error;
};

// Transfer of a modulation index between X+ and X- spaces.
class SignMismatch : public Rejected {
public:
    using Rejected::Rejected;
};

// A file could not be read.
class IoError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, std::string message,
               std::vector<std::string> expected = {});

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::string& detail() const { return detail_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string detail_;
    std::vector<std::string> expected_;
};

} // namespace xsb
