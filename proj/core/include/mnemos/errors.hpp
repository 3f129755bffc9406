#pragma once

#include <stdexcept>
#include <string>

namespace mnemos {

// Error taxonomy shared by every module. The CLI maps these onto exit
// codes (input errors -> 2, provider errors -> 3).
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& msg) : Error(msg) {}
};

class NotFound : public Error {
public:
    explicit NotFound(const std::string& msg) : Error(msg) {}
};

class Conflict : public Error {
public:
    explicit Conflict(const std::string& msg) : Error(msg) {}
};

class StoreLocked : public Error {
public:
    explicit StoreLocked(const std::string& msg) : Error(msg) {}
};

// Transport/timeout/malformed-reply failures from chat or embedding
// providers, raised after the configured retries are exhausted.
class ProviderFailure : public Error {
public:
    explicit ProviderFailure(const std::string& msg) : Error(msg) {}
};

// Structured-input parse failure with a 1-based line diagnostic.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, size_t line)
        : Error(msg + " (line " + std::to_string(line) + ")"), line_(line) {}
    size_t line() const { return line_; }

private:
    size_t line_;
};

}  // namespace mnemos
