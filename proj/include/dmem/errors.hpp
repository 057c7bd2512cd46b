#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dmem {

// Base of every error raised by the library. The CLI maps these to exit 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// phi_f <= phi_l <= phi_c violated, or an instance arrives before the last one.
class OrderingError : public Error {
public:
    using Error::Error;
};

// Negative elapsed time handed to a decay function.
class TimeError : public Error {
public:
    using Error::Error;
};

class EmptyPrimary : public Error {
public:
    EmptyPrimary() : Error("sentence has no primary keyword") {}
};

class UnanswerableQuery : public Error {
public:
    explicit UnanswerableQuery(const std::string& question)
        : Error("no content keyword in question: " + question) {}
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class LoadError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

// Malformed input with a 1-based line number (0 when not line-oriented).
class ParseError : public Error {
public:
    ParseError(const std::string& source, std::size_t line, const std::string& what)
        : Error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace dmem
