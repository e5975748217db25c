#pragma once

#include <stdexcept>
#include <string>

namespace intentsum {

// Precondition violations (bad n, empty corpus, gamma < 1, ...).
class InvalidArgument : public std::invalid_argument {
public:
    explicit InvalidArgument(const std::string& what) : std::invalid_argument(what) {}
};

// A metric has no defined value for the given input (e.g. FKGL of "").
class UndefinedMetric : public std::runtime_error {
public:
    explicit UndefinedMetric(const std::string& what) : std::runtime_error(what) {}
};

// Sampling from a degenerate distribution.
class DecodeFailure : public std::runtime_error {
public:
    explicit DecodeFailure(const std::string& what) : std::runtime_error(what) {}
};

// A next-token provider failed; message carries the decode step index.
class ProviderError : public std::runtime_error {
public:
    explicit ProviderError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input file (dataset line, model file, config).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Semantically invalid input (duplicate id, missing field, unmatched id).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace intentsum
