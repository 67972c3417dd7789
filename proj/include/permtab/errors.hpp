#pragma once

#include <stdexcept>
#include <string>

namespace permtab {

// A domain rule was violated (bad precondition, invalid object). The message
// names the rule and a witness position so callers can print it verbatim.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed text input; message carries line/column where applicable.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration or counting request exceeds the configured size guard.
class CapError : public std::runtime_error {
public:
    explicit CapError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace permtab
