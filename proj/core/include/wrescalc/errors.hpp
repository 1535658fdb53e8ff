// Exception types shared by all wrescalc components.
#pragma once

#include <stdexcept>
#include <string>

namespace wrescalc {

struct RegistryMismatchError : std::runtime_error {
    explicit RegistryMismatchError(const std::string& what) : std::runtime_error(what) {}
};

struct UnboundSymbolError : std::runtime_error {
    explicit UnboundSymbolError(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatchError : std::runtime_error {
    explicit DimensionMismatchError(const std::string& what) : std::runtime_error(what) {}
};

struct TermLimitError : std::runtime_error {
    explicit TermLimitError(const std::string& what) : std::runtime_error(what) {}
};

// pi_plus / pi_prime applied to a rational function that does not decay.
struct NotDecayingError : std::runtime_error {
    explicit NotDecayingError(const std::string& what) : std::runtime_error(what) {}
};

// integrate_line applied to a term with num degree > pole order - 2.
struct DivergentIntegralError : std::runtime_error {
    explicit DivergentIntegralError(const std::string& what) : std::runtime_error(what) {}
};

struct IllFormedIntegrandError : std::runtime_error {
    explicit IllFormedIntegrandError(const std::string& what) : std::runtime_error(what) {}
};

struct UnsupportedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidDataError : std::runtime_error {
    explicit InvalidDataError(const std::string& what) : std::runtime_error(what) {}
};

// DSL front end: syntax or type error with a source offset.
struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what), offset(offset) {}
    std::size_t offset;
};

}  // namespace wrescalc
