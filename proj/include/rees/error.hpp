#pragma once

/**
 * @file error.hpp
 * @brief Error kinds raised by the rees library.
 *
 * Every domain failure is an `rees::error` carrying a machine-readable kind,
 * so the CLI can emit structured error objects instead of bare messages.
 */

#include <stdexcept>
#include <string>
#include <string_view>

namespace rees {

enum class error_kind {
    not_numerical,       // generators with gcd != 1
    invalid_argument,
    context_error,       // operands from different families, or wrong (a, b)
    not_a_unit,
    not_regular,
    not_a_factorization,
    not_comaximal,
    no_proper_canonical,
    precision_exceeded,
    unsupported,
    parse_error,
    overflow,
};

constexpr std::string_view to_string(error_kind k) {
    switch (k) {
    case error_kind::not_numerical: return "NotNumerical";
    case error_kind::invalid_argument: return "InvalidArgument";
    case error_kind::context_error: return "ContextError";
    case error_kind::not_a_unit: return "NotAUnit";
    case error_kind::not_regular: return "NotRegular";
    case error_kind::not_a_factorization: return "NotAFactorization";
    case error_kind::not_comaximal: return "NotComaximal";
    case error_kind::no_proper_canonical: return "NoProperCanonical";
    case error_kind::precision_exceeded: return "PrecisionExceeded";
    case error_kind::unsupported: return "Unsupported";
    case error_kind::parse_error: return "ParseError";
    case error_kind::overflow: return "Overflow";
    }
    return "Unknown";
}

class error : public std::runtime_error {
public:
    error(error_kind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    error_kind kind() const noexcept { return kind_; }

private:
    error_kind kind_;
};

[[noreturn]] inline void fail(error_kind kind, const std::string& what) {
    throw error(kind, what);
}

} // namespace rees
