#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace pierce {

enum class Errc {
    bad_params,
    bad_sequence,
    empty_region,
    unbounded_region,
    not_compact,
    not_disjoint,
    no_witness,
    invalid_input,
    no_escape_proof,
    budget_exceeded,
    parse_error,
    duplicate_label,
    hypothesis_violated,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::bad_params: return "BAD_PARAMS";
        case Errc::bad_sequence: return "BAD_SEQUENCE";
        case Errc::empty_region: return "EMPTY_REGION";
        case Errc::unbounded_region: return "UNBOUNDED_REGION";
        case Errc::not_compact: return "NOT_COMPACT";
        case Errc::not_disjoint: return "NOT_DISJOINT";
        case Errc::no_witness: return "NO_WITNESS";
        case Errc::invalid_input: return "INVALID_INPUT";
        case Errc::no_escape_proof: return "NO_ESCAPE_PROOF";
        case Errc::budget_exceeded: return "BUDGET_EXCEEDED";
        case Errc::parse_error: return "PARSE_ERROR";
        case Errc::duplicate_label: return "DUPLICATE_LABEL";
        case Errc::hypothesis_violated: return "HYPOTHESIS_VIOLATED";
    }
    return "UNKNOWN";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& detail)
        : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

    Error(Errc code, const std::string& detail, int line)
        : std::runtime_error(std::string(errc_name(code)) + " at line " + std::to_string(line) +
                             ": " + detail),
          code_(code),
          line_(line) {}

    Errc code() const noexcept { return code_; }
    std::optional<int> line() const noexcept { return line_; }

private:
    Errc code_;
    std::optional<int> line_;
};

} // namespace pierce
