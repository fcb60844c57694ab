#ifndef XW_ERRORS_HPP
#define XW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace xw {

// Violated operation precondition (bad subset, negative diagonal, ...).
struct precondition_error : std::runtime_error {
    explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input (JSON schema, index strings, non-finite values).
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// A requested certificate does not exist; carries the closed-form margin.
struct unsatisfied_error : std::runtime_error {
    unsatisfied_error(const std::string& what, double margin)
        : std::runtime_error(what), margin(margin) {}
    double margin;
};

}  // namespace xw

#endif
