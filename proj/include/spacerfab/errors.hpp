#ifndef SPACERFAB_ERRORS_HPP
#define SPACERFAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace spacerfab {

// Input outside the mathematical domain of a relation (non-positive gauge,
// shrink factor of 1 where a ratio needs shrink, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A named parameter failed validation. what() reads "<param>: <reason>".
class ParameterError : public std::invalid_argument {
public:
    ParameterError(std::string param, const std::string& reason)
        : std::invalid_argument(param + ": " + reason),
          param_(std::move(param)),
          reason_(reason) {}

    const std::string& param() const noexcept { return param_; }
    const std::string& reason() const noexcept { return reason_; }

private:
    std::string param_;
    std::string reason_;
};

// Structurally invalid polyline or mesh input.
class GeometryError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Scene / spec document does not match the schema. path() names the
// offending location, e.g. "computed.b_actual" or "yarns[3].points".
class ParseError : public std::runtime_error {
public:
    ParseError(std::string path, const std::string& reason)
        : std::runtime_error(path + ": " + reason), path_(std::move(path)) {}

    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

}  // namespace spacerfab

#endif  // SPACERFAB_ERRORS_HPP
