#ifndef LOSDOF_ERRORS_HPP
#define LOSDOF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace losdof {

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class invalid_geometry_error : public error {
public:
    using error::error;
};

class invalid_sampling_error : public error {
public:
    using error::error;
};

class invalid_parameter_error : public error {
public:
    using error::error;
};

class dimension_mismatch_error : public error {
public:
    using error::error;
};

class singular_kernel_error : public error {
public:
    using error::error;
};

class undefined_agreement_error : public error {
public:
    using error::error;
};

class numerical_failure_error : public error {
public:
    using error::error;
};

/// Thrown when a paraxial kernel is requested outside its validity region.
/// Carries the computed margin so callers can report how far off the
/// geometry is.
class paraxial_violation_error : public error {
public:
    paraxial_violation_error(const std::string& msg, double margin)
        : error(msg), margin_(margin) {}
    double margin() const { return margin_; }

private:
    double margin_;
};

/// Scenario-file parse or validation failure; carries the offending line
/// (0 if not line-specific) and the field name (empty if not field-specific).
class config_error : public error {
public:
    config_error(const std::string& msg, int line = 0, std::string field = "")
        : error(msg), line_(line), field_(std::move(field)) {}
    int line() const { return line_; }
    const std::string& field() const { return field_; }

private:
    int line_;
    std::string field_;
};

} // namespace losdof

#endif
