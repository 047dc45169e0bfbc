#pragma once

#include <stdexcept>
#include <string>

namespace holo {

/// Malformed input (bad file, bad flag value). CLI exit code 2.
class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A mathematical precondition does not hold (non-prime modulus, singular
/// branch, all-zero polynomial list, ...). CLI exit code 3.
class precondition_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Root certification or interval certification ran out of budget.
class certification_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A claimed bound was found violated on a concrete instance. CLI exit code 4.
class bound_violation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace holo
