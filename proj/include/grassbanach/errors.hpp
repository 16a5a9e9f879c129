#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace grassbanach {

/// Base class for all errors thrown by this library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two values from different fields / coefficient algebras were combined.
class descriptor_mismatch : public error {
public:
    descriptor_mismatch() : error("operands belong to different coefficient algebras") {}
    using error::error;
};

/// Multiplicative inverse of the zero scalar was requested.
class division_by_zero : public error {
public:
    division_by_zero() : error("division by zero") {}
};

/// Malformed textual input; carries the byte offset of the failure.
class parse_error : public error {
public:
    parse_error(std::size_t offset, const std::string& what)
        : error("parse error at offset " + std::to_string(offset) + ": " + what),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// An ordering function was asked to order the empty set.
class empty_set : public error {
public:
    empty_set() : error("ordering function is undefined on the empty set") {}
    using error::error;
};

/// Two label sequences that should be permutations of each other are not.
class label_mismatch : public error {
public:
    label_mismatch() : error("sequences are not permutations of the same label set") {}
    using error::error;
};

/// Inversion of an element whose body vanishes.
class not_invertible : public error {
public:
    not_invertible() : error("not invertible: body is zero") {}
    using error::error;
};

/// An operation that requires a nonzero element received zero.
class zero_element : public error {
public:
    zero_element() : error("operation undefined on the zero element") {}
};

/// A relabeling map collided on labels occurring in the element.
class not_injective : public error {
public:
    not_injective() : error("relabeling map is not injective on the occurring labels") {}
};

/// A sup-norm algebra was requested over an Archimedean coefficient field.
class not_ultrametric : public error {
public:
    not_ultrametric()
        : error("sup-norm algebra requires a non-Archimedean coefficient field") {}
};

/// Tensor operands with different norm modes were combined.
class mode_mismatch : public error {
public:
    mode_mismatch() : error("tensor operands have different norm modes") {}
};

/// A field or algebra descriptor violates its invariants.
class invalid_descriptor : public error {
public:
    using error::error;
};

/// An ordering table violates the permutation requirement.
class invalid_ordering : public error {
public:
    using error::error;
};

/// Session-level misuse (bad configuration, values used outside their domain).
class config_error : public error {
public:
    using error::error;
};

/// An internal invariant was violated; indicates a bug in the library.
class internal_error : public error {
public:
    using error::error;
};

}  // namespace grassbanach
