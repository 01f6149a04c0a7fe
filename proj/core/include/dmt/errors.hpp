#ifndef DMT_ERRORS_HPP
#define DMT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dmt {

/// Base class for all errors thrown by the library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct invalid_simplex : error {
    using error::error;
};

struct invalid_complex : error {
    using error::error;
};

/// A simplex was required to be a face of a complex and is not.
struct face_not_found : error {
    using error::error;
};

/// A construction would exceed the configured face budget.
struct size_limit_exceeded : error {
    using error::error;
};

/// A family or theorem parameter is outside its admissible range.
struct out_of_range_parameter : error {
    using error::error;
};

/// Toggling the cone apex on a piece face lands outside the piece.
struct toggle_escapes_piece : error {
    using error::error;
};

/// A cluster decomposition fails the partition or prefix-closure checks.
struct partition_violation : error {
    using error::error;
};

/// The union of piece matchings is cyclic; indicates an engine bug.
struct global_acyclicity_failure : error {
    using error::error;
};

/// An internal cross-check (e.g. a claimed isomorphism) did not verify.
struct verification_failure : error {
    using error::error;
};

/// Checked integer arithmetic overflowed; results would be unreliable.
struct arithmetic_overflow : error {
    using error::error;
};

struct parse_error : error {
    using error::error;
};

} // namespace dmt

#endif
