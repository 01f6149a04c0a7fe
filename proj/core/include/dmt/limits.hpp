#ifndef DMT_LIMITS_HPP
#define DMT_LIMITS_HPP

#include <cstddef>

namespace dmt {

/// Hard cap on the number of faces any single complex may materialize.
/// Derived complexes grow combinatorially; constructions that would cross
/// the cap throw size_limit_exceeded instead of exhausting memory.
std::size_t max_faces();

/// Replaces the face budget. Returns the previous value.
std::size_t set_max_faces(std::size_t limit);

inline constexpr std::size_t default_max_faces = 5'000'000;

} // namespace dmt

#endif
