#ifndef DMT_COLLAPSE_HPP
#define DMT_COLLAPSE_HPP

#include <utility>
#include <vector>

#include "dmt/simplicial_complex.hpp"

namespace dmt {

/// Tie-break rule for picking the next free face. Only one rule is defined:
/// lexicographically smallest free face (the coface is then unique).
enum class tie_break { lexicographic };

struct collapse_sequence {
    /// Removed (free face, unique coface) pairs in removal order.
    std::vector<std::pair<simplex, simplex>> steps;
    simplicial_complex residual;

    bool collapsed_to_point() const { return residual.is_point(); }
};

/// Repeatedly removes a free pair until none exists. A single-vertex residual
/// certifies collapsibility; a larger residual proves nothing (greedy collapse
/// is incomplete).
collapse_sequence greedy_collapse(const simplicial_complex& K,
                                  tie_break rule = tie_break::lexicographic);

} // namespace dmt

#endif
