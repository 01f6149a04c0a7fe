#ifndef DMT_HOMOLOGY_HPP
#define DMT_HOMOLOGY_HPP

#include <cstdint>
#include <vector>

#include "dmt/homotopy_type.hpp"
#include "dmt/simplicial_complex.hpp"

namespace dmt {

/// Simplicial boundary operator from k-faces to (k-1)-faces, columns indexed
/// by the canonical (lexicographic) face order. Entry for deleting the i-th
/// vertex of a sorted simplex carries sign (-1)^i.
struct boundary_matrix {
    int k = 0;
    std::vector<simplex> rows; // (k-1)-faces
    std::vector<simplex> cols; // k-faces
    /// column -> list of (row index, sign), row indices increasing
    std::vector<std::vector<std::pair<int, std::int8_t>>> entries;
};

boundary_matrix make_boundary_matrix(const simplicial_complex& K, int k);

/// Reduced integer Betti numbers b~_0..b~_dim plus per-dimension torsion
/// freeness, computed by exact Smith normal form.
struct betti_vector {
    std::vector<long long> reduced;
    std::vector<bool> torsion_free;

    long long at(int k) const;
    bool all_torsion_free() const;

    friend bool operator==(const betti_vector&, const betti_vector&) = default;
};

std::string to_string(const betti_vector& b);

betti_vector betti_numbers(const simplicial_complex& K);

/// Rank and invariant factors of an integer matrix, exact arithmetic.
/// Checked 64-bit arithmetic; overflow throws arithmetic_overflow rather
/// than returning wrong invariants.
struct snf_summary {
    long long rank = 0;
    std::vector<long long> invariant_factors; // positive, divisibility chain
};

snf_summary smith_normal_form(const boundary_matrix& B);

/// Homology-consistent classification: all reduced Betti numbers zero and
/// torsion-free means point; support in one dimension n with value k (and no
/// torsion anywhere) means a k-fold wedge of S^n; anything else inconclusive.
/// This is "homology consistent with", never a homotopy claim by itself.
homotopy_type classify_wedge(const betti_vector& b);

/// Alternating sum of face counts.
long long euler_characteristic(const simplicial_complex& K);

/// True iff whole looks like the suspension of half on reduced Betti data:
/// b~_i(whole) == b~_{i-1}(half) for all i >= 1 and b~_0(whole) == 0.
bool suspension_check(const betti_vector& whole, const betti_vector& half);

} // namespace dmt

#endif
