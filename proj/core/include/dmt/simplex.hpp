#ifndef DMT_SIMPLEX_HPP
#define DMT_SIMPLEX_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "dmt/errors.hpp"

namespace dmt {

/// Dense non-negative vertex index within a complex.
using vertex_id = int;

/// A simplex stored as its strictly increasing vertex sequence.
/// The default-constructed value is the empty simplex (dimension -1);
/// complexes never store it, but toggle arithmetic may produce it.
class simplex {
public:
    simplex() = default;

    /// Sorts and validates: ids non-negative, no duplicates.
    explicit simplex(std::vector<vertex_id> vertices);

    /// Trusted fast path; `vertices` must already be strictly increasing.
    static simplex from_sorted(std::vector<vertex_id> vertices);

    int dim() const { return static_cast<int>(v_.size()) - 1; }
    std::size_t size() const { return v_.size(); }
    bool empty() const { return v_.empty(); }

    const std::vector<vertex_id>& vertices() const { return v_; }
    vertex_id operator[](std::size_t i) const { return v_[i]; }

    bool contains(vertex_id v) const;
    bool contains_all(const simplex& other) const;

    /// Copy with `v` inserted (no-op if already present).
    simplex with(vertex_id v) const;
    /// Copy with `v` removed (no-op if absent); may be empty.
    simplex without(vertex_id v) const;
    /// Copy with the i-th vertex deleted.
    simplex facet_dropping(std::size_t i) const;

    auto begin() const { return v_.begin(); }
    auto end() const { return v_.end(); }

    friend auto operator<=>(const simplex&, const simplex&) = default;

private:
    std::vector<vertex_id> v_;
};

std::string to_string(const simplex& s);

struct simplex_hash {
    std::size_t operator()(const simplex& s) const noexcept;
};

} // namespace dmt

#endif
