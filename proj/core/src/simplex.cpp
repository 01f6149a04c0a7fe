#include "dmt/simplex.hpp"

#include <algorithm>
#include <sstream>

namespace dmt {

simplex::simplex(std::vector<vertex_id> vertices) : v_(std::move(vertices)) {
    std::sort(v_.begin(), v_.end());
    if (!v_.empty() && v_.front() < 0)
        throw invalid_simplex("simplex has a negative vertex id");
    if (std::adjacent_find(v_.begin(), v_.end()) != v_.end())
        throw invalid_simplex("simplex has duplicate vertices: " + to_string(*this));
}

simplex simplex::from_sorted(std::vector<vertex_id> vertices) {
    simplex s;
    s.v_ = std::move(vertices);
    return s;
}

bool simplex::contains(vertex_id v) const {
    return std::binary_search(v_.begin(), v_.end(), v);
}

bool simplex::contains_all(const simplex& other) const {
    return std::includes(v_.begin(), v_.end(), other.v_.begin(), other.v_.end());
}

simplex simplex::with(vertex_id v) const {
    if (contains(v)) return *this;
    std::vector<vertex_id> out;
    out.reserve(v_.size() + 1);
    auto it = std::lower_bound(v_.begin(), v_.end(), v);
    out.insert(out.end(), v_.begin(), it);
    out.push_back(v);
    out.insert(out.end(), it, v_.end());
    return from_sorted(std::move(out));
}

simplex simplex::without(vertex_id v) const {
    if (!contains(v)) return *this;
    std::vector<vertex_id> out;
    out.reserve(v_.size() - 1);
    for (vertex_id u : v_)
        if (u != v) out.push_back(u);
    return from_sorted(std::move(out));
}

simplex simplex::facet_dropping(std::size_t i) const {
    std::vector<vertex_id> out;
    out.reserve(v_.size() - 1);
    for (std::size_t j = 0; j < v_.size(); ++j)
        if (j != i) out.push_back(v_[j]);
    return from_sorted(std::move(out));
}

std::string to_string(const simplex& s) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) os << ',';
        os << s[i];
    }
    os << '}';
    return os.str();
}

std::size_t simplex_hash::operator()(const simplex& s) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (vertex_id v : s) {
        h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace dmt
