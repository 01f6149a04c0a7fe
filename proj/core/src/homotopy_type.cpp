#include "dmt/homotopy_type.hpp"

#include <algorithm>
#include <sstream>

#include "dmt/errors.hpp"

namespace dmt {

long long critical_profile::total() const {
    long long t = 0;
    for (auto& [d, c] : counts) t += c;
    return t;
}

long long critical_profile::at(int dim) const {
    auto it = counts.find(dim);
    return it == counts.end() ? 0 : it->second;
}

std::string to_string(const critical_profile& p) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (auto& [d, c] : p.counts) {
        if (c == 0) continue;
        if (!first) os << ", ";
        first = false;
        os << d << ':' << c;
    }
    os << '}';
    return os.str();
}

homotopy_type homotopy_type::point() {
    homotopy_type h;
    h.kind_ = kind::point;
    return h;
}

homotopy_type homotopy_type::sphere(int dim) {
    return wedge_of_spheres({{dim, 1}});
}

homotopy_type homotopy_type::wedge_of_spheres(
    std::vector<std::pair<int, long long>> summands) {
    for (auto& [d, c] : summands)
        if (d < 0 || c < 1)
            throw error("wedge summands need dimension >= 0 and count >= 1");
    std::sort(summands.begin(), summands.end());
    homotopy_type h;
    h.kind_ = kind::wedge_of_spheres;
    h.wedge_ = std::move(summands);
    return h;
}

homotopy_type homotopy_type::inconclusive(critical_profile profile) {
    homotopy_type h;
    h.kind_ = kind::inconclusive;
    h.profile_ = std::move(profile);
    return h;
}

bool homotopy_type::agrees_with(const homotopy_type& other) const {
    if (is_inconclusive() || other.is_inconclusive()) return false;
    return kind_ == other.kind_ && wedge_ == other.wedge_;
}

std::string to_string(const homotopy_type& h) {
    switch (h.classification()) {
    case homotopy_type::kind::point:
        return "point";
    case homotopy_type::kind::wedge_of_spheres: {
        std::ostringstream os;
        bool first = true;
        for (auto& [d, c] : h.summands()) {
            if (!first) os << " v ";
            first = false;
            if (c == 1)
                os << "S^" << d;
            else
                os << "v^" << c << " S^" << d;
        }
        return os.str();
    }
    case homotopy_type::kind::inconclusive:
        return "inconclusive" + to_string(h.profile());
    }
    return "?";
}

} // namespace dmt
