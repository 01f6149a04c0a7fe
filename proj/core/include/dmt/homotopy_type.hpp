#ifndef DMT_HOMOTOPY_TYPE_HPP
#define DMT_HOMOTOPY_TYPE_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace dmt {

/// Unmatched-face counts per dimension of an acyclic matching.
struct critical_profile {
    std::map<int, long long> counts;

    long long total() const;
    long long at(int dim) const;

    friend bool operator==(const critical_profile&, const critical_profile&) = default;
};

std::string to_string(const critical_profile& p);

/// Point, a wedge of spheres, or inconclusive (carrying the profile that
/// failed to classify). wedge entries are (dimension, count), count >= 1;
/// dimension 0 means a wedge of 0-spheres (count+1 points).
class homotopy_type {
public:
    enum class kind { point, wedge_of_spheres, inconclusive };

    static homotopy_type point();
    static homotopy_type sphere(int dim);
    static homotopy_type wedge_of_spheres(std::vector<std::pair<int, long long>> summands);
    static homotopy_type inconclusive(critical_profile profile);

    kind classification() const { return kind_; }
    bool is_point() const { return kind_ == kind::point; }
    bool is_wedge() const { return kind_ == kind::wedge_of_spheres; }
    bool is_inconclusive() const { return kind_ == kind::inconclusive; }

    const std::vector<std::pair<int, long long>>& summands() const { return wedge_; }
    const critical_profile& profile() const { return profile_; }

    /// Conclusive homotopy types compare by value; inconclusive values agree
    /// with nothing (including each other).
    bool agrees_with(const homotopy_type& other) const;

    friend bool operator==(const homotopy_type&, const homotopy_type&) = default;

private:
    kind kind_ = kind::inconclusive;
    std::vector<std::pair<int, long long>> wedge_;
    critical_profile profile_;
};

/// "point", "S^2", "v^3 S^4", "inconclusive{0:1, 2:2}"
std::string to_string(const homotopy_type& h);

} // namespace dmt

#endif
