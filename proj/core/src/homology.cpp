#include "dmt/homology.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "dmt/errors.hpp"

namespace dmt {

namespace {

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r))
        throw arithmetic_overflow("integer overflow in Smith reduction");
    return r;
}

long long checked_sub(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r))
        throw arithmetic_overflow("integer overflow in Smith reduction");
    return r;
}

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r))
        throw arithmetic_overflow("integer overflow in Smith reduction");
    return r;
}

/// Sparse exact integer elimination by +-1 pivots, then a dense Smith pass
/// on whatever remains. Boundary matrices almost always reduce fully in the
/// sparse phase; the dense tail keeps the result exact when they do not.
class sparse_smith {
public:
    sparse_smith(int rows, int cols) : row_cols_(rows), cols_(cols) {}

    void set(int r, int c, long long v) {
        if (v == 0) return;
        cols_[c][r] = v;
        row_cols_[r].insert(c);
        if (v == 1 || v == -1) units_.insert({score(r, c), r, c});
    }

    snf_summary run() {
        eliminate_units();
        snf_summary out;
        out.rank = unit_pivots_;
        out.invariant_factors.assign(static_cast<std::size_t>(unit_pivots_), 1);
        dense_tail(out);
        return out;
    }

private:
    using key = std::tuple<long long, int, int>;

    std::vector<std::unordered_set<int>> row_cols_;
    std::vector<std::unordered_map<int, long long>> cols_;
    std::set<key> units_;
    std::vector<bool> row_dead_ = std::vector<bool>(row_cols_.size(), false);
    std::vector<bool> col_dead_ = std::vector<bool>(cols_.size(), false);
    long long unit_pivots_ = 0;

    long long score(int r, int c) const {
        return static_cast<long long>(row_cols_[r].size() - 1) *
               static_cast<long long>(cols_[c].size() - 1);
    }

    long long value_at(int r, int c) const {
        auto it = cols_[c].find(r);
        return it == cols_[c].end() ? 0 : it->second;
    }

    void update(int r, int c, long long v) {
        auto it = cols_[c].find(r);
        if (v == 0) {
            if (it != cols_[c].end()) {
                cols_[c].erase(it);
                row_cols_[r].erase(c);
            }
            return;
        }
        if (it == cols_[c].end()) {
            cols_[c][r] = v;
            row_cols_[r].insert(c);
        } else {
            it->second = v;
        }
        if (v == 1 || v == -1) units_.insert({score(r, c), r, c});
    }

    void eliminate_units() {
        while (!units_.empty()) {
            auto [sc, r, c] = *units_.begin();
            units_.erase(units_.begin());
            if (row_dead_[r] || col_dead_[c]) continue;
            long long v = value_at(r, c);
            if (v != 1 && v != -1) continue;
            if (score(r, c) != sc) { // stale score; requeue with the fresh one
                units_.insert({score(r, c), r, c});
                continue;
            }

            std::vector<int> other_cols(row_cols_[r].begin(), row_cols_[r].end());
            std::vector<std::pair<int, long long>> pivot_col(cols_[c].begin(),
                                                             cols_[c].end());
            for (int c2 : other_cols) {
                if (c2 == c) continue;
                long long factor = checked_mul(value_at(r, c2), v);
                for (auto& [s, w] : pivot_col) {
                    if (s == r) continue;
                    update(s, c2, checked_sub(value_at(s, c2), checked_mul(factor, w)));
                }
                update(r, c2, 0);
            }
            // Retire the pivot row and column.
            for (auto& [s, w] : pivot_col) {
                (void)w;
                row_cols_[s].erase(c);
            }
            cols_[c].clear();
            row_cols_[r].clear();
            row_dead_[r] = true;
            col_dead_[c] = true;
            ++unit_pivots_;
        }
    }

    void dense_tail(snf_summary& out) {
        std::vector<int> live_rows, live_cols;
        for (std::size_t r = 0; r < row_cols_.size(); ++r)
            if (!row_dead_[r] && !row_cols_[r].empty())
                live_rows.push_back(static_cast<int>(r));
        for (std::size_t c = 0; c < cols_.size(); ++c)
            if (!col_dead_[c] && !cols_[c].empty())
                live_cols.push_back(static_cast<int>(c));
        if (live_rows.empty() || live_cols.empty()) return;

        const int m = static_cast<int>(live_rows.size());
        const int n = static_cast<int>(live_cols.size());
        std::vector<std::vector<long long>> a(m, std::vector<long long>(n, 0));
        std::unordered_map<int, int> rindex;
        for (int i = 0; i < m; ++i) rindex[live_rows[i]] = i;
        for (int j = 0; j < n; ++j)
            for (auto& [r, v] : cols_[live_cols[j]]) a[rindex.at(r)][j] = v;

        // Classic dense Smith normal form, values checked.
        int t = std::min(m, n);
        for (int i = 0; i < t; ++i) {
            while (true) {
                int pr = -1, pc = -1;
                long long best = 0;
                for (int r = i; r < m; ++r)
                    for (int c = i; c < n; ++c) {
                        long long v = std::llabs(a[r][c]);
                        if (v != 0 && (best == 0 || v < best)) {
                            best = v;
                            pr = r;
                            pc = c;
                        }
                    }
                if (pr < 0) break; // submatrix is zero
                std::swap(a[i], a[pr]);
                for (int r = 0; r < m; ++r) std::swap(a[r][i], a[r][pc]);

                bool reduced = true;
                for (int r = i + 1; r < m; ++r) {
                    if (a[r][i] == 0) continue;
                    long long q = a[r][i] / a[i][i];
                    if (q != 0)
                        for (int c = i; c < n; ++c)
                            a[r][c] = checked_sub(a[r][c], checked_mul(q, a[i][c]));
                    if (a[r][i] != 0) reduced = false;
                }
                for (int c = i + 1; c < n; ++c) {
                    if (a[i][c] == 0) continue;
                    long long q = a[i][c] / a[i][i];
                    if (q != 0)
                        for (int r = i; r < m; ++r)
                            a[r][c] = checked_sub(a[r][c], checked_mul(q, a[r][i]));
                    if (a[i][c] != 0) reduced = false;
                }
                if (!reduced) continue;

                bool lone = true;
                for (int r = i + 1; r < m && lone; ++r)
                    if (a[r][i] != 0) lone = false;
                for (int c = i + 1; c < n && lone; ++c)
                    if (a[i][c] != 0) lone = false;
                if (!lone) continue;

                // Divisibility: every remaining entry must be a multiple.
                int br = -1, bc = -1;
                for (int r = i + 1; r < m && br < 0; ++r)
                    for (int c = i + 1; c < n; ++c)
                        if (a[r][c] % a[i][i] != 0) {
                            br = r;
                            bc = c;
                            break;
                        }
                if (br < 0) break;
                for (int c = i; c < n; ++c)
                    a[i][c] = checked_add(a[i][c], a[br][c]);
                (void)bc;
            }
            if (a[i][i] != 0) {
                out.invariant_factors.push_back(std::llabs(a[i][i]));
                out.rank++;
            }
        }
    }
};

} // namespace

boundary_matrix make_boundary_matrix(const simplicial_complex& K, int k) {
    if (k < 1 || k > K.dim())
        throw out_of_range_parameter("boundary dimension out of range: " +
                                     std::to_string(k));
    boundary_matrix B;
    B.k = k;
    B.rows = K.faces(k - 1);
    B.cols = K.faces(k);
    std::unordered_map<simplex, int, simplex_hash> row_index;
    for (std::size_t i = 0; i < B.rows.size(); ++i)
        row_index.emplace(B.rows[i], static_cast<int>(i));
    B.entries.resize(B.cols.size());
    for (std::size_t j = 0; j < B.cols.size(); ++j) {
        const simplex& f = B.cols[j];
        for (std::size_t i = 0; i < f.size(); ++i) {
            std::int8_t sign = (i % 2 == 0) ? 1 : -1;
            B.entries[j].push_back({row_index.at(f.facet_dropping(i)), sign});
        }
        std::sort(B.entries[j].begin(), B.entries[j].end());
    }
    return B;
}

snf_summary smith_normal_form(const boundary_matrix& B) {
    sparse_smith s(static_cast<int>(B.rows.size()), static_cast<int>(B.cols.size()));
    for (std::size_t j = 0; j < B.cols.size(); ++j)
        for (auto& [r, sign] : B.entries[j])
            s.set(r, static_cast<int>(j), sign);
    return s.run();
}

long long betti_vector::at(int k) const {
    if (k < 0 || k >= static_cast<int>(reduced.size())) return 0;
    return reduced[k];
}

bool betti_vector::all_torsion_free() const {
    for (bool t : torsion_free)
        if (!t) return false;
    return true;
}

std::string to_string(const betti_vector& b) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < b.reduced.size(); ++i) {
        if (i) os << ',';
        os << b.reduced[i];
    }
    os << ')';
    return os.str();
}

betti_vector betti_numbers(const simplicial_complex& K) {
    if (K.num_faces() == 0) throw invalid_complex("betti_numbers of empty complex");
    const int d = K.dim();
    std::vector<long long> rank(d + 2, 0);
    std::vector<bool> tf(d + 1, true);
    for (int k = 1; k <= d; ++k) {
        snf_summary s = smith_normal_form(make_boundary_matrix(K, k));
        rank[k] = s.rank;
        for (long long f : s.invariant_factors)
            if (f != 1) tf[k - 1] = false; // torsion lives in H_{k-1}
    }
    betti_vector b;
    b.reduced.resize(d + 1);
    b.torsion_free = std::move(tf);
    for (int k = 0; k <= d; ++k) {
        long long fk = static_cast<long long>(K.faces(k).size());
        b.reduced[k] = fk - rank[k] - rank[k + 1];
    }
    b.reduced[0] -= 1; // reduced convention
    return b;
}

homotopy_type classify_wedge(const betti_vector& b) {
    critical_profile as_profile;
    for (std::size_t i = 0; i < b.reduced.size(); ++i)
        if (b.reduced[i] != 0) as_profile.counts[static_cast<int>(i)] = b.reduced[i];

    if (!b.all_torsion_free()) return homotopy_type::inconclusive(as_profile);
    std::vector<std::pair<int, long long>> support;
    for (auto& [d, c] : as_profile.counts) support.push_back({d, c});
    if (support.empty()) return homotopy_type::point();
    if (support.size() == 1 && support[0].second > 0)
        return homotopy_type::wedge_of_spheres({support[0]});
    return homotopy_type::inconclusive(as_profile);
}

long long euler_characteristic(const simplicial_complex& K) {
    long long chi = 0;
    for (int k = 0; k <= K.dim(); ++k)
        chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(K.faces(k).size());
    return chi;
}

bool suspension_check(const betti_vector& whole, const betti_vector& half) {
    if (whole.at(0) != 0) return false;
    int top = std::max(static_cast<int>(whole.reduced.size()),
                       static_cast<int>(half.reduced.size()) + 1);
    for (int i = 1; i <= top; ++i)
        if (whole.at(i) != half.at(i - 1)) return false;
    return true;
}

} // namespace dmt
