#ifndef DMT_VERIFY_HPP
#define DMT_VERIFY_HPP

#include <string>
#include <vector>

#include "dmt/family_theorems.hpp"
#include "dmt/homology.hpp"

namespace dmt {

enum class verdict { confirmed, inconclusive_consistent, mismatch, skipped };

std::string verdict_name(verdict v);

/// Structural checks accompanying every verification run (Cluster-Lemma
/// integrity plus the Morse-theoretic consistency conditions).
struct integrity_checks {
    bool partition = false;
    bool prefix_closure = false;
    bool piece_matchings_acyclic = false;
    bool union_acyclic = false;
    bool euler_consistent = false;       // sum (-1)^i m_i == chi
    bool morse_inequalities = false;     // b_i <= m_i (m_0 includes the vertex)

    bool all() const {
        return partition && prefix_closure && piece_matchings_acyclic &&
               union_acyclic && euler_consistent && morse_inequalities;
    }
};

struct verification_report {
    family_theorem theorem{};
    theorem_params params;
    bool skipped = false;
    std::string skip_reason;

    homotopy_type expected;
    critical_profile engine_profile;
    homotopy_type engine_classification;
    betti_vector oracle_betti;
    homotopy_type oracle_classification;
    integrity_checks checks;
    verdict result = verdict::skipped;

    long long build_ms = 0;
    long long engine_ms = 0;
    long long oracle_ms = 0;
};

/// Runs one theorem instance end to end: build complex, run the
/// decomposition engine, run the homology oracle, compare all three against
/// the formula. Out-of-range parameters yield a skipped report.
verification_report run_verify_one(family_theorem th, const theorem_params& p,
                                   bool with_timings = false);

/// One report per parameter tuple, in input order.
std::vector<verification_report> run_verify(family_theorem th,
                                            const std::vector<theorem_params>& params,
                                            bool with_timings = false);

/// True iff no report is a mismatch (skips and inconclusive-consistent pass).
bool all_passed(const std::vector<verification_report>& reports);

} // namespace dmt

#endif
