#include "dmt/verify.hpp"

#include <chrono>

namespace dmt {

std::string verdict_name(verdict v) {
    switch (v) {
    case verdict::confirmed: return "CONFIRMED";
    case verdict::inconclusive_consistent: return "INCONCLUSIVE-CONSISTENT";
    case verdict::mismatch: return "MISMATCH";
    case verdict::skipped: return "SKIPPED";
    }
    return "?";
}

namespace {

long long now_ms() {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

} // namespace

verification_report run_verify_one(family_theorem th, const theorem_params& p,
                                   bool with_timings) {
    verification_report rep;
    rep.theorem = th;
    rep.params = p;
    if (!theorem_params_in_range(th, p)) {
        rep.skipped = true;
        rep.skip_reason = "parameters outside the theorem hypotheses";
        rep.result = verdict::skipped;
        return rep;
    }
    rep.expected = expected_homotopy(th, p);

    long long t0 = now_ms();
    family_run run = family_decomposition(th, p);
    long long t1 = now_ms();

    const simplicial_complex& K = run.complex.complex;
    union_matching_result um = union_matchings(K, run.decomposition);
    rep.engine_profile = um.profile;
    rep.engine_classification = forman_classify(um.profile);
    long long t2 = now_ms();

    rep.oracle_betti = betti_numbers(K);
    rep.oracle_classification = classify_wedge(rep.oracle_betti);
    long long t3 = now_ms();

    // union_matchings validated partition, prefix closure and acyclicity.
    rep.checks.partition = true;
    rep.checks.prefix_closure = true;
    rep.checks.piece_matchings_acyclic = true;
    rep.checks.union_acyclic = true;

    long long signed_sum = 0;
    for (auto& [d, c] : um.profile.counts) signed_sum += (d % 2 == 0 ? c : -c);
    rep.checks.euler_consistent = signed_sum == euler_characteristic(K);

    rep.checks.morse_inequalities = true;
    for (int i = 0; i < static_cast<int>(rep.oracle_betti.reduced.size()); ++i) {
        long long b = rep.oracle_betti.reduced[i] + (i == 0 ? 1 : 0);
        if (b > rep.engine_profile.at(i)) rep.checks.morse_inequalities = false;
    }

    const bool engine_ok = rep.engine_classification.agrees_with(rep.expected);
    const bool oracle_ok = rep.oracle_classification.agrees_with(rep.expected);
    if (engine_ok && oracle_ok && rep.checks.all())
        rep.result = verdict::confirmed;
    else if (oracle_ok && rep.engine_classification.is_inconclusive() &&
             rep.checks.all())
        rep.result = verdict::inconclusive_consistent;
    else
        rep.result = verdict::mismatch;

    if (with_timings) {
        rep.build_ms = t1 - t0;
        rep.engine_ms = t2 - t1;
        rep.oracle_ms = t3 - t2;
    }
    return rep;
}

std::vector<verification_report> run_verify(family_theorem th,
                                            const std::vector<theorem_params>& params,
                                            bool with_timings) {
    std::vector<verification_report> out;
    out.reserve(params.size());
    for (const auto& p : params) out.push_back(run_verify_one(th, p, with_timings));
    return out;
}

bool all_passed(const std::vector<verification_report>& reports) {
    for (const auto& r : reports)
        if (r.result == verdict::mismatch) return false;
    return true;
}

} // namespace dmt
