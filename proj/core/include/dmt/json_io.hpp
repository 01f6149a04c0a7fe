#ifndef DMT_JSON_IO_HPP
#define DMT_JSON_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "dmt/cluster.hpp"
#include "dmt/derived_complexes.hpp"
#include "dmt/homology.hpp"
#include "dmt/verify.hpp"

namespace dmt {

/// Interchange format for all CLI commands:
///   {"vertices": N, "facets": [[i,j,...], ...], "labels": {"0": "text"}}
/// Facet arrays strictly increasing, facets sorted; labels optional.
std::string complex_to_json(const simplicial_complex& K);
simplicial_complex complex_from_json(const std::string& text);
simplicial_complex load_complex(std::istream& in);

/// Complex JSON extended with "provenance" and a "meaning" table mapping
/// vertex ids to "(u)v" or "[u,w]" strings.
std::string labeled_complex_to_json(const labeled_complex& L);

/// {"reduced_betti": [...], "torsion_free": [...], "euler": n,
///  "classification": "..."}
std::string betti_report_json(const simplicial_complex& K,
                              const betti_vector& b);

/// Per-piece face/matched counts, critical faces with printed labels, the
/// global profile, classification and verification verdicts. Field order is
/// fixed for snapshot testing.
std::string decomposition_report_json(const simplicial_complex& K,
                                      const cluster_decomposition& D,
                                      const union_matching_result& U,
                                      const homotopy_type& classification);

/// Versioned verification-report schema ("dmt-report/1").
std::string verification_reports_json(const std::vector<verification_report>& reports);
std::string verification_reports_table(const std::vector<verification_report>& reports);

} // namespace dmt

#endif
