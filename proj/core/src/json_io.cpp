#include "dmt/json_io.hpp"

#include <iomanip>
#include <istream>
#include <sstream>

#include <json.hpp>

#include "dmt/errors.hpp"

namespace dmt {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json complex_json_value(const simplicial_complex& K) {
    ordered_json j;
    j["vertices"] = K.num_vertices();
    auto& facets = j["facets"] = ordered_json::array();
    for (const simplex& f : K.facets()) facets.push_back(f.vertices());
    if (!K.labels().empty()) {
        ordered_json labels = ordered_json::object();
        for (auto& [v, text] : K.labels()) labels[std::to_string(v)] = text;
        j["labels"] = std::move(labels);
    }
    return j;
}

ordered_json profile_json(const critical_profile& p) {
    ordered_json j = ordered_json::object();
    for (auto& [d, c] : p.counts)
        if (c != 0) j[std::to_string(d)] = c;
    return j;
}

ordered_json params_json(family_theorem th, const theorem_params& p) {
    ordered_json j = ordered_json::object();
    if (th == family_theorem::morse_extended_star ||
        th == family_theorem::matching_windmill) {
        j["n"] = p.n;
        j["m"] = p.m;
    } else {
        j["t"] = p.t;
    }
    return j;
}

} // namespace

std::string complex_to_json(const simplicial_complex& K) {
    return complex_json_value(K).dump(2) + "\n";
}

simplicial_complex complex_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("invalid complex JSON: ") + e.what());
    }
    if (!j.contains("vertices") || !j.contains("facets"))
        throw parse_error("complex JSON needs \"vertices\" and \"facets\"");
    int n = j["vertices"].get<int>();
    std::vector<simplex> facets;
    for (auto& arr : j["facets"]) {
        std::vector<vertex_id> vs;
        for (auto& v : arr) vs.push_back(v.get<int>());
        facets.push_back(simplex(std::move(vs)));
    }
    auto K = make_complex(std::move(facets), n);
    if (j.contains("labels")) {
        std::map<vertex_id, std::string> labels;
        for (auto& [key, val] : j["labels"].items())
            labels[std::stoi(key)] = val.get<std::string>();
        K.set_labels(std::move(labels));
    }
    return K;
}

simplicial_complex load_complex(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return complex_from_json(buf.str());
}

std::string labeled_complex_to_json(const labeled_complex& L) {
    ordered_json j = complex_json_value(L.complex);
    j["provenance"] = provenance_name(L.tag);
    ordered_json meaning = ordered_json::object();
    if (L.tag == provenance::matching) {
        for (std::size_t i = 0; i < L.edge_meaning.size(); ++i)
            meaning[std::to_string(i)] = "[" + std::to_string(L.edge_meaning[i][0]) +
                                         "," + std::to_string(L.edge_meaning[i][1]) +
                                         "]";
    } else {
        for (std::size_t i = 0; i < L.gvf_meaning.size(); ++i)
            meaning[std::to_string(i)] = to_string(L.gvf_meaning[i]);
    }
    j["meaning"] = std::move(meaning);
    return j.dump(2) + "\n";
}

std::string betti_report_json(const simplicial_complex& K, const betti_vector& b) {
    ordered_json j;
    j["reduced_betti"] = b.reduced;
    j["torsion_free"] = b.torsion_free;
    j["euler"] = euler_characteristic(K);
    j["classification"] = to_string(classify_wedge(b));
    return j.dump(2) + "\n";
}

std::string decomposition_report_json(const simplicial_complex& K,
                                      const cluster_decomposition& D,
                                      const union_matching_result& U,
                                      const homotopy_type& classification) {
    ordered_json j;
    auto& pieces = j["pieces"] = ordered_json::array();
    for (const auto& p : D.pieces) {
        ordered_json pj;
        pj["index"] = p.index;
        pj["faces"] = p.faces.size();
        pj["matched_pairs"] = p.matching.pairs.size();
        pieces.push_back(std::move(pj));
    }
    auto& crit = j["critical"] = ordered_json::array();
    for (const simplex& f : U.critical_faces) {
        ordered_json cj;
        cj["dim"] = f.dim();
        cj["face"] = to_string(f);
        std::string label;
        for (vertex_id v : f) {
            if (!label.empty()) label += " ";
            label += K.label_of(v);
        }
        cj["label"] = label;
        crit.push_back(std::move(cj));
    }
    j["profile"] = profile_json(U.profile);
    j["classification"] = to_string(classification);
    j["checks"]["partition"] = true;
    j["checks"]["prefix_closure"] = true;
    j["checks"]["acyclic"] = true;
    return j.dump(2) + "\n";
}

std::string verification_reports_json(const std::vector<verification_report>& reports) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : reports) {
        ordered_json j;
        j["schema"] = "dmt-report/1";
        j["theorem"] = theorem_name(r.theorem);
        j["params"] = params_json(r.theorem, r.params);
        if (r.skipped) {
            j["verdict"] = verdict_name(r.result);
            j["skip_reason"] = r.skip_reason;
            arr.push_back(std::move(j));
            continue;
        }
        j["expected"] = to_string(r.expected);
        j["engine_profile"] = profile_json(r.engine_profile);
        j["engine_classification"] = to_string(r.engine_classification);
        j["oracle_betti"] = r.oracle_betti.reduced;
        j["oracle_torsion_free"] = r.oracle_betti.torsion_free;
        j["oracle_classification"] = to_string(r.oracle_classification);
        ordered_json checks;
        checks["partition"] = r.checks.partition;
        checks["prefix_closure"] = r.checks.prefix_closure;
        checks["piece_matchings_acyclic"] = r.checks.piece_matchings_acyclic;
        checks["union_acyclic"] = r.checks.union_acyclic;
        checks["euler_consistent"] = r.checks.euler_consistent;
        checks["morse_inequalities"] = r.checks.morse_inequalities;
        j["checks"] = std::move(checks);
        j["verdict"] = verdict_name(r.result);
        ordered_json timings;
        timings["build"] = r.build_ms;
        timings["engine"] = r.engine_ms;
        timings["oracle"] = r.oracle_ms;
        j["timings_ms"] = std::move(timings);
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

std::string verification_reports_table(const std::vector<verification_report>& reports) {
    std::ostringstream os;
    os << std::left << std::setw(34) << "target" << std::setw(18) << "expected"
       << std::setw(18) << "engine" << std::setw(18) << "oracle"
       << "verdict" << '\n';
    for (const auto& r : reports) {
        os << std::left << std::setw(34) << to_string(r.theorem, r.params);
        if (r.skipped) {
            os << std::setw(18) << "-" << std::setw(18) << "-" << std::setw(18)
               << "-" << verdict_name(r.result) << " (" << r.skip_reason << ")\n";
            continue;
        }
        os << std::setw(18) << to_string(r.expected) << std::setw(18)
           << to_string(r.engine_classification) << std::setw(18)
           << to_string(r.oracle_classification) << verdict_name(r.result) << '\n';
    }
    return os.str();
}

} // namespace dmt
