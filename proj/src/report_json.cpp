#include "turan/report_json.hpp"

#include <bit>
#include <sstream>

namespace turan {

ordered_json json_count(const Count& c) {
    if (c.fits_uint64()) {
        std::uint64_t v = c.as_uint64();
        if (v <= (1ull << 53)) return v;
    }
    return c.str();
}

ordered_json report_shell(const std::string& command, ordered_json parameters, bool with_timings,
                          double wall_ms) {
    ordered_json manifest;
    manifest["command"] = command;
    manifest["parameters"] = std::move(parameters);
    manifest["version"] = kToolVersion;
    if (with_timings) manifest["wallMs"] = wall_ms;
    ordered_json report;
    report["schemaVersion"] = kSchemaVersion;
    report["manifest"] = std::move(manifest);
    return report;
}

ordered_json vertex_list_json(std::uint64_t mask) {
    ordered_json out = ordered_json::array();
    while (mask) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

std::string format_partition(const std::vector<std::uint64_t>& classes) {
    std::ostringstream out;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (i) out << '|';
        std::uint64_t mask = classes[i];
        bool first = true;
        while (mask) {
            if (!first) out << ' ';
            out << std::countr_zero(mask);
            mask &= mask - 1;
            first = false;
        }
    }
    return out.str();
}

ordered_json distance_json(const PartitionDistance& d) {
    ordered_json out;
    out["cost"] = d.cost;
    ordered_json classes = ordered_json::array();
    for (std::uint64_t m : d.classes) classes.push_back(vertex_list_json(m));
    out["partition"] = std::move(classes);
    out["mode"] = d.mode == DistanceMode::Exact ? "exact" : "heuristic";
    return out;
}

ordered_json extremal_report_json(const ExtremalReport& r) {
    ordered_json out;
    out["value"] = json_count(r.value);
    out["witnesses"] = r.witnesses;
    ordered_json degrees = ordered_json::array();
    for (const Count& c : r.min_copy_degree) degrees.push_back(json_count(c));
    out["minCopyDegree"] = std::move(degrees);
    out["suppressedWitnesses"] = r.suppressed;
    out["generated"] = r.generated;
    return out;
}

ordered_json audit_json(const DegreeAudit& a) {
    ordered_json out;
    ordered_json refs = ordered_json::array();
    for (const auto& [size, d] : a.reference) {
        ordered_json row;
        row["partSize"] = size;
        row["copyDegree"] = json_count(d);
        refs.push_back(std::move(row));
    }
    out["reference"] = std::move(refs);
    out["referenceMin"] = json_count(a.reference_min);
    ordered_json rows = ordered_json::array();
    for (const auto& r : a.rows) {
        ordered_json row;
        row["witness"] = r.witness;
        row["minCopyDegree"] = json_count(r.min_copy_degree);
        row["ratio"] = r.ratio;
        rows.push_back(std::move(row));
    }
    out["rows"] = std::move(rows);
    return out;
}

ordered_json optimization_json(const OptimizationResult& r) {
    ordered_json out;
    out["parts"] = r.best.sizes();
    out["count"] = r.count.str();  // always a decimal string
    out["mode"] = r.mode == OptimizeMode::Exact ? "exact" : "hillclimb";
    ordered_json co = ordered_json::array();
    for (const PartSizes& p : r.co_optimal) co.push_back(p.sizes());
    out["coOptimal"] = std::move(co);
    ordered_json moves = ordered_json::array();
    for (const PartMove& m : r.moves) {
        ordered_json mv;
        mv["donorSize"] = m.donor_size;
        mv["recipientSize"] = m.recipient_size;
        mv["partsAfter"] = m.parts_after;
        moves.push_back(std::move(mv));
    }
    out["moves"] = std::move(moves);
    return out;
}

ordered_json criticality_json(const CriticalityReport& report, const CriticalRDetail& detail) {
    ordered_json out;
    out["chi"] = report.chi;
    out["criticalVertices"] = report.critical_vertices;
    ordered_json edges = ordered_json::array();
    for (auto [u, v] : report.critical_edges) edges.push_back(ordered_json::array({u, v}));
    out["criticalEdges"] = std::move(edges);
    if (detail.r) {
        out["r"] = *detail.r;
        ordered_json d;
        d["vertex"] = detail.vertex;
        ordered_json classes = ordered_json::array();
        for (std::uint64_t m : detail.coloring.classes) classes.push_back(vertex_list_json(m));
        d["coloring"] = std::move(classes);
        d["classIndex"] = detail.class_index;
        out["detail"] = std::move(d);
    } else {
        out["r"] = nullptr;
    }
    return out;
}

ordered_json safety_json(const SafetyVerdict& v) {
    ordered_json out;
    switch (v.verdict) {
        case Safety::Safe: out["verdict"] = "SAFE"; break;
        case Safety::Unsafe: out["verdict"] = "UNSAFE"; break;
        case Safety::Inconclusive: out["verdict"] = "INCONCLUSIVE"; break;
    }
    if (v.witness) {
        ordered_json w;
        w["partOf"] = v.witness->part_of;
        ordered_json inside = ordered_json::array();
        for (auto [u, x] : v.witness->inside_edges) inside.push_back(ordered_json::array({u, x}));
        w["insideEdges"] = std::move(inside);
        out["witness"] = std::move(w);
    }
    return out;
}

ordered_json verdict_json(const StabilityVerdict& v) {
    ordered_json out;
    out["n"] = v.n;
    out["h"] = v.h_graph6;
    out["f"] = v.f_graph6;
    out["k"] = v.k;
    out["exValue"] = json_count(v.ex_value);
    out["turanHostCount"] = json_count(v.turan_host_count);
    out["bestHostCount"] = json_count(v.best_host_count);
    out["bestParts"] = v.best_parts.sizes();
    switch (v.classification) {
        case Classification::TuranGood: out["classification"] = "TuranGood"; break;
        case Classification::WeaklyTuranGood: out["classification"] = "WeaklyTuranGood"; break;
        case Classification::Neither: out["classification"] = "Neither"; break;
    }
    out["witnesses"] = v.witnesses;
    ordered_json dists = ordered_json::array();
    for (const auto& d : v.witness_distances) dists.push_back(distance_json(d));
    out["witnessDistances"] = std::move(dists);
    out["suppressedWitnesses"] = v.suppressed_witnesses;
    out["smallN"] = v.small_n;
    return out;
}

ordered_json profile_json(const ProfileTable& t) {
    ordered_json out;
    out["exValue"] = json_count(t.ex_value);
    out["slack"] = t.slack;
    out["k"] = t.k;
    ordered_json rows = ordered_json::array();
    for (const auto& r : t.rows) {
        ordered_json row;
        row["graph6"] = r.graph6;
        row["count"] = json_count(r.count);
        row["distance"] = r.distance.cost;
        row["partition"] = format_partition(r.distance.classes);
        rows.push_back(std::move(row));
    }
    out["rows"] = std::move(rows);
    return out;
}

std::string profile_csv(const ProfileTable& t) {
    std::ostringstream out;
    out << "graph6,count,distance,partition\n";
    for (const auto& r : t.rows)
        out << r.graph6 << ',' << r.count.str() << ',' << r.distance.cost << ','
            << format_partition(r.distance.classes) << '\n';
    return out.str();
}

}  // namespace turan
