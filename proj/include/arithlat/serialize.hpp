#pragma once

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "arithlat/oracle.hpp"
#include "arithlat/structure.hpp"
#include "arithlat/transfer.hpp"

// JSON conventions: arbitrary-precision integers (matrix entries, d/r
// values, walk counts) are decimal strings so consumers never overflow;
// small structural integers (dimensions, indices, 0/1 flags) stay plain.

namespace arithlat {

using json = nlohmann::json;

inline json to_json(const VertexOrdering& o) {
    return json{{"kind", ordering_kind_name(o.kind)}, {"rows", o.rows}, {"cols", o.cols}};
}

inline VertexOrdering ordering_from_json(const json& j) {
    return VertexOrdering{ordering_kind_from_name(j.at("kind").get<std::string>()), j.at("rows").get<int>(),
                          j.at("cols").get<int>()};
}

inline json to_json(const GraphDesc& g) {
    json j{{"family", family_name(g.family)}, {"n", g.family == Family::ladder ? 2 : g.n}};
    if (g.is_product()) {
        j["m"] = g.m;
        j["ordering"] = ordering_kind_name(g.ordering);
    }
    return j;
}

inline GraphDesc graph_from_json(const json& j) {
    Family f = family_from_name(j.at("family").get<std::string>());
    switch (f) {
        case Family::path: return GraphDesc::path(j.at("n").get<int>());
        case Family::cycle: return GraphDesc::cycle(j.at("n").get<int>());
        case Family::ladder:
            return GraphDesc::ladder(j.at("m").get<int>(),
                                     ordering_kind_from_name(j.value("ordering", "row-wise")));
        case Family::grid:
            return GraphDesc::grid(j.at("n").get<int>(), j.at("m").get<int>(),
                                   ordering_kind_from_name(j.value("ordering", "row-wise")));
    }
    throw DomainError("bad family");
}

inline json to_json(const IntVec& v) {
    json arr = json::array();
    for (const Int& x : v) arr.push_back(to_decimal(x));
    return arr;
}

inline IntVec int_vec_from_json(const json& j) {
    IntVec v;
    v.reserve(j.size());
    for (const auto& e : j) {
        if (e.is_string())
            v.push_back(parse_decimal(e.get<std::string>()));
        else if (e.is_number_integer())
            v.push_back(Int(e.get<long>()));
        else
            throw DomainError("expected integer or decimal string in vector");
    }
    return v;
}

inline json to_json(const ExactMatrix& m) {
    json j{{"dim", m.dim()}};
    if (m.ordering) j["ordering"] = to_json(*m.ordering);
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int k = 0; k < m.cols(); ++k) row.push_back(to_decimal(m.at(i, k)));
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

inline ExactMatrix matrix_from_json(const json& j) {
    int dim = j.at("dim").get<int>();
    ExactMatrix m(dim, dim);
    const json& rows = j.at("rows");
    if (static_cast<int>(rows.size()) != dim) throw DomainError("matrix rows disagree with dim");
    for (int i = 0; i < dim; ++i) {
        IntVec row = int_vec_from_json(rows[static_cast<size_t>(i)]);
        if (static_cast<int>(row.size()) != dim) throw DomainError("matrix row length disagrees with dim");
        for (int k = 0; k < dim; ++k) m.at(i, k) = row[static_cast<size_t>(k)];
    }
    if (j.contains("ordering")) m.ordering = ordering_from_json(j.at("ordering"));
    return m;
}

inline json to_json(const ArithStructure& s) {
    return json{{"graph", to_json(s.graph)}, {"d", to_json(s.d)}, {"r", to_json(s.r)}};
}

inline ArithStructure structure_from_json(const json& j) {
    ArithStructure s{graph_from_json(j.at("graph")), int_vec_from_json(j.at("d")),
                     int_vec_from_json(j.at("r")), false};
    s.primitive = !s.r.empty() && gcd_all(s.r) == 1;
    return s;
}

inline json to_json(const std::vector<ArithStructure>& v) {
    json arr = json::array();
    for (const ArithStructure& s : v) arr.push_back(to_json(s));
    return arr;
}

inline json to_json(const TransitionSystem& ts) {
    json states = json::array();
    for (const ColumnState& s : ts.states) {
        json vals = json::array();
        for (const Int& x : s.values) vals.push_back(to_long_checked(x, "state value"));
        states.push_back(std::move(vals));
    }
    return json{{"states", std::move(states)}, {"matrix", ts.matrix}};
}

inline TransitionSystem transition_from_json(const json& j) {
    std::vector<ColumnState> states;
    for (const auto& e : j.at("states")) states.push_back(ColumnState{int_vec_from_json(e)});
    TransitionSystem ts = build_transition_matrix(std::move(states));
    if (j.contains("matrix") && j.at("matrix") != json(ts.matrix))
        throw DomainError("transition matrix disagrees with admissibility of the states");
    return ts;
}

inline json to_json(const OracleConfig& c) {
    return json{{"graph", to_json(c.graph)}, {"entry_bound", to_decimal(c.entry_bound)}, {"dedup", c.dedup}};
}

inline json to_json(const EnumerationReport& r) {
    return json{{"config", to_json(r.config)},
                {"complete_within_bound", r.complete_within_bound},
                {"count", r.count},
                {"structures", to_json(r.structures)}};
}

inline json to_json(const CensusReport& c) {
    return json{{"m", c.m},
                {"system", to_json(c.system)},
                {"walk_count", to_decimal(c.walk_count)},
                {"lift_success_walks", c.lift_success_walks},
                {"lift_failure_walks", c.lift_failure_walks},
                {"distinct_structures", static_cast<long>(c.structures.size())},
                {"initial_states", c.initial_states},
                {"terminal_states", c.terminal_states},
                {"structures", to_json(c.structures)}};
}

// CSV row format: family,n,m,ordering,d-entries|r-entries with the entries
// ';'-separated. Path/cycle rows leave m and ordering empty.
inline const char* kCsvHeader = "family,n,m,ordering,d|r";

inline std::string joined(const IntVec& v, char sep) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out.push_back(sep);
        out += to_decimal(v[i]);
    }
    return out;
}

inline std::string to_csv_row(const ArithStructure& s) {
    std::string m_field, ord_field;
    if (s.graph.is_product()) {
        m_field = std::to_string(s.graph.m);
        ord_field = ordering_kind_name(s.graph.ordering);
    }
    int n = s.graph.family == Family::ladder ? 2 : s.graph.n;
    return family_name(s.graph.family) + "," + std::to_string(n) + "," + m_field + "," + ord_field + "," +
           joined(s.d, ';') + "|" + joined(s.r, ';');
}

inline std::string to_csv(const std::vector<ArithStructure>& v) {
    std::string out = std::string(kCsvHeader) + "\n";
    for (const ArithStructure& s : v) out += to_csv_row(s) + "\n";
    return out;
}

inline IntVec split_ints(const std::string& s, char sep) {
    IntVec out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
        if (!item.empty()) out.push_back(parse_decimal(item));
    return out;
}

inline ArithStructure structure_from_csv_row(const std::string& line) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string item;
    while (std::getline(ss, item, ',')) fields.push_back(item);
    if (fields.size() != 5) throw DomainError("csv row needs 5 fields");

    Family f = family_from_name(fields[0]);
    GraphDesc g;
    switch (f) {
        case Family::path: g = GraphDesc::path(std::stoi(fields[1])); break;
        case Family::cycle: g = GraphDesc::cycle(std::stoi(fields[1])); break;
        case Family::ladder:
            g = GraphDesc::ladder(std::stoi(fields[2]), ordering_kind_from_name(fields[3]));
            break;
        case Family::grid:
            g = GraphDesc::grid(std::stoi(fields[1]), std::stoi(fields[2]), ordering_kind_from_name(fields[3]));
            break;
    }
    size_t bar = fields[4].find('|');
    if (bar == std::string::npos) throw DomainError("csv row lacks the d|r separator");
    ArithStructure s{g, split_ints(fields[4].substr(0, bar), ';'), split_ints(fields[4].substr(bar + 1), ';'),
                     false};
    s.primitive = !s.r.empty() && gcd_all(s.r) == 1;
    return s;
}

} // namespace arithlat
