// arithlat — enumerate, verify, construct and count arithmetical structures
// on path, cycle, ladder and grid graphs, with exact integer arithmetic.
//
// Exit codes: 0 success, 1 usage or domain error, 2 mathematical finding
// (an input structure failed verification, or a construction's
// side-conditions refused the input).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <arithlat/arithlat.hpp>

namespace {

using namespace arithlat;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFinding = 2;

struct IoOptions {
    std::string format = "json";
    std::string out_file;
};

void add_io_flags(CLI::App* cmd, IoOptions& io) {
    cmd->add_option("--format", io.format, "output format")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", io.out_file, "write output to FILE instead of stdout");
}

void write_output(const IoOptions& io, const std::string& text) {
    if (io.out_file.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(io.out_file, std::ios::binary);
    if (!f) throw DomainError("cannot open output file: " + io.out_file);
    f << text;
}

std::string render(const IoOptions& io, const json& config, const json& body,
                   const std::vector<ArithStructure>* csv_structures) {
    if (io.format == "csv") {
        std::string out;
        out += "# " + json{{"config", config}}.dump() + "\n";
        out += to_csv(csv_structures ? *csv_structures : std::vector<ArithStructure>{});
        return out;
    }
    json doc = body;
    doc["config"] = config;
    return doc.dump(2) + "\n";
}

GraphDesc graph_from_flags(const std::string& family, int n, int m, const std::string& ordering) {
    VertexOrdering::Kind kind = ordering_kind_from_name(ordering);
    switch (family_from_name(family)) {
        case Family::path: return GraphDesc::path(n);
        case Family::cycle: return GraphDesc::cycle(n);
        case Family::ladder: return GraphDesc::ladder(m, kind);
        case Family::grid: return GraphDesc::grid(n, m, kind);
    }
    throw DomainError("bad family");
}

std::string read_input(const std::string& in_file, bool use_stdin) {
    if (use_stdin || in_file.empty() || in_file == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(in_file);
    if (!f) throw DomainError("cannot open input file: " + in_file);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

ArithStructure parse_structure(const std::string& text) {
    json j = json::parse(text);
    return structure_from_json(j);
}

IntVec parse_int_list(const std::string& text) {
    IntVec v = split_ints(text, ',');
    if (v.empty()) throw DomainError("expected a comma-separated integer list, got '" + text + "'");
    return v;
}

std::vector<ColumnState> states_from_flags(bool example, long c4_bound, int grid_n, long grid_bound) {
    if (example) return example_state_space();
    if (grid_n > 0) return grid_state_space(grid_n, Int(grid_bound));
    if (c4_bound > 0) return state_space_from_c4(Int(c4_bound));
    throw DomainError("select a state space: --paper-example, --bound B, or --grid-n N --bound B");
}

int cmd_enumerate(const std::string& family, int n, int m, const std::string& ordering, bool use_oracle,
                  long bound, const IoOptions& io) {
    GraphDesc g = graph_from_flags(family, n, m, ordering);
    json config{{"command", "enumerate"}, {"graph", to_json(g)}, {"oracle", use_oracle}};
    if (use_oracle) {
        OracleConfig cfg{Int(bound), g, true};
        config["bound"] = bound;
        EnumerationReport rep = oracle_enumerate(cfg);
        write_output(io, render(io, config, json{{"report", to_json(rep)}}, &rep.structures));
        return kExitOk;
    }
    if (g.family != Family::path)
        throw DomainError("only path graphs have a closed enumerator; pass --oracle --bound B");
    PathStructureSet set = enumerate_paths(g.n);
    json body{{"count", static_cast<long>(set.structures.size())},
              {"catalan_index", g.n - 1},
              {"structures", to_json(set.structures)}};
    write_output(io, render(io, config, body, &set.structures));
    return kExitOk;
}

int cmd_verify(const std::string& in_file, bool use_stdin, const IoOptions& io) {
    ArithStructure s = parse_structure(read_input(in_file, use_stdin));
    VerifyReport rep = verify(s);
    json config{{"command", "verify"}, {"graph", to_json(s.graph)}};
    json body{{"passed", rep.passed}};
    if (!rep.passed) {
        body["failure"] = rep.kind == FailKind::equation ? "equation" : "primitivity";
        if (rep.vertex >= 0) {
            body["vertex"] = rep.vertex;
            body["lhs"] = to_decimal(rep.lhs);
            body["rhs"] = to_decimal(rep.rhs);
        }
    }
    write_output(io, render(io, config, body, nullptr));
    return rep.passed ? kExitOk : kExitFinding;
}

int emit_build_result(const json& config, const char* builder, const BuildResult& res, const IoOptions& io) {
    json body{{"builder", builder}, {"ok", res.ok()}};
    if (res.ok()) {
        body["structure"] = to_json(*res.structure);
        std::vector<ArithStructure> one{*res.structure};
        write_output(io, render(io, config, body, &one));
        return kExitOk;
    }
    switch (res.outcome) {
        case BuildOutcome::positivity_failure: body["failure"] = "positivity"; break;
        case BuildOutcome::divisibility_failure: body["failure"] = "divisibility"; break;
        case BuildOutcome::primitivity_failure: body["failure"] = "primitivity"; break;
        default: break;
    }
    body["offending"] = res.offending;
    write_output(io, render(io, config, body, nullptr));
    return kExitFinding;
}

int cmd_construct(const std::string& builder, const std::string& in_file, bool use_stdin,
                  const std::string& k_list, const std::string& mode, int src_i, int src_j, long y1, long y2,
                  const std::string& a_list, const std::string& b_list, int rows, const IoOptions& io) {
    json config{{"command", "construct"}, {"builder", builder}};
    auto emit_structure = [&](const ArithStructure& s) {
        json body{{"builder", builder}, {"ok", true}, {"structure", to_json(s)}};
        std::vector<ArithStructure> one{s};
        write_output(io, render(io, config, body, &one));
        return kExitOk;
    };

    if (builder == "stack-symmetric")
        return emit_structure(stack_symmetric(parse_structure(read_input(in_file, use_stdin))));
    if (builder == "stack-offset") {
        ArithStructure ps = parse_structure(read_input(in_file, use_stdin));
        config["k"] = k_list;
        return emit_build_result(config, "stack-offset", stack_with_offset(ps, parse_int_list(k_list)), io);
    }
    if (builder == "kronecker") {
        json j = json::parse(read_input(in_file, use_stdin));
        if (!j.is_array() || j.size() != 2)
            throw DomainError("kronecker expects a JSON array of two structures");
        return emit_structure(kronecker_structure(structure_from_json(j[0]), structure_from_json(j[1])));
    }
    if (builder == "extend-column") {
        ArithStructure ls = parse_structure(read_input(in_file, use_stdin));
        ColumnExtensionSpec spec;
        spec.mode = extension_mode_from_name(mode);
        if (spec.mode == ExtensionMode::rij_one || spec.mode == ExtensionMode::one_rij) {
            if (src_i < 1 || src_j < 1) throw DomainError("extend-column: pass --i and --j for this mode");
            spec.source_index = {src_i, src_j};
        }
        if (spec.mode == ExtensionMode::free_y) {
            if (y1 < 1 || y2 < 1) throw DomainError("extend-column: pass --y1 and --y2 for free-y");
            spec.y = {Int(y1), Int(y2)};
        }
        config["mode"] = mode;
        ExtendResult res = extend_column(ls, spec);
        json body{{"builder", builder}, {"ok", res.ok()}, {"hypotheses_satisfied", res.hypotheses_satisfied}};
        if (res.ok()) {
            body["structure"] = to_json(*res.structure);
            std::vector<ArithStructure> one{*res.structure};
            write_output(io, render(io, config, body, &one));
            return kExitOk;
        }
        body["failure"] = res.outcome == BuildOutcome::primitivity_failure ? "primitivity" : "divisibility";
        body["offending"] = res.offending;
        write_output(io, render(io, config, body, nullptr));
        return kExitFinding;
    }
    if (builder == "nonsymmetric") {
        NonSymSequences seqs{parse_int_list(a_list), parse_int_list(b_list)};
        config["a"] = a_list;
        config["b"] = b_list;
        NonSymResult res = build_nonsymmetric(seqs);
        json body{{"builder", builder},
                  {"ok", true},
                  {"symmetric", res.symmetric},
                  {"structure", to_json(res.structure)}};
        std::vector<ArithStructure> one{res.structure};
        write_output(io, render(io, config, body, &one));
        return kExitOk;
    }
    if (builder == "symmetric-to-path")
        return emit_structure(symmetric_to_path(parse_structure(read_input(in_file, use_stdin))));
    if (builder == "grid-column-constant") {
        if (rows < 1) throw DomainError("grid-column-constant: pass --rows N");
        config["rows"] = rows;
        return emit_structure(grid_column_constant(parse_structure(read_input(in_file, use_stdin)), rows));
    }
    if (builder == "delta-identity") {
        ArithStructure ls = parse_structure(read_input(in_file, use_stdin));
        DeltaReport rep = delta_identity_check(ls);
        json body{{"builder", builder}, {"holds", rep.holds}, {"delta", to_json(rep.delta)}};
        write_output(io, render(io, config, body, nullptr));
        return kExitOk;
    }
    throw DomainError("unknown builder: '" + builder +
                      "' (stack-symmetric, stack-offset, kronecker, extend-column, nonsymmetric, "
                      "symmetric-to-path, grid-column-constant, delta-identity)");
}

int cmd_transfer(bool example, long c4_bound, int grid_n, long grid_bound, int m, bool census,
                 const IoOptions& io) {
    std::vector<ColumnState> states = states_from_flags(example, c4_bound, grid_n, grid_bound);
    json config{{"command", "transfer"},
                {"paper_example", example},
                {"m", m},
                {"census", census}};
    if (!example) config["bound"] = grid_n > 0 ? grid_bound : c4_bound;
    if (grid_n > 0) config["grid_n"] = grid_n;

    if (census) {
        CensusReport rep = transfer_census(states, m);
        write_output(io, render(io, config, json{{"report", to_json(rep)}}, &rep.structures));
        return kExitOk;
    }
    TransitionSystem ts = build_transition_matrix(std::move(states));
    json body{{"system", to_json(ts)}, {"walk_count", to_decimal(count_walks(ts, m))}};
    write_output(io, render(io, config, body, nullptr));
    return kExitOk;
}

int cmd_count(const std::string& family, int n, int m, const std::string& ordering, bool use_oracle,
              long bound, bool example, long c4_from, int grid_n, const IoOptions& io) {
    json config{{"command", "count"}};
    json body;
    if (example || c4_from > 0 || grid_n > 0) {
        std::vector<ColumnState> states = states_from_flags(example, c4_from, grid_n, bound);
        config["paper_example"] = example;
        config["m"] = m;
        body["walk_count"] = to_decimal(count_walks(build_transition_matrix(std::move(states)), m));
    } else {
        GraphDesc g = graph_from_flags(family, n, m, ordering);
        config["graph"] = to_json(g);
        config["oracle"] = use_oracle;
        if (use_oracle) {
            config["bound"] = bound;
            body["count"] = oracle_enumerate(OracleConfig{Int(bound), g, true}).count;
        } else {
            if (g.family != Family::path)
                throw DomainError("only path graphs have a closed enumerator; pass --oracle --bound B");
            body["count"] = static_cast<long>(enumerate_paths(g.n).structures.size());
            body["catalan"] = to_decimal(catalan(g.n - 1));
        }
    }
    write_output(io, render(io, config, body, nullptr));
    return kExitOk;
}

int cmd_properties(long lo, long hi, const IoOptions& io) {
    json config{{"command", "properties"}, {"bound_lo", lo}, {"bound_hi", hi}};
    json arr = json::array();
    arr.push_back(to_json(census_gap_finding(3)));
    arr.push_back(to_json(c4_observation_finding(12)));
    arr.push_back(to_json(bound_stabilization_finding(
        GraphDesc::ladder(3, VertexOrdering::Kind::column_wise), Int(lo), Int(hi))));
    write_output(io, render(io, config, json{{"findings", arr}}, nullptr));
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"arithmetical structures on path, cycle, ladder and grid graphs"};
    app.require_subcommand(1);

    std::string family = "path", ordering = "column";
    int n = 1, m = 1, rows = 0, src_i = 0, src_j = 0;
    long bound = 0, y1 = 0, y2 = 0, prop_lo = 8, prop_hi = 10;
    bool use_oracle = false, use_stdin = false, example = false, census = false;
    std::string in_file, builder, k_list, mode = "ones-ones", a_list, b_list;
    int transfer_m = 3, grid_n = 0;
    IoOptions io_enum, io_verify, io_construct, io_transfer, io_count, io_props;

    CLI::App* enumerate = app.add_subcommand("enumerate", "enumerate structures on a graph");
    enumerate->add_option("--graph", family, "graph family")->check(CLI::IsMember({"path", "cycle", "ladder", "grid"}));
    enumerate->add_option("--n", n, "path/cycle length or grid rows");
    enumerate->add_option("--m", m, "ladder/grid columns");
    enumerate->add_option("--ordering", ordering, "vertex ordering")->check(CLI::IsMember({"row", "column"}));
    enumerate->add_flag("--oracle", use_oracle, "bounded exhaustive search");
    enumerate->add_option("--bound", bound, "max r entry for the oracle");
    add_io_flags(enumerate, io_enum);

    CLI::App* verify_cmd = app.add_subcommand("verify", "verify a structure from JSON");
    verify_cmd->add_option("--in", in_file, "input file (JSON structure)");
    verify_cmd->add_flag("--stdin", use_stdin, "read the structure from stdin");
    add_io_flags(verify_cmd, io_verify);

    CLI::App* construct = app.add_subcommand("construct", "run a construction builder");
    construct->add_option("--builder", builder, "builder name")->required();
    construct->add_option("--in", in_file, "input file (JSON structure, or array of two for kronecker)");
    construct->add_flag("--stdin", use_stdin, "read input from stdin");
    construct->add_option("--k", k_list, "offset vector for stack-offset, comma-separated");
    construct->add_option("--mode", mode, "extension mode")
        ->check(CLI::IsMember({"ones-ones", "rij-one", "one-rij", "free-y"}));
    construct->add_option("--i", src_i, "source row for rij modes (1 or 2)");
    construct->add_option("--j", src_j, "source column for rij modes");
    construct->add_option("--y1", y1, "first free-y value");
    construct->add_option("--y2", y2, "second free-y value");
    construct->add_option("--a", a_list, "top-row sequence for nonsymmetric, comma-separated");
    construct->add_option("--b", b_list, "bottom-row sequence for nonsymmetric, comma-separated");
    construct->add_option("--rows", rows, "rows for grid-column-constant");
    add_io_flags(construct, io_construct);

    CLI::App* transfer = app.add_subcommand("transfer", "transition-matrix machinery");
    transfer->add_flag("--paper-example", example, "use the published four-state example system");
    transfer->add_option("--bound", bound, "state space from the bounded C4 census");
    transfer->add_option("--grid-n", grid_n, "grid rows for the generalized state space");
    transfer->add_option("--m", transfer_m, "number of columns (walk length m-1)");
    transfer->add_flag("--census", census, "lift every walk and reconcile the counts");
    add_io_flags(transfer, io_transfer);

    CLI::App* count = app.add_subcommand("count", "count structures or walks");
    count->add_option("--graph", family, "graph family")->check(CLI::IsMember({"path", "cycle", "ladder", "grid"}));
    count->add_option("--n", n, "path/cycle length or grid rows");
    count->add_option("--m", m, "ladder/grid columns (or transfer walk columns)");
    count->add_option("--ordering", ordering, "vertex ordering")->check(CLI::IsMember({"row", "column"}));
    count->add_flag("--oracle", use_oracle, "bounded exhaustive search");
    count->add_option("--bound", bound, "max r entry for the oracle / c4 census");
    count->add_flag("--paper-example", example, "count walks of the example system");
    long c4_from = 0;
    count->add_option("--from-c4", c4_from, "count walks over the C4-census state space at this bound");
    count->add_option("--grid-n", grid_n, "grid rows for the generalized state space");
    add_io_flags(count, io_count);

    CLI::App* properties = app.add_subcommand("properties", "emit the finding reports");
    properties->add_option("--bound-lo", prop_lo, "lower entry bound for stabilization");
    properties->add_option("--bound-hi", prop_hi, "upper entry bound for stabilization");
    add_io_flags(properties, io_props);

    try {
        app.parse(argc, argv);
        if (enumerate->parsed()) {
            if (use_oracle && bound < 1) throw arithlat::DomainError("--oracle requires --bound B >= 1");
            return cmd_enumerate(family, n, m, ordering, use_oracle, bound, io_enum);
        }
        if (verify_cmd->parsed()) return cmd_verify(in_file, use_stdin, io_verify);
        if (construct->parsed())
            return cmd_construct(builder, in_file, use_stdin, k_list, mode, src_i, src_j, y1, y2, a_list,
                                 b_list, rows, io_construct);
        if (transfer->parsed()) {
            long c4_bound = grid_n > 0 ? 0 : bound;
            return cmd_transfer(example, c4_bound, grid_n, bound, transfer_m, census, io_transfer);
        }
        if (count->parsed())
            return cmd_count(family, n, m, ordering, use_oracle, bound, example, c4_from, grid_n, io_count);
        if (properties->parsed()) return cmd_properties(prop_lo, prop_hi, io_props);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const arithlat::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const arithlat::SizeCapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: bad JSON input: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitUsage;
    }
}
