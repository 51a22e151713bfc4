#include "latprim/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fnmatch.h>
#include <fstream>
#include <ostream>
#include <sstream>

#include "latprim/construct.hpp"
#include "latprim/predicates.hpp"
#include "latprim/report_json.hpp"
#include "latprim/theorems.hpp"

namespace latprim {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;   // predicate false / theorem violated
constexpr int kExitError = 2;   // usage, parse or validation errors

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// "zn:<n>" or a path to a lattice document.
Lattice load_lattice(const std::string& ref) {
    if (ref.rfind("zn:", 0) == 0) {
        long long n = 0;
        try {
            std::size_t used = 0;
            n = std::stoll(ref.substr(3), &used);
            if (used != ref.size() - 3) throw std::invalid_argument(ref);
        } catch (const std::exception&) {
            throw std::runtime_error("bad lattice reference '" + ref + "'");
        }
        return zn_ideal_lattice(n);
    }
    try {
        return lattice_from_text(read_file(ref));
    } catch (const AxiomError& e) {
        throw std::runtime_error(ref + ": " + e.what());
    } catch (const ParseError& e) {
        throw std::runtime_error(ref + ": " + e.what());
    }
}

ElementId element_or_throw(const Lattice& L, const std::string& name) {
    if (std::optional<ElementId> id = L.element_by_name(name)) return *id;
    throw std::runtime_error("unknown element name '" + name + "'");
}

// Map spec string; "@file" holds one "name -> name" pair per line and is
// resolved against a concrete lattice.
UnaryMapSpec resolve_mapspec(const std::string& text, const Lattice& L) {
    if (!text.empty() && text[0] == '@') {
        std::string path = text.substr(1);
        std::istringstream in(read_file(path));
        std::vector<ElementId> values(static_cast<std::size_t>(L.order()), -1);
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (std::size_t hash = line.find('#'); hash != std::string::npos) line.resize(hash);
            std::istringstream ls(line);
            std::string from, arrow, to;
            if (!(ls >> from)) continue;
            if (!(ls >> arrow >> to) || arrow != "->" || (ls >> arrow))
                throw std::runtime_error(path + ": line " + std::to_string(lineno) +
                                         ": expected '<name> -> <name>'");
            values[static_cast<std::size_t>(element_or_throw(L, from))] = element_or_throw(L, to);
        }
        for (std::size_t i = 0; i < values.size(); ++i)
            if (values[i] < 0)
                throw std::runtime_error(path + ": no value for element '" +
                                         L.name(static_cast<ElementId>(i)) + "'");
        return UnaryMapSpec::from_table(std::move(values));
    }
    return UnaryMapSpec::parse(text);
}

std::vector<UnaryMapSpec> resolve_mapspec_list(const std::string& csv) {
    std::vector<UnaryMapSpec> out;
    std::istringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        if (!item.empty() && item[0] == '@')
            throw std::runtime_error("table maps (@file) are single-lattice and cannot be "
                                     "used with a family");
        out.push_back(UnaryMapSpec::parse(item));
    }
    if (out.empty()) throw std::runtime_error("empty map list '" + csv + "'");
    return out;
}

// "zn:<lo>..<hi>", "zn:<n>", or "files:<glob>".
FamilySpec parse_family(const std::string& text) {
    if (text.rfind("zn:", 0) == 0) {
        std::string body = text.substr(3);
        std::size_t dots = body.find("..");
        try {
            if (dots == std::string::npos) {
                long long n = std::stoll(body);
                return FamilySpec::zn_range(n, n);
            }
            long long lo = std::stoll(body.substr(0, dots));
            long long hi = std::stoll(body.substr(dots + 2));
            return FamilySpec::zn_range(lo, hi);
        } catch (const std::invalid_argument&) {
            throw std::runtime_error("bad family '" + text + "'");
        } catch (const std::out_of_range&) {
            throw std::runtime_error("bad family '" + text + "'");
        }
    }
    if (text.rfind("files:", 0) == 0) {
        std::string pattern = text.substr(6);
        if (pattern.empty()) throw std::runtime_error("empty file pattern");
        namespace fs = std::filesystem;
        if (pattern.find_first_of("*?[") == std::string::npos)
            return FamilySpec::file_list({pattern});
        fs::path p(pattern);
        fs::path dir = p.parent_path().empty() ? fs::path(".") : p.parent_path();
        std::string leaf = p.filename().string();
        std::vector<std::string> files;
        if (fs::is_directory(dir)) {
            for (const fs::directory_entry& entry : fs::directory_iterator(dir)) {
                if (!entry.is_regular_file()) continue;
                std::string name = entry.path().filename().string();
                if (fnmatch(leaf.c_str(), name.c_str(), 0) == 0)
                    files.push_back((p.parent_path() / name).string());
            }
        }
        std::sort(files.begin(), files.end());
        if (files.empty()) throw std::runtime_error("no files match '" + pattern + "'");
        return FamilySpec::file_list(std::move(files));
    }
    throw std::runtime_error("bad family '" + text + "' (expected zn:<lo>..<hi> or files:<glob>)");
}

void emit(std::ostream& out, const Json& doc) { out << doc.dump(2) << "\n"; }

void print_pretty_suite(std::ostream& out, const SuiteReport& report) {
    for (const SuiteEntry& entry : report.entries)
        out << entry.lattice << "  " << theorem_tag(entry.verdict.theorem) << "  "
            << to_string(entry.verdict.status) << "  instances=" << entry.verdict.instances_checked
            << "\n";
    out << "violated: " << report.violated << "\n";
    for (const std::string& rule : report.required_missing)
        out << "missing required non-vacuity: " << rule << "\n";
    out << (report.ok() ? "SUITE OK" : "SUITE FAILED") << "\n";
}

void print_pretty_search(std::ostream& out, const SearchReport& report) {
    out << "claim: " << report.claim << "\n";
    for (const SearchHit& hit : report.hits) {
        out << hit.lattice << ": " << hit.total_found << " instance(s)";
        if (hit.confirming > 0) out << ", " << hit.confirming << " confirming";
        out << "\n";
        for (const WitnessRecord& w : hit.witnesses) {
            out << "  ";
            for (std::size_t i = 0; i < w.fields.size(); ++i) {
                if (i) out << " ";
                out << w.fields[i].first << "=" << w.fields[i].second;
            }
            out << "\n";
        }
    }
    if (report.hits.empty()) out << "no instances found\n";
}

int cli_main(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"latprim: finite multiplicative lattice engine"};
    app.require_subcommand(1);

    // build
    auto* build = app.add_subcommand("build", "Build a lattice and print its canonical text form");
    std::string build_ref, build_out;
    build->add_option("ref", build_ref, "zn:<n> or a lattice file")->required();
    build->add_option("-o,--output", build_out, "write to file instead of stdout");

    // validate
    auto* validate_cmd = app.add_subcommand("validate", "Check a lattice file against the axioms");
    std::string validate_path;
    validate_cmd->add_option("file", validate_path, "lattice file")->required();

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate a map, residual or radical");
    std::string eval_ref, eval_map_s, eval_at, eval_residual, eval_radical;
    bool eval_pretty = false;
    eval_cmd->add_option("--lattice", eval_ref)->required();
    eval_cmd->add_option("--map", eval_map_s, "map spec (with --at)");
    eval_cmd->add_option("--at", eval_at, "element name");
    eval_cmd->add_option("--residual", eval_residual, "<a>,<b>");
    eval_cmd->add_option("--radical", eval_radical, "<a>");
    eval_cmd->add_flag("--pretty", eval_pretty, "print only the resulting element");

    // check
    auto* check_cmd = app.add_subcommand("check", "Evaluate a primary-to predicate");
    std::string check_ref, check_b, check_p, check_phi = "none", check_delta = "delta0";
    int check_npotent = 0;
    std::size_t check_cap = 32;
    bool check_pretty = false;
    check_cmd->add_option("--lattice", check_ref)->required();
    check_cmd->add_option("--b", check_b)->required();
    check_cmd->add_option("--p", check_p)->required();
    check_cmd->add_option("--phi", check_phi, "exclusion map or 'none'");
    check_cmd->add_option("--delta", check_delta, "expansion map");
    check_cmd->add_option("--npotent", check_npotent, "check n-potent delta-primary instead");
    check_cmd->add_option("--max-witnesses", check_cap);
    check_cmd->add_flag("--pretty", check_pretty);

    // suite
    auto* suite_cmd = app.add_subcommand("suite", "Run the theorem catalogue over a family");
    std::string suite_family, suite_phis, suite_deltas, suite_json_out;
    int suite_n_lo = 2, suite_n_hi = 4;
    std::size_t suite_cap = 32;
    bool suite_pretty = false;
    suite_cmd->add_option("--family", suite_family)->required();
    suite_cmd->add_option("--phis", suite_phis, "comma-separated map specs");
    suite_cmd->add_option("--deltas", suite_deltas);
    suite_cmd->add_option("--n-lo", suite_n_lo);
    suite_cmd->add_option("--n-hi", suite_n_hi);
    suite_cmd->add_option("--max-witnesses", suite_cap);
    suite_cmd->add_option("--json-out", suite_json_out, "also write the report to a file");
    suite_cmd->add_flag("--pretty", suite_pretty);

    // search
    auto* search_cmd = app.add_subcommand("search", "Hunt counterexamples or separations");
    std::string search_claim, search_family, search_phis, search_deltas;
    int search_n_lo = 2, search_n_hi = 4;
    std::size_t search_cap = 32;
    bool search_pretty = false;
    search_cmd->add_option("--claim", search_claim, "<TAG> or 'converse of <TAG>'")->required();
    search_cmd->add_option("--family", search_family)->required();
    search_cmd->add_option("--phis", search_phis);
    search_cmd->add_option("--deltas", search_deltas);
    search_cmd->add_option("--n-lo", search_n_lo);
    search_cmd->add_option("--n-hi", search_n_hi);
    search_cmd->add_option("--max-witnesses", search_cap);
    search_cmd->add_flag("--pretty", search_pretty);

    try {
        args.erase(args.begin());  // program name
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << "\n";
        return kExitError;
    }

    if (build->parsed()) {
        Lattice L = load_lattice(build_ref);
        std::string text = lattice_to_text(L);
        if (build_out.empty()) {
            out << text;
        } else {
            std::ofstream f(build_out);
            if (!f) throw std::runtime_error(build_out + ": cannot write");
            f << text;
        }
        return kExitOk;
    }

    if (validate_cmd->parsed()) {
        std::string doc = read_file(validate_path);
        Json j = Json::object();
        j["file"] = validate_path;
        try {
            Lattice L = lattice_from_text(doc);
            j.update(validation_to_json(ValidationReport{}, &L));
            emit(out, j);
            return kExitOk;
        } catch (const AxiomError& e) {
            j.update(validation_to_json(e.report(), nullptr));
            emit(out, j);
            err << "error: " << validate_path << ": " << e.what() << "\n";
            return kExitError;
        }
    }

    if (eval_cmd->parsed()) {
        Lattice L = load_lattice(eval_ref);
        Json j = Json::object();
        j["lattice"] = eval_ref;
        ElementId result;
        if (!eval_residual.empty()) {
            std::size_t comma = eval_residual.find(',');
            if (comma == std::string::npos)
                throw std::runtime_error("--residual expects '<a>,<b>'");
            ElementId a = element_or_throw(L, eval_residual.substr(0, comma));
            ElementId b = element_or_throw(L, eval_residual.substr(comma + 1));
            result = residual(L, a, b);
            j["residual"] = eval_residual;
        } else if (!eval_radical.empty()) {
            ElementId a = element_or_throw(L, eval_radical);
            result = radical(L, a);
            j["radical"] = eval_radical;
        } else if (!eval_map_s.empty() && !eval_at.empty()) {
            UnaryMapSpec m = resolve_mapspec(eval_map_s, L);
            if (m.is_none()) throw std::runtime_error("'none' has no value");
            result = eval_map(L, m, element_or_throw(L, eval_at));
            j["map"] = eval_map_s;
            j["at"] = eval_at;
        } else {
            throw std::runtime_error("eval needs --map with --at, or --residual, or --radical");
        }
        j["result"] = L.name(result);
        if (eval_pretty)
            out << L.name(result) << "\n";
        else
            emit(out, j);
        return kExitOk;
    }

    if (check_cmd->parsed()) {
        Lattice L = load_lattice(check_ref);
        ElementId b = element_or_throw(L, check_b);
        ElementId p = element_or_throw(L, check_p);
        UnaryMapSpec delta = resolve_mapspec(check_delta, L);
        PredicateReport report;
        Json j = Json::object();
        j["lattice"] = check_ref;
        j["b"] = check_b;
        j["p"] = check_p;
        if (check_npotent > 0) {
            if (check_phi != "none")
                throw std::runtime_error("--npotent does not take a --phi clause");
            report = n_potent_primary_to(L, b, p, check_npotent, delta, {check_cap});
            j["npotent"] = check_npotent;
        } else {
            UnaryMapSpec phi = resolve_mapspec(check_phi, L);
            report = generalized_primary_to(L, {b, p, phi, delta}, {check_cap});
            j["phi"] = phi.label();
        }
        j["delta"] = delta.label();
        j.update(predicate_to_json(report, L));
        if (check_pretty) {
            out << (report.holds ? "holds" : "fails") << "\n";
            for (const auto& tuple : report.witnesses) {
                out << "  witness:";
                for (ElementId id : tuple) out << " " << L.name(id);
                out << "\n";
            }
        } else {
            emit(out, j);
        }
        return report.holds ? kExitOk : kExitFalse;
    }

    if (suite_cmd->parsed()) {
        SearchConfig cfg = SearchConfig::defaults(parse_family(suite_family));
        if (!suite_phis.empty()) cfg.phis = resolve_mapspec_list(suite_phis);
        if (!suite_deltas.empty()) cfg.deltas = resolve_mapspec_list(suite_deltas);
        cfg.n_lo = suite_n_lo;
        cfg.n_hi = suite_n_hi;
        cfg.witness_cap = suite_cap;
        SuiteReport report = run_suite(cfg);
        Json j = suite_to_json(report, cfg);
        if (!suite_json_out.empty()) {
            std::ofstream f(suite_json_out);
            if (!f) throw std::runtime_error(suite_json_out + ": cannot write");
            f << j.dump(2) << "\n";
        }
        if (suite_pretty)
            print_pretty_suite(out, report);
        else
            emit(out, j);
        return report.ok() ? kExitOk : kExitFalse;
    }

    if (search_cmd->parsed()) {
        SearchClaim claim = SearchClaim::parse(search_claim);
        SearchConfig cfg = SearchConfig::defaults(parse_family(search_family));
        if (!search_phis.empty()) cfg.phis = resolve_mapspec_list(search_phis);
        if (!search_deltas.empty()) cfg.deltas = resolve_mapspec_list(search_deltas);
        cfg.n_lo = search_n_lo;
        cfg.n_hi = search_n_hi;
        cfg.witness_cap = search_cap;
        SearchReport report = search(claim, cfg);
        if (search_pretty)
            print_pretty_search(out, report);
        else
            emit(out, search_to_json(report));
        bool is_probe = false;
        for (const TheoremInfo& info : theorem_catalogue())
            if (info.id == claim.theorem) is_probe = info.probe;
        // Hits on a plain theorem claim are violations; separations and probe
        // findings are expected results.
        if (!claim.converse && !is_probe && !report.hits.empty()) return kExitFalse;
        return kExitOk;
    }

    err << "error: no subcommand\n";
    return kExitError;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    try {
        return cli_main(std::move(args), out, err);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const AxiomError& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
}

}  // namespace latprim
