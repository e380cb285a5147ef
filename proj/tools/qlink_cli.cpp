// qlink: invariants of two-component links from planar diagram data.
//
// Exit codes: 0 success, 1 verification failure, 2 input error.

#include "CLI11.hpp"
#include "qlink/qlink.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace qlink;

std::string read_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

std::string cache_path() {
    const char* dir = std::getenv("QLINK_CACHE_DIR");
    if (!dir || !*dir) return {};
    return std::string(dir) + "/skein-cache.txt";
}

void load_cache() {
    std::string path = cache_path();
    if (path.empty()) return;
    std::ifstream is(path);
    if (is) SkeinCache::global().load(is);
}

void save_cache() {
    std::string path = cache_path();
    if (path.empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(std::filesystem::path(path).parent_path(), ec);
    std::ofstream os(path, std::ios::trunc);
    if (os) SkeinCache::global().save(os);
}

struct ResolvedInput {
    LinkDiagram diagram;
    std::string label;
};

ResolvedInput resolve_diagram(const std::string& input, long n) {
    const Catalog& cat = Catalog::instance();
    if (cat.contains(input)) {
        CatalogEntry e = n == -1000000 ? cat.get(input) : cat.get(input, n);
        if (e.link) return {*e.link, input};
        if (e.tangle) return {e.tangle->numerator_closure(), input + " (numerator closure)"};
        throw std::invalid_argument("catalog entry '" + input + "' is not a diagram");
    }
    if (!std::filesystem::exists(input))
        throw std::invalid_argument("'" + input + "' is neither a catalog entry nor a file");
    std::string text = read_file(input);
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw std::invalid_argument("'" + input + "' is empty");
    if (text[first] == '{') {
        auto j = nlohmann::json::parse(text);
        if (j.contains("strands"))
            return {tangle_from_json(text).numerator_closure(), input + " (numerator closure)"};
        return {diagram_from_json(text), input};
    }
    if (text.compare(first, 2, "T[") == 0)
        return {parse_tangle(text).numerator_closure(), input + " (numerator closure)"};
    return {LinkDiagram::parse(text), input};
}

int cmd_invariants(const std::string& input, long n, const std::string& format) {
    ResolvedInput in = resolve_diagram(input, n);
    InvariantReport r = invariant_report(in.label, in.diagram);
    std::cout << (format == "json" ? r.to_json() + "\n" : r.to_text());
    return 0;
}

int cmd_trace(const std::string& input, const std::string& format) {
    const Catalog& cat = Catalog::instance();
    HomotopyTrace tr;
    if (cat.contains(input) && cat.get(input).trace) {
        tr = *cat.get(input).trace;
    } else {
        tr = trace_from_text(read_file(input));
    }
    std::ostringstream text, json;
    bool fibered = tr.kind == HomotopyTrace::Kind::fibered_string_link;
    json << "{\"kind\": \"" << (fibered ? "fibered-string-link" : "closed-link")
         << "\", \"start\": \"" << tr.start << "\", \"end\": \"" << tr.end << "\"";
    text << "trace: " << tr.start << " -> " << tr.end
         << (fibered ? " (fibered string link)" : " (closed link)") << "\n";
    if (fibered) {
        auto [p, m] = sigma_tilde(tr);
        auto [kp, km] = kirk_sigma(tr);
        auto dt = delta_tilde_map(p, m);
        text << "  sigma~+  " << p.to_text() << "\n  sigma~-  " << m.to_text() << "\n";
        text << "  sigma+   " << kp.to_text() << "\n  sigma-   " << km.to_text() << "\n";
        text << "  hudson obstruction: component 1: " << hudson_obstruction(tr, 1)
             << ", component 2: " << hudson_obstruction(tr, 2) << "\n";
        text << "  delta~(sigma~) = (" << std::get<0>(dt) << ", " << std::get<1>(dt) << ", "
             << std::get<2>(dt) << ", " << std::get<3>(dt) << ")\n";
        json << ", \"sigma_tilde\": [" << poly_to_json(p) << ", " << poly_to_json(m) << "]"
             << ", \"sigma\": [" << poly_to_json(kp) << ", " << poly_to_json(km) << "]"
             << ", \"hudson\": [" << hudson_obstruction(tr, 1) << ", " << hudson_obstruction(tr, 2)
             << "]";
    } else {
        auto classes = classify_events(tr);
        text << "  events:\n";
        json << ", \"events\": [";
        for (std::size_t i = 0; i < tr.closed_events.size(); ++i) {
            const auto& e = tr.closed_events[i];
            Int jump = e.sign * beta_tilde_jump(e);
            const char* cls =
                classes[i] == EventClass::weak_one_quasi ? "weak-1-quasi" : "link-homotopy";
            text << "    #" << i << " component " << e.component << " sign " << e.sign
                 << " beta~ jump " << jump << " [" << cls << "]\n";
            json << (i ? ", " : "") << "{\"jump\": " << jump << ", \"class\": \"" << cls << "\"}";
        }
        json << "]";
        if (is_beta_anchor(tr.end)) {
            Int bt = beta_tilde_from_trace(tr);
            text << "  beta~(start) = " << bt << "\n";
            json << ", \"beta_tilde\": " << bt;
        }
        if (is_split_anchor(tr.end)) {
            try {
                LaurentPoly eta = eta_from_trace(tr);
                text << "  eta = " << eta.to_text() << "\n";
                json << ", \"eta\": " << poly_to_json(eta);
            } catch (const std::exception&) {
                // events on both components: eta undefined along this trace
            }
        }
    }
    json << "}";
    std::cout << (format == "json" ? json.str() + "\n" : text.str());
    return 0;
}

int cmd_verify(const std::string& suite, unsigned seed) {
    std::vector<std::string> names =
        suite == "all" ? verify_suite_names() : std::vector<std::string>{suite};
    bool all_ok = true;
    for (const auto& name : names) {
        VerifyResult r = verify_suite(name, seed);
        for (const auto& line : r.lines) std::cout << "  " << line << "\n";
        std::cout << r.summary() << "\n";
        all_ok = all_ok && r.ok();
    }
    return all_ok ? 0 : 1;
}

int cmd_catalog(const std::string& export_name, long n, const std::string& format) {
    const Catalog& cat = Catalog::instance();
    if (export_name.empty()) {
        for (const auto& name : cat.names()) {
            CatalogEntry e = cat.get(name);
            const char* kind = "";
            switch (e.kind) {
                case EntryKind::link: kind = "link"; break;
                case EntryKind::string_link: kind = "string-link"; break;
                case EntryKind::closed_trace: kind = "closed-trace"; break;
                case EntryKind::fibered_trace: kind = "fibered-trace"; break;
                case EntryKind::sigma_data: kind = "sigma-data"; break;
                case EntryKind::pattern: kind = "pattern"; break;
            }
            std::cout << name << (e.parametrized ? " (n)" : "") << "  [" << kind << "]  "
                      << e.provenance << "\n";
        }
        return 0;
    }
    CatalogEntry e = n == -1000000 ? cat.get(export_name) : cat.get(export_name, n);
    bool json = format == "json";
    if (e.link) {
        std::cout << (json ? diagram_to_json(*e.link) : e.link->serialize()) << "\n";
    } else if (e.tangle) {
        std::cout << (json ? tangle_to_json(*e.tangle) : serialize_tangle(*e.tangle)) << "\n";
    } else if (e.trace) {
        std::cout << trace_to_text(*e.trace);
    } else if (e.sigma) {
        if (json)
            std::cout << "[" << poly_to_json(e.sigma->first) << ", "
                      << poly_to_json(e.sigma->second) << "]\n";
        else
            std::cout << e.sigma->first.to_text() << "\n" << e.sigma->second.to_text() << "\n";
    } else if (e.pattern) {
        std::ostringstream os;
        os << "{\"cuts\": [";
        for (std::size_t i = 0; i < e.pattern->cut_directions.size(); ++i)
            os << (i ? ", " : "") << e.pattern->cut_directions[i];
        os << "], \"crossings\": [";
        for (std::size_t i = 0; i < e.pattern->crossings.size(); ++i) {
            const auto& c = e.pattern->crossings[i];
            os << (i ? ", " : "") << "[" << c.over_level << ", " << c.under_level << ", " << c.sign
               << "]";
        }
        os << "]}";
        std::cout << os.str() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qlink: classical and refined invariants of two-component links"};
    app.require_subcommand(1);

    std::string input, format = "text", suite = "all", export_name;
    long n = -1000000;
    unsigned seed = 1;

    auto* inv = app.add_subcommand("invariants", "compute the invariant report of a diagram");
    inv->add_option("input", input, "catalog name or diagram file (PD text or JSON)")->required();
    inv->add_option("--n", n, "parameter for parametrized catalog entries");
    inv->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    auto* trc = app.add_subcommand("trace", "evaluate a homotopy trace file");
    trc->add_option("file", input, "trace file (line-oriented JSON) or catalog trace name")
        ->required();
    trc->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    auto* ver = app.add_subcommand("verify", "run a verification suite");
    ver->add_option("suite", suite,
                    "skein | jumps | appendix | kernel | dualpath | identities | all");
    ver->add_option("--seed", seed, "seed for randomized suites");

    auto* cat = app.add_subcommand("catalog", "list or export the built-in catalog");
    cat->add_option("--export", export_name, "entry to export in its file format");
    cat->add_option("--n", n, "parameter for parametrized entries");
    cat->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    CLI11_PARSE(app, argc, argv);

    try {
        load_cache();
        int rc = 0;
        if (inv->parsed()) rc = cmd_invariants(input, n, format);
        else if (trc->parsed()) rc = cmd_trace(input, format);
        else if (ver->parsed()) rc = cmd_verify(suite, seed);
        else if (cat->parsed()) rc = cmd_catalog(export_name, n, format);
        save_cache();
        return rc;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
