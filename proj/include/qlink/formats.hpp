#pragma once

// JSON renderings of the core value types and the line-oriented trace file
// format. Emission is hand-formatted so identical values produce identical
// bytes; parsing goes through nlohmann/json.

#include "json.hpp"
#include "qlink/diagram.hpp"
#include "qlink/laurent.hpp"
#include "qlink/trace.hpp"

#include <sstream>
#include <string>

namespace qlink {

// ---------------------------------------------------------------------------
// Laurent polynomials: {"exp": coeff, ...} with string keys in increasing
// exponent order; {} is the zero polynomial.

inline std::string poly_to_json(const LaurentPoly& f) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [e, c] : f.coefficients()) {
        os << (first ? "" : ", ") << "\"" << e.str() << "\": " << c.str();
        first = false;
    }
    os << "}";
    return os.str();
}

inline LaurentPoly poly_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    LaurentPoly::Map m;
    for (auto it = j.begin(); it != j.end(); ++it) {
        Int c = it.value().is_string() ? Int(it.value().get<std::string>())
                                       : Int(it.value().get<long long>());
        if (c != 0) m[Int(it.key())] = c;
    }
    return LaurentPoly(std::move(m));
}

// ---------------------------------------------------------------------------
// diagrams: {"m": 2, "X": [{"arcs": [a,b,c,d], "sign": 1}, ...], "C": [[...], ...]}
// tangles:  {"strands": 2, "X": [...], "E": {...}, "C": [[...], [...]]}

inline std::string diagram_to_json(const LinkDiagram& d) {
    std::ostringstream os;
    os << "{\"m\": " << d.num_components() << ", \"X\": [";
    for (int k = 0; k < d.num_crossings(); ++k) {
        const Crossing& c = d.crossing(k);
        os << (k ? ", " : "") << "{\"arcs\": [" << c.a[0] << ", " << c.a[1] << ", " << c.a[2]
           << ", " << c.a[3] << "], \"sign\": " << c.sign() << "}";
    }
    os << "], \"C\": [";
    for (int i = 0; i < d.num_components(); ++i) {
        os << (i ? ", " : "") << "[";
        const auto& cyc = d.components()[i];
        for (std::size_t s = 0; s < cyc.size(); ++s) os << (s ? ", " : "") << cyc[s];
        os << "]";
    }
    os << "]}";
    return os.str();
}

namespace detail {
inline std::vector<Crossing> crossings_from_json(const nlohmann::json& j) {
    std::vector<Crossing> xs;
    for (const auto& x : j) {
        Crossing c;
        const auto& arcs = x.at("arcs");
        for (int i = 0; i < 4; ++i) c.a[i] = arcs.at(i).get<int>();
        c.over_from_d = x.at("sign").get<int>() > 0;
        xs.push_back(c);
    }
    return xs;
}
inline std::vector<std::vector<int>> cycles_from_json(const nlohmann::json& j) {
    std::vector<std::vector<int>> comps;
    for (const auto& cyc : j) comps.push_back(cyc.get<std::vector<int>>());
    return comps;
}
}  // namespace detail

inline LinkDiagram diagram_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    LinkDiagram d(detail::crossings_from_json(j.at("X")), detail::cycles_from_json(j.at("C")));
    if (d.num_components() != j.at("m").get<int>())
        throw std::invalid_argument("diagram json: component count mismatch");
    return d;
}

inline std::string tangle_to_json(const TangleDiagram& t) {
    std::ostringstream os;
    os << "{\"strands\": 2, \"X\": [";
    for (int k = 0; k < t.num_crossings(); ++k) {
        const Crossing& c = t.crossings()[k];
        os << (k ? ", " : "") << "{\"arcs\": [" << c.a[0] << ", " << c.a[1] << ", " << c.a[2]
           << ", " << c.a[3] << "], \"sign\": " << c.sign() << "}";
    }
    os << "], \"E\": {\"NW\": " << t.nw() << ", \"NE\": " << t.ne() << ", \"SW\": " << t.sw()
       << ", \"SE\": " << t.se() << "}, \"C\": [";
    for (int i = 1; i <= 2; ++i) {
        os << (i > 1 ? ", " : "") << "[";
        const auto& st = t.strand(i);
        for (std::size_t s = 0; s < st.size(); ++s) os << (s ? ", " : "") << st[s];
        os << "]";
    }
    os << "]}";
    return os.str();
}

inline TangleDiagram tangle_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    auto comps = detail::cycles_from_json(j.at("C"));
    if (comps.size() != 2) throw std::invalid_argument("tangle json: need two strands");
    TangleDiagram t(detail::crossings_from_json(j.at("X")), comps[0], comps[1]);
    if (j.contains("E")) {
        const auto& e = j.at("E");
        if (t.nw() != e.at("NW").get<int>() || t.ne() != e.at("NE").get<int>() ||
            t.sw() != e.at("SW").get<int>() || t.se() != e.at("SE").get<int>())
            throw std::invalid_argument("tangle json: E clause disagrees with strand paths");
    }
    return t;
}

// ---------------------------------------------------------------------------
// trace files: a header line {"kind", "start", "end"}, then one event per
// line, {"component", "sign", "lobes": {"j": [n, l-n]}} for closed-link
// traces and {"component", "sign", "lz"} for fibered ones.

inline std::string trace_to_text(const HomotopyTrace& tr) {
    std::ostringstream os;
    bool fibered = tr.kind == HomotopyTrace::Kind::fibered_string_link;
    os << "{\"kind\": \"" << (fibered ? "fibered-string-link" : "closed-link") << "\", \"start\": \""
       << tr.start << "\", \"end\": \"" << tr.end << "\"}\n";
    if (fibered) {
        for (const auto& e : tr.fibered_events)
            os << "{\"component\": " << e.component << ", \"sign\": " << e.sign
               << ", \"lz\": " << e.lz.str() << "}\n";
    } else {
        for (const auto& e : tr.closed_events) {
            os << "{\"component\": " << e.component << ", \"sign\": " << e.sign << ", \"lobes\": {";
            bool first = true;
            for (const auto& [j, pair] : e.lobes) {
                os << (first ? "" : ", ") << "\"" << j << "\": [" << pair.first.str() << ", "
                   << pair.second.str() << "]";
                first = false;
            }
            os << "}}\n";
        }
    }
    return os.str();
}

inline HomotopyTrace trace_from_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    HomotopyTrace tr;
    bool have_header = false;
    while (std::getline(is, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto j = nlohmann::json::parse(line);
        if (!have_header) {
            std::string kind = j.at("kind").get<std::string>();
            if (kind == "closed-link") tr.kind = HomotopyTrace::Kind::closed_link;
            else if (kind == "fibered-string-link") tr.kind = HomotopyTrace::Kind::fibered_string_link;
            else throw std::invalid_argument("trace: unknown kind '" + kind + "'");
            tr.start = j.at("start").get<std::string>();
            tr.end = j.at("end").get<std::string>();
            have_header = true;
            continue;
        }
        if (tr.kind == HomotopyTrace::Kind::fibered_string_link) {
            FiberedEvent e;
            e.component = j.at("component").get<int>();
            e.sign = j.at("sign").get<int>();
            e.lz = j.at("lz").is_string() ? Int(j.at("lz").get<std::string>())
                                          : Int(j.at("lz").get<long long>());
            tr.fibered_events.push_back(e);
        } else {
            ClosedEvent e;
            e.component = j.at("component").get<int>();
            e.sign = j.at("sign").get<int>();
            for (auto it = j.at("lobes").begin(); it != j.at("lobes").end(); ++it) {
                const auto& pair = it.value();
                e.lobes[std::stoi(it.key())] = {Int(pair.at(0).get<long long>()),
                                                Int(pair.at(1).get<long long>())};
            }
            tr.closed_events.push_back(e);
        }
    }
    if (!have_header) throw std::invalid_argument("trace: missing header line");
    return tr;
}

}  // namespace qlink
