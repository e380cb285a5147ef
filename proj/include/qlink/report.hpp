#pragma once

// Invariant reports: every value is tagged with the route that computed it,
// so that disagreements between routes surface as explicit diffs. Identical
// inputs produce byte-identical reports.

#include "qlink/catalog.hpp"
#include "qlink/conway.hpp"
#include "qlink/milnor.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace qlink {

struct InvariantReport {
    std::string input;
    std::string hash;  // of the canonical serialization
    struct Entry {
        std::string name;
        std::string value;
        std::string route;
    };
    std::vector<Entry> entries;

    std::string to_text() const {
        std::ostringstream os;
        os << "input: " << input << "\nhash: " << hash << "\n";
        std::size_t w = 0;
        for (const auto& e : entries) w = std::max(w, e.name.size());
        for (const auto& e : entries) {
            os << "  " << e.name << std::string(w - e.name.size() + 2, ' ') << e.value << "    ["
               << e.route << "]\n";
        }
        return os.str();
    }

    std::string to_json() const {
        std::ostringstream os;
        os << "{\"input\": \"" << input << "\", \"hash\": \"" << hash << "\", \"invariants\": [";
        for (std::size_t i = 0; i < entries.size(); ++i) {
            os << (i ? ", " : "") << "{\"name\": \"" << entries[i].name << "\", \"value\": \""
               << entries[i].value << "\", \"route\": \"" << entries[i].route << "\"}";
        }
        os << "]}";
        return os.str();
    }
};

namespace detail {
inline std::string fnv1a(const std::string& s) {
    unsigned long long h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}
}  // namespace detail

inline InvariantReport invariant_report(const std::string& label, const LinkDiagram& d,
                                        SkeinCache* cache = &SkeinCache::global()) {
    InvariantReport r;
    r.input = label;
    r.hash = detail::fnv1a(d.canonical_text());
    auto add = [&](const std::string& name, const std::string& value, const std::string& route) {
        r.entries.push_back({name, value, route});
    };
    add("components", std::to_string(d.num_components()), "diagram");
    add("crossings", std::to_string(d.num_crossings()), "diagram");
    LaurentPoly nabla = conway_polynomial(d, cache);
    add("conway", nabla.to_text(), "polynomial");
    for (long i = 0; i <= 3; ++i)
        add("a" + std::to_string(i), nabla.coefficient(Int(i)).str(), "polynomial");
    if (d.num_components() == 2) {
        Int lk = d.linking_number(1, 2);
        add("lk", lk.str(), "diagram");
        add("beta~", beta_tilde(d, cache).str(), "polynomial");
        if (lk == 0) add("beta", sato_levine_beta(d, cache).str(), "polynomial");
        MuBar m12 = mu_bar(d, "12");
        add("mu(12)", m12.value.str() + " (mod " + m12.modulus.str() + ")", "mu-bar");
        MuBar m = mu_bar(d, "1122");
        add("mu(1122)", m.value.str() + " (mod " + m.modulus.str() + ")", "mu-bar");
        add("beta~ = mu(1122) mod lk", congruence_check(d, cache) ? "true" : "false", "dual");
        if (lk == 0)
            add("mu(1212) = -2 mu(1122)", mu_1212_relation(d) ? "true" : "false", "mu-bar");
    }
    return r;
}

}  // namespace qlink
