#pragma once

// Crossing-change traces: a homotopy recorded as a sequence of self-crossing
// events, and everything evaluated from them. Closed-link events carry the
// lobe linking numbers with the other components; fibered string-link events
// carry the signed linking number l_z of the joining loop with the other
// strand's track.
//
// Sign convention (frozen by the catalog anchors): an event with sign +1 has
// the positive resolution on the START side of the trace, so walking from the
// anchor end back to the start accumulates
//     beta~(start) - beta~(end) = sum_z eps_z n_z (l - n_z).

#include "qlink/conway.hpp"
#include "qlink/diagram.hpp"
#include "qlink/laurent.hpp"
#include "qlink/tangles.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qlink {

struct ClosedEvent {
    int component = 1;  // the self-crossing component (1-based)
    int sign = 1;       // +1: the start side is the positive resolution
    // other component -> (n, l - n), the two lobes' linking numbers with it
    std::map<int, std::pair<Int, Int>> lobes;

    bool operator==(const ClosedEvent& r) const {
        return component == r.component && sign == r.sign && lobes == r.lobes;
    }

    std::pair<Int, Int> lobe_pair(int other) const {
        auto it = lobes.find(other);
        if (it == lobes.end())
            throw std::invalid_argument("event carries no lobe data for component " +
                                        std::to_string(other));
        return it->second;
    }
};

struct FiberedEvent {
    int component = 1;  // 1 = the + strand, 2 = the - strand
    int sign = 1;       // eps_z
    Int lz = 0;         // signed: the ordering of the two preimages matters

    bool operator==(const FiberedEvent& r) const {
        return component == r.component && sign == r.sign && lz == r.lz;
    }
};

struct HomotopyTrace {
    enum class Kind { closed_link, fibered_string_link };
    Kind kind = Kind::closed_link;
    std::string start, end;
    std::vector<ClosedEvent> closed_events;
    std::vector<FiberedEvent> fibered_events;

    bool operator==(const HomotopyTrace& r) const {
        return kind == r.kind && start == r.start && end == r.end &&
               closed_events == r.closed_events && fibered_events == r.fibered_events;
    }
};

inline bool is_split_anchor(const std::string& name) {
    return name == "unlink" || name.rfind("unlink", 0) == 0;
}
inline bool is_beta_anchor(const std::string& name) {
    // the normalization family: split links and the H_n closures
    return is_split_anchor(name) || name == "hopf" || name.rfind("H_n", 0) == 0;
}

// ---------------------------------------------------------------------------
// jump formulas

// beta(L+) - beta(L-) = -n^2 for a two-component event with lobes (n, -n).
inline Int beta_jump(const ClosedEvent& e) {
    auto [n, rest] = e.lobe_pair(e.component == 1 ? 2 : 1);
    if (n + rest != 0)
        throw std::invalid_argument("beta_jump: lobes must sum to zero linking number");
    return -n * n;
}

// beta~(L+) - beta~(L-) = n (l - n).
inline Int beta_tilde_jump(const ClosedEvent& e) {
    auto [n, rest] = e.lobe_pair(e.component == 1 ? 2 : 1);
    return n * rest;
}

inline void check_closed(const HomotopyTrace& tr, const char* who) {
    if (tr.kind != HomotopyTrace::Kind::closed_link)
        throw std::invalid_argument(std::string(who) + ": closed-link trace required");
    std::optional<Int> l;
    for (const auto& e : tr.closed_events) {
        auto [n, rest] = e.lobe_pair(e.component == 1 ? 2 : 1);
        Int total = n + rest;
        if (l && *l != total)
            throw std::invalid_argument(std::string(who) + ": linking number changes along trace");
        l = total;
    }
}

// Accumulates (2.2) jumps backwards from an anchor end (an unlink or one of
// the normalization closures, where the invariant vanishes).
inline Int beta_tilde_from_trace(const HomotopyTrace& tr) {
    check_closed(tr, "beta_tilde_from_trace");
    if (!is_beta_anchor(tr.end))
        throw std::invalid_argument("beta_tilde_from_trace: end '" + tr.end +
                                    "' is not a normalization anchor");
    Int v = 0;
    for (const auto& e : tr.closed_events) v += e.sign * beta_tilde_jump(e);
    return v;
}

// ---------------------------------------------------------------------------
// the eta function from traces and from annular presentations

// eps (t^s + t^-s - 2) with s the linking number of either lobe with the
// companion (the two choices agree by symmetry).
inline LaurentPoly eta_jump(const ClosedEvent& e) {
    auto [s, rest] = e.lobe_pair(e.component == 1 ? 2 : 1);
    if (s + rest != 0)
        throw std::invalid_argument("eta_jump: eta requires zero linking number");
    LaurentPoly term = LaurentPoly::monomial(s) + LaurentPoly::monomial(-s) - LaurentPoly(Int(2));
    return term.scalar_mul(Int(e.sign));
}

// Accumulates (2.3) from a split end; all events must lie on one component
// (the supported one, K+).
inline LaurentPoly eta_from_trace(const HomotopyTrace& tr) {
    check_closed(tr, "eta_from_trace");
    if (!is_split_anchor(tr.end))
        throw std::invalid_argument("eta_from_trace: trace must end at a split link");
    int support = 0;
    LaurentPoly acc;
    for (const auto& e : tr.closed_events) {
        if (support == 0) support = e.component;
        if (e.component != support)
            throw std::invalid_argument("eta_from_trace: events move both components");
        acc = acc + eta_jump(e);
    }
    return acc;
}

// A link-homotopically flat presentation of the pattern component in the
// complement of an unknotted companion: self-crossings listed with the
// winding level carried by each pass, plus the cut-passage directions in
// order along the curve.
struct AnnularPattern {
    struct SelfCrossing {
        long over_level = 0;
        long under_level = 0;
        int sign = 1;
    };
    std::vector<SelfCrossing> crossings;
    std::vector<int> cut_directions;  // +-1 per passage through the companion disk
};

// sum_{n>=1} lk(K~, t^n K~) (t^n + t^-n - 2): the level difference buckets
// count the crossings between a lift and its n-th translate, two per crossing
// pair, so each bucket halves to the linking number.
inline LaurentPoly eta_unknotted(const AnnularPattern& p) {
    long winding = 0;
    for (int d : p.cut_directions) {
        if (d != 1 && d != -1)
            throw std::invalid_argument("eta_unknotted: cut directions must be +-1");
        winding += d;
    }
    if (winding != 0)
        throw std::invalid_argument("eta_unknotted: pattern winds (linking number nonzero)");
    std::map<long, long> bucket;
    for (const auto& c : p.crossings) {
        long diff = c.over_level - c.under_level;
        if (diff < 0) diff = -diff;
        if (diff != 0) bucket[diff] += c.sign;
    }
    LaurentPoly acc;
    for (const auto& [n, s] : bucket) {
        if (s % 2 != 0)
            throw std::invalid_argument("eta_unknotted: inconsistent level assignment (odd bucket)");
        Int c = Int(s / 2);
        LaurentPoly term =
            LaurentPoly::monomial(Int(n)) + LaurentPoly::monomial(Int(-n)) - LaurentPoly(Int(2));
        acc = acc + term.scalar_mul(c);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// refined Kirk invariant of fibered traces

inline void check_fibered(const HomotopyTrace& tr, const char* who) {
    if (tr.kind != HomotopyTrace::Kind::fibered_string_link)
        throw std::invalid_argument(std::string(who) + ": fibered string-link trace required");
}

// (sigma~+, sigma~-) with sigma~ = sum_z eps_z (t^(l_z) - 1) per strand.
inline std::pair<LaurentPoly, LaurentPoly> sigma_tilde(const HomotopyTrace& tr) {
    check_fibered(tr, "sigma_tilde");
    LaurentPoly plus, minus;
    for (const auto& e : tr.fibered_events) {
        LaurentPoly term = LaurentPoly::monomial(e.lz) - LaurentPoly::one();
        term = term.scalar_mul(Int(e.sign));
        (e.component == 1 ? plus : minus) = (e.component == 1 ? plus : minus) + term;
    }
    return {plus, minus};
}

// Kirk's invariant: the componentwise fold of sigma~.
inline std::pair<LaurentPoly, LaurentPoly> kirk_sigma(const HomotopyTrace& tr) {
    auto [p, m] = sigma_tilde(tr);
    return {p.phi_fold(), m.phi_fold()};
}

// sum eps_z l_z mod 2 over one strand's events, in {0, 1}.
inline int hudson_obstruction(const HomotopyTrace& tr, int component) {
    check_fibered(tr, "hudson_obstruction");
    Int s = 0;
    for (const auto& e : tr.fibered_events)
        if (e.component == component) s += e.sign * e.lz;
    return static_cast<int>(((s % 2) + 2) % 2);
}

// The closure invariants of a string link L read off from an untangling
// trace: beta(numer_0 L) = -(sigma0' + sigma0'')(1) and
// beta~(numer_1 L) = -sigma0''(1), each compared with the skein route.
struct SigmaConsistency {
    Int beta_closure, beta_from_sigma;
    Int beta_tilde_closure, beta_tilde_from_sigma;
    bool ok() const {
        return beta_closure == beta_from_sigma && beta_tilde_closure == beta_tilde_from_sigma;
    }
};

inline SigmaConsistency sigma_consistency(const HomotopyTrace& tr, const TangleDiagram& L,
                                          SkeinCache* cache = &SkeinCache::global()) {
    check_fibered(tr, "sigma_consistency");
    auto [p, m] = sigma_tilde(tr);
    LaurentPoly s0 = p + m;
    LaurentPoly d1 = s0.derivative(), d2 = s0.derivative().derivative();
    SigmaConsistency r;
    r.beta_from_sigma = -(d1 + d2).eval_at_one();
    r.beta_tilde_from_sigma = -d2.eval_at_one();
    r.beta_closure = sato_levine_beta(numer_l(L, 0), cache);
    r.beta_tilde_closure = beta_tilde(numer_l(L, 1), cache);
    return r;
}

// ---------------------------------------------------------------------------
// event classification

enum class EventClass { link_homotopy, weak_one_quasi };

// An event is a weak 1-quasi move when one lobe has zero linking number with
// every other component; every self-crossing event is at least a link
// homotopy move.
inline std::vector<EventClass> classify_events(const HomotopyTrace& tr) {
    check_closed(tr, "classify_events");
    std::vector<EventClass> out;
    for (const auto& e : tr.closed_events) {
        bool first_lobe_null = true, second_lobe_null = true;
        for (const auto& [other, pair] : e.lobes) {
            (void)other;
            if (pair.first != 0) first_lobe_null = false;
            if (pair.second != 0) second_lobe_null = false;
        }
        out.push_back(first_lobe_null || second_lobe_null ? EventClass::weak_one_quasi
                                                          : EventClass::link_homotopy);
    }
    return out;
}

}  // namespace qlink
