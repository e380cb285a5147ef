#pragma once

// Combinatorial model of oriented link and tangle diagrams.
//
// A crossing stores its four incident arcs counterclockwise starting from the
// incoming under-arc, plus a flag telling at which of the two over-ports the
// over-strand enters:
//
//        a[2]                    under strand enters at a[0], leaves at a[2];
//     a[3]  X  a[1]              over strand runs a[3] -> a[1] when
//        a[0]                    over_from_d is set, else a[1] -> a[3].
//
// Crossing sign: +1 iff the over strand runs a[3] -> a[1]. The convention is
// pinned by two anchors: the positive Hopf link built from the braid s^2 has
// linking number +1, and the catalog's left-handed Whitehead link has
// Sato-Levine invariant +1.
//
// Arcs are positive integers, each occurring exactly twice over all crossing
// ports; components are the cycles of the successor structure. A component
// with no crossings (free loop) is a single-arc cycle.
//
// Text form ("X+" / "X-" records the crossing sign; C clauses pin component
// order and orientation):
//
//   PD[2; X+(1,3,2,4), X+(2,4,1,3); C(1: 1,2), C(2: 3,4)]
//   T[strands=2; X-(...); E(NW=1, NE=2, SW=3, SE=4); C(1: 1,2), C(2: 3,4)]
//
// Plain X(...) is accepted on input when the over-direction can be inferred.

#include "qlink/int.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qlink {

struct Crossing {
    std::array<int, 4> a{};
    bool over_from_d = true;

    int under_in() const { return a[0]; }
    int under_out() const { return a[2]; }
    int over_in() const { return over_from_d ? a[3] : a[1]; }
    int over_out() const { return over_from_d ? a[1] : a[3]; }
    int sign() const { return over_from_d ? 1 : -1; }

    Crossing switched() const {
        // swap which strand passes over; the successor structure is unchanged
        if (over_from_d) return Crossing{{a[3], a[0], a[1], a[2]}, false};
        return Crossing{{a[1], a[2], a[3], a[0]}, true};
    }

    bool operator==(const Crossing& r) const { return a == r.a && over_from_d == r.over_from_d; }
    bool operator<(const Crossing& r) const {
        return a != r.a ? a < r.a : over_from_d < r.over_from_d;
    }
};

namespace detail {

// Successor map over arcs induced by a crossing list.
inline std::map<int, int> successors(const std::vector<Crossing>& xs) {
    std::map<int, int> succ;
    auto put = [&](int from, int to) {
        if (!succ.emplace(from, to).second)
            throw std::invalid_argument("diagram: arc " + std::to_string(from) +
                                        " leaves two crossings");
    };
    for (const auto& c : xs) {
        put(c.under_in(), c.under_out());
        put(c.over_in(), c.over_out());
    }
    return succ;
}

// Rewrites arc ids through a relabeling map (identity where missing).
inline int remap(const std::map<int, int>& f, int arc) {
    auto it = f.find(arc);
    return it == f.end() ? arc : it->second;
}

struct ArcMerger {
    std::map<int, int> parent;
    int find(int x) {
        auto it = parent.find(x);
        if (it == parent.end()) return x;
        int r = find(it->second);
        parent[x] = r;
        return r;
    }
    void unite(int x, int y) {
        int rx = find(x), ry = find(y);
        if (rx != ry) parent[std::max(rx, ry)] = std::min(rx, ry);
    }
};

}  // namespace detail

class LinkDiagram {
  public:
    LinkDiagram() = default;

    // `components`: the arc cycles in traversal order. Validates everything.
    LinkDiagram(std::vector<Crossing> crossings, std::vector<std::vector<int>> components)
        : crossings_(std::move(crossings)), components_(std::move(components)) {
        validate();
    }

    // Derives components from the crossings alone (no free loops possible).
    static LinkDiagram from_crossings(std::vector<Crossing> crossings) {
        auto comps = derive_components(crossings, {});
        return LinkDiagram(std::move(crossings), std::move(comps));
    }

    // Derives components from crossings plus explicitly listed free loops.
    static LinkDiagram assemble(std::vector<Crossing> crossings, const std::vector<int>& free_loops) {
        auto comps = derive_components(crossings, free_loops);
        return LinkDiagram(std::move(crossings), std::move(comps));
    }

    int num_crossings() const { return static_cast<int>(crossings_.size()); }
    int num_components() const { return static_cast<int>(components_.size()); }
    const std::vector<Crossing>& crossings() const { return crossings_; }
    const Crossing& crossing(int idx) const { return crossings_.at(idx); }
    const std::vector<std::vector<int>>& components() const { return components_; }

    // 1-based component index of an arc.
    int component_of(int arc) const {
        auto it = comp_of_.find(arc);
        if (it == comp_of_.end()) throw std::invalid_argument("unknown arc");
        return it->second;
    }

    int crossing_sign(int idx) const { return crossing(idx).sign(); }

    bool is_self_crossing(int idx) const {
        const Crossing& c = crossing(idx);
        return component_of(c.under_in()) == component_of(c.over_in());
    }

    // Half the signed count of crossings between components i and j.
    Int linking_number(int i, int j) const {
        if (i == j) throw std::invalid_argument("linking_number: components must differ");
        Int s = 0;
        for (const auto& c : crossings_) {
            int cu = component_of(c.under_in()), co = component_of(c.over_in());
            if ((cu == i && co == j) || (cu == j && co == i)) s += c.sign();
        }
        if (s % 2 != 0) throw std::logic_error("linking_number: odd crossing sum");
        return s / 2;
    }

    // Sum over all unordered pairs (the total linking number of a closure).
    Int total_linking_number() const {
        Int s = 0;
        for (int i = 1; i <= num_components(); ++i)
            for (int j = i + 1; j <= num_components(); ++j) s += linking_number(i, j);
        return s;
    }

    LinkDiagram switched(int idx) const {
        std::vector<Crossing> xs = crossings_;
        xs[idx] = xs[idx].switched();
        return LinkDiagram(std::move(xs), components_);
    }

    LinkDiagram mirrored() const {
        std::vector<Crossing> xs = crossings_;
        for (auto& c : xs) c = c.switched();
        return LinkDiagram(std::move(xs), components_);
    }

    // Oriented smoothing: the crossing disappears, under-in flows to over-out
    // and over-in flows to under-out.
    LinkDiagram smoothed(int idx) const {
        const Crossing& c = crossing(idx);
        std::vector<Crossing> xs;
        for (int k = 0; k < num_crossings(); ++k)
            if (k != idx) xs.push_back(crossings_[k]);
        detail::ArcMerger m;
        m.unite(c.under_in(), c.over_out());
        m.unite(c.over_in(), c.under_out());
        std::map<int, int> f;
        for (int arc : {c.under_in(), c.under_out(), c.over_in(), c.over_out()})
            f[arc] = m.find(arc);
        for (auto& x : xs)
            for (auto& arc : x.a) arc = detail::remap(f, arc);
        // free loops: merged classes with no remaining incidence, plus the old ones
        std::set<int> classes;
        for (int arc : {c.under_in(), c.under_out(), c.over_in(), c.over_out()})
            classes.insert(m.find(arc));
        std::set<int> used;
        for (const auto& x : xs)
            for (int arc : x.a) used.insert(arc);
        std::vector<int> loops = free_loop_arcs();
        for (int cls : classes)
            if (!used.count(cls)) loops.push_back(cls);
        auto comps = derive_components(xs, loops);
        return LinkDiagram(std::move(xs), std::move(comps));
    }

    // Reverses the orientation of one component (1-based).
    LinkDiagram reversed(int comp) const {
        std::vector<Crossing> xs = crossings_;
        for (auto& c : xs) {
            bool under_here = component_of(c.under_in()) == comp;
            bool over_here = component_of(c.over_in()) == comp;
            if (under_here) c = Crossing{{c.a[2], c.a[3], c.a[0], c.a[1]}, !c.over_from_d};
            if (over_here) c.over_from_d = !c.over_from_d;
        }
        std::vector<std::vector<int>> comps = components_;
        auto& cyc = comps[comp - 1];
        std::reverse(cyc.begin(), cyc.end());
        return LinkDiagram(std::move(xs), std::move(comps));
    }

    // The knot diagram of one component: other components' arcs and crossings
    // are deleted, with strands joined straight through mixed crossings.
    LinkDiagram component_subdiagram(int comp) const {
        std::vector<Crossing> xs;
        detail::ArcMerger m;
        for (const auto& c : crossings_) {
            bool under_here = component_of(c.under_in()) == comp;
            bool over_here = component_of(c.over_in()) == comp;
            if (under_here && over_here) {
                xs.push_back(c);
            } else if (under_here) {
                m.unite(c.under_in(), c.under_out());
            } else if (over_here) {
                m.unite(c.over_in(), c.over_out());
            }
        }
        std::map<int, int> f;
        for (int arc : components_[comp - 1]) f[arc] = m.find(arc);
        for (auto& x : xs)
            for (auto& arc : x.a) arc = detail::remap(f, arc);
        std::set<int> used;
        for (const auto& x : xs)
            for (int arc : x.a) used.insert(arc);
        std::vector<int> loops;
        std::set<int> cls;
        for (int arc : components_[comp - 1]) cls.insert(m.find(arc));
        for (int c2 : cls)
            if (!used.count(c2)) loops.push_back(c2);
        auto comps = derive_components(xs, loops);
        LinkDiagram r(std::move(xs), std::move(comps));
        if (r.num_components() != 1)
            throw std::logic_error("component_subdiagram: expected a knot diagram");
        return r;
    }

    // Linking numbers of the two lobes at a self-crossing with component j.
    // The first lobe is the one entered along the under-out arc.
    std::pair<Int, Int> lobe_linking_numbers(int idx, int j) const {
        const Crossing& c = crossing(idx);
        if (!is_self_crossing(idx))
            throw std::invalid_argument("lobe_linking_numbers: not a self-crossing");
        int i = component_of(c.under_in());
        if (j == i) throw std::invalid_argument("lobe_linking_numbers: j must be the other component");

        // walk the component cycle from under_out until the arc entering the
        // crossing again (over_in); those arcs form the first lobe
        std::set<int> lobe;
        int arc = c.under_out();
        while (true) {
            lobe.insert(arc);
            if (arc == c.over_in()) break;
            arc = succ_.at(arc);
            if (arc == c.under_out())
                throw std::logic_error("lobe walk did not return to the crossing");
        }
        Int sa = 0, sb = 0;
        for (int k = 0; k < num_crossings(); ++k) {
            if (k == idx) continue;
            const Crossing& x = crossings_[k];
            int cu = component_of(x.under_in()), co = component_of(x.over_in());
            int iarc = -1;
            if (cu == i && co == j) iarc = x.under_in();
            else if (co == i && cu == j) iarc = x.over_in();
            else continue;
            (lobe.count(iarc) ? sa : sb) += x.sign();
        }
        if (sa % 2 != 0 || sb % 2 != 0) throw std::logic_error("lobe linking: odd crossing sum");
        return {sa / 2, sb / 2};
    }

    static LinkDiagram disjoint_union(const LinkDiagram& d1, const LinkDiagram& d2) {
        int shift = d1.max_arc();
        std::vector<Crossing> xs = d1.crossings_;
        for (auto c : d2.crossings_) {
            for (auto& arc : c.a) arc += shift;
            xs.push_back(c);
        }
        auto comps = d1.components_;
        for (auto cyc : d2.components_) {
            for (auto& arc : cyc) arc += shift;
            comps.push_back(std::move(cyc));
        }
        return LinkDiagram(std::move(xs), std::move(comps));
    }

    // base_order: component indices (1-based permutation); basepoints: an arc
    // of each of those components to start from. Defaults: declared order,
    // first arc of each cycle.
    bool is_descending(std::vector<int> base_order = {}, std::map<int, int> basepoints = {}) const {
        return first_met_under(std::move(base_order), std::move(basepoints)) == -1;
    }

    // Index of the first crossing met on its under-strand before being met on
    // its over-strand, along the given traversal; -1 if none (descending).
    int first_met_under(std::vector<int> base_order = {}, std::map<int, int> basepoints = {}) const {
        if (base_order.empty()) {
            base_order.resize(num_components());
            std::iota(base_order.begin(), base_order.end(), 1);
        }
        std::set<int> seen;
        for (int ci : base_order) {
            const auto& cyc = components_.at(ci - 1);
            int start = basepoints.count(ci) ? basepoints.at(ci) : cyc.front();
            int arc = start;
            do {
                // the crossing consuming this arc
                int k = consumer(arc);
                if (k >= 0) {
                    if (!seen.count(k)) {
                        seen.insert(k);
                        if (crossings_[k].under_in() == arc) return k;
                    }
                    arc = succ_.at(arc);
                } else {
                    break;  // free loop
                }
            } while (arc != start);
        }
        return -1;
    }

    // Canonical relabeling: components ordered by smallest arc id, arcs
    // renumbered consecutively along each cycle starting from its smallest arc.
    LinkDiagram canonical() const {
        std::vector<int> order(num_components());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int x, int y) {
            return *std::min_element(components_[x].begin(), components_[x].end()) <
                   *std::min_element(components_[y].begin(), components_[y].end());
        });
        std::map<int, int> relabel;
        std::vector<std::vector<int>> comps;
        int next = 1;
        for (int ci : order) {
            const auto& cyc = components_[ci];
            auto mn = std::min_element(cyc.begin(), cyc.end());
            std::vector<int> out;
            for (std::size_t s = 0; s < cyc.size(); ++s) {
                int arc = cyc[(static_cast<std::size_t>(mn - cyc.begin()) + s) % cyc.size()];
                relabel[arc] = next;
                out.push_back(next);
                ++next;
            }
            comps.push_back(std::move(out));
        }
        std::vector<Crossing> xs = crossings_;
        for (auto& c : xs)
            for (auto& arc : c.a) arc = relabel.at(arc);
        std::sort(xs.begin(), xs.end());
        return LinkDiagram(std::move(xs), std::move(comps));
    }

    std::string serialize() const {
        std::ostringstream os;
        os << "PD[" << num_components() << ";";
        bool first = true;
        for (const auto& c : crossings_) {
            os << (first ? " " : ", ") << "X" << (c.sign() > 0 ? "+" : "-") << "(" << c.a[0]
               << "," << c.a[1] << "," << c.a[2] << "," << c.a[3] << ")";
            first = false;
        }
        os << ";";
        for (int i = 0; i < num_components(); ++i) {
            os << (i == 0 ? " " : ", ") << "C(" << (i + 1) << ":";
            for (std::size_t s = 0; s < components_[i].size(); ++s)
                os << (s == 0 ? " " : ",") << components_[i][s];
            os << ")";
        }
        os << "]";
        return os.str();
    }

    std::string canonical_text() const { return canonical().serialize(); }

    static LinkDiagram parse(const std::string& text);

    bool operator==(const LinkDiagram& r) const {
        return crossings_ == r.crossings_ && components_ == r.components_;
    }

    int max_arc() const {
        int mx = 0;
        for (const auto& cyc : components_)
            for (int arc : cyc) mx = std::max(mx, arc);
        return mx;
    }

    // Index of the crossing consuming an arc, or -1 on a free loop.
    int consumer_of(int arc) const { return consumer(arc); }

  private:
    friend class TangleDiagram;

    std::vector<int> free_loop_arcs() const {
        std::vector<int> loops;
        for (const auto& cyc : components_)
            if (cyc.size() == 1 && !succ_.count(cyc[0])) loops.push_back(cyc[0]);
        return loops;
    }

    int consumer(int arc) const {
        auto it = consumer_.find(arc);
        return it == consumer_.end() ? -1 : it->second;
    }

    static std::vector<std::vector<int>> derive_components(const std::vector<Crossing>& xs,
                                                           const std::vector<int>& free_loops) {
        auto succ = detail::successors(xs);
        std::vector<std::vector<int>> comps;
        std::set<int> visited;
        std::set<int> arcs;
        for (const auto& [from, to] : succ) {
            arcs.insert(from);
            arcs.insert(to);
        }
        for (int start : arcs) {
            if (visited.count(start)) continue;
            std::vector<int> cyc;
            int arc = start;
            do {
                if (visited.count(arc))
                    throw std::invalid_argument("diagram: arcs do not close into disjoint cycles");
                visited.insert(arc);
                cyc.push_back(arc);
                auto it = succ.find(arc);
                if (it == succ.end())
                    throw std::invalid_argument("diagram: arc " + std::to_string(arc) +
                                                " has no successor");
                arc = it->second;
            } while (arc != start);
            comps.push_back(std::move(cyc));
        }
        for (int arc : free_loops) comps.push_back({arc});
        std::sort(comps.begin(), comps.end(), [](const auto& x, const auto& y) {
            return *std::min_element(x.begin(), x.end()) < *std::min_element(y.begin(), y.end());
        });
        return comps;
    }

    void validate() {
        // each arc occurs exactly twice over all ports, once consumed, once produced
        std::map<int, int> count;
        for (const auto& c : crossings_)
            for (int arc : c.a) ++count[arc];
        for (const auto& [arc, n] : count) {
            int in_comp = 0;
            for (const auto& cyc : components_)
                in_comp += static_cast<int>(std::count(cyc.begin(), cyc.end(), arc));
            if (n != 2 || in_comp != 1)
                throw std::invalid_argument("diagram: arc " + std::to_string(arc) +
                                            " must occur exactly twice in crossings and once in a component");
        }
        succ_ = detail::successors(crossings_);
        consumer_.clear();
        for (int k = 0; k < num_crossings(); ++k) {
            for (int arc : {crossings_[k].under_in(), crossings_[k].over_in()}) {
                if (!consumer_.emplace(arc, k).second)
                    throw std::invalid_argument("diagram: arc " + std::to_string(arc) +
                                                " enters two crossings");
            }
        }
        // declared components must match the successor structure
        comp_of_.clear();
        std::set<int> seen;
        for (std::size_t i = 0; i < components_.size(); ++i) {
            const auto& cyc = components_[i];
            if (cyc.empty()) throw std::invalid_argument("diagram: empty component");
            for (std::size_t s = 0; s < cyc.size(); ++s) {
                int arc = cyc[s], nxt = cyc[(s + 1) % cyc.size()];
                if (!seen.insert(arc).second)
                    throw std::invalid_argument("diagram: arc " + std::to_string(arc) +
                                                " in two components");
                comp_of_[arc] = static_cast<int>(i) + 1;
                if (cyc.size() == 1 && !succ_.count(arc)) continue;  // free loop
                auto it = succ_.find(arc);
                if (it == succ_.end() || it->second != nxt)
                    throw std::invalid_argument("diagram: component cycle disagrees with crossings at arc " +
                                                std::to_string(arc));
            }
        }
        for (const auto& [from, to] : succ_) {
            (void)to;
            if (!comp_of_.count(from))
                throw std::invalid_argument("diagram: arc " + std::to_string(from) +
                                            " not covered by a component");
        }
    }

    std::vector<Crossing> crossings_;
    std::vector<std::vector<int>> components_;
    std::map<int, int> succ_;      // arc -> next arc along its component
    std::map<int, int> consumer_;  // arc -> crossing index consuming it
    std::map<int, int> comp_of_;
};

// ---------------------------------------------------------------------------
// Tangles (two-strand string links)

class TangleDiagram {
  public:
    // strand 1 runs NW -> NE, strand 2 runs SW -> SE.
    TangleDiagram(std::vector<Crossing> crossings, std::vector<int> strand1,
                  std::vector<int> strand2)
        : crossings_(std::move(crossings)), strands_{std::move(strand1), std::move(strand2)} {
        validate();
    }

    static TangleDiagram trivial() { return TangleDiagram({}, {1}, {2}); }

    const std::vector<Crossing>& crossings() const { return crossings_; }
    const std::vector<int>& strand(int i) const { return strands_.at(i - 1); }
    int num_crossings() const { return static_cast<int>(crossings_.size()); }

    int nw() const { return strands_[0].front(); }
    int ne() const { return strands_[0].back(); }
    int sw() const { return strands_[1].front(); }
    int se() const { return strands_[1].back(); }

    int max_arc() const {
        int mx = 0;
        for (const auto& s : strands_)
            for (int arc : s) mx = std::max(mx, arc);
        return mx;
    }

    bool operator==(const TangleDiagram& r) const {
        return crossings_ == r.crossings_ && strands_ == r.strands_;
    }

    // Stacking connected sum: s2 follows s1 along the axis.
    static TangleDiagram connect_sum(const TangleDiagram& s1, const TangleDiagram& s2) {
        int shift = s1.max_arc();
        std::vector<Crossing> xs = s1.crossings_;
        for (auto c : s2.crossings_) {
            for (auto& arc : c.a) arc += shift;
            xs.push_back(c);
        }
        auto sh = [&](const std::vector<int>& v) {
            std::vector<int> r;
            for (int arc : v) r.push_back(arc + shift);
            return r;
        };
        std::vector<int> st1 = s1.strands_[0], st2 = s1.strands_[1];
        std::vector<int> t1 = sh(s2.strands_[0]), t2 = sh(s2.strands_[1]);
        // join NE(s1) with NW(s2) and SE(s1) with SW(s2): identify the arcs
        glue(xs, st1, t1);
        glue(xs, st2, t2);
        return TangleDiagram(std::move(xs), std::move(st1), std::move(st2));
    }

    // Closure identifying the two ends of the axis: each strand closes onto
    // itself; always a 2-component link here.
    LinkDiagram numerator_closure() const {
        std::vector<Crossing> xs = crossings_;
        std::vector<std::vector<int>> comps;
        for (const auto& st : strands_) {
            std::vector<int> cyc = st;
            if (cyc.size() > 1) {
                // identify the last arc with the first
                int last = cyc.back(), first = cyc.front();
                for (auto& c : xs)
                    for (auto& arc : c.a)
                        if (arc == last) arc = first;
                cyc.pop_back();
            }
            comps.push_back(std::move(cyc));
        }
        return LinkDiagram(std::move(xs), std::move(comps));
    }

    // Closure joining the two strands at each end of the axis (left pair and
    // right pair); produces a one-component diagram.
    LinkDiagram denominator_closure() const {
        TangleDiagram t = reversed_strand2();
        // after reversal strand 2 runs SE -> SW; wire NE -> SE and SW -> NW
        std::vector<Crossing> xs = t.crossings_;
        std::vector<int> cyc = t.strands_[0];
        std::vector<int> s2 = t.strands_[1];
        // identify first arc of s2 with last of strand 1, and last of s2 with first of strand 1
        glue(xs, cyc, s2);
        int last = cyc.back(), first = cyc.front();
        if (last != first) {
            for (auto& c : xs)
                for (auto& arc : c.a)
                    if (arc == last) arc = first;
            cyc.pop_back();
        }
        return LinkDiagram(std::move(xs), {std::move(cyc)});
    }

    // Reflection in the midpoints of both strands and of the axis.
    TangleDiagram reflected() const {
        // reverse both strands (every crossing rotates by two and keeps its
        // flag twice-flipped) and mirror the axis: left-right flip keeps
        // over/under but reverses the stacking order and negates signs.
        std::vector<Crossing> xs;
        for (const auto& c : crossings_) {
            // reversing both strands: under pass rotates the tuple, over flag flips twice
            Crossing r{{c.a[2], c.a[3], c.a[0], c.a[1]}, c.over_from_d};
            // axis flip: swap the roles of the two over ports (negates the sign)
            r = Crossing{{r.a[0], r.a[3], r.a[2], r.a[1]}, !r.over_from_d};
            xs.push_back(r);
        }
        auto rev = [](std::vector<int> v) {
            std::reverse(v.begin(), v.end());
            return v;
        };
        return TangleDiagram(std::move(xs), rev(strands_[0]), rev(strands_[1]));
    }

    TangleDiagram mirrored() const {
        std::vector<Crossing> xs = crossings_;
        for (auto& c : xs) c = c.switched();
        return TangleDiagram(std::move(xs), strands_[0], strands_[1]);
    }

  private:
    TangleDiagram reversed_strand2() const {
        std::vector<Crossing> xs = crossings_;
        std::set<int> s2(strands_[1].begin(), strands_[1].end());
        for (auto& c : xs) {
            bool under_here = s2.count(c.under_in());
            bool over_here = s2.count(c.over_in());
            if (under_here) c = Crossing{{c.a[2], c.a[3], c.a[0], c.a[1]}, !c.over_from_d};
            if (over_here) c.over_from_d = !c.over_from_d;
        }
        std::vector<int> rev = strands_[1];
        std::reverse(rev.begin(), rev.end());
        return TangleDiagram(std::move(xs), strands_[0], std::move(rev));
    }

    static void glue(std::vector<Crossing>& xs, std::vector<int>& left, std::vector<int>& right) {
        int a = left.back(), b = right.front();
        for (auto& c : xs)
            for (auto& arc : c.a)
                if (arc == b) arc = a;
        left.pop_back();
        left.push_back(a);
        for (std::size_t i = 1; i < right.size(); ++i) left.push_back(right[i]);
        if (right.size() == 1) { /* the joined arc is shared; nothing more */ }
    }

    void validate() {
        if (strands_[0].empty() || strands_[1].empty())
            throw std::invalid_argument("tangle: empty strand");
        auto succ = detail::successors(crossings_);
        std::map<int, int> count;
        for (const auto& c : crossings_)
            for (int arc : c.a) ++count[arc];
        std::set<int> seen;
        for (const auto& st : strands_) {
            for (std::size_t s = 0; s < st.size(); ++s) {
                if (!seen.insert(st[s]).second)
                    throw std::invalid_argument("tangle: arc in two strand positions");
                if (s + 1 < st.size()) {
                    auto it = succ.find(st[s]);
                    if (it == succ.end() || it->second != st[s + 1])
                        throw std::invalid_argument("tangle: strand path disagrees with crossings");
                }
            }
            // boundary arcs occur once in crossings (or zero for a bare strand)
        }
        for (const auto& [arc, n] : count) {
            if (!seen.count(arc))
                throw std::invalid_argument("tangle: arc " + std::to_string(arc) +
                                            " not on a strand");
            bool boundary = arc == nw() || arc == ne() || arc == sw() || arc == se();
            int expect = 2;
            if (boundary) {
                // first and last arcs have a free end each; an arc that is both
                // first and last (bare strand) never meets a crossing
                const auto& s1 = strands_[0];
                const auto& s2 = strands_[1];
                bool first_and_last = (s1.size() == 1 && arc == s1[0]) ||
                                      (s2.size() == 1 && arc == s2[0]);
                expect = first_and_last ? 0 : 1;
                if ((arc == nw() && arc == ne()) || (arc == sw() && arc == se())) expect = 0;
            }
            if (n != expect)
                throw std::invalid_argument("tangle: arc " + std::to_string(arc) +
                                            " has wrong crossing incidence");
        }
    }

    std::vector<Crossing> crossings_;
    std::array<std::vector<int>, 2> strands_;
};

// ---------------------------------------------------------------------------
// text parsing

namespace detail {

struct PdScanner {
    const std::string& s;
    std::size_t i = 0;

    explicit PdScanner(const std::string& text) : s(text) {}

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("pd parse error at position " + std::to_string(i) + ": " + what);
    }
    void ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool lit(const std::string& tok) {
        ws();
        if (s.compare(i, tok.size(), tok) == 0) {
            i += tok.size();
            return true;
        }
        return false;
    }
    void expect(const std::string& tok) {
        if (!lit(tok)) fail("expected '" + tok + "'");
    }
    int integer() {
        ws();
        std::size_t start = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) fail("expected integer");
        return std::stoi(s.substr(start, i - start));
    }
    bool peek(char c) {
        ws();
        return i < s.size() && s[i] == c;
    }
};

struct ParsedPd {
    int m = 0;
    std::vector<std::array<int, 4>> tuples;
    std::vector<int> flags;  // +1 / -1 / 0 unknown
    std::vector<std::vector<int>> comps;  // may be empty
};

inline ParsedPd scan_pd_body(PdScanner& sc, bool tangle) {
    ParsedPd p;
    if (!tangle) {
        p.m = sc.integer();
        sc.expect(";");
    }
    // crossings
    while (true) {
        sc.ws();
        if (sc.peek(';') || sc.peek(']') || sc.peek('E') || sc.peek('C')) break;
        sc.expect("X");
        int flag = 0;
        if (sc.peek('+')) {
            ++sc.i;
            flag = 1;
        } else if (sc.peek('-')) {
            ++sc.i;
            flag = -1;
        }
        sc.expect("(");
        std::array<int, 4> t{};
        for (int k = 0; k < 4; ++k) {
            t[k] = sc.integer();
            if (k < 3) sc.expect(",");
        }
        sc.expect(")");
        p.tuples.push_back(t);
        p.flags.push_back(flag);
        if (!sc.lit(",")) break;
    }
    return p;
}

inline std::vector<int> scan_clause_list(PdScanner& sc) {
    std::vector<int> v;
    while (true) {
        v.push_back(sc.integer());
        if (!sc.lit(",")) break;
    }
    return v;
}

// Resolve unknown over-directions from per-occurrence in/out roles and a
// declared successor structure (cyclic for links, open paths for tangles).
inline std::vector<Crossing> resolve_flags_with_succ(const ParsedPd& p,
                                                     const std::map<int, int>& declared_succ) {
    const std::size_t n = p.tuples.size();
    std::vector<int> flag = p.flags;  // +1: over_from_d, -1: over from b, 0 unknown
    // role of (crossing, slot): +1 produced, -1 consumed
    std::map<std::pair<std::size_t, int>, int> role;
    std::map<int, std::vector<std::pair<std::size_t, int>>> occ;
    for (std::size_t k = 0; k < n; ++k)
        for (int slot = 0; slot < 4; ++slot) occ[p.tuples[k][slot]].push_back({k, slot});

    auto other_occ = [&](std::size_t k, int slot) {
        for (const auto& o : occ[p.tuples[k][slot]])
            if (o != std::make_pair(k, slot)) return o;
        return std::make_pair(k, slot);
    };
    auto set_role = [&](std::size_t k, int slot, int r, auto&& self) -> void {
        auto key = std::make_pair(k, slot);
        auto it = role.find(key);
        if (it != role.end()) {
            if (it->second != r) throw std::invalid_argument("diagram: inconsistent arc orientation");
            return;
        }
        role[key] = r;
        auto o = other_occ(k, slot);
        if (o != key) self(o.first, o.second, -r, self);
    };

    for (std::size_t k = 0; k < n; ++k) {
        set_role(k, 0, -1, set_role);
        set_role(k, 2, +1, set_role);
        if (flag[k] == 1) {
            set_role(k, 3, -1, set_role);
            set_role(k, 1, +1, set_role);
        } else if (flag[k] == -1) {
            set_role(k, 1, -1, set_role);
            set_role(k, 3, +1, set_role);
        }
    }

    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t k = 0; k < n; ++k) {
            if (flag[k] != 0) continue;
            int b = p.tuples[k][1], d = p.tuples[k][3];
            int rb = role.count({k, 1}) ? role[{k, 1}] : 0;
            int rd = role.count({k, 3}) ? role[{k, 3}] : 0;
            int decided = 0;
            if (rb == +1 || rd == -1) decided = 1;  // over leaves at b
            if (rb == -1 || rd == +1) decided = decided == 1 ? 0 : -1;
            if (decided == 0 && !declared_succ.empty()) {
                bool bd = declared_succ.count(b) && declared_succ.at(b) == d;
                bool db = declared_succ.count(d) && declared_succ.at(d) == b;
                if (db && !bd) decided = 1;
                if (bd && !db) decided = -1;
            }
            if (decided != 0) {
                flag[k] = decided;
                if (decided == 1) {
                    set_role(k, 3, -1, set_role);
                    set_role(k, 1, +1, set_role);
                } else {
                    set_role(k, 1, -1, set_role);
                    set_role(k, 3, +1, set_role);
                }
                progress = true;
            }
        }
    }
    for (std::size_t k = 0; k < n; ++k)
        if (flag[k] == 0)
            throw std::invalid_argument(
                "diagram: over-strand direction underdetermined at crossing " + std::to_string(k) +
                "; annotate with X+/X-");
    std::vector<Crossing> xs;
    for (std::size_t k = 0; k < n; ++k) xs.push_back({p.tuples[k], flag[k] == 1});
    return xs;
}

inline std::vector<Crossing> resolve_flags(const ParsedPd& p) {
    std::map<int, int> succ;
    for (const auto& cyc : p.comps)
        for (std::size_t s = 0; s < cyc.size(); ++s) succ[cyc[s]] = cyc[(s + 1) % cyc.size()];
    return resolve_flags_with_succ(p, succ);
}

}  // namespace detail

inline LinkDiagram LinkDiagram::parse(const std::string& text) {
    detail::PdScanner sc(text);
    sc.expect("PD[");
    detail::ParsedPd p = detail::scan_pd_body(sc, false);
    if (sc.lit(";") || sc.peek('C')) {
        while (sc.peek('C')) {
            sc.expect("C");
            sc.expect("(");
            int idx = sc.integer();
            sc.expect(":");
            p.comps.resize(std::max<std::size_t>(p.comps.size(), idx));
            p.comps[idx - 1] = detail::scan_clause_list(sc);
            sc.expect(")");
            if (!sc.lit(",")) break;
        }
    }
    sc.expect("]");
    sc.ws();
    if (sc.i != sc.s.size()) sc.fail("trailing input");

    std::vector<Crossing> xs = detail::resolve_flags(p);
    LinkDiagram d;
    if (!p.comps.empty()) {
        for (const auto& cyc : p.comps)
            if (cyc.empty()) throw std::invalid_argument("diagram: missing C clause for a component");
        d = LinkDiagram(std::move(xs), p.comps);
    } else {
        d = from_crossings(std::move(xs));
    }
    if (d.num_components() != p.m)
        throw std::invalid_argument("diagram: declared " + std::to_string(p.m) +
                                    " components, found " + std::to_string(d.num_components()));
    return d;
}

inline TangleDiagram parse_tangle(const std::string& text) {
    detail::PdScanner sc(text);
    sc.expect("T[");
    sc.expect("strands=2");
    sc.expect(";");
    detail::ParsedPd p = detail::scan_pd_body(sc, true);
    sc.lit(";");
    int nw = -1, ne = -1, sw = -1, se = -1;
    if (sc.peek('E')) {
        sc.expect("E");
        sc.expect("(");
        for (int k = 0; k < 4; ++k) {
            if (sc.lit("NW=")) nw = sc.integer();
            else if (sc.lit("NE=")) ne = sc.integer();
            else if (sc.lit("SW=")) sw = sc.integer();
            else if (sc.lit("SE=")) se = sc.integer();
            else sc.fail("expected endpoint assignment");
            if (k < 3) sc.expect(",");
        }
        sc.expect(")");
        sc.lit(";");
    }
    std::vector<std::vector<int>> strands(2);
    while (sc.peek('C')) {
        sc.expect("C");
        sc.expect("(");
        int idx = sc.integer();
        sc.expect(":");
        if (idx < 1 || idx > 2) sc.fail("strand index must be 1 or 2");
        strands[idx - 1] = detail::scan_clause_list(sc);
        sc.expect(")");
        if (!sc.lit(",")) break;
    }
    sc.expect("]");
    if (strands[0].empty() || strands[1].empty())
        throw std::invalid_argument("tangle: C clauses for both strands are required");
    std::map<int, int> succ;  // open paths: no wrap-around pair
    for (const auto& st : strands)
        for (std::size_t s = 0; s + 1 < st.size(); ++s) succ[st[s]] = st[s + 1];
    std::vector<Crossing> xs = detail::resolve_flags_with_succ(p, succ);
    TangleDiagram t(std::move(xs), strands[0], strands[1]);
    if (nw != -1 && (t.nw() != nw || t.ne() != ne || t.sw() != sw || t.se() != se))
        throw std::invalid_argument("tangle: E clause disagrees with strand paths");
    return t;
}

inline std::string serialize_tangle(const TangleDiagram& t) {
    std::ostringstream os;
    os << "T[strands=2;";
    bool first = true;
    for (const auto& c : t.crossings()) {
        os << (first ? " " : ", ") << "X" << (c.sign() > 0 ? "+" : "-") << "(" << c.a[0] << ","
           << c.a[1] << "," << c.a[2] << "," << c.a[3] << ")";
        first = false;
    }
    os << "; E(NW=" << t.nw() << ", NE=" << t.ne() << ", SW=" << t.sw() << ", SE=" << t.se()
       << ");";
    for (int i = 1; i <= 2; ++i) {
        os << (i == 1 ? " " : ", ") << "C(" << i << ":";
        const auto& st = t.strand(i);
        for (std::size_t s = 0; s < st.size(); ++s) os << (s == 0 ? " " : ",") << st[s];
        os << ")";
    }
    os << "]";
    return os.str();
}

}  // namespace qlink
