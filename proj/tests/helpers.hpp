#pragma once

// Shared test utilities: randomized diagram generators and an independent
// (memoization-free, traversal-randomized) Conway oracle.

#include "qlink/conway.hpp"
#include "qlink/diagram.hpp"
#include "qlink/tangles.hpp"

#include <map>
#include <numeric>
#include <random>
#include <vector>

namespace qlink::testing {

inline TangleDiagram random_braid_link(std::mt19937& rng, int max_pairs = 4) {
    std::uniform_int_distribution<int> pairs(0, max_pairs), sgn(0, 1);
    std::vector<int> word;
    int n = 2 * pairs(rng);
    for (int i = 0; i < n; ++i) word.push_back(sgn(rng) ? 1 : -1);
    return from_braid(word);
}

// Random 2-component diagram with a few kinks (self-crossings with (0, l) lobes).
// The closure linking number is kept near the braid's own so the diagrams stay
// small (at most 2*max_pairs + 2 + max_kinks crossings).
inline LinkDiagram random_link2(std::mt19937& rng, int max_pairs = 4, int max_kinks = 2) {
    std::uniform_int_distribution<int> delta(-1, 1), kinks(0, max_kinks), sgn(0, 1);
    TangleDiagram braid = random_braid_link(rng, max_pairs);
    long l = braid.numerator_closure().linking_number(1, 2).convert_to<long>() + delta(rng);
    LinkDiagram d = numer_l(braid, l);
    int nk = kinks(rng);
    for (int i = 0; i < nk; ++i) {
        const auto& comps = d.components();
        std::uniform_int_distribution<int> ci(0, static_cast<int>(comps.size()) - 1);
        const auto& cyc = comps[ci(rng)];
        std::uniform_int_distribution<int> ai(0, static_cast<int>(cyc.size()) - 1);
        d = add_kink(d, cyc[ai(rng)], sgn(rng) ? 1 : -1);
    }
    return d;
}

// Memoization-free skein evaluation with traversal order and basepoints
// rotated by r. Within a chain of crossing switches the component count is
// constant, so the rotated order is fixed and the recursion terminates.
inline LaurentPoly oracle_conway(const LinkDiagram& d, int r) {
    int m = d.num_components();
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 1);
    std::rotate(order.begin(), order.begin() + (r % m), order.end());
    std::map<int, int> bp;
    for (int i = 1; i <= m; ++i) {
        const auto& cyc = d.components()[i - 1];
        bp[i] = cyc[r % cyc.size()];
    }
    int k = d.first_met_under(order, bp);
    if (k < 0) return m == 1 ? LaurentPoly::one() : LaurentPoly::zero();
    LaurentPoly other = oracle_conway(d.switched(k), r);
    LaurentPoly zsm = LaurentPoly::t() * oracle_conway(d.smoothed(k), r);
    return d.crossing_sign(k) > 0 ? other + zsm : other - zsm;
}

}  // namespace qlink::testing
