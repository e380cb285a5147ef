#pragma once

// Named verification suites, runnable from the CLI and the acceptance tests:
//   skein      - skein identity, traversal-order independence, a1 = lk, splits
//   jumps      - the crossing-change identity for beta~ at self-crossings
//   appendix   - basic-commutator decompositions, xi / xi' exponents,
//                Hall-Witt, mu relations and the congruence on the catalog
//   kernel     - delta / delta~ membership of the sigma data, lattice spans
//   dualpath   - trace-accumulated invariants against the skein route
//   identities - the commutator identity suite
// Each check appends one line; a suite passes when nothing failed.

#include "qlink/catalog.hpp"
#include "qlink/commutator.hpp"
#include "qlink/conway.hpp"
#include "qlink/milnor.hpp"
#include "qlink/report.hpp"
#include "qlink/tangles.hpp"
#include "qlink/trace.hpp"

#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace qlink {

struct VerifyResult {
    std::string suite;
    int checked = 0;
    int failed = 0;
    std::vector<std::string> lines;

    bool ok() const { return failed == 0; }
    void note(bool pass, const std::string& what) {
        ++checked;
        if (!pass) ++failed;
        lines.push_back(std::string(pass ? "ok   " : "FAIL ") + what);
    }
    std::string summary() const {
        std::ostringstream os;
        os << suite << ": " << (checked - failed) << "/" << checked << " checks passed";
        return os.str();
    }
};

namespace verify_detail {

inline TangleDiagram random_braid(std::mt19937& rng, int max_pairs = 4) {
    std::uniform_int_distribution<int> pairs(0, max_pairs), sgn(0, 1);
    std::vector<int> word(2 * pairs(rng));
    for (auto& w : word) w = sgn(rng) ? 1 : -1;
    return from_braid(word);
}

inline LinkDiagram random_link2(std::mt19937& rng, int max_pairs = 4, int max_kinks = 2) {
    std::uniform_int_distribution<int> delta(-1, 1), kinks(0, max_kinks), sgn(0, 1);
    TangleDiagram braid = random_braid(rng, max_pairs);
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

// Memoization-free skein evaluation along a rotated traversal.
inline LaurentPoly conway_rotated(const LinkDiagram& d, int r) {
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
    LaurentPoly other = conway_rotated(d.switched(k), r);
    LaurentPoly zsm = LaurentPoly::t() * conway_rotated(d.smoothed(k), r);
    return d.crossing_sign(k) > 0 ? other + zsm : other - zsm;
}

inline std::vector<Int> window_vector(const LaurentPoly& f, const LaurentPoly& g, long degree) {
    std::vector<Int> v;
    for (const LaurentPoly* p : {&f, &g}) {
        for (long e = -degree; e <= degree; ++e) v.push_back(p->coefficient(Int(e)));
        if (!p->is_zero() && (p->min_exponent() < -degree || p->max_exponent() > degree))
            throw std::invalid_argument("window_vector: coefficient outside the window");
    }
    return v;
}

}  // namespace verify_detail

inline VerifyResult verify_skein(unsigned seed, int iterations = 1000) {
    using namespace verify_detail;
    VerifyResult r;
    r.suite = "skein";
    std::mt19937 rng(seed);
    SkeinCache* cache = &SkeinCache::global();

    int done = 0, bad = 0;
    while (done < iterations) {
        LinkDiagram d = random_link2(rng, 3, 2);
        if (d.num_crossings() == 0) continue;
        std::uniform_int_distribution<int> ci(0, d.num_crossings() - 1);
        int c = ci(rng);
        LinkDiagram pos = d.crossing_sign(c) > 0 ? d : d.switched(c);
        bool pass = conway_polynomial(pos, cache) - conway_polynomial(pos.switched(c), cache) ==
                    LaurentPoly::t() * conway_polynomial(pos.smoothed(c), cache);
        if (!pass) ++bad;
        ++done;
    }
    r.note(bad == 0, "skein identity on " + std::to_string(done) + " randomized crossings");

    int orders_bad = 0, orders_done = 0;
    while (orders_done < iterations) {
        LinkDiagram d = random_link2(rng, 2, 1);
        if (d.num_crossings() > 7) continue;
        LaurentPoly ref = conway_polynomial(d, cache);
        for (int rot = 1; rot <= 3 && orders_done < iterations; ++rot, ++orders_done)
            if (!(conway_rotated(d, rot) == ref)) ++orders_bad;
    }
    r.note(orders_bad == 0,
           "traversal-order independence on " + std::to_string(orders_done) + " evaluations");

    int a1_bad = 0;
    for (int i = 0; i < iterations; ++i) {
        LinkDiagram d = random_link2(rng, 3, 1);
        LaurentPoly nabla = conway_polynomial(d, cache);
        if (nabla.coefficient(Int(1)) != d.linking_number(1, 2)) ++a1_bad;
        if (nabla.coefficient(Int(0)) != 0) ++a1_bad;
    }
    r.note(a1_bad == 0, "a1 = lk and a0 = 0 on " + std::to_string(iterations) + " links");

    int split_bad = 0;
    for (int i = 0; i < 50; ++i) {
        LinkDiagram d =
            LinkDiagram::disjoint_union(random_link2(rng, 2, 1), random_link2(rng, 2, 1));
        if (!conway_polynomial(d, cache).is_zero()) ++split_bad;
    }
    r.note(split_bad == 0, "split diagrams have vanishing polynomial (50 cases)");
    return r;
}

inline VerifyResult verify_jumps(unsigned seed, int iterations = 1000) {
    using namespace verify_detail;
    VerifyResult r;
    r.suite = "jumps";
    std::mt19937 rng(seed);
    int done = 0, bad = 0, lobe_bad = 0;
    while (done < iterations) {
        LinkDiagram d = random_link2(rng, 3, 2);
        for (int k = 0; k < d.num_crossings() && done < iterations; ++k) {
            if (!d.is_self_crossing(k)) continue;
            int i0 = d.component_of(d.crossing(k).under_in());
            auto [a, b] = d.lobe_linking_numbers(k, i0 == 1 ? 2 : 1);
            if (a + b != d.linking_number(1, 2)) ++lobe_bad;
            LinkDiagram pos = d.crossing_sign(k) > 0 ? d : d.switched(k);
            auto [lhs, rhs] = jump_check_22(pos, k);
            if (lhs != rhs) ++bad;
            ++done;
        }
    }
    r.note(bad == 0, "beta~ jump identity on " + std::to_string(done) + " self-crossings");
    r.note(lobe_bad == 0, "lobe pairs sum to the linking number");
    return r;
}

inline VerifyResult verify_appendix(unsigned seed, int iterations = 1000) {
    VerifyResult r;
    r.suite = "appendix";
    std::mt19937 rng(seed);
    const FreeWord X = FreeWord::generator(1), Y = FreeWord::generator(2),
                   Z = FreeWord::generator(3);

    const std::vector<std::pair<long, long>> grid = {{1, 0},  {1, 3},   {2, 5},  {-2, 1}, {1, 1},
                                                     {2, 0},  {-1, -1}, {3, 2},  {-2, -3}, {2, 2},
                                                     {-3, 1}, {1, -2},  {0, 4}};
    int xi_bad = 0;
    for (auto [n, l] : grid) {
        FreeWord tau1 = X.pow(n) * Y.pow(n);
        FreeWord tau2 = X.pow(l - n) * Y.pow(l - n);
        BasicDecomposition dp = decompose_basic(commutator(commutator(tau2, Z), tau1));
        BasicDecomposition dx = decompose_basic(commutator(commutator(Z, tau1), tau1));
        for (int i = 0; i < 6; ++i)
            if (dp.e[i] != 0 || dx.e[i] != 0) ++xi_bad;
        if (dp.e[6] != Int(n * (l - n)) || dp.e[7] != Int(-2 * n * (l - n))) ++xi_bad;
        if (dx.e[6] != Int(-n * n) || dx.e[7] != Int(2 * n * n)) ++xi_bad;
    }
    r.note(xi_bad == 0, "xi and xi' exponents on a " + std::to_string(grid.size()) + "-point grid");

    std::uniform_int_distribution<int> len(0, 5), gen(1, 3), sgn(0, 1);
    auto rand_word = [&] {
        std::vector<FreeWord::Letter> ls;
        int n = len(rng);
        for (int i = 0; i < n; ++i) ls.push_back({gen(rng), sgn(rng) ? 1 : -1});
        return FreeWord(ls);
    };
    int hw_bad = 0;
    for (int i = 0; i < iterations; ++i)
        if (!hall_witt_mod_gamma4(rand_word(), rand_word(), rand_word())) ++hw_bad;
    r.note(hw_bad == 0, "hall-witt mod gamma_4 on " + std::to_string(iterations) + " triples");

    int dec_bad = 0;
    for (int i = 0; i < iterations; ++i) {
        FreeWord w = rand_word() * rand_word();
        BasicDecomposition d = decompose_basic(w);
        if (!(MagnusSeries::expand_reduced(rebuild_basic(d), 4) == MagnusSeries::expand_reduced(w, 4)))
            ++dec_bad;
    }
    r.note(dec_bad == 0, "basic-commutator reconstruction on " + std::to_string(iterations) + " words");

    const Catalog& cat = Catalog::instance();
    for (const char* name : {"whitehead-link", "whitehead-link-rh", "unlink", "whitehead-double"}) {
        r.note(mu_1212_relation(cat.get(name).link.value()),
               std::string("mu(1212) = -2 mu(1122) on ") + name);
    }
    std::vector<std::pair<std::string, long>> two_comp = {
        {"whitehead-link", 0}, {"whitehead-link-rh", 0}, {"hopf", 0},
        {"mazur", 0},          {"fake-mazur", 0},        {"unlink", 0},
        {"whitehead-double", 0}, {"whitehead-double-twisted", 0},
        {"H_n", -3}, {"H_n", -2}, {"H_n", -1}, {"H_n", 1}, {"H_n", 2}, {"H_n", 3}};
    for (const auto& [name, n] : two_comp) {
        CatalogEntry e = n == 0 ? cat.get(name) : cat.get(name, n);
        r.note(congruence_check(e.link.value()),
               "beta~ = mu(1122) mod lk on " + name + (n ? " (n=" + std::to_string(n) + ")" : ""));
    }
    return r;
}

inline VerifyResult verify_kernel(unsigned /*seed*/ = 0, int /*iterations*/ = 0) {
    using namespace verify_detail;
    VerifyResult r;
    r.suite = "kernel";
    const Catalog& cat = Catalog::instance();
    for (long n = 1; n <= 4; ++n) {
        auto [f, g] = cat.get("sigma-jin-w", n).sigma.value();
        r.note(delta_tilde_map(f, g) == std::tuple<Int, Int, Int, Int>{0, 0, 0, 0},
               "delta~(sigma~(J(W+^" + std::to_string(n) + "))) = 0");
        r.note(delta_map(f.phi_fold(), g.phi_fold()) == std::tuple<Int, Int, Int>{0, 0, 0},
               "delta(sigma(J(W+^" + std::to_string(n) + "))) = 0");
        auto [rf, rg] = cat.get("sigma-jin-w-rho-w", n).sigma.value();
        r.note(delta_tilde_map(rf, rg) == std::tuple<Int, Int, Int, Int>{0, 0, 0, 0},
               "delta~(sigma~(J(W+^" + std::to_string(n) + " # rho))) = 0");
    }
    for (const char* name : {"jin-w", "jin-w-rho-w"}) {
        auto [f, g] = sigma_tilde(cat.get(name).trace.value());
        r.note(delta_tilde_map(f, g) == std::tuple<Int, Int, Int, Int>{0, 0, 0, 0},
               std::string("delta~ = 0 on the ") + name + " trace");
    }

    // lattice span inside a degree-4 window: generators are the doubled
    // suspensions' sigma~ data, the target a small hand combination
    const long D = 4;
    std::vector<std::vector<Int>> gens;
    for (long n = 1; n <= D; ++n) {
        auto [f, g] = cat.get("sigma-jin-w-rho-w", n).sigma.value();
        gens.push_back(window_vector(f, g, D));
    }
    auto [f1, g1] = cat.get("sigma-jin-w-rho-w", 1).sigma.value();
    auto [f2, g2] = cat.get("sigma-jin-w-rho-w", 2).sigma.value();
    LaurentPoly tf = f1 + f2, tg = g1 + g2;
    // membership in the kernel of (f,g) -> (phi f, phi g, (f'+g')(1))
    bool in_kernel = tf.phi_fold().is_zero() && tg.phi_fold().is_zero() &&
                     (tf.derivative() + tg.derivative()).eval_at_one() == 0;
    r.note(in_kernel, "hand combination lies in ker((f,g) -> (phi f, phi g, (f'+g')(1)))");
    r.note(lattice_membership(gens, window_vector(tf, tg, D)),
           "kernel element lies in the span of the doubled-suspension data");
    LaurentPoly nf = LaurentPoly::t() - LaurentPoly::monomial(-1);
    r.note(!lattice_membership(gens, window_vector(nf, LaurentPoly(), D)),
           "(t - t^-1, 0) is outside the span (negative control)");
    return r;
}

inline VerifyResult verify_dualpath(unsigned seed, int iterations = 120) {
    using namespace verify_detail;
    VerifyResult r;
    r.suite = "dualpath";
    const Catalog& cat = Catalog::instance();
    for (const char* name :
         {"trace-whitehead-to-unlink", "trace-fake-mazur-to-hopf", "trace-mazur-to-hopf"}) {
        HomotopyTrace tr = cat.get(name).trace.value();
        r.note(beta_tilde_from_trace(tr) == beta_tilde(cat.get(tr.start).link.value()),
               std::string("trace beta~ = skein beta~ for ") + name);
    }
    r.note(eta_unknotted(cat.get("whitehead-pattern").pattern.value()) ==
               eta_from_trace(cat.get("trace-whitehead-to-unlink").trace.value()),
           "eta via annular pattern = eta via trace (whitehead)");
    {
        LaurentPoly eta = eta_from_trace(cat.get("trace-whitehead-to-unlink").trace.value());
        r.note(abs(cochran_expand(eta).beta(1)) ==
                   abs(sato_levine_beta(cat.get("whitehead-link").link.value())),
               "first derived invariant of eta = sato-levine invariant");
    }
    SigmaConsistency sw =
        sigma_consistency(cat.get("w-untangling").trace.value(), cat.get("W").tangle.value());
    r.note(sw.ok() && sw.beta_closure == 1, "sigma~ trace recovers beta(numer_0 W) = 1");

    std::mt19937 rng(seed);
    int done = 0, bad = 0;
    while (done < iterations) {
        LinkDiagram d = random_link2(rng, 3, 2);
        if (d.num_crossings() > 12) continue;
        for (int k = 0; k < d.num_crossings() && done < iterations; ++k) {
            if (!d.is_self_crossing(k)) continue;
            LinkDiagram pos = d.crossing_sign(k) > 0 ? d : d.switched(k);
            auto [lhs, rhs] = jump_check_22(pos, k);
            if (lhs != rhs) ++bad;
            ++done;
        }
    }
    r.note(bad == 0, "jump identity on " + std::to_string(done) +
                         " randomized crossing-change pairs (<= 12 crossings)");
    return r;
}

inline VerifyResult verify_identities(unsigned seed, int iterations = 1000) {
    VerifyResult r;
    r.suite = "identities";
    IdentityReport rep = identity_suite(seed, iterations);
    for (const auto& e : rep.entries)
        r.note(e.failed == 0, e.name + " (" + std::to_string(e.checked) + " substitutions)");
    return r;
}

inline VerifyResult verify_suite(const std::string& name, unsigned seed = 1) {
    if (name == "skein") return verify_skein(seed);
    if (name == "jumps") return verify_jumps(seed);
    if (name == "appendix") return verify_appendix(seed);
    if (name == "kernel") return verify_kernel(seed);
    if (name == "dualpath") return verify_dualpath(seed);
    if (name == "identities") return verify_identities(seed);
    throw std::invalid_argument("unknown suite '" + name +
                                "' (available: skein jumps appendix kernel dualpath identities)");
}

inline std::vector<std::string> verify_suite_names() {
    return {"skein", "jumps", "appendix", "kernel", "dualpath", "identities"};
}

}  // namespace qlink
