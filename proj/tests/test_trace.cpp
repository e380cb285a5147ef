#include "doctest.h"

#include "helpers.hpp"
#include "qlink/catalog.hpp"
#include "qlink/trace.hpp"

#include <random>

using namespace qlink;

namespace {

LaurentPoly tp(long e, long c = 1) { return LaurentPoly::monomial(Int(e), Int(c)); }

ClosedEvent ev(int comp, int sign, long n, long rest) {
    return ClosedEvent{comp, sign, {{comp == 1 ? 2 : 1, {Int(n), Int(rest)}}}};
}

// realizable fibered building blocks: the suspension events of W, its
// reflection, and their reverses
std::vector<FiberedEvent> random_self_homotopy(std::mt19937& rng, int blocks = 4) {
    std::vector<FiberedEvent> out;
    std::uniform_int_distribution<int> which(0, 3);
    for (int b = 0; b < blocks; ++b) {
        switch (which(rng)) {
            case 0:  // jin(W)
                out.push_back({1, 1, Int(1)});
                out.push_back({2, -1, Int(1)});
                break;
            case 1:  // jin(rho W)
                out.push_back({1, -1, Int(-1)});
                out.push_back({2, 1, Int(-1)});
                break;
            case 2:  // reversed jin(W)
                out.push_back({1, -1, Int(1)});
                out.push_back({2, 1, Int(1)});
                break;
            default:  // jin(W^-1)-style
                out.push_back({1, 1, Int(-1)});
                out.push_back({2, -1, Int(-1)});
                break;
        }
    }
    return out;
}

}  // namespace

TEST_SUITE("trace") {

TEST_CASE("jump formulas") {
    CHECK(beta_jump(ev(1, 1, 0, 0)) == 0);
    CHECK(beta_tilde_jump(ev(1, 1, 0, 5)) == 0);
    CHECK(beta_jump(ev(1, 1, 1, -1)) == -1);
    CHECK(beta_tilde_jump(ev(1, 1, 1, -1)) == -1);  // (2.1) is (2.2) at l = 0
    CHECK(beta_tilde_jump(ev(2, 1, 2, 3)) == 6);
    CHECK_THROWS_AS(beta_jump(ev(1, 1, 2, 3)), std::invalid_argument);  // lk != 0
}

TEST_CASE("beta~ accumulates backwards from the anchor") {
    HomotopyTrace empty;
    empty.kind = HomotopyTrace::Kind::closed_link;
    empty.start = empty.end = "hopf";
    CHECK(beta_tilde_from_trace(empty) == 0);

    const Catalog& cat = Catalog::instance();
    for (const char* name :
         {"trace-whitehead-to-unlink", "trace-fake-mazur-to-hopf", "trace-mazur-to-hopf"}) {
        CAPTURE(name);
        HomotopyTrace tr = cat.get(name).trace.value();
        Int via_trace = beta_tilde_from_trace(tr);
        Int via_skein = beta_tilde(cat.get(tr.start).link.value());
        CHECK(via_trace == via_skein);
    }
    CHECK(beta_tilde_from_trace(cat.get("trace-whitehead-to-unlink").trace.value()) == 1);

    HomotopyTrace bad = cat.get("trace-whitehead-to-unlink").trace.value();
    bad.end = "mazur";
    CHECK_THROWS_AS(beta_tilde_from_trace(bad), std::invalid_argument);

    HomotopyTrace inconsistent = bad;
    inconsistent.end = "unlink";
    inconsistent.closed_events.push_back(ev(1, 1, 2, 3));  // lk jumps from 0 to 5
    CHECK_THROWS_AS(beta_tilde_from_trace(inconsistent), std::invalid_argument);
}

TEST_CASE("eta jumps and accumulation") {
    CHECK(eta_jump(ev(1, 1, 0, 0)).is_zero());
    LaurentPoly u = tp(1) + tp(-1) - LaurentPoly(Int(2));
    CHECK(eta_jump(ev(1, 1, 1, -1)) == u);
    CHECK(eta_jump(ev(1, -1, 1, -1)) == -u);
    CHECK_THROWS_AS(eta_jump(ev(1, 1, 2, 3)), std::invalid_argument);

    const Catalog& cat = Catalog::instance();
    HomotopyTrace w = cat.get("trace-whitehead-to-unlink").trace.value();
    LaurentPoly eta = eta_from_trace(w);
    CHECK(eta == -u);
    CHECK(eta.eval_at_one() == 0);
    CHECK(eta.is_symmetric());
    // the first derived invariant recovers the sato-levine invariant
    CHECK(cochran_expand(eta).beta(1) == sato_levine_beta(cat.get("whitehead-link").link.value()));

    // concatenation additivity
    HomotopyTrace doubled = w;
    doubled.closed_events.push_back(w.closed_events[0]);
    CHECK(eta_from_trace(doubled) == eta + eta);

    HomotopyTrace mixed = w;
    mixed.closed_events.push_back(ev(1, 1, 0, 0));
    CHECK_THROWS_AS(eta_from_trace(mixed), std::invalid_argument);  // support on both components
    HomotopyTrace wrong_end = w;
    wrong_end.end = "hopf";
    CHECK_THROWS_AS(eta_from_trace(wrong_end), std::invalid_argument);
}

TEST_CASE("eta from the annular presentation agrees with the trace route") {
    const Catalog& cat = Catalog::instance();
    AnnularPattern p = cat.get("whitehead-pattern").pattern.value();
    LaurentPoly via_pattern = eta_unknotted(p);
    LaurentPoly via_trace = eta_from_trace(cat.get("trace-whitehead-to-unlink").trace.value());
    CHECK(via_pattern == via_trace);

    CHECK(eta_unknotted(AnnularPattern{}).is_zero());
    AnnularPattern no_self;
    no_self.cut_directions = {1, -1, 1, -1};
    CHECK(eta_unknotted(no_self).is_zero());

    AnnularPattern odd;
    odd.cut_directions = {1, -1};
    odd.crossings = {{1, 0, 1}};
    CHECK_THROWS_AS(eta_unknotted(odd), std::invalid_argument);  // odd bucket

    AnnularPattern winding;
    winding.cut_directions = {1, 1};
    CHECK_THROWS_AS(eta_unknotted(winding), std::invalid_argument);  // lk != 0
}

TEST_CASE("sigma~ of the catalog suspensions") {
    const Catalog& cat = Catalog::instance();
    HomotopyTrace empty;
    empty.kind = HomotopyTrace::Kind::fibered_string_link;
    auto [zp, zm] = sigma_tilde(empty);
    CHECK(zp.is_zero());
    CHECK(zm.is_zero());

    auto [p1, m1] = sigma_tilde(cat.get("jin-w").trace.value());
    CHECK(p1 == tp(1) - LaurentPoly::one());
    CHECK(m1 == LaurentPoly::one() - tp(1));
    CHECK(std::pair(p1, m1) == cat.get("sigma-jin-w", 1).sigma.value());

    auto [p2, m2] = sigma_tilde(cat.get("jin-w-rho-w").trace.value());
    CHECK(p2 == tp(1) - tp(-1));
    CHECK(m2 == tp(-1) - tp(1));
    CHECK(std::pair(p2, m2) == cat.get("sigma-jin-w-rho-w", 1).sigma.value());
    CHECK_FALSE((p2.is_zero() && m2.is_zero()));

    // the fold kills it: this is why the refined invariant is needed
    auto [kp, km] = kirk_sigma(cat.get("jin-w-rho-w").trace.value());
    CHECK(kp.is_zero());
    CHECK(km.is_zero());
    auto [kp1, km1] = kirk_sigma(cat.get("jin-w").trace.value());
    CHECK(kp1 == p1);
    CHECK(km1 == m1);
}

TEST_CASE("kernel membership of the sigma data") {
    const Catalog& cat = Catalog::instance();
    for (long n = 1; n <= 4; ++n) {
        auto [f, g] = cat.get("sigma-jin-w", n).sigma.value();
        CHECK(delta_tilde_map(f, g) == std::tuple<Int, Int, Int, Int>{0, 0, 0, 0});
        auto d = delta_map(f.phi_fold(), g.phi_fold());
        CHECK(d == std::tuple<Int, Int, Int>{0, 0, 0});
        auto [rf, rg] = cat.get("sigma-jin-w-rho-w", n).sigma.value();
        CHECK(delta_tilde_map(rf, rg) == std::tuple<Int, Int, Int, Int>{0, 0, 0, 0});
    }
}

TEST_CASE("hudson obstruction") {
    HomotopyTrace empty;
    empty.kind = HomotopyTrace::Kind::fibered_string_link;
    CHECK(hudson_obstruction(empty, 1) == 0);
    const Catalog& cat = Catalog::instance();
    HomotopyTrace jw = cat.get("jin-w").trace.value();
    CHECK(hudson_obstruction(jw, 1) == 1);
    CHECK(hudson_obstruction(jw, 2) == 1);

    std::mt19937 rng(71);
    for (int i = 0; i < 100; ++i) {
        HomotopyTrace tr;
        tr.kind = HomotopyTrace::Kind::fibered_string_link;
        tr.fibered_events = random_self_homotopy(rng);
        auto [p, m] = sigma_tilde(tr);
        for (const LaurentPoly* f : {&p, &m}) {
            CHECK(f->eval_at_one() == 0);
            // second derivative at 1 is even
            Int d2 = f->derivative().derivative().eval_at_one();
            CHECK(d2 % 2 == 0);
            // hudson = sigma~'(1) mod 2
        }
        CHECK(hudson_obstruction(tr, 1) ==
              static_cast<int>(((p.derivative().eval_at_one() % 2) + 2) % 2));
        // realizable self-homotopies stay in the kernel of delta~
        CHECK(delta_tilde_map(p, m) == std::tuple<Int, Int, Int, Int>{0, 0, 0, 0});
    }
}

TEST_CASE("sigma consistency against the skein route") {
    HomotopyTrace empty;
    empty.kind = HomotopyTrace::Kind::fibered_string_link;
    empty.start = empty.end = "trivial";
    SigmaConsistency triv = sigma_consistency(empty, TangleDiagram::trivial());
    CHECK(triv.ok());
    CHECK(triv.beta_closure == 0);
    CHECK(triv.beta_tilde_closure == 0);

    const Catalog& cat = Catalog::instance();
    SigmaConsistency w =
        sigma_consistency(cat.get("w-untangling").trace.value(), cat.get("W").tangle.value());
    CHECK(w.ok());
    CHECK(w.beta_closure == 1);
    CHECK(w.beta_tilde_closure == 0);

    // random stackings of the whitehead-type factors with their recorded
    // one-event untanglings
    struct Factor {
        TangleDiagram tangle;
        FiberedEvent event;
    };
    std::vector<Factor> factors = {
        {cat.get("W").tangle.value(), {2, -1, Int(1)}},
        {cat.get("rho-W").tangle.value(), {2, 1, Int(-1)}},
        {cat.get("W-inverse").tangle.value(), {2, -1, Int(-1)}},
        {cat.get("W-bar").tangle.value(), {2, 1, Int(1)}},
    };
    std::mt19937 rng(73);
    std::uniform_int_distribution<int> nf(1, 3), which(0, 3);
    for (int i = 0; i < 12; ++i) {
        TangleDiagram s = TangleDiagram::trivial();
        HomotopyTrace tr;
        tr.kind = HomotopyTrace::Kind::fibered_string_link;
        tr.start = "sum";
        tr.end = "twist";
        int n = nf(rng);
        for (int k = 0; k < n; ++k) {
            const Factor& f = factors[which(rng)];
            s = TangleDiagram::connect_sum(s, f.tangle);
            tr.fibered_events.push_back(f.event);
        }
        SigmaConsistency sc = sigma_consistency(tr, s);
        CAPTURE(i);
        CHECK(sc.ok());
    }
}

TEST_CASE("event classification") {
    const Catalog& cat = Catalog::instance();
    auto cls = classify_events(cat.get("trace-whitehead-to-unlink").trace.value());
    REQUIRE(cls.size() == 1);
    CHECK(cls[0] == EventClass::link_homotopy);
    auto cls2 = classify_events(cat.get("trace-fake-mazur-to-hopf").trace.value());
    CHECK(cls2[0] == EventClass::link_homotopy);

    HomotopyTrace kinks;
    kinks.kind = HomotopyTrace::Kind::closed_link;
    kinks.closed_events = {ev(1, 1, 0, 3), ev(2, -1, 0, 3)};
    for (auto c : classify_events(kinks)) CHECK(c == EventClass::weak_one_quasi);
}

}  // TEST_SUITE
