// Acceptance suite: one pass/fail line per criterion, with the runtime budget
// enforced. Exit code 0 iff every criterion passes.

#include "qlink/qlink.hpp"

#include <chrono>
#include <iostream>
#include <random>

using namespace qlink;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& what, double budget_seconds, bool (*body)()) {
    auto t0 = std::chrono::steady_clock::now();
    bool pass = false;
    std::string error;
    try {
        pass = body();
    } catch (const std::exception& e) {
        error = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > budget_seconds) {
        pass = false;
        error = "runtime budget exceeded";
    }
    if (!pass) ++g_failures;
    std::printf("[%s] criterion %2d: %s (%.2fs / budget %.0fs)%s%s\n", pass ? "PASS" : "FAIL",
                number, what.c_str(), secs, budget_seconds, error.empty() ? "" : " -- ",
                error.c_str());
}

bool c1_sato_levine_whitehead() {
    LinkDiagram w = Catalog::instance().get("whitehead-link").link.value();
    return sato_levine_beta(w) == 1 && conway_coefficient(w, 3) == 1;
}

bool c2_normalization_family() {
    for (long n = -3; n <= 3; ++n)
        if (beta_tilde(Catalog::instance().get("H_n", n).link.value()) != 0) return false;
    return true;
}

bool c3_mazur_separation() {
    const Catalog& cat = Catalog::instance();
    LinkDiagram mazur = cat.get("mazur").link.value();
    LinkDiagram fake = cat.get("fake-mazur").link.value();
    Int bm = beta_tilde(mazur), bf = beta_tilde(fake);
    bool built = numer_l(cat.get("W-rho-W").tangle.value(), 1).canonical_text() ==
                 fake.canonical_text();
    return bm == bf && bm != 0 && beta_tilde(cat.get("hopf").link.value()) == 0 && built;
}

bool c4_dual_path_beta() {
    const Catalog& cat = Catalog::instance();
    for (const char* name :
         {"trace-whitehead-to-unlink", "trace-fake-mazur-to-hopf", "trace-mazur-to-hopf"}) {
        HomotopyTrace tr = cat.get(name).trace.value();
        if (beta_tilde_from_trace(tr) != beta_tilde(cat.get(tr.start).link.value())) return false;
    }
    std::mt19937 rng(20260808);
    int done = 0;
    while (done < 100) {
        LinkDiagram d = verify_detail::random_link2(rng, 3, 2);
        if (d.num_crossings() > 12) continue;
        for (int k = 0; k < d.num_crossings() && done < 100; ++k) {
            if (!d.is_self_crossing(k)) continue;
            LinkDiagram pos = d.crossing_sign(k) > 0 ? d : d.switched(k);
            auto [lhs, rhs] = jump_check_22(pos, k);
            if (lhs != rhs) return false;
            ++done;
        }
    }
    return true;
}

bool c5_appendix_regression() {
    VerifyResult r = verify_appendix(5);
    // only the grid, hall-witt and reconstruction lines belong to this criterion
    return r.lines.size() >= 3 && r.lines[0].rfind("ok", 0) == 0 &&
           r.lines[1].rfind("ok", 0) == 0 && r.lines[2].rfind("ok", 0) == 0;
}

bool c6_congruence() {
    const Catalog& cat = Catalog::instance();
    for (const char* name : {"whitehead-link", "whitehead-link-rh", "hopf", "mazur", "fake-mazur",
                             "unlink", "whitehead-double", "whitehead-double-twisted"}) {
        if (!congruence_check(cat.get(name).link.value())) return false;
    }
    for (long n = -3; n <= 3; ++n)
        if (!congruence_check(cat.get("H_n", n).link.value())) return false;
    LinkDiagram w = cat.get("whitehead-link").link.value();
    if (!(mu_bar(w, "1122") == MuBar{1, 0})) return false;  // the stated equality 1 = 1
    for (const char* name : {"whitehead-link", "whitehead-link-rh", "unlink", "whitehead-double",
                             "whitehead-double-twisted"}) {
        if (!mu_1212_relation(cat.get(name).link.value())) return false;
    }
    return true;
}

bool c7_sigma_anchors() {
    const Catalog& cat = Catalog::instance();
    auto [p, m] = sigma_tilde(cat.get("jin-w").trace.value());
    LaurentPoly t = LaurentPoly::t(), one = LaurentPoly::one();
    if (!(p == t - one && m == one - t)) return false;
    auto [rp, rm] = sigma_tilde(cat.get("jin-w-rho-w").trace.value());
    LaurentPoly tinv = LaurentPoly::monomial(-1);
    if (!(rp == t - tinv && rm == tinv - t)) return false;
    if (rp.is_zero() && rm.is_zero()) return false;
    auto [kp, km] = kirk_sigma(cat.get("jin-w-rho-w").trace.value());
    return kp.is_zero() && km.is_zero();
}

bool c8_kernel_memberships() {
    VerifyResult r = verify_kernel();
    return r.ok();
}

bool c9_eta_properties() {
    const Catalog& cat = Catalog::instance();
    LaurentPoly eta = eta_from_trace(cat.get("trace-whitehead-to-unlink").trace.value());
    if (eta.eval_at_one() != 0 || !eta.is_symmetric()) return false;
    if (!(eta_unknotted(cat.get("whitehead-pattern").pattern.value()) == eta)) return false;
    Int b1 = cochran_expand(eta).beta(1);
    return abs(b1) == 1 && abs(b1) == sato_levine_beta(cat.get("whitehead-link").link.value());
}

bool c10_property_suites() {
    if (!verify_skein(10, 1000).ok()) return false;
    if (!verify_jumps(11, 1000).ok()) return false;
    if (!verify_identities(12, 1000).ok()) return false;
    // sigma~''(1) evenness over 1000 randomized realizable self-homotopies
    std::mt19937 rng(13);
    std::uniform_int_distribution<int> which(0, 3);
    for (int i = 0; i < 1000; ++i) {
        HomotopyTrace tr;
        tr.kind = HomotopyTrace::Kind::fibered_string_link;
        for (int b = 0; b < 4; ++b) {
            switch (which(rng)) {
                case 0: tr.fibered_events.push_back({1, 1, Int(1)});
                        tr.fibered_events.push_back({2, -1, Int(1)});
                        break;
                case 1: tr.fibered_events.push_back({1, -1, Int(-1)});
                        tr.fibered_events.push_back({2, 1, Int(-1)});
                        break;
                case 2: tr.fibered_events.push_back({1, -1, Int(1)});
                        tr.fibered_events.push_back({2, 1, Int(1)});
                        break;
                default: tr.fibered_events.push_back({1, 1, Int(-1)});
                         tr.fibered_events.push_back({2, -1, Int(-1)});
                         break;
            }
        }
        auto [p, m] = sigma_tilde(tr);
        for (const LaurentPoly* f : {&p, &m}) {
            if (f->eval_at_one() != 0) return false;
            if (f->derivative().derivative().eval_at_one() % 2 != 0) return false;
        }
    }
    // ring and homomorphism laws on 1000 random polynomial pairs
    std::mt19937 rng2(14);
    std::uniform_int_distribution<int> nterms(0, 5), expd(-4, 4), coeffd(-6, 6);
    auto rand_poly = [&] {
        LaurentPoly p;
        int n = nterms(rng2);
        for (int i = 0; i < n; ++i)
            p = p + LaurentPoly::monomial(Int(expd(rng2)), Int(coeffd(rng2)));
        return p;
    };
    for (int i = 0; i < 1000; ++i) {
        LaurentPoly a = rand_poly(), b = rand_poly(), c = rand_poly();
        if (!((a * b) * c == a * (b * c))) return false;
        if (!(a * (b + c) == a * b + a * c)) return false;
        if ((a * b).eval_at_one() != a.eval_at_one() * b.eval_at_one()) return false;
        if (!((a + b).phi_fold() == a.phi_fold() + b.phi_fold())) return false;
    }
    return true;
}

}  // namespace

int main() {
    criterion(1, "beta(whitehead) = 1 via the skein route", 1, c1_sato_levine_whitehead);
    criterion(2, "beta~(H_n) = 0 for n in -3..3", 5, c2_normalization_family);
    criterion(3, "beta~(mazur) = beta~(fake mazur) != 0 = beta~(hopf)", 10, c3_mazur_separation);
    criterion(4, "dual-path beta~: traces and 100 randomized jump pairs", 60, c4_dual_path_beta);
    criterion(5, "basic-commutator grids, hall-witt on 1000 triples", 30, c5_appendix_regression);
    criterion(6, "beta~ = mu(1122) mod lk across the catalog", 60, c6_congruence);
    criterion(7, "sigma~ anchors and the fold separation", 1, c7_sigma_anchors);
    criterion(8, "delta / delta~ kernels and the lattice span", 10, c8_kernel_memberships);
    criterion(9, "eta symmetry, dual path, first derived invariant", 5, c9_eta_properties);
    criterion(10, "property suites at 1000 randomized cases each", 120, c10_property_suites);

    if (g_failures == 0) {
        std::printf("acceptance: all 10 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
    return 1;
}
