#include "doctest.h"

#include "qlink/laurent.hpp"

#include <random>

using namespace qlink;

namespace {

LaurentPoly t_pow(long e, long c = 1) { return LaurentPoly::monomial(Int(e), Int(c)); }

LaurentPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 5), expd(-4, 4), coeffd(-6, 6);
    LaurentPoly p;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) p = p + t_pow(expd(rng), coeffd(rng));
    return p;
}

}  // namespace

TEST_SUITE("laurent") {

TEST_CASE("ring basics") {
    CHECK((t_pow(1) + t_pow(1, -1)).is_zero());
    CHECK(t_pow(1) * t_pow(-1) == LaurentPoly::one());
    // (t-1)(t^-1 - 1) = 2 - t - t^-1
    LaurentPoly lhs = (t_pow(1) - LaurentPoly::one()) * (t_pow(-1) - LaurentPoly::one());
    LaurentPoly expected = LaurentPoly(Int(2)) - t_pow(1) - t_pow(-1);
    CHECK(lhs == expected);
}

TEST_CASE("ring axioms on random inputs") {
    std::mt19937 rng(20240811);
    for (int i = 0; i < 300; ++i) {
        LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("eval_at_one") {
    CHECK((t_pow(5) - LaurentPoly::one()).eval_at_one() == 0);
    CHECK((t_pow(1) + t_pow(-1) - LaurentPoly(Int(2))).eval_at_one() == 0);
    CHECK((t_pow(2, 3) + LaurentPoly(Int(4))).eval_at_one() == 7);
}

TEST_CASE("eval_at_one is a ring homomorphism") {
    std::mt19937 rng(7);
    for (int i = 0; i < 300; ++i) {
        LaurentPoly a = random_poly(rng), b = random_poly(rng);
        CHECK((a * b).eval_at_one() == a.eval_at_one() * b.eval_at_one());
        CHECK((a + b).eval_at_one() == a.eval_at_one() + b.eval_at_one());
    }
}

TEST_CASE("one_minus_eps") {
    CHECK(t_pow(1).one_minus_eps() == t_pow(1) - LaurentPoly::one());
    CHECK(LaurentPoly(Int(5)).one_minus_eps().is_zero());
    LaurentPoly f = t_pow(2) + t_pow(-1);
    CHECK(f.one_minus_eps() == f - LaurentPoly(Int(2)));
    std::mt19937 rng(11);
    for (int i = 0; i < 100; ++i)
        CHECK(random_poly(rng).one_minus_eps().eval_at_one() == 0);
}

TEST_CASE("derivative") {
    CHECK(t_pow(-2).derivative() == t_pow(-3, -2));
    CHECK(LaurentPoly::one().derivative().is_zero());
    CHECK(t_pow(3).derivative() == t_pow(2, 3));
    CHECK((t_pow(1) + t_pow(-1) - LaurentPoly(Int(2))).derivative() ==
          LaurentPoly::one() - t_pow(-2));
    // second derivative of t - t^-1 at 1 is -2
    CHECK((t_pow(1) - t_pow(-1)).derivative().derivative().eval_at_one() == -2);
}

TEST_CASE("phi_fold") {
    CHECK(t_pow(-3).phi_fold() == t_pow(3));
    CHECK((t_pow(1) - t_pow(-1)).phi_fold().is_zero());
    CHECK((t_pow(1) + t_pow(-1) - LaurentPoly(Int(2))).phi_fold() ==
          t_pow(1, 2) - LaurentPoly(Int(2)));
    std::mt19937 rng(13);
    for (int i = 0; i < 200; ++i) {
        LaurentPoly a = random_poly(rng), b = random_poly(rng);
        CHECK((a + b).phi_fold() == a.phi_fold() + b.phi_fold());        // additive
        CHECK(a.phi_fold().phi_fold() == a.phi_fold());                  // idempotent
        CHECK(a.phi_fold().eval_at_one() == a.eval_at_one());
    }
}

TEST_CASE("delta_map") {
    CHECK(delta_map(LaurentPoly(), LaurentPoly()) == std::tuple<Int, Int, Int>{0, 0, 0});
    CHECK(delta_map(t_pow(1) - LaurentPoly::one(), LaurentPoly()) ==
          std::tuple<Int, Int, Int>{0, 0, 1});
    CHECK_THROWS_AS(delta_map(t_pow(-1), LaurentPoly()), std::invalid_argument);
}

TEST_CASE("delta applied to folded sigma data of the basic link maps") {
    // (phi (+) phi) of (n^2/2 (t+t^-1-2) + n/2 (t-t^-1), 1-t^n) for n = 1..3
    for (long n = 1; n <= 3; ++n) {
        LaurentPoly f = t_pow(1, n * (n + 1) / 2) + t_pow(-1, n * (n - 1) / 2) -
                        LaurentPoly(Int(n * n));
        LaurentPoly g = LaurentPoly::one() - t_pow(n);
        auto d = delta_map(f.phi_fold(), g.phi_fold());
        CHECK(d == std::tuple<Int, Int, Int>{0, 0, 0});
    }
}

TEST_CASE("delta_tilde_map") {
    CHECK(delta_tilde_map(t_pow(1) - t_pow(-1), t_pow(-1) - t_pow(1)) ==
          std::tuple<Int, Int, Int, Int>{0, 0, 0, 0});
    // (3t + t^-1 - 4, 1 - t^2)
    LaurentPoly f = t_pow(1, 3) + t_pow(-1) - LaurentPoly(Int(4));
    LaurentPoly g = LaurentPoly::one() - t_pow(2);
    CHECK(delta_tilde_map(f, g) == std::tuple<Int, Int, Int, Int>{0, 0, 0, 0});
    CHECK(delta_tilde_map(LaurentPoly::one(), LaurentPoly()) ==
          std::tuple<Int, Int, Int, Int>{1, 0, 0, 0});
}

TEST_CASE("cochran_expand") {
    LaurentPoly u2 = t_pow(1) + t_pow(-1) - LaurentPoly(Int(2));
    CHECK(cochran_expand(u2) == ZSeries({Int(-1)}));
    LaurentPoly f = t_pow(2) + t_pow(-2) - LaurentPoly(Int(2));
    CHECK(cochran_expand(f) == ZSeries({Int(-4), Int(1)}));
    CHECK(cochran_expand(LaurentPoly()).is_zero());
    CHECK_THROWS_AS(cochran_expand(t_pow(1)), std::invalid_argument);       // asymmetric
    CHECK_THROWS_AS(cochran_expand(t_pow(1) + t_pow(-1)), std::invalid_argument);  // f(1) != 0
}

TEST_CASE("cochran_expand round-trips") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> expd(1, 5), coeffd(-5, 5), nterms(0, 4);
    for (int i = 0; i < 200; ++i) {
        // random symmetric poly vanishing at 1
        LaurentPoly f;
        int n = nterms(rng);
        for (int k = 0; k < n; ++k) {
            long e = expd(rng), c = coeffd(rng);
            f = f + t_pow(e, c) + t_pow(-e, c) + LaurentPoly(Int(-2 * c));
        }
        ZSeries s = cochran_expand(f);
        CHECK(s.to_laurent() == f);
    }
}

TEST_CASE("lattice_membership") {
    using V = std::vector<Int>;
    CHECK(lattice_membership({V{1, 0}, V{0, 1}}, V{3, -2}));
    CHECK_FALSE(lattice_membership({V{2, 0}}, V{1, 0}));
    CHECK(lattice_membership({}, V{0, 0}));
    CHECK_FALSE(lattice_membership({}, V{0, 1}));
    CHECK(lattice_membership({V{2, 4}, V{3, 6}}, V{1, 2}));
    CHECK_FALSE(lattice_membership({V{2, 4}, V{3, 6}}, V{1, 3}));
    CHECK_THROWS_AS(lattice_membership({V{1}}, V{1, 0}), std::invalid_argument);
}

TEST_CASE("text form round-trips") {
    LaurentPoly f = t_pow(-1) - LaurentPoly(Int(2)) + t_pow(3);
    CHECK(f.to_text() == "t^-1 - 2 + t^3");
    CHECK(LaurentPoly::parse(f.to_text()) == f);
    CHECK(LaurentPoly().to_text() == "0");
    CHECK(LaurentPoly::parse("0").is_zero());
    CHECK(LaurentPoly::parse("-3 t^2 + t") == t_pow(2, -3) + t_pow(1));
    std::mt19937 rng(23);
    for (int i = 0; i < 200; ++i) {
        LaurentPoly p = random_poly(rng);
        CHECK(LaurentPoly::parse(p.to_text()) == p);
    }
}

}  // TEST_SUITE
