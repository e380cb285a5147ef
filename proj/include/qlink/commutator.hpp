#pragma once

// Commutator calculus in free groups: the identity suite used by the
// nilpotence arguments, Hall-Witt modulo gamma_4, decomposition into basic
// commutators without repeats (class-3, three generators), the nested
// commutator xi from the longitude correction, and bounded enumerations of
// the subgroup chains <m>_k with their mu_k / N_k generator sets.

#include "qlink/freeword.hpp"
#include "qlink/magnus.hpp"

#include <array>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace qlink {

// ---------------------------------------------------------------------------
// identity suite

struct IdentityReport {
    struct Entry {
        std::string name;
        int checked = 0;
        int failed = 0;
    };
    std::vector<Entry> entries;
    bool all_pass() const {
        for (const auto& e : entries)
            if (e.failed) return false;
        return true;
    }
};

// Verifies the commutator identities as exact equalities of reduced words
// under randomized substitutions (words of bounded length in 3 generators).
inline IdentityReport identity_suite(unsigned seed = 1, int iterations = 1000) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> len(0, 6), gen(1, 3), sgn(0, 1);
    auto rand_word = [&] {
        std::vector<FreeWord::Letter> ls;
        int n = len(rng);
        for (int i = 0; i < n; ++i) ls.push_back({gen(rng), sgn(rng) ? 1 : -1});
        return FreeWord(ls);
    };

    IdentityReport rep;
    rep.entries = {{"[a,bc] = [a,c][a,b]^c", 0, 0},
                   {"[a,b^-1] = ([a,b]^(b^-1))^-1", 0, 0},
                   {"[x,y^-1] = [y,x]^(y^-1)", 0, 0},
                   {"[m^-1,(m^-1)^g] = [m,m^g]^((m^g m)^-1)", 0, 0}};

    for (int i = 0; i < iterations; ++i) {
        FreeWord a = rand_word(), b = rand_word(), c = rand_word();

        auto& e0 = rep.entries[0];
        ++e0.checked;
        if (commutator(a, b * c) != commutator(a, c) * conjugate(commutator(a, b), c)) ++e0.failed;

        auto& e1 = rep.entries[1];
        ++e1.checked;
        if (commutator(a, b.inverse()) != conjugate(commutator(a, b), b.inverse()).inverse())
            ++e1.failed;

        auto& e2 = rep.entries[2];
        ++e2.checked;
        if (commutator(a, b.inverse()) != conjugate(commutator(b, a), b.inverse())) ++e2.failed;

        auto& e3 = rep.entries[3];
        ++e3.checked;
        FreeWord m = a, g = b;
        FreeWord mg = conjugate(m, g);
        FreeWord lhs = commutator(m.inverse(), conjugate(m.inverse(), g));
        FreeWord rhs = conjugate(commutator(m, mg), (mg * m).inverse());
        if (lhs != rhs) ++e3.failed;
    }
    return rep;
}

// [[a,b],c] [[b,c],a] [[c,a],b] = 1 mod gamma_4: the product's expansion has
// no terms in degrees 1..3.
inline bool hall_witt_mod_gamma4(const FreeWord& a, const FreeWord& b, const FreeWord& c) {
    FreeWord w = commutator(commutator(a, b), c) * commutator(commutator(b, c), a) *
                 commutator(commutator(c, a), b);
    return MagnusSeries::expand(w, 4).is_one_through_degree(3);
}

// ---------------------------------------------------------------------------
// basic commutators without repeats (three generators, class 3)

struct BasicDecomposition {
    std::array<Int, 8> e{};  // x^e1 y^e2 z^e3 [y,x]^e4 [z,y]^e5 [z,x]^e6
                             // [[y,x],z]^e7 [[z,x],y]^e8
    bool operator==(const BasicDecomposition& rhs) const { return e == rhs.e; }
};

inline FreeWord rebuild_basic(const BasicDecomposition& d) {
    const FreeWord x = FreeWord::generator(1), y = FreeWord::generator(2),
                   z = FreeWord::generator(3);
    const FreeWord basis[8] = {x, y, z, commutator(y, x), commutator(z, y), commutator(z, x),
                               commutator(commutator(y, x), z), commutator(commutator(z, x), y)};
    FreeWord w;
    for (int i = 0; i < 8; ++i) w = w * basis[i].pow(d.e[i].convert_to<long>());
    return w;
}

// Decomposes the image of a word in x,y,z (generators 1,2,3) in the reduced
// class-3 quotient, by staged coefficient extraction from the reduced Magnus
// expansion at q = 4: degree 1 gives e1..e3, degree 2 after peeling gives
// e4..e6, degree 3 gives e7, e8.
inline BasicDecomposition decompose_basic(const FreeWord& w) {
    const int q = 4;
    for (const auto& [g, s] : w.letters())
        if (g < 1 || g > 3) throw std::invalid_argument("decompose_basic: word must use generators 1..3");

    MagnusSeries s = MagnusSeries::expand_reduced(w, q);
    BasicDecomposition d;
    d.e[0] = s.coeff({1});
    d.e[1] = s.coeff({2});
    d.e[2] = s.coeff({3});

    const FreeWord x = FreeWord::generator(1), y = FreeWord::generator(2),
                   z = FreeWord::generator(3);
    FreeWord prefix1 = x.pow(d.e[0].convert_to<long>()) * y.pow(d.e[1].convert_to<long>()) *
                       z.pow(d.e[2].convert_to<long>());
    MagnusSeries r = MagnusSeries::expand_reduced(prefix1, q).inverse_grouplike().reduced() * s;
    r = r.reduced();

    d.e[3] = r.coeff({2, 1});
    d.e[4] = r.coeff({3, 2});
    d.e[5] = r.coeff({3, 1});

    FreeWord prefix2 = commutator(y, x).pow(d.e[3].convert_to<long>()) *
                       commutator(z, y).pow(d.e[4].convert_to<long>()) *
                       commutator(z, x).pow(d.e[5].convert_to<long>());
    MagnusSeries r2 = MagnusSeries::expand_reduced(prefix2, q).inverse_grouplike().reduced() * r;
    r2 = r2.reduced();

    d.e[6] = -r2.coeff({1, 2, 3});
    d.e[7] = -r2.coeff({1, 3, 2});

    // The eight exponents must reproduce the input in the reduced class-3 quotient.
    MagnusSeries back = MagnusSeries::expand_reduced(rebuild_basic(d), q);
    if (!(back == s)) throw std::logic_error("decompose_basic: reconstruction failed");
    return d;
}

// xi = [lambda, [lambda^-1, m^-1]], the longitude correction word.
inline FreeWord xi_correction(const FreeWord& lambda, const FreeWord& m) {
    return commutator(lambda, commutator(lambda.inverse(), m.inverse()));
}

// ---------------------------------------------------------------------------
// bounded enumerations of <m>_k chains and the mu_k / N_k generator sets

// Conjugates m^w where w runs over products of at most `depth` elements (or
// inverses) of the previous level; level 1 draws conjugators from the ambient
// alphabet. k = 0 denotes the entire group and is rejected here.
inline std::set<FreeWord> chain_generators(int m, int k, int depth,
                                           const std::vector<int>& alphabet) {
    if (k < 1) throw std::invalid_argument("chain_generators: k = 0 denotes the entire group");
    if (depth < 1) throw std::invalid_argument("chain_generators: depth must be >= 1");

    std::vector<FreeWord> level;  // elements whose products form conjugators
    for (int g : alphabet) {
        level.push_back(FreeWord::generator(g));
        level.push_back(FreeWord::generator(g, -1));
    }

    std::set<FreeWord> current;
    for (int lvl = 1; lvl <= k; ++lvl) {
        // all products of at most `depth` factors from `level`
        std::set<FreeWord> conjugators;
        std::set<FreeWord> frontier = {FreeWord()};
        for (int d = 0; d < depth; ++d) {
            std::set<FreeWord> next;
            for (const auto& w : frontier)
                for (const auto& f : level) next.insert(w * f);
            conjugators.insert(next.begin(), next.end());
            frontier = std::move(next);
        }
        conjugators.insert(FreeWord());

        current.clear();
        FreeWord mm = FreeWord::generator(m);
        for (const auto& w : conjugators) current.insert(conjugate(mm, w));

        if (lvl < k) {
            level.clear();
            for (const auto& e : current) {
                level.push_back(e);
                level.push_back(e.inverse());
            }
        }
    }
    return current;
}

// {[m, m^g] | m in meridians, g in <m>_k} over the bounded enumeration.
inline std::set<FreeWord> mu_k_generators(const std::vector<int>& meridians, int k, int depth,
                                          const std::vector<int>& alphabet) {
    std::set<FreeWord> out;
    for (int m : meridians) {
        FreeWord mm = FreeWord::generator(m);
        for (const auto& g : chain_generators(m, k, depth, alphabet)) {
            FreeWord c = commutator(mm, conjugate(mm, g));
            if (!c.empty()) out.insert(c);
        }
    }
    return out;
}

// {[g^-1, g^m] | g in <m>_k} over the bounded enumeration.
inline std::set<FreeWord> N_k_generators(int m, int k, int depth,
                                         const std::vector<int>& alphabet) {
    std::set<FreeWord> out;
    FreeWord mm = FreeWord::generator(m);
    for (const auto& g : chain_generators(m, k, depth, alphabet)) {
        FreeWord c = commutator(g.inverse(), conjugate(g, mm));
        if (!c.empty()) out.insert(c);
    }
    return out;
}

}  // namespace qlink
