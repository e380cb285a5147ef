#pragma once

// Truncated Magnus expansion: the free group embeds into the ring of formal
// power series in noncommuting variables X_1, X_2, ... by x_i |-> 1 + X_i,
// x_i^-1 |-> 1 - X_i + X_i^2 - ...; everything here is truncated to total
// degree < q. The reduced variant additionally kills every monomial with a
// repeated variable, which models the Milnor quotient.

#include "qlink/freeword.hpp"
#include "qlink/int.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace qlink {

class MagnusSeries {
  public:
    using Monomial = std::vector<int>;  // sequence of variable indices

    explicit MagnusSeries(int trunc) : trunc_(trunc) {
        if (trunc < 1) throw std::invalid_argument("MagnusSeries: truncation degree must be >= 1");
    }

    static MagnusSeries one(int trunc) {
        MagnusSeries s(trunc);
        s.coef_[{}] = 1;
        return s;
    }
    static MagnusSeries variable(int idx, int trunc) {
        MagnusSeries s(trunc);
        s.coef_[{idx}] = 1;
        return s;
    }

    int truncation() const { return trunc_; }
    const std::map<Monomial, Int>& terms() const { return coef_; }

    Int coeff(const Monomial& m) const {
        auto it = coef_.find(m);
        return it == coef_.end() ? Int(0) : it->second;
    }

    bool operator==(const MagnusSeries& rhs) const {
        return trunc_ == rhs.trunc_ && coef_ == rhs.coef_;
    }

    MagnusSeries operator+(const MagnusSeries& rhs) const {
        check(rhs);
        MagnusSeries r(*this);
        for (const auto& [m, c] : rhs.coef_) r.add(m, c);
        return r;
    }
    MagnusSeries operator-(const MagnusSeries& rhs) const {
        check(rhs);
        MagnusSeries r(*this);
        for (const auto& [m, c] : rhs.coef_) r.add(m, -c);
        return r;
    }
    MagnusSeries operator*(const MagnusSeries& rhs) const {
        check(rhs);
        MagnusSeries r(trunc_);
        for (const auto& [m1, c1] : coef_)
            for (const auto& [m2, c2] : rhs.coef_) {
                if (m1.size() + m2.size() >= static_cast<std::size_t>(trunc_)) continue;
                Monomial m = m1;
                m.insert(m.end(), m2.begin(), m2.end());
                r.add(m, c1 * c2);
            }
        return r;
    }

    // Inverse of a series with constant term 1 (a group-element image).
    MagnusSeries inverse_grouplike() const {
        if (coeff({}) != 1) throw std::invalid_argument("inverse_grouplike: constant term != 1");
        MagnusSeries n(*this);
        n.add({}, Int(-1));  // N = S - 1
        MagnusSeries r = one(trunc_), pw = one(trunc_);
        for (int k = 1; k < trunc_; ++k) {
            pw = pw * n;
            if (pw.coef_.empty()) break;
            r = (k % 2) ? r - pw : r + pw;
        }
        return r;
    }

    // Projection killing monomials with a repeated variable.
    MagnusSeries reduced() const {
        MagnusSeries r(trunc_);
        for (const auto& [m, c] : coef_) {
            Monomial s = m;
            std::sort(s.begin(), s.end());
            if (std::adjacent_find(s.begin(), s.end()) == s.end()) r.add(m, c);
        }
        return r;
    }

    // True iff the series equals 1 in all degrees <= maxdeg.
    bool is_one_through_degree(int maxdeg) const {
        for (const auto& [m, c] : coef_) {
            if (static_cast<int>(m.size()) > maxdeg) continue;
            if (m.empty() ? c != 1 : c != 0) return false;
        }
        return coeff({}) == 1;
    }

    static MagnusSeries expand(const FreeWord& w, int trunc) {
        MagnusSeries r = one(trunc);
        for (const auto& [gen, sign] : w.letters()) {
            MagnusSeries f(trunc);
            if (sign > 0) {
                f.add({}, 1);
                f.add({gen}, 1);
            } else {
                // 1 - X + X^2 - ...
                Monomial m;
                Int c = 1;
                f.add({}, 1);
                for (int k = 1; k < trunc; ++k) {
                    m.push_back(gen);
                    c = -c;
                    f.add(m, c);
                }
            }
            r = r * f;
        }
        return r;
    }

    static MagnusSeries expand_reduced(const FreeWord& w, int trunc) {
        // Reduce after every multiplication; projection and truncated product
        // commute with the projection, so this matches expand(w).reduced().
        MagnusSeries r = one(trunc);
        for (const auto& [gen, sign] : w.letters()) {
            MagnusSeries f(trunc);
            f.add({}, 1);
            if (sign > 0) {
                f.add({gen}, 1);
            } else {
                f.add({gen}, -1);  // higher powers of X_gen die in the reduced ring
            }
            r = (r * f).reduced();
        }
        return r;
    }

  private:
    void check(const MagnusSeries& rhs) const {
        if (trunc_ != rhs.trunc_)
            throw std::invalid_argument("MagnusSeries: truncation mismatch");
    }
    void add(const Monomial& m, const Int& c) {
        if (c == 0 || static_cast<int>(m.size()) >= trunc_) return;
        auto [it, inserted] = coef_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) coef_.erase(it);
        }
    }

    int trunc_;
    std::map<Monomial, Int> coef_;
};

inline MagnusSeries magnus_expand(const FreeWord& w, int trunc) {
    return MagnusSeries::expand(w, trunc);
}
inline MagnusSeries reduced_magnus(const FreeWord& w, int trunc) {
    return MagnusSeries::expand_reduced(w, trunc);
}

}  // namespace qlink
