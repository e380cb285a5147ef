#pragma once

// Integer Laurent polynomials in one variable t, plus the functionals applied
// to them elsewhere in the library: evaluation/augmentation at t = 1, formal
// derivatives, the folding map t^n -> t^|n|, the delta maps whose kernels
// carry the link-map invariants, and the expansion in z = -(t + t^-1 - 2).
//
// Values are immutable in spirit: every operation returns a new polynomial in
// canonical form (no zero coefficients stored).

#include "qlink/int.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace qlink {

class LaurentPoly {
  public:
    using Map = std::map<Int, Int>;  // exponent -> nonzero coefficient

    LaurentPoly() = default;
    explicit LaurentPoly(const Int& constant) {
        if (constant != 0) coeffs_[0] = constant;
    }
    explicit LaurentPoly(Map m) : coeffs_(std::move(m)) { prune(); }

    static LaurentPoly monomial(const Int& exp, const Int& coeff = 1) {
        LaurentPoly p;
        if (coeff != 0) p.coeffs_[exp] = coeff;
        return p;
    }
    static LaurentPoly t() { return monomial(1); }
    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return LaurentPoly(Int(1)); }

    const Map& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    Int coefficient(const Int& exp) const {
        auto it = coeffs_.find(exp);
        return it == coeffs_.end() ? Int(0) : it->second;
    }

    Int min_exponent() const {
        if (is_zero()) throw std::logic_error("min_exponent of zero polynomial");
        return coeffs_.begin()->first;
    }
    Int max_exponent() const {
        if (is_zero()) throw std::logic_error("max_exponent of zero polynomial");
        return coeffs_.rbegin()->first;
    }

    bool operator==(const LaurentPoly& rhs) const { return coeffs_ == rhs.coeffs_; }
    bool operator!=(const LaurentPoly& rhs) const { return coeffs_ != rhs.coeffs_; }

    LaurentPoly operator+(const LaurentPoly& rhs) const {
        LaurentPoly r(*this);
        for (const auto& [e, c] : rhs.coeffs_) r.add_term(e, c);
        return r;
    }
    LaurentPoly operator-() const {
        LaurentPoly r(*this);
        for (auto& [e, c] : r.coeffs_) c = -c;
        return r;
    }
    LaurentPoly operator-(const LaurentPoly& rhs) const { return *this + (-rhs); }
    LaurentPoly operator*(const LaurentPoly& rhs) const {
        LaurentPoly r;
        for (const auto& [e1, c1] : coeffs_)
            for (const auto& [e2, c2] : rhs.coeffs_) r.add_term(e1 + e2, c1 * c2);
        return r;
    }
    LaurentPoly scalar_mul(const Int& k) const {
        LaurentPoly r;
        if (k == 0) return r;
        r.coeffs_ = coeffs_;
        for (auto& [e, c] : r.coeffs_) c *= k;
        return r;
    }

    // Sum of all coefficients, i.e. the augmentation eps(f) = f(1).
    Int eval_at_one() const {
        Int s = 0;
        for (const auto& [e, c] : coeffs_) s += c;
        return s;
    }

    // f - eps(f); the result always evaluates to 0 at t = 1.
    LaurentPoly one_minus_eps() const { return *this - LaurentPoly(eval_at_one()); }

    // Formal d/dt; exponents may be negative.
    LaurentPoly derivative() const {
        LaurentPoly r;
        for (const auto& [e, c] : coeffs_) r.add_term(e - 1, c * e);
        return r;
    }

    // The additive folding t^n -> t^|n|.
    LaurentPoly phi_fold() const {
        LaurentPoly r;
        for (const auto& [e, c] : coeffs_) r.add_term(qlink::abs(e), c);
        return r;
    }

    bool is_symmetric() const {
        for (const auto& [e, c] : coeffs_)
            if (coefficient(-e) != c) return false;
        return true;
    }

    std::string to_text() const;
    static LaurentPoly parse(const std::string& text);

  private:
    void add_term(const Int& e, const Int& c) {
        if (c == 0) return;
        auto [it, inserted] = coeffs_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }
    void prune() {
        for (auto it = coeffs_.begin(); it != coeffs_.end();)
            it = (it->second == 0) ? coeffs_.erase(it) : std::next(it);
    }

    Map coeffs_;
};

// Polynomial in z with integer coefficients beta^1..beta^K, constant term 0.
// Carrier for the derived invariants read off from the eta function.
class ZSeries {
  public:
    ZSeries() = default;
    explicit ZSeries(std::vector<Int> betas) : betas_(std::move(betas)) { prune(); }

    const std::vector<Int>& betas() const { return betas_; }
    bool is_zero() const { return betas_.empty(); }

    // beta^k, 1-based.
    Int beta(std::size_t k) const {
        if (k == 0) throw std::invalid_argument("ZSeries::beta: index is 1-based");
        return k <= betas_.size() ? betas_[k - 1] : Int(0);
    }

    bool operator==(const ZSeries& rhs) const { return betas_ == rhs.betas_; }

    // Substitute z = -(t + t^-1 - 2); exact inverse of cochran_expand.
    LaurentPoly to_laurent() const {
        LaurentPoly z = -(LaurentPoly::t() + LaurentPoly::monomial(-1) -
                          LaurentPoly(Int(2)));
        LaurentPoly acc, pw = LaurentPoly::one();
        for (const auto& b : betas_) {
            pw = pw * z;
            acc = acc + pw.scalar_mul(b);
        }
        return acc;
    }

  private:
    void prune() {
        while (!betas_.empty() && betas_.back() == 0) betas_.pop_back();
    }
    std::vector<Int> betas_;
};

// delta: Z[t] (+) Z[t] -> Z^3, (f,g) |-> (f(1), g(1), (f'+g'+f''+g'')(1)).
// Defined only on polynomials without negative exponents.
inline std::tuple<Int, Int, Int> delta_map(const LaurentPoly& f, const LaurentPoly& g) {
    for (const LaurentPoly* p : {&f, &g})
        if (!p->is_zero() && p->min_exponent() < 0)
            throw std::invalid_argument("delta_map: negative exponent present");
    auto d2 = [](const LaurentPoly& p) { return p.derivative() + p.derivative().derivative(); };
    return {f.eval_at_one(), g.eval_at_one(), (d2(f) + d2(g)).eval_at_one()};
}

// delta~: Z[t^(+-1)]^2 -> Z^4, (f,g) |-> (f(1), g(1), (f'+g')(1), (f''+g'')(1)).
inline std::tuple<Int, Int, Int, Int> delta_tilde_map(const LaurentPoly& f,
                                                      const LaurentPoly& g) {
    LaurentPoly d1 = f.derivative() + g.derivative();
    return {f.eval_at_one(), g.eval_at_one(), d1.eval_at_one(),
            (f.derivative().derivative() + g.derivative().derivative()).eval_at_one()};
}

// Expansion of a symmetric f with f(1) = 0 in the variable z = -(t + t^-1 - 2).
// Uses t^n + t^-n = p_n(u), u = t + t^-1, with p_0 = 2, p_1 = u,
// p_{n+1} = u p_n - p_{n-1}, then substitutes u = 2 - z.
inline ZSeries cochran_expand(const LaurentPoly& f) {
    if (!f.is_symmetric()) throw std::invalid_argument("cochran_expand: input not symmetric");
    if (f.eval_at_one() != 0) throw std::invalid_argument("cochran_expand: f(1) != 0");
    if (f.is_zero()) return ZSeries();

    Int maxn = f.max_exponent();
    if (maxn <= 0) return ZSeries();  // symmetric with f(1)=0 and no positive part => f = 0
    std::size_t N = static_cast<std::size_t>(maxn.convert_to<long long>());

    // q_n(z) = p_n(2 - z) - 2 as coefficient vectors indexed by power of z.
    std::vector<std::vector<Int>> p(N + 1);
    p[0] = {Int(2)};
    if (N >= 1) p[1] = {Int(2), Int(-1)};  // 2 - z
    for (std::size_t n = 2; n <= N; ++n) {
        // p_n = (2 - z) p_{n-1} - p_{n-2}
        std::vector<Int> r(p[n - 1].size() + 1, Int(0));
        for (std::size_t i = 0; i < p[n - 1].size(); ++i) {
            r[i] += 2 * p[n - 1][i];
            r[i + 1] -= p[n - 1][i];
        }
        for (std::size_t i = 0; i < p[n - 2].size(); ++i) r[i] -= p[n - 2][i];
        p[n] = std::move(r);
    }

    std::vector<Int> out(N + 1, Int(0));
    for (std::size_t n = 1; n <= N; ++n) {
        Int c = f.coefficient(Int(n));
        if (c == 0) continue;
        // c * (p_n(2-z) - 2)
        for (std::size_t i = 0; i < p[n].size(); ++i) out[i] += c * p[n][i];
        out[0] -= 2 * c;
    }
    if (out[0] != 0) throw std::logic_error("cochran_expand: nonzero constant term");
    return ZSeries(std::vector<Int>(out.begin() + 1, out.end()));
}

// Exact membership of `target` in the Z-span of `generators`, decided by
// integer row elimination (Hermite-style). All vectors must share a dimension.
inline bool lattice_membership(std::vector<std::vector<Int>> generators,
                               std::vector<Int> target) {
    const std::size_t d = target.size();
    for (const auto& g : generators)
        if (g.size() != d) throw std::invalid_argument("lattice_membership: dimension mismatch");

    std::size_t row = 0;
    for (std::size_t col = 0; col < d && row < generators.size(); ++col) {
        // Combine rows so that rows[row] holds the column gcd and the rest are 0.
        for (std::size_t r = row + 1; r < generators.size(); ++r) {
            while (generators[r][col] != 0) {
                if (generators[row][col] == 0) {
                    std::swap(generators[row], generators[r]);
                    continue;
                }
                Int q = generators[r][col] / generators[row][col];
                for (std::size_t j = 0; j < d; ++j)
                    generators[r][j] -= q * generators[row][j];
                if (generators[r][col] != 0) std::swap(generators[row], generators[r]);
            }
        }
        if (generators[row][col] == 0) continue;
        // Reduce the target against this pivot.
        if (target[col] % generators[row][col] != 0) {
            // try remaining rows? none have a nonzero entry in this column
            return false;
        }
        Int q = target[col] / generators[row][col];
        for (std::size_t j = 0; j < d; ++j) target[j] -= q * generators[row][j];
        ++row;
    }
    for (const auto& v : target)
        if (v != 0) return false;
    return true;
}

// -- text form ---------------------------------------------------------------
//
// Terms in increasing exponent order, e.g. "t^-1 - 2 + t^3"; "0" for zero.

inline std::string LaurentPoly::to_text() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        Int mag = qlink::abs(c);
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += (c < 0) ? " - " : " + ";
        }
        if (e == 0) {
            out += mag.str();
        } else {
            if (mag != 1) out += mag.str() + " ";
            out += (e == 1) ? "t" : "t^" + e.str();
        }
    }
    return out;
}

inline LaurentPoly LaurentPoly::parse(const std::string& text) {
    LaurentPoly r;
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    if (i < text.size() && text.compare(i, 1, "0") == 0 && i + 1 >= text.size())
        return r;
    bool first = true;
    while (i < text.size()) {
        skip_ws();
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = (text[i] == '-') ? -1 : 1;
            ++i;
            skip_ws();
        } else if (!first) {
            throw std::invalid_argument("LaurentPoly::parse: expected '+' or '-' at position " +
                                        std::to_string(i));
        }
        first = false;
        Int mag = 1;
        bool have_mag = false;
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i > start) {
            mag = Int(text.substr(start, i - start));
            have_mag = true;
        }
        skip_ws();
        Int exp = 0;
        if (i < text.size() && text[i] == 't') {
            ++i;
            exp = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                std::size_t es = i;
                if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
                if (i == es) throw std::invalid_argument("LaurentPoly::parse: bad exponent");
                exp = Int(text.substr(es, i - es));
            }
        } else if (!have_mag) {
            throw std::invalid_argument("LaurentPoly::parse: expected term at position " +
                                        std::to_string(i));
        }
        r.add_term(exp, sign * mag);
        skip_ws();
    }
    return r;
}

}  // namespace qlink
