#pragma once

// Conway polynomial via the skein recursion nabla(L+) - nabla(L-) = z nabla(L0)
// with descending diagrams as the base case, memoized on the canonical
// serialization. The variable z is carried by LaurentPoly (exponents >= 0).

#include "qlink/diagram.hpp"
#include "qlink/laurent.hpp"

#include <istream>
#include <mutex>
#include <optional>
#include <ostream>
#include <unordered_map>

namespace qlink {

class SkeinCache {
  public:
    std::optional<LaurentPoly> get(const std::string& key) const {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = map_.find(key);
        if (it == map_.end()) return std::nullopt;
        return it->second;
    }
    void put(const std::string& key, const LaurentPoly& value) {
        std::lock_guard<std::mutex> lk(mu_);
        map_.emplace(key, value);  // idempotent: duplicates carry equal values
    }
    std::size_t size() const {
        std::lock_guard<std::mutex> lk(mu_);
        return map_.size();
    }
    void clear() {
        std::lock_guard<std::mutex> lk(mu_);
        map_.clear();
    }

    void save(std::ostream& os) const {
        std::lock_guard<std::mutex> lk(mu_);
        for (const auto& [key, poly] : map_) os << key << "\t" << poly.to_text() << "\n";
    }
    void load(std::istream& is) {
        std::string line;
        while (std::getline(is, line)) {
            auto tab = line.find('\t');
            if (tab == std::string::npos) continue;
            try {
                LaurentPoly p = LaurentPoly::parse(line.substr(tab + 1));
                put(line.substr(0, tab), p);
            } catch (const std::exception&) {
                // ignore malformed lines; the cache is disposable
            }
        }
    }

    static SkeinCache& global() {
        static SkeinCache cache;
        return cache;
    }

  private:
    mutable std::mutex mu_;
    std::unordered_map<std::string, LaurentPoly> map_;
};

namespace detail {

inline LaurentPoly conway_rec(const LinkDiagram& d, SkeinCache* cache) {
    LinkDiagram cd = d.canonical();
    std::string key;
    if (cache) {
        key = cd.serialize();
        if (auto hit = cache->get(key)) return *hit;
    }
    int k = cd.first_met_under();
    LaurentPoly result;
    if (k < 0) {
        // descending diagrams are unlinks
        result = cd.num_components() == 1 ? LaurentPoly::one() : LaurentPoly::zero();
    } else {
        LaurentPoly other = conway_rec(cd.switched(k), cache);
        LaurentPoly smoothed = conway_rec(cd.smoothed(k), cache);
        LaurentPoly zsm = LaurentPoly::t() * smoothed;
        result = cd.crossing_sign(k) > 0 ? other + zsm : other - zsm;
    }
    if (cache) cache->put(key, result);
    return result;
}

}  // namespace detail

inline LaurentPoly conway_polynomial(const LinkDiagram& d, SkeinCache* cache = &SkeinCache::global()) {
    return detail::conway_rec(d, cache);
}

inline Int conway_coefficient(const LinkDiagram& d, long i,
                              SkeinCache* cache = &SkeinCache::global()) {
    return conway_polynomial(d, cache).coefficient(Int(i));
}

// a3(L) - a1(L) (a2(K1) + a2(K2)) for a two-component diagram.
inline Int beta_tilde(const LinkDiagram& d, SkeinCache* cache = &SkeinCache::global()) {
    if (d.num_components() != 2)
        throw std::invalid_argument("beta_tilde: diagram must have exactly 2 components");
    LaurentPoly nabla = conway_polynomial(d, cache);
    Int a2sum = 0;
    for (int i = 1; i <= 2; ++i)
        a2sum += conway_polynomial(d.component_subdiagram(i), cache).coefficient(Int(2));
    return nabla.coefficient(Int(3)) - nabla.coefficient(Int(1)) * a2sum;
}

// The Sato-Levine invariant a3 of a two-component diagram with zero linking
// number (the general formula degenerates since a1 = 0).
inline Int sato_levine_beta(const LinkDiagram& d, SkeinCache* cache = &SkeinCache::global()) {
    if (d.num_components() != 2)
        throw std::invalid_argument("sato_levine_beta: diagram must have exactly 2 components");
    if (d.linking_number(1, 2) != 0)
        throw std::invalid_argument("sato_levine_beta: linking number must be zero");
    return conway_coefficient(d, 3, cache);
}

// Both sides of the crossing-change identity at a positive self-crossing c:
// lhs = beta~(d) - beta~(switch(d, c)), rhs = n (l - n) from the lobe pair.
struct Jump22 {
    Int lhs, rhs;
};

inline Jump22 jump_check_22(const LinkDiagram& d, int c, SkeinCache* cache = &SkeinCache::global()) {
    if (d.num_components() != 2)
        throw std::invalid_argument("jump_check_22: diagram must have exactly 2 components");
    if (!d.is_self_crossing(c))
        throw std::invalid_argument("jump_check_22: crossing must be a self-crossing");
    if (d.crossing_sign(c) != 1)
        throw std::invalid_argument("jump_check_22: d must be the positive resolution at c");
    int i = d.component_of(d.crossing(c).under_in());
    int j = i == 1 ? 2 : 1;
    auto [n, rest] = d.lobe_linking_numbers(c, j);
    Jump22 r;
    r.lhs = beta_tilde(d, cache) - beta_tilde(d.switched(c), cache);
    r.rhs = n * rest;  // n (l - n)
    return r;
}

}  // namespace qlink
