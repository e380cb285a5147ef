#pragma once

// Freely reduced words in a free group. Generators are positive integer
// indices; a word is a sequence of (generator, +-1) letters with no adjacent
// cancelling pair. Conventions: [a,b] = a^-1 b^-1 a b and a^b = b^-1 a b.

#include "qlink/int.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qlink {

class FreeWord {
  public:
    using Letter = std::pair<int, int>;  // (generator index >= 1, sign +-1)

    FreeWord() = default;
    explicit FreeWord(std::vector<Letter> letters) { for (auto& l : letters) push(l); }

    static FreeWord generator(int g, int sign = 1) {
        return FreeWord({Letter{g, sign}});
    }

    const std::vector<Letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    std::size_t length() const { return letters_.size(); }

    bool operator==(const FreeWord& rhs) const { return letters_ == rhs.letters_; }
    bool operator!=(const FreeWord& rhs) const { return letters_ != rhs.letters_; }
    bool operator<(const FreeWord& rhs) const { return letters_ < rhs.letters_; }

    FreeWord operator*(const FreeWord& rhs) const {
        FreeWord r(*this);
        for (const auto& l : rhs.letters_) r.push(l);
        return r;
    }

    FreeWord inverse() const {
        FreeWord r;
        for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
            r.push({it->first, -it->second});
        return r;
    }

    FreeWord pow(long n) const {
        FreeWord base = n < 0 ? inverse() : *this;
        FreeWord r;
        for (long i = 0; i < (n < 0 ? -n : n); ++i) r = r * base;
        return r;
    }

    // Exponent sum of a generator (abelianization coordinate).
    long exponent_sum(int g) const {
        long s = 0;
        for (const auto& [gen, sign] : letters_)
            if (gen == g) s += sign;
        return s;
    }

    std::string to_text(const std::vector<std::string>& names = {}) const;

  private:
    void push(const Letter& l) {
        if (l.second != 1 && l.second != -1) throw std::invalid_argument("FreeWord: bad sign");
        if (!letters_.empty() && letters_.back().first == l.first &&
            letters_.back().second == -l.second) {
            letters_.pop_back();
        } else {
            letters_.push_back(l);
        }
    }

    std::vector<Letter> letters_;
};

inline FreeWord conjugate(const FreeWord& a, const FreeWord& b) {
    return b.inverse() * a * b;  // a^b
}
inline FreeWord commutator(const FreeWord& a, const FreeWord& b) {
    return a.inverse() * b.inverse() * a * b;  // [a,b]
}

inline std::string FreeWord::to_text(const std::vector<std::string>& names) const {
    if (letters_.empty()) return "1";
    auto name = [&](int g) -> std::string {
        if (g >= 1 && static_cast<std::size_t>(g) <= names.size()) return names[g - 1];
        static const char* defaults[] = {"x", "y", "z", "m"};
        if (g >= 1 && g <= 4) return defaults[g - 1];
        return "g" + std::to_string(g);
    };
    std::string out;
    for (std::size_t i = 0; i < letters_.size();) {
        int g = letters_[i].first, s = letters_[i].second;
        std::size_t j = i;
        while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
        long e = static_cast<long>(j - i) * s;
        if (!out.empty()) out += " ";
        out += name(g);
        if (e != 1) out += "^" + std::to_string(e);
        i = j;
    }
    return out;
}

// Word literal syntax: `x y^-1 [y,x]^3` with brackets expanded before
// reduction. Unknown names are assigned fresh indices in order of first use;
// pass a non-empty map to pin indices.
class WordParser {
  public:
    explicit WordParser(std::map<std::string, int> names = {{"x", 1}, {"y", 2}, {"z", 3}, {"m", 4}})
        : names_(std::move(names)) {
        for (const auto& [n, i] : names_) next_ = std::max(next_, i + 1);
    }

    FreeWord parse(const std::string& text) {
        text_ = &text;
        pos_ = 0;
        FreeWord w = parse_sequence();
        skip_ws();
        if (pos_ != text.size()) fail("trailing input");
        return w;
    }

    const std::map<std::string, int>& names() const { return names_; }

  private:
    void fail(const std::string& what) const {
        throw std::invalid_argument("word parse error at position " + std::to_string(pos_) +
                                    ": " + what);
    }
    void skip_ws() {
        while (pos_ < text_->size() && std::isspace(static_cast<unsigned char>((*text_)[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip_ws();
        return pos_ < text_->size() && (*text_)[pos_] == c;
    }
    void expect(char c) {
        if (!peek(c)) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    FreeWord parse_sequence(bool in_bracket = false) {
        FreeWord w;
        while (true) {
            skip_ws();
            if (pos_ >= text_->size()) break;
            char c = (*text_)[pos_];
            if (c == ',' || c == ']') {
                if (!in_bracket) fail("unexpected bracket punctuation");
                break;
            }
            w = w * parse_factor();
        }
        return w;
    }

    FreeWord parse_factor() {
        skip_ws();
        FreeWord base;
        if (peek('[')) {
            ++pos_;
            FreeWord a = parse_sequence(true);
            expect(',');
            FreeWord b = parse_sequence(true);
            expect(']');
            base = commutator(a, b);
        } else {
            std::size_t start = pos_;
            while (pos_ < text_->size() &&
                   (std::isalnum(static_cast<unsigned char>((*text_)[pos_])) || (*text_)[pos_] == '_'))
                ++pos_;
            if (pos_ == start) fail("expected generator name or '['");
            std::string name = text_->substr(start, pos_ - start);
            auto it = names_.find(name);
            if (it == names_.end()) it = names_.emplace(name, next_++).first;
            base = FreeWord::generator(it->second);
        }
        if (peek('^')) {
            ++pos_;
            skip_ws();
            std::size_t start = pos_;
            if (pos_ < text_->size() && ((*text_)[pos_] == '-' || (*text_)[pos_] == '+')) ++pos_;
            while (pos_ < text_->size() && std::isdigit(static_cast<unsigned char>((*text_)[pos_]))) ++pos_;
            if (pos_ == start) fail("expected exponent");
            base = base.pow(std::stol(text_->substr(start, pos_ - start)));
        }
        return base;
    }

    std::map<std::string, int> names_;
    int next_ = 1;
    const std::string* text_ = nullptr;
    std::size_t pos_ = 0;
};

inline FreeWord parse_word(const std::string& text) { return WordParser().parse(text); }

}  // namespace qlink
