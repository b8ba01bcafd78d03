#pragma once
// Braid words: Artin generator words and sliding-braid words.
//
// Artin letters are signed integers: +i is sigma_i, -i is sigma_i^{-1},
// 1 <= i <= n-1 on n strands.  Sliding letters are the four families
//   UR(k,l) = [k curving-right-over l]  = sigma_k ... sigma_{l-1}
//   UL(k,l) = UR(k,l)^{-1}              = sigma_{l-1}^{-1} ... sigma_k^{-1}
//   LR(k,l) = [k curving-right-under l] = sigma_k^{-1} ... sigma_{l-1}^{-1}
//   LL(k,l) = LR(k,l)^{-1}              = sigma_{l-1} ... sigma_k
// with 1 <= k < l <= n.

#include <cstdint>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace braid {

struct ArtinWord {
    int n = 2;
    std::vector<int> letters;

    bool valid() const {
        if (n < 2) return false;
        for (int g : letters)
            if (g == 0 || g > n - 1 || g < -(n - 1)) return false;
        return true;
    }
    bool operator==(const ArtinWord&) const = default;
};

enum class Quad : std::uint8_t { UR, UL, LR, LL };

inline const char* quad_name(Quad q) {
    switch (q) {
        case Quad::UR: return "UR";
        case Quad::UL: return "UL";
        case Quad::LR: return "LR";
        case Quad::LL: return "LL";
    }
    return "??";
}

// Inverse pairs UR<->UL, LR<->LL.
inline Quad quad_invert(Quad q) {
    switch (q) {
        case Quad::UR: return Quad::UL;
        case Quad::UL: return Quad::UR;
        case Quad::LR: return Quad::LL;
        case Quad::LL: return Quad::LR;
    }
    return q;
}

// Up/down reflection UR<->LR, UL<->LL.
inline Quad quad_mirror(Quad q) {
    switch (q) {
        case Quad::UR: return Quad::LR;
        case Quad::LR: return Quad::UR;
        case Quad::UL: return Quad::LL;
        case Quad::LL: return Quad::UL;
    }
    return q;
}

struct SlidingLetter {
    Quad q = Quad::UR;
    int k = 1;
    int l = 2;
    bool operator==(const SlidingLetter&) const = default;
};

struct SlidingWord {
    int n = 2;
    std::vector<SlidingLetter> letters;

    bool valid() const {
        if (n < 2) return false;
        for (const auto& s : letters)
            if (!(1 <= s.k && s.k < s.l && s.l <= n)) return false;
        return true;
    }
    // Right-oriented words (UR/LR only) are the normal-form alphabet.
    bool right_oriented() const {
        for (const auto& s : letters)
            if (s.q != Quad::UR && s.q != Quad::LR) return false;
        return true;
    }
    bool operator==(const SlidingWord&) const = default;
};

inline ArtinWord sliding_to_artin(const SlidingLetter& s, int n) {
    ArtinWord w;
    w.n = n;
    switch (s.q) {
        case Quad::UR:
            for (int i = s.k; i <= s.l - 1; ++i) w.letters.push_back(i);
            break;
        case Quad::UL:
            for (int i = s.l - 1; i >= s.k; --i) w.letters.push_back(-i);
            break;
        case Quad::LR:
            for (int i = s.k; i <= s.l - 1; ++i) w.letters.push_back(-i);
            break;
        case Quad::LL:
            for (int i = s.l - 1; i >= s.k; --i) w.letters.push_back(i);
            break;
    }
    return w;
}

inline ArtinWord sliding_to_artin(const SlidingWord& w) {
    ArtinWord out;
    out.n = w.n;
    for (const auto& s : w.letters) {
        ArtinWord part = sliding_to_artin(s, w.n);
        out.letters.insert(out.letters.end(), part.letters.begin(), part.letters.end());
    }
    return out;
}

inline ArtinWord invert(const ArtinWord& w) {
    ArtinWord out;
    out.n = w.n;
    out.letters.reserve(w.letters.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        out.letters.push_back(-*it);
    return out;
}

inline SlidingWord invert(const SlidingWord& w) {
    SlidingWord out;
    out.n = w.n;
    out.letters.reserve(w.letters.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        out.letters.push_back({quad_invert(it->q), it->k, it->l});
    return out;
}

inline ArtinWord concat(const ArtinWord& a, const ArtinWord& b) {
    ArtinWord out = a;
    out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
    return out;
}

inline SlidingWord concat(const SlidingWord& a, const SlidingWord& b) {
    SlidingWord out = a;
    out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
    return out;
}

// Conjugation by the half twist: sigma_i -> sigma_{n-i}, letter order kept.
inline ArtinWord phi_delta(const ArtinWord& w) {
    ArtinWord out;
    out.n = w.n;
    out.letters.reserve(w.letters.size());
    for (int g : w.letters)
        out.letters.push_back(g > 0 ? w.n - g : -(w.n + g));
    return out;
}

// Left/right reflection on sliding letters: puncture i -> n+1-i.
inline SlidingWord phi_delta(const SlidingWord& w) {
    SlidingWord out;
    out.n = w.n;
    out.letters.reserve(w.letters.size());
    for (const auto& s : w.letters)
        out.letters.push_back({s.q, w.n + 1 - s.l, w.n + 1 - s.k});
    return out;
}

// Up/down reflection: flips every crossing.
inline ArtinWord mirror(const ArtinWord& w) {
    ArtinWord out;
    out.n = w.n;
    out.letters.reserve(w.letters.size());
    for (int g : w.letters) out.letters.push_back(-g);
    return out;
}

inline SlidingWord mirror(const SlidingWord& w) {
    SlidingWord out;
    out.n = w.n;
    out.letters.reserve(w.letters.size());
    for (const auto& s : w.letters)
        out.letters.push_back({quad_mirror(s.q), s.k, s.l});
    return out;
}

inline ArtinWord random_word(int n, int length, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(0, 2 * (n - 1) - 1);
    ArtinWord w;
    w.n = n;
    w.letters.reserve(length);
    for (int i = 0; i < length; ++i) {
        int r = dist(rng);
        int g = r / 2 + 1;
        w.letters.push_back(r % 2 ? g : -g);
    }
    return w;
}

// ---- text forms ----------------------------------------------------------

inline std::string to_string(const ArtinWord& w) {
    std::ostringstream os;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        if (i) os << ' ';
        os << w.letters[i];
    }
    return os.str();
}

inline std::string to_string(const SlidingLetter& s) {
    std::ostringstream os;
    os << quad_name(s.q) << '(' << s.k << ',' << s.l << ')';
    return os.str();
}

inline std::string to_string(const SlidingWord& w) {
    std::ostringstream os;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        if (i) os << ' ';
        os << to_string(w.letters[i]);
    }
    return os.str();
}

inline ArtinWord parse_artin(const std::string& text, int n) {
    ArtinWord w;
    w.n = n;
    std::istringstream is(text);
    int g;
    while (is >> g) w.letters.push_back(g);
    if (!is.eof()) throw std::invalid_argument("bad Artin word: " + text);
    if (!w.valid()) throw std::invalid_argument("Artin letter out of range: " + text);
    return w;
}

inline SlidingWord parse_sliding(const std::string& text, int n) {
    SlidingWord w;
    w.n = n;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        // allow separators like "UR(1,3)·LR(2,4)" to arrive pre-split on spaces
        if (tok.size() < 7 || tok[2] != '(' || tok.back() != ')')
            throw std::invalid_argument("bad sliding letter: " + tok);
        std::string qn = tok.substr(0, 2);
        Quad q;
        if (qn == "UR") q = Quad::UR;
        else if (qn == "UL") q = Quad::UL;
        else if (qn == "LR") q = Quad::LR;
        else if (qn == "LL") q = Quad::LL;
        else throw std::invalid_argument("bad sliding letter: " + tok);
        std::string body = tok.substr(3, tok.size() - 4);
        auto comma = body.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("bad sliding letter: " + tok);
        int k = std::stoi(body.substr(0, comma));
        int l = std::stoi(body.substr(comma + 1));
        w.letters.push_back({q, k, l});
    }
    if (!w.valid()) throw std::invalid_argument("sliding letter out of range: " + text);
    return w;
}

// Heuristic: does this text look like a sliding word rather than Artin letters?
inline bool looks_like_sliding(const std::string& text) {
    return text.find('(') != std::string::npos;
}

}  // namespace braid
