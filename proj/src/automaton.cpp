#include "braid/automaton.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "braid/relaxation.hpp"

namespace braid {

namespace {

using Entry = std::pair<Iv, Iv>;

// reflect the disk across the axis: upper and lower arcs trade places
ExtendedShadowTable mirror_table(const ExtendedShadowTable& s) {
    ExtendedShadowTable t = s;
    for (int i = 1; i <= s.n; ++i)
        for (bool plus : {false, true}) {
            t.at(i, plus, true) = s.at(i, plus, false);
            t.at(i, plus, false) = s.at(i, plus, true);
        }
    return t;
}

bool subset(const Iv& I, int lo, int hi) { return I.empty() || (I.lo >= lo && I.hi <= hi); }

// acceptance conditions for appending UR(k,l), on the plain shadow
bool dec_ur(const ShadowTable& p, int k, int l, bool simple_variant) {
    const int n = p.n;
    if (p.at(k, true, false) == Iv{k, k}) return false;
    bool opens_left = simple_variant ? subset(p.at(k, true, true), 0, k)
                                     : p.at(k, true, true) == Iv{0, k} ||
                                           subset(p.at(k, false, true), k, l - 1);
    if (!opens_left) return false;
    for (int i = l + 2; i <= n; ++i)
        if (!(p.at(i, false, true).contains(l + 1) && p.at(i, false, false).contains(l + 1)))
            return false;
    if (l < n) {
        if (!p.at(l + 1, true, true).contains(k)) return false;
        if (p.at(l + 1, true, false) == Iv{l + 1, l + 1} &&
            !subset(p.at(l + 1, false, true), k + 1, l))
            return false;
    }
    return true;
}

void check_letter(const ExtendedShadowTable& s, const SlidingLetter& letter) {
    if (letter.q == Quad::UL || letter.q == Quad::LL)
        throw std::invalid_argument("left-oriented letters never extend a normal word");
    if (!(1 <= letter.k && letter.k < letter.l && letter.l <= s.n))
        throw std::invalid_argument("sliding letter out of range");
}

// successor state for UR(k,l); s must not be the trivial state
ExtendedShadowTable comp_ur(const ExtendedShadowTable& s, int k, int l) {
    const int n = s.n;
    auto psi = [k](int i) { return k < i ? i - 1 : i; };
    auto psibar = [k, l](int i) { return (k < i && i <= l) ? i - 1 : i; };
    auto big = [&](Iv I) { return I.empty() ? Iv{} : Iv{psi(I.lo), I.hi}; };
    auto small = [&](Iv I) {
        // arcs whose right endpoint stays left of the landing spot lose the
        // slid puncture from their cover before the renaming
        if (I.empty()) return Iv{};
        int lo = I.lo == k ? k + 1 : I.lo;
        int hi = I.hi == k ? k - 1 : I.hi;
        if (hi < lo) return Iv{};
        return Iv{psi(lo), psi(hi)};
    };
    // An arc keeps its extension iff its right endpoint stays right of the
    // landing spot of the slid puncture, which the old cover reveals.
    auto shift_up = [&](const Entry& e) {
        if (e.first.contains(k) && e.first.contains(l)) return Entry{big(e.first), big(e.second)};
        return Entry{small(e.first), Iv{}};
    };
    auto shift_down = [&](const Entry& e) {
        if (e.second.contains(k) && e.second.contains(l)) return Entry{big(e.first), big(e.second)};
        return Entry{small(e.first), Iv{}};
    };

    ExtendedShadowTable t;
    t.n = n;
    t.entries.resize(4 * n);

    // the slid puncture, now p_l, sits under a fresh lower bigon
    int u = 0, v = 0;
    const Iv kp = s.at(k, true, true).first;
    const Iv km = s.at(k, false, true).first;
    if (kp == Iv{0, k}) {
        u = 0;
        v = k;
    } else if (km.lo == k && km.hi < l) {
        u = k;
        v = km.hi;
    } else {
        throw std::logic_error("state lacks the slide structure at the chosen puncture");
    }
    t.at(l, true, true) = {Iv{u, l}, Iv{l, l}};
    t.at(l, false, true) = {Iv{v, l - 1}, Iv{}};
    t.at(l, true, false) = t.at(l, false, false) = {Iv{l, l}, Iv{u, l}};

    // the right neighbor p_{l+1}
    if (l < n) {
        t.at(l + 1, true, true) = shift_up(s.at(l + 1, true, true));
        t.at(l + 1, true, false) = shift_down(s.at(l + 1, true, false));
        if (s.at(l + 1, false, true).first.contains(k)) {
            t.at(l + 1, false, true) = shift_up(s.at(l + 1, false, true));
            t.at(l + 1, false, false) = shift_down(s.at(l + 1, false, false));
        } else {
            // the puncture now leans on the two new arcs wrapping p_l
            int x = s.at(l + 1, true, true).first.lo;
            t.at(l + 1, false, true) = {Iv{x, l}, Iv{l, l}};
            t.at(l + 1, false, false) = {Iv{l, l}, Iv{x, l}};
        }
    }

    // the overtaken puncture, formerly p_l and now p_{l-1}
    {
        const Iv pu = s.at(l, true, true).first;
        const Iv mu = s.at(l, false, true).first;
        const bool kpu = pu.contains(k), kmu = mu.contains(k);
        if (!kpu) {
            t.at(l - 1, true, true) = shift_up(s.at(l, true, true));
            t.at(l - 1, true, false) = shift_down(s.at(l, true, false));
        } else if (kmu) {
            t.at(l - 1, true, true) = {Iv{l - 1, l - 1}, Iv{}};
            t.at(l - 1, true, false) = {Iv{l, l}, Iv{mu.lo, l}};
        } else {
            t.at(l - 1, true, true) = {Iv{mu.lo - 1, l - 1}, Iv{}};
            t.at(l - 1, true, false) = {Iv{l, l}, Iv{pu.lo, l}};
        }
        t.at(l - 1, false, true) =
            kmu ? Entry{Iv{l - 1, l - 1}, Iv{}} : shift_up(s.at(l, false, true));
        t.at(l - 1, false, false) = shift_down(s.at(l, false, false));
    }

    // every other puncture keeps its neighbor arcs up to the renaming
    for (int i = 1; i <= n; ++i) {
        if (i == k || i == l || i == l + 1) continue;
        const int j = psibar(i);
        const Iv pu = s.at(i, true, true).first;
        const Iv mu = s.at(i, false, true).first;
        if (i < k && pu.contains(k) && !pu.contains(l))
            t.at(j, true, true) = {Iv{i + 1, l}, Iv{l, l}};
        else if (k < i && i < l && pu.contains(k))
            t.at(j, true, true) = {Iv{i, l - 1}, Iv{}};
        else
            t.at(j, true, true) = shift_up(s.at(i, true, true));
        if (i < k && mu.contains(k) && !mu.contains(l))
            t.at(j, false, true) = {Iv{i, l}, Iv{l, l}};
        else if (k < i && i < l && mu.contains(k))
            t.at(j, false, true) = {Iv{i - 1, l - 1}, Iv{}};
        else
            t.at(j, false, true) = shift_up(s.at(i, false, true));
        t.at(j, true, false) = shift_down(s.at(i, true, false));
        t.at(j, false, false) = shift_down(s.at(i, false, false));
    }
    return t;
}

std::vector<int> table_key(const ExtendedShadowTable& t) {
    std::vector<int> key;
    key.reserve(4 * t.entries.size());
    for (const auto& [I, J] : t.entries) {
        key.push_back(I.lo);
        key.push_back(I.hi);
        key.push_back(J.lo);
        key.push_back(J.hi);
    }
    return key;
}

int letter_index(const std::vector<SlidingLetter>& alphabet, const SlidingLetter& s) {
    for (std::size_t i = 0; i < alphabet.size(); ++i)
        if (alphabet[i] == s) return static_cast<int>(i);
    return -1;
}

}  // namespace

bool dec(const ExtendedShadowTable& s, const SlidingLetter& letter, bool simple_variant) {
    check_letter(s, letter);
    ShadowTable p =
        (letter.q == Quad::UR ? s.shadow_part() : mirror_table(s).shadow_part());
    return dec_ur(p, letter.k, letter.l, simple_variant);
}

ExtendedShadowTable comp(const ExtendedShadowTable& s, const SlidingLetter& letter) {
    check_letter(s, letter);
    if (!dec(s, letter)) throw std::invalid_argument("letter does not extend this state");
    if (s == extended_shadow(trivial(s.n)))
        return extended_shadow(lam(sliding_to_artin(letter, s.n)));
    if (letter.q == Quad::UR) return comp_ur(s, letter.k, letter.l);
    return mirror_table(comp_ur(mirror_table(s), letter.k, letter.l));
}

std::vector<SlidingLetter> normal_alphabet(int n) {
    std::vector<SlidingLetter> a;
    for (Quad q : {Quad::UR, Quad::LR})
        for (int k = 1; k < n; ++k)
            for (int l = k + 1; l <= n; ++l) a.push_back({q, k, l});
    return a;
}

NormalFormDFA build_automaton(int n, bool simple_variant, std::size_t state_budget) {
    if (n < 2) throw std::invalid_argument("need at least two strands");
    NormalFormDFA A;
    A.n = n;
    A.alphabet = normal_alphabet(n);
    const int nl = static_cast<int>(A.alphabet.size());

    std::map<std::vector<int>, int> ids;
    std::vector<SlidingWord> witness;  // only kept for the simple variant
    A.tables.push_back(extended_shadow(trivial(n)));
    A.delta.emplace_back(nl, -1);
    ids.emplace(table_key(A.tables[0]), 0);
    if (simple_variant) witness.push_back({n, {}});

    // scanning states in discovery order is a breadth-first traversal
    for (int s = 0; s < static_cast<int>(A.delta.size()); ++s) {
        for (int a = 0; a < nl; ++a) {
            const SlidingLetter& letter = A.alphabet[a];
            if (!dec(A.tables[s], letter, simple_variant)) continue;
            ExtendedShadowTable t;
            if (simple_variant) {
                // the state-to-state formulas are only established for the
                // default strategy, so successors come from the laminations
                SlidingWord w = witness[s];
                w.letters.push_back(letter);
                t = extended_shadow(lam(sliding_to_artin(w)));
            } else {
                t = comp(A.tables[s], letter);
            }
            auto [it, inserted] = ids.try_emplace(table_key(t), static_cast<int>(A.delta.size()));
            if (inserted) {
                if (A.delta.size() >= state_budget)
                    throw std::runtime_error("automaton state budget of " +
                                             std::to_string(state_budget) + " states exceeded");
                A.tables.push_back(std::move(t));
                A.delta.emplace_back(nl, -1);
                if (simple_variant) {
                    SlidingWord w = witness[s];
                    w.letters.push_back(letter);
                    witness.push_back(std::move(w));
                }
            }
            A.delta[s][a] = it->second;
        }
    }
    return A;
}

NormalFormDFA minimize(const NormalFormDFA& A) {
    const int nstates = A.states();
    const int nl = static_cast<int>(A.alphabet.size());
    const int dead = nstates;

    // partition refinement over the completed automaton; every live state is
    // accepting, the dead state is not
    std::vector<int> cls(nstates + 1, 0);
    cls[dead] = 1;
    int count = 2;
    for (;;) {
        std::map<std::vector<int>, int> sig_ids;
        std::vector<int> next(nstates + 1);
        for (int s = 0; s <= nstates; ++s) {
            std::vector<int> sig{cls[s]};
            for (int a = 0; a < nl; ++a) {
                int t = s == dead ? dead : A.delta[s][a];
                sig.push_back(cls[t < 0 ? dead : t]);
            }
            next[s] = sig_ids.try_emplace(sig, static_cast<int>(sig_ids.size())).first->second;
        }
        if (static_cast<int>(sig_ids.size()) == count) {
            cls = next;
            break;
        }
        count = static_cast<int>(sig_ids.size());
        cls = std::move(next);
    }

    // renumber the live classes in breadth-first order from the initial one
    std::vector<int> rep(count, -1);
    for (int s = 0; s < nstates; ++s)
        if (rep[cls[s]] < 0) rep[cls[s]] = s;
    std::vector<int> order(count, -1);
    NormalFormDFA M;
    M.n = A.n;
    M.alphabet = A.alphabet;
    std::queue<int> frontier;
    order[cls[A.initial]] = 0;
    M.delta.emplace_back(nl, -1);
    frontier.push(cls[A.initial]);
    while (!frontier.empty()) {
        int c = frontier.front();
        frontier.pop();
        for (int a = 0; a < nl; ++a) {
            int t = A.delta[rep[c]][a];
            if (t < 0) continue;
            int tc = cls[t];
            if (order[tc] < 0) {
                order[tc] = static_cast<int>(M.delta.size());
                M.delta.emplace_back(nl, -1);
                frontier.push(tc);
            }
            M.delta[order[c]][a] = order[tc];
        }
    }
    return M;
}

bool accepts(const NormalFormDFA& A, const SlidingWord& v) {
    if (v.n != A.n) throw std::invalid_argument("strand count mismatch");
    int s = A.initial;
    for (const SlidingLetter& letter : v.letters) {
        int a = letter_index(A.alphabet, letter);
        if (a < 0) throw std::invalid_argument("letter outside the automaton alphabet");
        s = A.delta[s][a];
        if (s < 0) return false;
    }
    return true;
}

bool language_equal(const NormalFormDFA& A, const NormalFormDFA& B) {
    if (A.n != B.n || A.alphabet != B.alphabet)
        throw std::invalid_argument("automata over different alphabets");
    const int nl = static_cast<int>(A.alphabet.size());
    std::map<std::pair<int, int>, bool> seen;
    std::queue<std::pair<int, int>> frontier;
    frontier.push({A.initial, B.initial});
    seen[{A.initial, B.initial}] = true;
    while (!frontier.empty()) {
        auto [a, b] = frontier.front();
        frontier.pop();
        if ((a < 0) != (b < 0)) return false;
        if (a < 0) continue;
        for (int i = 0; i < nl; ++i) {
            std::pair<int, int> next{A.delta[a][i], B.delta[b][i]};
            if (next.first < 0 && next.second < 0) continue;
            if (!seen.emplace(next, true).second) continue;
            frontier.push(next);
        }
    }
    return true;
}

std::string to_json(const NormalFormDFA& A) {
    nlohmann::json j;
    j["n"] = A.n;
    nlohmann::json alpha = nlohmann::json::array();
    for (const SlidingLetter& s : A.alphabet) alpha.push_back(to_string(s));
    j["alphabet"] = std::move(alpha);
    j["initial"] = A.initial;
    j["states"] = A.states();
    nlohmann::json acc = nlohmann::json::array();
    for (int s = 0; s < A.states(); ++s) acc.push_back(s);
    j["accepting"] = std::move(acc);
    nlohmann::json trans = nlohmann::json::array();
    for (int s = 0; s < A.states(); ++s)
        for (std::size_t a = 0; a < A.alphabet.size(); ++a)
            if (A.delta[s][a] >= 0)
                trans.push_back({{"from", s},
                                 {"letter", to_string(A.alphabet[a])},
                                 {"to", A.delta[s][a]}});
    j["transitions"] = std::move(trans);
    return j.dump(2);
}

NormalFormDFA from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    NormalFormDFA A;
    A.n = j.at("n").get<int>();
    if (A.n < 2) throw std::invalid_argument("invalid strand count");
    for (const auto& item : j.at("alphabet")) {
        SlidingWord w = parse_sliding(item.get<std::string>(), A.n);
        if (w.letters.size() != 1) throw std::invalid_argument("bad alphabet letter");
        A.alphabet.push_back(w.letters[0]);
    }
    if (A.alphabet != normal_alphabet(A.n))
        throw std::invalid_argument("alphabet is not the canonical normal-form alphabet");
    A.initial = j.at("initial").get<int>();
    int nstates = j.at("states").get<int>();
    if (nstates <= 0 || A.initial < 0 || A.initial >= nstates)
        throw std::invalid_argument("invalid state count or initial state");
    if (j.at("accepting").size() != static_cast<std::size_t>(nstates))
        throw std::invalid_argument("all states of a trim automaton must be accepting");
    A.delta.assign(nstates, std::vector<int>(A.alphabet.size(), -1));
    for (const auto& t : j.at("transitions")) {
        int from = t.at("from").get<int>();
        int to = t.at("to").get<int>();
        int a = letter_index(A.alphabet, parse_sliding(t.at("letter").get<std::string>(), A.n).letters.at(0));
        if (from < 0 || from >= nstates || to < 0 || to >= nstates || a < 0)
            throw std::invalid_argument("transition out of range");
        if (A.delta[from][a] >= 0 && A.delta[from][a] != to)
            throw std::invalid_argument("nondeterministic transition table");
        A.delta[from][a] = to;
    }
    return A;
}

std::string to_dot(const NormalFormDFA& A) {
    std::ostringstream os;
    os << "digraph normal_form {\n  rankdir=LR;\n  node [shape=doublecircle];\n"
       << "  start [shape=point];\n  start -> s" << A.initial << ";\n";
    for (int s = 0; s < A.states(); ++s)
        for (std::size_t a = 0; a < A.alphabet.size(); ++a)
            if (A.delta[s][a] >= 0)
                os << "  s" << s << " -> s" << A.delta[s][a] << " [label=\""
                   << to_string(A.alphabet[a]) << "\"];\n";
    os << "}\n";
    return os.str();
}

DistinguishReport distinguishing_experiment(int n) {
    if (n < 3) throw std::invalid_argument("need at least three strands");
    DistinguishReport r;
    r.n = n;
    r.m = (n - 1) / 2;
    NormalFormDFA M = minimize(build_automaton(n));
    std::ostringstream log;

    const int tuples = 1 << r.m;
    std::vector<SlidingWord> nf(tuples);
    std::vector<int> state(tuples);
    r.spellings_ok = true;
    for (int bits = 0; bits < tuples; ++bits) {
        ArtinWord w{n, {}};
        SlidingWord spelled{n, {}};
        for (int i = 1; i <= r.m; ++i) {
            bool pos = bits & (1 << (i - 1));
            w.letters.push_back(pos ? 2 * i - 1 : -(2 * i - 1));
            spelled.letters.push_back({pos ? Quad::UR : Quad::LR, 2 * i - 1, 2 * i});
        }
        nf[bits] = rnf(w);
        bool match = nf[bits] == spelled;
        r.spellings_ok = r.spellings_ok && match;
        int s = M.initial;
        for (const SlidingLetter& letter : nf[bits].letters)
            s = M.delta[s][letter_index(M.alphabet, letter)];
        state[bits] = s;
        log << to_string(w) << ": rnf = " << to_string(nf[bits])
            << (match ? "" : " (UNEXPECTED)") << ", state " << s << "\n";
    }
    std::vector<int> distinct = state;
    std::sort(distinct.begin(), distinct.end());
    r.distinct_states =
        static_cast<int>(std::unique(distinct.begin(), distinct.end()) - distinct.begin());

    r.extensions_ok = true;
    for (int e = 0; e < tuples; ++e)
        for (int h = 0; h < tuples; ++h) {
            if (e == h) continue;
            int i = 1;
            while (((e >> (i - 1)) & 1) == ((h >> (i - 1)) & 1) || !((e >> (i - 1)) & 1)) {
                if (++i > r.m) break;
            }
            if (i > r.m) continue;  // e has no +1 slot where they differ
            SlidingLetter ext{Quad::LR, 2 * i, n};
            SlidingWord we = nf[e], wh = nf[h];
            we.letters.push_back(ext);
            wh.letters.push_back(ext);
            bool good = accepts(M, we) && !accepts(M, wh);
            r.extensions_ok = r.extensions_ok && good;
            ++r.pairs_checked;
            if (!good)
                log << "extension LR(" << 2 * i << "," << n << ") fails to separate tuples "
                    << e << " and " << h << "\n";
        }
    log << "distinct states: " << r.distinct_states << " of " << tuples << "\n";
    r.details = log.str();
    return r;
}

}  // namespace braid
