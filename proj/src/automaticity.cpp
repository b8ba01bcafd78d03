#include "braid/automaticity.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "braid/coords.hpp"
#include "braid/relaxation.hpp"

namespace braid {

int artin_letter_index(int n, int g) {
    int i = g > 0 ? g : -g;
    if (i < 1 || i > n - 1) throw std::invalid_argument("generator out of range");
    return g > 0 ? i - 1 : (n - 1) + (i - 1);
}

int artin_letter_of(int n, int index) {
    if (index < 0 || index >= 2 * (n - 1)) throw std::invalid_argument("letter index out of range");
    return index < n - 1 ? index + 1 : -(index - (n - 1) + 1);
}

std::string to_string(Timing t) { return t == Timing::Async ? "async" : "sync"; }
std::string to_string(Side s) { return s == Side::Left ? "left" : "right"; }

namespace {

// canonical key of a braid: the faithful fundamental-group images
using BraidKey = std::vector<FWord>;

BraidKey key_of(const CoordinateState& id, const ArtinWord& w) {
    return coordinate_action(id, w).images;
}

ArtinDFA determinize(int n, const std::vector<std::vector<std::pair<int, int>>>& nfa,
                     const std::vector<char>& nfa_accepting, const std::vector<int>& start,
                     const std::vector<std::vector<int>>& eps, std::size_t budget) {
    const int nl = 2 * (n - 1);
    auto closure = [&eps](std::vector<int> set) {
        std::vector<int> stack = set;
        while (!stack.empty()) {
            int s = stack.back();
            stack.pop_back();
            for (int t : eps[s])
                if (!std::binary_search(set.begin(), set.end(), t)) {
                    set.insert(std::lower_bound(set.begin(), set.end(), t), t);
                    stack.push_back(t);
                }
        }
        return set;
    };
    ArtinDFA D;
    D.n = n;
    std::map<std::vector<int>, int> ids;
    std::vector<std::vector<int>> subsets;
    std::vector<int> init = start;
    std::sort(init.begin(), init.end());
    init = closure(std::move(init));
    ids.emplace(init, 0);
    subsets.push_back(init);
    D.delta.emplace_back(nl, -1);
    for (int s = 0; s < static_cast<int>(subsets.size()); ++s) {
        for (int a = 0; a < nl; ++a) {
            std::vector<int> next;
            for (int q : subsets[s])
                for (const auto& [letter, to] : nfa[q])
                    if (letter == a) next.push_back(to);
            std::sort(next.begin(), next.end());
            next.erase(std::unique(next.begin(), next.end()), next.end());
            if (next.empty()) continue;
            next = closure(std::move(next));
            auto [it, inserted] = ids.try_emplace(next, static_cast<int>(subsets.size()));
            if (inserted) {
                if (subsets.size() >= budget)
                    throw std::runtime_error("determinization state budget exceeded");
                subsets.push_back(next);
                D.delta.emplace_back(nl, -1);
            }
            D.delta[s][a] = it->second;
        }
    }
    D.accepting.assign(D.states(), 0);
    for (int s = 0; s < D.states(); ++s)
        for (int q : subsets[s])
            if (nfa_accepting[q]) D.accepting[s] = 1;
    return D;
}

}  // namespace

ArtinDFA expand_automaton(const NormalFormDFA& M) {
    const int n = M.n;
    // spell every sliding-letter edge as a chain of Artin letters
    std::vector<std::vector<std::pair<int, int>>> nfa(M.states());
    std::vector<char> acc(M.states(), 1);
    for (int q = 0; q < M.states(); ++q)
        for (std::size_t a = 0; a < M.alphabet.size(); ++a) {
            int target = M.delta[q][a];
            if (target < 0) continue;
            ArtinWord spell = sliding_to_artin(M.alphabet[a], n);
            int from = q;
            for (std::size_t i = 0; i + 1 < spell.letters.size(); ++i) {
                int mid = static_cast<int>(nfa.size());
                nfa.emplace_back();
                acc.push_back(0);
                nfa[from].push_back({artin_letter_index(n, spell.letters[i]), mid});
                from = mid;
            }
            nfa[from].push_back({artin_letter_index(n, spell.letters.back()), target});
        }
    std::vector<std::vector<int>> eps(nfa.size());
    return minimize(determinize(n, nfa, acc, {M.initial}, eps, 1'000'000));
}

ArtinDFA minimize(const ArtinDFA& A) {
    const int nstates = A.states();
    const int nl = A.letters();
    const int dead = nstates;
    std::vector<int> cls(nstates + 1);
    for (int s = 0; s < nstates; ++s) cls[s] = A.accepting[s] ? 0 : 1;
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
        bool stable = static_cast<int>(sig_ids.size()) == count;
        count = static_cast<int>(sig_ids.size());
        cls = std::move(next);
        if (stable) break;
    }
    int dead_cls = cls[dead];
    ArtinDFA M;
    M.n = A.n;
    if (cls[A.initial] == dead_cls) {  // empty language
        M.delta.assign(1, std::vector<int>(nl, -1));
        M.accepting.assign(1, 0);
        return M;
    }
    std::vector<int> rep(count, -1);
    for (int s = 0; s < nstates; ++s)
        if (rep[cls[s]] < 0) rep[cls[s]] = s;
    std::vector<int> order(count, -1);
    std::queue<int> frontier;
    order[cls[A.initial]] = 0;
    M.delta.emplace_back(nl, -1);
    M.accepting.push_back(A.accepting[A.initial]);
    frontier.push(cls[A.initial]);
    while (!frontier.empty()) {
        int c = frontier.front();
        frontier.pop();
        for (int a = 0; a < nl; ++a) {
            int t = A.delta[rep[c]][a];
            if (t < 0 || cls[t] == dead_cls) continue;
            int tc = cls[t];
            if (order[tc] < 0) {
                order[tc] = static_cast<int>(M.delta.size());
                M.delta.emplace_back(nl, -1);
                M.accepting.push_back(A.accepting[rep[tc]]);
                frontier.push(tc);
            }
            M.delta[order[c]][a] = order[tc];
        }
    }
    return M;
}

bool accepts(const ArtinDFA& A, const ArtinWord& w) {
    if (w.n != A.n) throw std::invalid_argument("strand count mismatch");
    int s = A.initial;
    for (int g : w.letters) {
        s = A.delta[s][artin_letter_index(A.n, g)];
        if (s < 0) return false;
    }
    return A.accepting[s];
}

bool language_equal(const ArtinDFA& A, const ArtinDFA& B) {
    if (A.n != B.n) throw std::invalid_argument("automata over different alphabets");
    const int nl = A.letters();
    auto acc = [](const ArtinDFA& D, int s) { return s >= 0 && D.accepting[s]; };
    std::map<std::pair<int, int>, bool> seen;
    std::queue<std::pair<int, int>> frontier;
    frontier.push({A.initial, B.initial});
    seen[{A.initial, B.initial}] = true;
    while (!frontier.empty()) {
        auto [a, b] = frontier.front();
        frontier.pop();
        if (acc(A, a) != acc(B, b)) return false;
        for (int i = 0; i < nl; ++i) {
            std::pair<int, int> next{a < 0 ? -1 : A.delta[a][i], b < 0 ? -1 : B.delta[b][i]};
            if (next.first < 0 && next.second < 0) continue;
            if (seen.emplace(next, true).second) frontier.push(next);
        }
    }
    return true;
}

DifferenceSet braid_ball(int n, int radius) {
    DifferenceSet T;
    T.n = n;
    T.radius = radius;
    CoordinateState id = identity_state(n);
    std::map<BraidKey, int> seen;
    T.elements.push_back({n, {}});
    seen.emplace(id.images, 0);
    std::size_t level_begin = 0;
    for (int r = 1; r <= radius; ++r) {
        std::size_t level_end = T.elements.size();
        for (std::size_t e = level_begin; e < level_end; ++e)
            for (int a = 0; a < 2 * (n - 1); ++a) {
                ArtinWord w = T.elements[e];
                w.letters.push_back(artin_letter_of(n, a));
                BraidKey key = key_of(id, w);
                if (seen.emplace(std::move(key), static_cast<int>(T.elements.size())).second)
                    T.elements.push_back(std::move(w));
            }
        level_begin = level_end;
    }
    return T;
}

ProductAutomaton build_product(const ArtinDFA& base, const DifferenceSet& T, int g,
                               Timing timing, Side side, std::size_t state_budget) {
    const int n = base.n;
    if (T.n != n) throw std::invalid_argument("difference set over wrong strand count");
    const int nl = base.letters();
    const int eps = nl;  // padding letter index
    CoordinateState id = identity_state(n);

    std::map<BraidKey, int> index;
    for (std::size_t t = 0; t < T.size(); ++t) index.emplace(key_of(id, T.elements[t]), t);

    // quotient table: mult[t][lambda][mu] = index of mu^-1 x_t lambda, or -1
    auto word_of = [&](int letter) {
        ArtinWord w{n, {}};
        if (letter != eps) w.letters.push_back(artin_letter_of(n, letter));
        return w;
    };
    std::vector<std::vector<std::vector<int>>> mult(
        T.size(), std::vector<std::vector<int>>(nl + 1, std::vector<int>(nl + 1, -1)));
    for (std::size_t t = 0; t < T.size(); ++t)
        for (int la = 0; la <= nl; ++la)
            for (int mu = 0; mu <= nl; ++mu) {
                ArtinWord w = concat(concat(invert(word_of(mu)), T.elements[t]), word_of(la));
                auto it = index.find(key_of(id, w));
                if (it != index.end()) mult[t][la][mu] = it->second;
            }

    ProductAutomaton P;
    P.n = n;
    P.timing = timing;
    P.side = side;
    P.anchor = g;
    int x0;
    if (side == Side::Left) {
        ArtinWord gw{n, {g}};
        auto it = index.find(key_of(id, gw));
        if (it == index.end())
            throw std::invalid_argument("anchor generator is not in the difference set");
        x0 = it->second;
    } else {
        x0 = 0;  // identity
    }
    int x_final;
    if (side == Side::Left) {
        x_final = 0;
    } else {
        ArtinWord gi{n, {-g}};
        auto it = index.find(key_of(id, gi));
        x_final = it == index.end() ? -1 : it->second;
    }

    // state = ((q * states + r) * |T| + t) * 4 + padding bits (sync only)
    auto encode = [&](long long q, long long r, long long t, int pa, int pb) {
        return ((q * base.states() + r) * static_cast<long long>(T.size()) + t) * 4 + pa * 2 + pb;
    };
    std::map<long long, int> ids;
    std::vector<long long> code;
    long long c0 = encode(base.initial, base.initial, x0, 0, 0);
    ids.emplace(c0, 0);
    code.push_back(c0);
    P.edges.emplace_back();
    for (int s = 0; s < static_cast<int>(P.edges.size()); ++s) {
        long long c = code[s];
        int pb = c & 1, pa = (c >> 1) & 1;
        long long rest = c >> 2;
        int t = rest % T.size();
        rest /= static_cast<long long>(T.size());
        int r = rest % base.states();
        int q = rest / base.states();
        for (int la = 0; la <= eps; ++la) {
            if (timing == Timing::Sync && pa && la != eps) continue;
            int qn = la == eps ? q : base.delta[q][la];
            if (qn < 0) continue;
            for (int mu = 0; mu <= eps; ++mu) {
                if (la == eps && mu == eps) continue;
                if (timing == Timing::Sync && pb && mu != eps) continue;
                int rn = mu == eps ? r : base.delta[r][mu];
                if (rn < 0) continue;
                int tn = mult[t][la][mu];
                if (tn < 0) continue;
                int pan = timing == Timing::Sync && la == eps ? 1 : 0;
                int pbn = timing == Timing::Sync && mu == eps ? 1 : 0;
                long long cn = encode(qn, rn, tn, pan, pbn);
                auto [it, inserted] = ids.try_emplace(cn, static_cast<int>(P.edges.size()));
                if (inserted) {
                    if (P.edges.size() >= state_budget)
                        throw std::runtime_error("product state budget exceeded");
                    code.push_back(cn);
                    P.edges.emplace_back();
                }
                P.edges[s].push_back({la, mu, it->second});
            }
        }
    }
    P.accepting.assign(P.states(), 0);
    P.diff_index.assign(P.states(), 0);
    for (int s = 0; s < P.states(); ++s) {
        long long rest = code[s] >> 2;
        int t = rest % T.size();
        rest /= static_cast<long long>(T.size());
        int r = rest % base.states();
        int q = rest / base.states();
        P.diff_index[s] = t;
        if (t == x_final && base.accepting[q] && base.accepting[r]) P.accepting[s] = 1;
    }
    return P;
}

ArtinDFA epsilon_reduce(const ProductAutomaton& P, Side component, std::size_t state_budget) {
    const int n = P.n;
    const int eps = 2 * (n - 1);
    std::vector<std::vector<std::pair<int, int>>> nfa(P.states());
    std::vector<std::vector<int>> epsedges(P.states());
    for (int s = 0; s < P.states(); ++s)
        for (const auto& e : P.edges[s]) {
            int letter = component == Side::Left ? e.lambda : e.mu;
            if (letter == eps)
                epsedges[s].push_back(e.to);
            else
                nfa[s].push_back({letter, e.to});
        }
    std::vector<char> acc(P.accepting.begin(), P.accepting.end());
    return minimize(determinize(n, nfa, acc, {P.initial}, epsedges, state_budget));
}

bool check_witness(const ArtinDFA& base, const DifferenceSet& T, Timing timing, Side side,
                   std::size_t state_budget) {
    for (int i = 1; i < base.n; ++i)
        for (int g : {i, -i}) {
            ProductAutomaton P = build_product(base, T, g, timing, side, state_budget);
            ArtinDFA reduced = epsilon_reduce(P, Side::Left, state_budget);
            if (!language_equal(reduced, base)) return false;
        }
    return true;
}

DifferenceSet prune_witness(const ArtinDFA& base, const DifferenceSet& T, Timing timing,
                            Side side, std::size_t state_budget) {
    std::vector<char> keep(T.size(), 0);
    keep[0] = 1;  // identity
    for (int i = 1; i < base.n; ++i)
        for (int g : {i, -i}) {
            ProductAutomaton P = build_product(base, T, g, timing, side, state_budget);
            std::vector<std::vector<int>> rev(P.states());
            for (int s = 0; s < P.states(); ++s)
                for (const auto& e : P.edges[s]) rev[e.to].push_back(s);
            std::vector<char> useful(P.states(), 0);
            std::vector<int> stack;
            for (int s = 0; s < P.states(); ++s)
                if (P.accepting[s]) {
                    useful[s] = 1;
                    stack.push_back(s);
                }
            while (!stack.empty()) {
                int s = stack.back();
                stack.pop_back();
                for (int p : rev[s])
                    if (!useful[p]) {
                        useful[p] = 1;
                        stack.push_back(p);
                    }
            }
            for (int s = 0; s < P.states(); ++s)
                if (useful[s]) keep[P.diff_index[s]] = 1;
        }
    DifferenceSet pruned;
    pruned.n = T.n;
    pruned.radius = T.radius;
    for (std::size_t t = 0; t < T.size(); ++t)
        if (keep[t]) pruned.elements.push_back(T.elements[t]);
    if (!check_witness(base, pruned, timing, side, state_budget)) return T;
    return pruned;
}

WitnessResult search_witness(int n, Timing timing, Side side, int max_radius,
                             std::size_t max_t_size, std::size_t state_budget) {
    WitnessResult r;
    r.n = n;
    r.timing = timing;
    r.side = side;
    ArtinDFA base = expand_automaton(minimize(build_automaton(n)));
    for (int radius = 1; radius <= max_radius; ++radius) {
        DifferenceSet T = braid_ball(n, radius);
        r.radius = radius;
        r.t_size = T.size();
        if (T.size() > max_t_size) {
            r.exhausted = true;
            r.note = "difference-set budget exceeded at radius " + std::to_string(radius) +
                     " (|T| = " + std::to_string(T.size()) + ")";
            return r;
        }
        try {
            if (check_witness(base, T, timing, side, state_budget)) {
                r.found = true;
                DifferenceSet pruned = prune_witness(base, T, timing, side, state_budget);
                r.t_size = pruned.size();
                r.note = "witness inside the ball of radius " + std::to_string(radius) +
                         ", |T| = " + std::to_string(pruned.size());
                return r;
            }
        } catch (const std::runtime_error& e) {
            r.exhausted = true;
            r.note = e.what();
            return r;
        }
    }
    r.note = "no witness up to radius " + std::to_string(max_radius);
    return r;
}

std::string FamilyReport::text() const {
    std::ostringstream os;
    for (const std::string& line : lines) os << line << "\n";
    os << (ok ? "family checks passed" : "FAMILY CHECK FAILED") << "\n";
    return os.str();
}

std::string FamilyReport::json() const {
    nlohmann::json j;
    j["ok"] = ok;
    j["max_k"] = max_k;
    j["lines"] = lines;
    j["sync_divergence_norms"] = sync_divergence_norms;
    j["async_divergence_norms"] = async_divergence_norms;
    return j.dump(2);
}

FamilyReport family_checks(int max_k) {
    FamilyReport rep;
    rep.max_k = max_k;
    bool ok = true;
    auto record = [&](bool good, const std::string& what, int k) {
        ok = ok && good;
        rep.lines.push_back((good ? "ok   " : "FAIL ") + what + " (k = " + std::to_string(k) +
                            ")");
    };

    const ArtinWord delta3{4, {1, 2, 3, 1, 2, 1}};
    for (int k = 1; k <= max_k; ++k) {
        SlidingWord a{4, {{Quad::UR, 2, 4}}};
        for (int i = 0; i < k; ++i) {
            a.letters.push_back({Quad::UR, 1, 3});
            a.letters.push_back({Quad::LR, 1, 4});
            a.letters.push_back({Quad::UR, 3, 4});
        }
        SlidingWord b{4, {}};
        for (int i = 0; i < k; ++i) {
            b.letters.push_back({Quad::UR, 2, 4});
            b.letters.push_back({Quad::LR, 2, 4});
        }
        b.letters.push_back({Quad::UR, 1, 4});
        record(rnf(sliding_to_artin(a)) == a, "a_k is a normal word", k);
        record(rnf(sliding_to_artin(b)) == b, "b_k is a normal word", k);
        record(braid_equal(concat(ArtinWord{4, {1}}, sliding_to_artin(a)), sliding_to_artin(b)),
               "sigma_1 alpha_k = beta_k", k);
    }
    for (int k = 3; k <= max_k; ++k) {
        SlidingWord c{4, {}};
        for (int i = 0; i < k; ++i) c.letters.push_back({Quad::UR, 1, 2});
        for (int i = 0; i < k; ++i) c.letters.push_back({Quad::UR, 3, 4});
        SlidingWord d{4, {}};
        for (int i = 0; i < k + 1; ++i) d.letters.push_back({Quad::UR, 3, 4});
        d.letters.push_back({Quad::UR, 1, 4});
        d.letters.push_back({Quad::UR, 1, 4});
        for (int i = 0; i < k - 1; ++i) d.letters.push_back({Quad::UR, 3, 4});
        record(rnf(sliding_to_artin(c)) == c, "c_k is a normal word", k);
        record(rnf(sliding_to_artin(d)) == d, "d_k is a normal word", k);
        record(braid_equal(concat(sliding_to_artin(c), delta3), sliding_to_artin(d)),
               "gamma_k Delta_3 = delta_k", k);
        // matched prefixes of c_k and d_k are powers of single generators
        for (int len = 1; len <= k; ++len) {
            SlidingWord cp{4, {}}, dp{4, {}};
            for (int i = 0; i < len; ++i) {
                cp.letters.push_back({Quad::UR, 1, 2});
                dp.letters.push_back({Quad::UR, 3, 4});
            }
            ArtinWord x{4, std::vector<int>(len, 1)};
            ArtinWord y{4, std::vector<int>(len, 3)};
            record(rnf(x) == cp && rnf(y) == dp, "prefix braids are generator powers", k);
        }
    }

    // the braids separating matched prefixes grow without bound
    long long prev = -1;
    bool grow = true;
    for (int u = 1; u <= max_k; ++u) {
        ArtinWord w{4, {}};
        for (int i = 0; i < u; ++i) {
            w.letters.push_back(-1);
            w.letters.push_back(2);
        }
        long long nrm = norm(lam(w));
        rep.sync_divergence_norms.push_back(nrm);
        grow = grow && nrm > prev;
        prev = nrm;
    }
    record(grow, "norms of (sigma_2^-1 sigma_1)^-u increase", max_k);
    prev = -1;
    grow = true;
    for (int l = 1; l <= max_k; ++l) {
        ArtinWord w{4, {}};
        for (int i = 0; i < l; ++i) w.letters.push_back(-3);
        for (int i = 0; i < l; ++i) w.letters.push_back(1);
        long long nrm = norm(lam(w));
        rep.async_divergence_norms.push_back(nrm);
        grow = grow && nrm > prev;
        prev = nrm;
    }
    record(grow, "norms of sigma_3^-l sigma_1^l increase", max_k);

    rep.ok = ok;
    return rep;
}

}  // namespace braid
