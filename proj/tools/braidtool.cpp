// braidtool: braid normal forms, the word problem, the Dehornoy order, the
// normal-form automaton, and automaticity experiments, from the command line.
//
// Exit codes: 0 success / predicate true, 1 predicate false or check failed,
// 2 usage error, 3 internal invariant violation.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "braid/automaticity.hpp"
#include "braid/automaton.hpp"
#include "braid/coords.hpp"
#include "braid/relaxation.hpp"
#include "braid/render.hpp"

using namespace braid;

namespace {

enum ExitCode { kTrue = 0, kFalse = 1, kUsage = 2, kInternal = 3 };

// "artin", "sliding", or "auto" (detect from the first token)
ArtinWord read_word(const std::string& text, int n, const std::string& alphabet) {
    bool sliding = alphabet == "sliding" || (alphabet == "auto" && looks_like_sliding(text));
    if (sliding) return sliding_to_artin(parse_sliding(text, n));
    return parse_artin(text, n);
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << content;
}

int cmd_normalize(int n, const std::string& text, const std::string& alphabet,
                  const std::string& strategy_name) {
    ArtinWord w = read_word(text, n, alphabet);
    Strategy strategy = parse_strategy(strategy_name);
    SlidingWord nf = rnf(w, strategy);
    if (nf.letters.empty()) return kTrue;
    std::cout << to_string(nf) << "\n";
    std::cout << "artin: " << to_string(sliding_to_artin(nf)) << "\n";
    // replay the relaxation to show the norm at every step
    std::cout << "norms:";
    Lamination L = lam(w);
    Lamination done = trivial(n);
    std::cout << ' ' << norm(L);
    int prev = norm(L);
    while (!(L == done)) {
        L = relax_step(L, strategy).next;
        int cur = norm(L);
        std::cout << ' ' << cur;
        if (cur >= prev) throw std::logic_error("laminated norm failed to decrease");
        prev = cur;
    }
    std::cout << "\n";
    return kTrue;
}

int cmd_automaton(int n, bool do_minimize, bool simple, std::size_t budget,
                  const std::string& json_path, const std::string& dot_path) {
    NormalFormDFA A = build_automaton(n, simple, budget);
    if (do_minimize) A = minimize(A);
    std::cout << "states: " << A.states() << "\n";
    if (!json_path.empty()) write_file(json_path, to_json(A));
    if (!dot_path.empty()) write_file(dot_path, to_dot(A));
    return kTrue;
}

int cmd_accepts(const std::string& automaton_path, std::optional<int> n_opt,
                const std::string& text) {
    NormalFormDFA A;
    if (!automaton_path.empty()) {
        std::ifstream in(automaton_path);
        if (!in) throw std::invalid_argument("cannot open automaton file: " + automaton_path);
        std::string data((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
        A = from_json(data);
    } else if (n_opt) {
        A = minimize(build_automaton(*n_opt));
    } else {
        throw std::invalid_argument("accepts needs --automaton or --n");
    }
    SlidingWord v = parse_sliding(text, A.n);
    bool ok = accepts(A, v);
    std::cout << (ok ? "accepted" : "rejected") << "\n";
    return ok ? kTrue : kFalse;
}

int cmd_equal(int n, const std::string& t1, const std::string& t2,
              const std::string& alphabet) {
    bool eq = braid_equal(read_word(t1, n, alphabet), read_word(t2, n, alphabet));
    std::cout << (eq ? "equal" : "distinct") << "\n";
    return eq ? kTrue : kFalse;
}

int cmd_order(int n, const std::string& t1, const std::string& t2,
              const std::string& alphabet) {
    ArtinWord w1 = read_word(t1, n, alphabet);
    ArtinWord w2 = read_word(t2, n, alphabet);
    if (braid_equal(w1, w2))
        std::cout << "EQUAL\n";
    else if (dehornoy_less(w1, w2))
        std::cout << "LESS\n";
    else
        std::cout << "GREATER\n";
    return kTrue;
}

int cmd_classify(int n, const std::string& text, const std::string& alphabet) {
    ArtinWord w = read_word(text, n, alphabet);
    PositivityClass geo = classify_geometric(w);
    PositivityClass syn = classify_syntactic(rnf(w));
    std::cout << to_string(geo) << "\n" << to_string(syn) << "\n";
    if (!(geo == syn)) {
        std::cerr << "error: geometric and syntactic classifications disagree\n";
        return kInternal;
    }
    return kTrue;
}

int cmd_render(int n, const std::string& text, const std::string& alphabet,
               const std::string& out_path) {
    ArtinWord w = read_word(text, n, alphabet);
    std::string svg = render_svg(lam(w));
    if (out_path.empty())
        std::cout << svg;
    else
        write_file(out_path, svg);
    return kTrue;
}

// exhaustive property suite over all Artin words of length <= max_len
int cmd_verify(int n, int max_len) {
    NormalFormDFA M = minimize(build_automaton(n));
    long long words = 0, failures = 0;
    std::vector<int> letters;
    auto complain = [&](const std::string& what) {
        ++failures;
        std::cerr << "FAIL " << what << " on word:";
        for (int g : letters) std::cerr << ' ' << g;
        std::cerr << "\n";
    };
    auto visit = [&](auto&& self) -> void {
        ++words;
        ArtinWord w{n, letters};
        SlidingWord nf = rnf(w);
        if (!nf.right_oriented() || !nf.valid()) complain("normal word malformed");
        if (!accepts(M, nf)) complain("normal word rejected by the automaton");
        if (!braid_equal(w, sliding_to_artin(nf))) complain("normal form is a different braid");
        if (rnf(mirror(w)) != braid::mirror(nf)) complain("mirror identity");
        PositivityClass geo = classify_geometric(w);
        if (!(geo == classify_syntactic(nf))) complain("classification mismatch");
        if ((geo.kind == PositivityClass::Trivial) != nf.letters.empty())
            complain("trivial braid with nonempty normal form");
        if (!oracle_equal(w, sliding_to_artin(nf))) complain("coordinate oracle disagrees");
        if (static_cast<int>(letters.size()) == max_len) return;
        for (int g = 1; g < n; ++g)
            for (int s : {g, -g}) {
                letters.push_back(s);
                self(self);
                letters.pop_back();
            }
    };
    visit(visit);
    std::cout << "checked " << words << " words, " << failures << " failures\n";
    std::cout << "minimized state count " << M.states() << "\n";
    return failures == 0 ? kTrue : kFalse;
}

int cmd_automatic(int n, const std::string& mode, int max_radius, std::size_t max_t,
                  std::size_t budget, bool families, int max_k) {
    if (families) {
        FamilyReport rep = family_checks(max_k);
        std::cout << rep.text();
        return rep.ok ? kTrue : kFalse;
    }
    Timing timing;
    Side side;
    if (mode == "sync-left") timing = Timing::Sync, side = Side::Left;
    else if (mode == "sync-right") timing = Timing::Sync, side = Side::Right;
    else if (mode == "async-left") timing = Timing::Async, side = Side::Left;
    else if (mode == "async-right") timing = Timing::Async, side = Side::Right;
    else throw CLI::ValidationError("--mode", "expected sync-left, sync-right, async-left or async-right");
    WitnessResult r = search_witness(n, timing, side, max_radius, max_t, budget);
    std::cout << "n=" << r.n << ' ' << to_string(r.timing) << '-' << to_string(r.side)
              << (r.found ? " witness found" : r.exhausted ? " budget exhausted" : " no witness")
              << ": " << r.note << "\n";
    return r.found ? kTrue : kFalse;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"braid normal forms via relaxation of laminations"};
    app.require_subcommand(1);

    int n = 2, max_len = 4, max_radius = 3, max_k = 6;
    std::string word, word2, alphabet = "auto", strategy = "right", mode = "sync-left";
    std::string out_path, json_path, dot_path, automaton_path;
    bool do_minimize = false, simple = false, families = false;
    std::size_t budget = 5'000'000, max_t = 1000;
    std::optional<int> n_opt;

    auto add_n = [&](CLI::App* c) { c->add_option("--n", n, "number of strands")->check(CLI::Range(2, 64)); };
    auto add_alphabet = [&](CLI::App* c) {
        c->add_option("--alphabet", alphabet, "word syntax: artin, sliding or auto")
            ->check(CLI::IsMember({"artin", "sliding", "auto"}));
    };

    CLI::App* c_norm = app.add_subcommand("normalize", "relaxation normal form of a braid word");
    add_n(c_norm);
    add_alphabet(c_norm);
    c_norm->add_option("--strategy", strategy, "relaxation strategy");
    c_norm->add_option("word", word, "braid word")->required();

    CLI::App* c_auto = app.add_subcommand("automaton", "build the normal-form automaton");
    CLI::App* c_build = c_auto->add_subcommand("build", "synthesize by BFS over extended shadows");
    add_n(c_build);
    c_build->add_flag("--minimize", do_minimize, "minimize the result");
    c_build->add_flag("--simple", simple, "simple-right strategy variant");
    c_build->add_option("--budget", budget, "state budget");
    c_build->add_option("-o,--output", json_path, "write automaton JSON here");
    c_build->add_option("--dot", dot_path, "write Graphviz DOT here");
    c_auto->require_subcommand(1);

    CLI::App* c_acc = app.add_subcommand("accepts", "is a sliding word in normal form?");
    c_acc->add_option("--automaton", automaton_path, "automaton JSON file");
    c_acc->add_option("--n", n_opt, "build the automaton for this strand count");
    c_acc->add_option("word", word, "sliding word")->required();

    CLI::App* c_eq = app.add_subcommand("equal", "do two words represent the same braid?");
    add_n(c_eq);
    add_alphabet(c_eq);
    c_eq->add_option("word1", word, "first word")->required();
    c_eq->add_option("word2", word2, "second word")->required();

    CLI::App* c_ord = app.add_subcommand("order", "compare two braids in the Dehornoy order");
    add_n(c_ord);
    add_alphabet(c_ord);
    c_ord->add_option("word1", word, "first word")->required();
    c_ord->add_option("word2", word2, "second word")->required();

    CLI::App* c_cls = app.add_subcommand("classify", "sigma-positivity, geometric and syntactic");
    add_n(c_cls);
    add_alphabet(c_cls);
    c_cls->add_option("word", word, "braid word")->required();

    CLI::App* c_ren = app.add_subcommand("render", "SVG of the tight lamination of a braid");
    add_n(c_ren);
    add_alphabet(c_ren);
    c_ren->add_option("word", word, "braid word")->required();
    c_ren->add_option("-o,--output", out_path, "output SVG file (stdout if absent)");

    CLI::App* c_ver = app.add_subcommand("verify", "exhaustive property suite on short words");
    add_n(c_ver);
    c_ver->add_option("--max-len", max_len, "maximum word length")->check(CLI::Range(0, 12));

    CLI::App* c_aut = app.add_subcommand("automatic", "witness search for automaticity");
    add_n(c_aut);
    c_aut->add_option("--mode", mode, "sync-left, sync-right, async-left or async-right");
    c_aut->add_option("--max-radius", max_radius, "largest candidate ball radius");
    c_aut->add_option("--max-t", max_t, "largest candidate difference set");
    c_aut->add_option("--budget", budget, "product-automaton state budget");
    c_aut->add_flag("--families", families, "run the divergent-family checks instead");
    c_aut->add_option("--max-k", max_k, "family size bound for --families");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    try {
        if (*c_norm) return cmd_normalize(n, word, alphabet, strategy);
        if (*c_build) return cmd_automaton(n, do_minimize, simple, budget, json_path, dot_path);
        if (*c_acc) return cmd_accepts(automaton_path, n_opt, word);
        if (*c_eq) return cmd_equal(n, word, word2, alphabet);
        if (*c_ord) return cmd_order(n, word, word2, alphabet);
        if (*c_cls) return cmd_classify(n, word, alphabet);
        if (*c_ren) return cmd_render(n, word, alphabet, out_path);
        if (*c_ver) return cmd_verify(n, max_len);
        if (*c_aut) return cmd_automatic(n, mode, max_radius, max_t, budget, families, max_k);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInternal;
    }
    return kUsage;
}
