#pragma once

#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "winshift/checks.hpp"
#include "winshift/dfa.hpp"
#include "winshift/entropy.hpp"
#include "winshift/games.hpp"
#include "winshift/io.hpp"
#include "winshift/language.hpp"
#include "winshift/winning.hpp"
#include "winshift/zoo.hpp"

namespace winshift::cli {

namespace detail {

/// Default solver budget: n <= 16 over binary, n <= 10 over ternary.
constexpr int kCliCapBits = 16;

inline std::string fmt(double v) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(12) << v;
    return s.str();
}

inline Dfa load_dfa(const std::string& path) {
    std::ifstream file(path);
    if (!file)
        throw std::runtime_error("cannot open " + path);
    return parse_dfa(file);
}

inline FiniteLanguage load_language(const std::string& path) {
    std::ifstream file(path);
    if (!file)
        throw std::runtime_error("cannot open " + path);
    return parse_language(file);
}

/// Writes to the given file, or to the stream when no path was requested.
inline void emit(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path);
    if (!file)
        throw std::runtime_error("cannot write " + path);
    file << text;
}

/// The machine's move in a live game: the smallest symbol keeping the value
/// on the machine's side, falling back to the smallest symbol in a lost
/// position. Matches the tie-breaking of the offline solver.
inline int machine_move(const GameAnalysis& analysis, int node, Player machine) {
    bool want = machine == Player::A;
    for (int c = 0; c < analysis.alphabet_size(); ++c)
        if (analysis.node_value(analysis.node_after(node, c)) == want)
            return c;
    return 0;
}

}  // namespace detail

/// Parses and executes one command line. Returns 0 on success, 1 on domain
/// errors (bad inputs, violated preconditions, failed verification), 2 on
/// usage errors.
inline int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
               std::ostream& err) {
    CLI::App app{"winning sets and winning shifts of word games on subshifts"};
    app.require_subcommand(1);

    struct {
        std::string lang, out_path;
        int cap = detail::kCliCapBits;
    } winset_opts;
    CLI::App* winset = app.add_subcommand("winset", "winning set of a finite language");
    winset->add_option("--lang", winset_opts.lang, "language file")->required();
    winset->add_option("--out", winset_opts.out_path, "output file (default: stdout)");
    winset->add_option("--cap", winset_opts.cap, "enumeration budget in bits, n*log2|S|");

    struct {
        std::string lang, order;
        int cap = detail::kCliCapBits;
    } game_opts;
    CLI::App* game = app.add_subcommand("game", "solve one ordered game");
    game->add_option("--lang", game_opts.lang, "language file")->required();
    game->add_option("--order", game_opts.order, "turn order, e.g. BAB")->required();
    game->add_option("--cap", game_opts.cap, "enumeration budget in bits");

    struct {
        std::string lang, order, machine;
        int cap = detail::kCliCapBits;
    } play_opts;
    CLI::App* play = app.add_subcommand("play", "play one game against the solver");
    play->add_option("--lang", play_opts.lang, "language file")->required();
    play->add_option("--order", play_opts.order, "turn order, e.g. BAB")->required();
    play->add_option("--machine", play_opts.machine,
                     "side the machine plays, A or B (default: the winning side)");
    play->add_option("--cap", play_opts.cap, "enumeration budget in bits");

    struct {
        std::string dfa, out_path;
        bool two_directional = false, emit_reversed = false;
    } winshift_opts;
    CLI::App* winshift_cmd =
        app.add_subcommand("winshift", "winning-shift presentation of a sofic shift");
    winshift_cmd->add_option("--dfa", winshift_opts.dfa, "shift presentation file")->required();
    CLI::Option* two_flag = winshift_cmd->add_flag("--two-directional",
                                                   winshift_opts.two_directional,
                                                   "emit the two-directional winning shift");
    winshift_cmd
        ->add_flag("--emit-reversed", winshift_opts.emit_reversed,
                   "emit the right-to-left subset automaton instead of the forward DFA")
        ->excludes(two_flag);
    winshift_cmd->add_option("--out", winshift_opts.out_path, "output file (default: stdout)");

    struct {
        std::string dfa;
        int n_max = 16;
        bool spectral = false, csv = false;
    } entropy_opts;
    CLI::App* entropy_cmd = app.add_subcommand("entropy", "entropy estimates of a presentation");
    entropy_cmd->add_option("--dfa", entropy_opts.dfa, "shift presentation file")->required();
    entropy_cmd->add_option("--n", entropy_opts.n_max, "largest word length (default 16)");
    entropy_cmd->add_flag("--spectral", entropy_opts.spectral, "append the spectral value");
    entropy_cmd->add_flag("--csv", entropy_opts.csv, "emit CSV instead of aligned text");

    struct {
        std::string name, forbidden, out_path;
        int m = 1, k = 1;
    } zoo_opts;
    CLI::App* zoo_cmd = app.add_subcommand("zoo", "write a named or forbidden-word presentation");
    zoo_cmd->add_option("--name", zoo_opts.name,
                        "even, goldenmean, zeroone, soficY, sftZ, gap, full, periodic, goldext, "
                        "gapext");
    zoo_cmd->add_option("--m", zoo_opts.m, "gap size / period parameter");
    zoo_cmd->add_option("--k", zoo_opts.k, "extension / full-shift parameter");
    zoo_cmd->add_option("--forbidden", zoo_opts.forbidden, "forbidden-word language file");
    zoo_cmd->add_option("--out", zoo_opts.out_path, "output file (default: stdout)");

    struct {
        std::string family;
        int m = 1, kmax = 10;
        bool csv = false;
    } table_opts;
    CLI::App* table_cmd = app.add_subcommand("table6", "extension-entropy point data");
    table_cmd->add_option("--family", table_opts.family, "goldext or gap")->required();
    table_cmd->add_option("--m", table_opts.m, "gap size (gap family only)");
    table_cmd->add_option("--kmax", table_opts.kmax, "largest extension parameter");
    table_cmd->add_flag("--csv", table_opts.csv, "emit CSV instead of aligned text");

    struct {
        std::string suite = "all";
        int n_max = 0;
    } verify_opts;
    CLI::App* verify_cmd = app.add_subcommand("verify", "run verification suites");
    verify_cmd->add_option("--suite", verify_opts.suite,
                           "binary-cardinality, counting, oracle, structural, bounds, sturmian, "
                           "or all");
    verify_cmd->add_option("--nmax", verify_opts.n_max, "override the suite's default depth");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (winset->parsed()) {
            FiniteLanguage lang = detail::load_language(winset_opts.lang);
            FiniteLanguage wins = winning_set(lang, winset_opts.cap);
            detail::emit(winset_opts.out_path, write_language(wins), out);
            return 0;
        }

        if (game->parsed()) {
            FiniteLanguage lang = detail::load_language(game_opts.lang);
            TurnOrder order = TurnOrder::from_string(game_opts.order);
            GameResult result = solve_game(lang, order, game_opts.cap);
            out << "order: " << order.to_string() << "\n";
            out << "winner: " << player_letter(result.winner) << "\n";
            out << "strategy:\n";
            for (const auto& [prefix, symbol] : result.witness.choice)
                out << "  " << to_string(lang.alphabet(), prefix) << " -> "
                    << lang.alphabet().symbol(symbol) << "\n";
            return 0;
        }

        if (play->parsed()) {
            FiniteLanguage lang = detail::load_language(play_opts.lang);
            TurnOrder order = TurnOrder::from_string(play_opts.order);
            winshift::detail::check_enumeration_cap(order.size(), lang.alphabet().size(),
                                                    play_opts.cap);
            GameAnalysis analysis(lang, order);
            Player machine;
            if (play_opts.machine.empty())
                machine = analysis.winner();
            else if (play_opts.machine == "A" || play_opts.machine == "a")
                machine = Player::A;
            else if (play_opts.machine == "B" || play_opts.machine == "b")
                machine = Player::B;
            else
                throw std::invalid_argument("--machine must be A or B");
            out << "order: " << order.to_string() << ", machine plays "
                << player_letter(machine) << "\n";

            const Alphabet& a = lang.alphabet();
            int node = analysis.slice().root();
            Word word;
            for (int i = 0; i < order.size(); ++i) {
                int move;
                if (order.turns[static_cast<std::size_t>(i)] == machine) {
                    move = detail::machine_move(analysis, node, machine);
                    out << "machine plays " << a.symbol(move) << "\n";
                } else {
                    for (;;) {
                        out << "your move (";
                        for (int c = 0; c < a.size(); ++c)
                            out << (c ? "/" : "") << a.symbol(c);
                        out << "): " << std::flush;
                        std::string token;
                        if (!(in >> token))
                            throw std::runtime_error("input ended before the game finished");
                        if (auto idx = a.index(token)) {
                            move = *idx;
                            break;
                        }
                        out << "not a symbol, try again\n";
                    }
                }
                word.push_back(move);
                node = analysis.node_after(node, move);
            }
            bool member = analysis.slice().contains(word);
            out << "word: " << to_string(a, word) << "\n";
            out << "in target: " << (member ? "yes" : "no") << "\n";
            out << "winner: " << (member ? 'A' : 'B') << "\n";
            return 0;
        }

        if (winshift_cmd->parsed()) {
            Dfa d = detail::load_dfa(winshift_opts.dfa);
            WinningShiftPresentation pres =
                winning_shift_presentation(d, winshift_opts.two_directional);
            const Dfa& chosen = winshift_opts.emit_reversed ? pres.reversed_dfa
                                : winshift_opts.two_directional ? *pres.two_directional_dfa
                                                                : pres.forward_dfa;
            detail::emit(winshift_opts.out_path, write_dfa(chosen), out);
            return 0;
        }

        if (entropy_cmd->parsed()) {
            Dfa d = detail::load_dfa(entropy_opts.dfa);
            auto rows = entropy_word_count(d, entropy_opts.n_max);
            if (entropy_opts.csv) {
                out << "n,count,h_n\n";
                for (const WordCountRow& row : rows)
                    out << row.n << "," << row.count << "," << detail::fmt(row.h) << "\n";
                if (entropy_opts.spectral)
                    out << "spectral,," << detail::fmt(entropy_spectral(d).entropy_bits) << "\n";
            } else {
                for (const WordCountRow& row : rows)
                    out << "n=" << row.n << " count=" << row.count << " h_n=" << detail::fmt(row.h)
                        << "\n";
                if (entropy_opts.spectral) {
                    SpectralResult s = entropy_spectral(d);
                    out << "spectral h=" << detail::fmt(s.entropy_bits) << " (lambda "
                        << detail::fmt(s.value) << ", certified within "
                        << detail::fmt(s.tolerance) << ")\n";
                }
            }
            return 0;
        }

        if (zoo_cmd->parsed()) {
            if (zoo_opts.name.empty() == zoo_opts.forbidden.empty()) {
                err << "zoo: provide exactly one of --name and --forbidden\n";
                return 2;
            }
            Dfa d = zoo_opts.name.empty()
                        ? [&] {
                              FiniteLanguage f = detail::load_language(zoo_opts.forbidden);
                              return sft_from_forbidden(f.alphabet(), f);
                          }()
                        : named_shift(zoo_opts.name, zoo_opts.m, zoo_opts.k);
            detail::emit(zoo_opts.out_path, write_dfa(d), out);
            return 0;
        }

        if (table_cmd->parsed()) {
            int m;
            if (table_opts.family == "goldext") {
                if (table_opts.m != 1)
                    throw std::invalid_argument("the goldext family has m = 1");
                m = 1;
            } else if (table_opts.family == "gap") {
                m = table_opts.m;
                if (m < 1)
                    throw std::invalid_argument("gap family needs m >= 1");
            } else {
                throw std::invalid_argument("--family must be goldext or gap");
            }
            if (table_opts.kmax < 1)
                throw std::invalid_argument("--kmax must be at least 1");
            if (table_opts.csv)
                out << "k,h,rel\n";
            for (int k = 1; k <= table_opts.kmax; ++k) {
                double h = std::log2(gap_root(m, k));
                double rel = h / std::log2(k + 1.0);
                if (table_opts.csv)
                    out << k << "," << detail::fmt(h) << "," << detail::fmt(rel) << "\n";
                else
                    out << "k=" << k << " h=" << detail::fmt(h) << " rel=" << detail::fmt(rel)
                        << "\n";
            }
            return 0;
        }

        if (verify_cmd->parsed()) {
            long failures = 0;
            for (const SuiteResult& suite : run_suites(verify_opts.suite, verify_opts.n_max)) {
                for (const std::string& line : suite.notes)
                    out << line << "\n";
                out << "suite=" << suite.name << " checks=" << suite.checks
                    << " failures=" << suite.failures << "\n";
                failures += suite.failures;
            }
            return failures == 0 ? 0 : 1;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no command executed\n";
    return 2;
}

}  // namespace winshift::cli
