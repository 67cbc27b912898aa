// Command-line driver: decide / tile / count / enumerate / gf / bound /
// bad-pairs / oracle / verify / render, JSON in and out for scripting.
//
// Exit status: 0 success (tileable / bound holds / checks pass), 1 negative
// result (untileable / no tiling found / failed checks), 2 usage error.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "tromino/analytics.hpp"
#include "tromino/characterize.hpp"
#include "tromino/construct.hpp"
#include "tromino/count.hpp"
#include "tromino/json_io.hpp"
#include "tromino/render.hpp"
#include "tromino/solver.hpp"
#include "tromino/verify.hpp"

using namespace tromino;
using nlohmann::json;

namespace {

struct BoardArgs {
    int rows = 0;
    int cols = 0;
    std::string missing;
    std::string input;
};

void add_board_options(CLI::App* cmd, BoardArgs& args) {
    auto* rows = cmd->add_option("--rows", args.rows, "board rows");
    auto* cols = cmd->add_option("--cols", args.cols, "board cols");
    auto* input = cmd->add_option("--input", args.input, "board JSON file ('-' for stdin)");
    cmd->add_option("--missing", args.missing,
                    "missing cells as a flat comma list: r,c[,r,c]");
    rows->needs(cols);
    cols->needs(rows);
    input->excludes(rows);
}

std::string read_stream(std::istream& in) {
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

json load_json(const std::string& path) {
    if (path == "-") return json::parse(read_stream(std::cin));
    std::ifstream file(path);
    if (!file) throw Error(Errc::BadInput, "cannot open " + path);
    return json::parse(read_stream(file));
}

std::vector<Cell> parse_missing(const std::string& text) {
    std::vector<int> nums;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) nums.push_back(std::stoi(item));
    }
    if (nums.size() % 2 != 0)
        throw Error(Errc::BadInput, "--missing needs an even count of coordinates");
    std::vector<Cell> cells;
    for (size_t i = 0; i + 1 < nums.size(); i += 2) cells.push_back({nums[i], nums[i + 1]});
    return cells;
}

DeficientBoard board_from_args(const BoardArgs& args) {
    if (!args.input.empty()) {
        if (args.rows != 0)
            throw Error(Errc::BadInput, "give either --input or --rows/--cols, not both");
        return board_from_json(load_json(args.input));
    }
    if (args.rows == 0) throw Error(Errc::BadInput, "a board source is required");
    return DeficientBoard(args.rows, args.cols, parse_missing(args.missing));
}

json verdict_to_json(const Verdict& v) {
    json out{{"tileable", v.tileable}};
    switch (v.reason) {
        case VerdictReason::BadPair: out["reason"] = "BAD_PAIR"; break;
        case VerdictReason::Area: out["reason"] = "AREA"; break;
        case VerdictReason::NoFit: out["reason"] = "NO_FIT"; break;
        case VerdictReason::Positive: out["reason"] = "POSITIVE"; break;
    }
    if (!v.theorem.empty()) out["theorem"] = v.theorem;
    if (v.matched_pair) {
        out["pair"] = {{v.matched_pair->first.row, v.matched_pair->first.col},
                       {v.matched_pair->second.row, v.matched_pair->second.col}};
    }
    if (v.symmetry_used) out["symmetry"] = to_string(*v.symmetry_used);
    return out;
}

int emit_tiling(const Tiling& t, const std::string& format) {
    if (format == "json")
        std::cout << tiling_to_json(t).dump(2) << "\n";
    else if (format == "ascii")
        std::cout << ascii_grid(t);
    else if (format == "svg")
        std::cout << render_svg(t);
    else
        throw Error(Errc::BadInput, "unknown format: " + format);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"right-tromino tilings of deficient rectangles"};
    app.require_subcommand(1);

    BoardArgs decide_args;
    auto* cmd_decide = app.add_subcommand("decide", "tileability verdict for a board");
    add_board_options(cmd_decide, decide_args);

    BoardArgs tile_args;
    std::string tile_format = "json";
    auto* cmd_tile = app.add_subcommand("tile", "construct an explicit tiling");
    add_board_options(cmd_tile, tile_args);
    cmd_tile->add_option("--format", tile_format, "json | ascii | svg");

    BoardArgs count_args;
    std::string count_mix = "tromino";
    auto* cmd_count = app.add_subcommand("count", "exact number of tilings");
    add_board_options(cmd_count, count_args);
    cmd_count->add_option("--mix", count_mix, "tromino | tromino+1domino | domino");

    BoardArgs enum_args;
    std::uint64_t enum_limit = UINT64_MAX;
    auto* cmd_enum = app.add_subcommand("enumerate", "list tilings as a JSON array");
    add_board_options(cmd_enum, enum_args);
    cmd_enum->add_option("--limit", enum_limit, "stop after this many tilings");

    std::string gf_name = "G";
    int gf_terms = 8;
    auto* cmd_gf = app.add_subcommand("gf", "expand a named generating function");
    cmd_gf->add_option("--name", gf_name, "G | G1 | G2 | GV | GH | F | Frec");
    cmd_gf->add_option("--terms", gf_terms, "number of coefficients to print");

    int bound_m = 0, bound_n = 0;
    auto* cmd_bound = app.add_subcommand("bound", "mixed-count upper bound vs the DP value");
    cmd_bound->add_option("m", bound_m, "rows")->required();
    cmd_bound->add_option("n", bound_n, "cols")->required();

    int bp_m = 0, bp_n = 0;
    bool bp_any = false;
    auto* cmd_bp = app.add_subcommand("bad-pairs", "the bad-pair table for an m x n board");
    cmd_bp->add_option("m", bp_m, "rows")->required();
    cmd_bp->add_option("n", bp_n, "cols")->required();
    cmd_bp->add_flag("--any-pair", bp_any,
                     "emit the full two-cell-removal table (n x 4 boards only)");

    auto* cmd_oracle = app.add_subcommand("oracle", "exact-cover search oracle");
    BoardArgs oracle_args;
    int oracle_cap = 176;
    int oracle_dominoes = 0;
    auto* cmd_solve = cmd_oracle->add_subcommand("solve", "search for one tiling");
    add_board_options(cmd_solve, oracle_args);
    cmd_solve->add_option("--cap", oracle_cap, "maximum board area in cells");
    cmd_solve->add_option("--dominoes", oracle_dominoes, "domino budget (0 or 1)");

    std::string verify_level = "quick";
    auto* cmd_verify = app.add_subcommand("verify", "run the invariant suite");
    cmd_verify->add_option("--level", verify_level, "quick | full");

    std::string render_input;
    std::string render_format = "ascii";
    auto* cmd_render = app.add_subcommand("render", "render a tiling JSON document");
    cmd_render->add_option("--input", render_input, "tiling JSON file ('-' for stdin)")
        ->required();
    cmd_render->add_option("--format", render_format, "ascii | svg");

    try {
        app.parse(argc, argv);

        if (cmd_decide->parsed()) {
            const Verdict v = decide(board_from_args(decide_args));
            std::cout << verdict_to_json(v).dump(2) << "\n";
            return v.tileable ? 0 : 1;
        }
        if (cmd_tile->parsed()) {
            const ConstructOutcome outcome = construct_tiling(board_from_args(tile_args));
            if (!outcome.ok()) {
                std::cout << verdict_to_json(outcome.verdict).dump(2) << "\n";
                return 1;
            }
            return emit_tiling(outcome.result->tiling, tile_format);
        }
        if (cmd_count->parsed()) {
            const DeficientBoard board = board_from_args(count_args);
            BigCount result;
            if (count_mix == "tromino") {
                result = count_tromino(board);
            } else if (count_mix == "tromino+1domino") {
                if (!board.missing().empty())
                    throw Error(Errc::BadInput, "mixed counting applies to full rectangles");
                result = count_tromino_plus_one_domino(board.rect());
            } else if (count_mix == "domino") {
                if (!board.missing().empty())
                    throw Error(Errc::BadInput, "domino counting applies to full rectangles");
                result = count_domino(board.rect());
            } else {
                throw Error(Errc::BadInput, "unknown mix: " + count_mix);
            }
            std::cout << result.get_str() << "\n";
            return 0;
        }
        if (cmd_enum->parsed()) {
            const DeficientBoard board = board_from_args(enum_args);
            json out = json::array();
            for (const Tiling& t : enumerate_tilings(board, enum_limit))
                out.push_back(tiling_to_json(t));
            std::cout << out.dump(2) << "\n";
            return 0;
        }
        if (cmd_gf->parsed()) {
            if (gf_terms < 1) throw Error(Errc::BadInput, "--terms must be positive");
            RationalGF gf;
            const MooreGFs moore = moore_gfs();
            const DerivedGFs derived = derived_gfs();
            if (gf_name == "G") gf = moore.g;
            else if (gf_name == "G1") gf = moore.g1;
            else if (gf_name == "G2") gf = moore.g2;
            else if (gf_name == "GV") gf = derived.g_v;
            else if (gf_name == "GH") gf = derived.g_h;
            else if (gf_name == "F") gf = derived.f_printed;
            else if (gf_name == "Frec") gf = derived.f_reconstructed;
            else throw Error(Errc::BadInput, "unknown generating function: " + gf_name);
            const auto series = gf_series(gf, gf_terms - 1);
            for (size_t i = 0; i < series.size(); ++i)
                std::cout << (i ? " " : "") << series[i].get_str();
            std::cout << "\n";
            return 0;
        }
        if (cmd_bound->parsed()) {
            const BigCount bound = upper_bound_domino_deficient(bound_m, bound_n);
            const BigCount count = count_tromino_plus_one_domino(Rect{bound_m, bound_n});
            json out{{"bound", bound.get_str()},
                     {"count", count.get_str()},
                     {"margin", BigCount(bound - count).get_str()},
                     {"holds", count <= bound}};
            std::cout << out.dump(2) << "\n";
            return count <= bound ? 0 : 1;
        }
        if (cmd_bp->parsed()) {
            json out = json::array();
            const int lo = std::min(bp_m, bp_n), hi = std::max(bp_m, bp_n);
            // tables are stated in a canonical orientation; `flip` maps a
            // canonical pair back into the requested one
            bool flip = false;
            auto emit = [&](Cell a, Cell b) {
                if (flip) {
                    a = {a.col, a.row};
                    b = {b.col, b.row};
                }
                const CellPair p = make_cell_pair(a, b);
                out.push_back({{p.first.row, p.first.col}, {p.second.row, p.second.col}});
            };
            auto emit_pairs = [&](const std::vector<BadPair>& table) {
                for (const BadPair& b : table) emit(b.cells.first, b.cells.second);
            };
            if (bp_any) {
                if (lo != 4)
                    throw Error(Errc::BadInput,
                                "--any-pair applies to n x 4 boards (one side of length 4)");
                flip = bp_n != 4;  // the full table is stated for hi x 4
                for (const CellPair& p : bad_pairs_nx4_general(hi))
                    emit(p.first, p.second);
            } else if (lo == 2) {
                flip = bp_m != 2;
                const TwoRowRule rule = bad_pairs_2xn(hi);
                for (int c = 1; c <= hi; ++c) {
                    if (rule.is_bad(make_cell_pair({1, c}, {2, c}))) emit({1, c}, {2, c});
                    for (int r = 1; r <= 2; ++r)
                        if (c + 1 <= hi && rule.is_bad(make_cell_pair({r, c}, {r, c + 1})))
                            emit({r, c}, {r, c + 1});
                }
            } else if (lo == 4 && hi == 5) {
                flip = bp_m != 4;
                emit_pairs(bad_pairs_4x5());
            } else if (lo == 5 && hi == 7) {
                flip = bp_m != 5;
                emit_pairs(bad_pairs_5x7());
            } else if (lo == 5 && hi >= 10) {
                flip = bp_m != 5;
                emit_pairs(bad_pairs_5xn(hi));
            } else if (lo == 4) {
                flip = bp_m != 4;
                emit_pairs(bad_pairs_4xn(hi));
            } else if ((bp_m == 7 || bp_m == 10) && bp_n >= 8 && bp_n % 3 == 2) {
                emit_pairs(bad_pairs_7or10xn(bp_m, bp_n));
            } else if ((bp_n == 7 || bp_n == 10) && bp_m >= 8 && bp_m % 3 == 2) {
                flip = true;
                emit_pairs(bad_pairs_7or10xn(bp_n, bp_m));
            } else {
                emit_pairs(bad_pairs_general(bp_m, bp_n));
            }
            std::cout << out.dump(2) << "\n";
            return 0;
        }
        if (cmd_oracle->parsed()) {
            const DeficientBoard board = board_from_args(oracle_args);
            SolveOptions opts;
            opts.cell_cap = oracle_cap;
            opts.domino_budget = oracle_dominoes;
            const auto tiling = solve_exact(board, opts);
            if (!tiling) {
                std::cout << json{{"tileable", false}}.dump(2) << "\n";
                return 1;
            }
            return emit_tiling(*tiling, "json");
        }
        if (cmd_verify->parsed()) {
            VerifyLevel level;
            if (verify_level == "quick") level = VerifyLevel::Quick;
            else if (verify_level == "full") level = VerifyLevel::Full;
            else throw Error(Errc::BadInput, "unknown level: " + verify_level);
            const VerifyReport report = run_verification(level);
            std::cout << to_json(report).dump(2) << "\n";
            return report.all_pass() ? 0 : 1;
        }
        if (cmd_render->parsed()) {
            const Tiling t = tiling_from_json(load_json(render_input));
            const ValidationReport v = validate_tiling(t);
            if (!v.ok) throw Error(Errc::BadInput, "refusing to render an invalid tiling");
            return emit_tiling(t, render_format);
        }
        return 2;
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
            return app.exit(e);
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
