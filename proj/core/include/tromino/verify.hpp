#ifndef TROMINO_VERIFY_HPP
#define TROMINO_VERIFY_HPP

#include <json.hpp>

#include <string>
#include <vector>

#include "tromino/board.hpp"

namespace tromino {

struct VerifyCheck {
    std::string id;
    std::string scope;
    bool pass = false;
    std::string lhs;
    std::string rhs;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;
    bool all_pass() const;
};

enum class VerifyLevel { Quick, Full };

/// Run the cross-module invariant suite: closed forms vs DP, generating
/// functions vs DP, decide vs the exact-cover oracle per shape family,
/// construction soundness on random boards, the stretch-map injectivity
/// check, and the frozen-table regeneration checks. Quick trims the sweeps
/// to small boards; Full runs the whole acceptance-scale corpus.
VerifyReport run_verification(VerifyLevel level);

nlohmann::json to_json(const VerifyReport& report);

/// decide() vs solve_exact() over every domino position of the rows x cols
/// rectangle (both orientations, every anchor).
struct SweepResult {
    long long positions = 0;
    long long mismatches = 0;
    std::string first_mismatch;
};

SweepResult sweep_decide_vs_oracle(int rows, int cols);

/// decide() vs solve_exact() over every unordered pair of distinct cells.
SweepResult sweep_decide_vs_oracle_all_pairs(int rows, int cols);

}  // namespace tromino

#endif
