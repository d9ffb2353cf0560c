#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ulrich/classify.hpp"
#include "ulrich/rank2.hpp"

namespace ulrich {

/// One parameter tuple of a sweep, with everything recomputable from
/// (g, e, alpha, beta) spelled out so reports are self-contained.
struct SweepRow {
    Int g = 0, e = 0, alpha = 0, beta = 0;
    std::string status;  // ok | invalid_polarization | cond_violated
    std::optional<Classification> classification;
    std::optional<ExtensionData> extension;
    bool chi_ok = false;                 // initialized-reduction chi vanishing
    bool cond_ok = false;                // (cond), trivially true for alpha <= 2
    std::optional<bool> cb_ok;           // alpha >= 3 with (cond) only
    std::optional<bool> oracle_ok;       // g = 0 only
};

struct SweepRanges {
    Int g_min = 0, g_max = 0;
    Int e_min = 1, e_max = 1;
    Int alpha_min = 1, alpha_max = 1;
    // beta runs over alpha*e + beta_off_min .. alpha*e + beta_off_max
    Int beta_off_min = 1, beta_off_max = 1;

    bool empty() const {
        return g_min > g_max || e_min > e_max || alpha_min > alpha_max ||
               beta_off_min > beta_off_max;
    }
};

/// Evaluate one parameter tuple. Never throws for invalid tuples; the row
/// records the rejection instead.
SweepRow evaluate_row(Int g, Int e, Int alpha, Int beta, bool with_oracle);

/// All rows of the grid, lexicographic in (g, e, alpha, beta).
std::vector<SweepRow> run_sweep(const SweepRanges& r, bool with_oracle);

nlohmann::json to_json(const DivisorClass& d);
nlohmann::json to_json(const Classification& c);
nlohmann::json to_json(const ExtensionData& x);
nlohmann::json to_json(const SweepRow& row);

/// Recompute a serialized row from its own (g, e, alpha, beta) and check
/// every stored number and flag against the fresh evaluation.
bool verify_row_json(const nlohmann::json& row);

std::string sweep_csv_header();
std::string sweep_csv_row(const SweepRow& row);
std::string sweep_markdown(const std::vector<SweepRow>& rows);
std::string sweep_footer(const std::vector<SweepRow>& rows, const std::string& prefix);

}  // namespace ulrich
