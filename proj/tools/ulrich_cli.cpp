// Command-line front end: classification, construction, and parameter sweeps
// for Ulrich bundles on geometrically ruled surfaces.
//
// Exit codes: 0 success, 2 invalid input, 3 condition violated,
// 4 internal verification failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ulrich/classify.hpp"
#include "ulrich/rank2.hpp"
#include "ulrich/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 2;
constexpr int kExitConditionViolated = 3;
constexpr int kExitVerificationFailure = 4;

using ulrich::Int;

ulrich::SearchBox parse_box(const std::string& text) {
    ulrich::SearchBox box;
    std::istringstream in(text);
    char c1, c2, c3;
    if (!(in >> box.a_min >> c1 >> box.a_max >> c2 >> box.b_min >> c3 >> box.b_max) ||
        c1 != ':' || c2 != ':' || c3 != ':')
        throw CLI::ValidationError("--box", "expected amin:amax:bmin:bmax");
    return box;
}

int run_classify(Int g, Int e, Int alpha, Int beta, bool with_oracle,
                 const std::optional<std::string>& box_text) {
    ulrich::RuledSurface s(g, e);
    ulrich::Polarization h(alpha, beta, s);

    ulrich::Classification c = ulrich::classify_line_bundles(s, h);
    if (c.empty()) {
        std::cout << "classification: empty (alpha = " << alpha << " >= 2)\n";
    } else {
        std::cout << "classification: pair\n"
                  << "  L1 = " << c.pair->first.to_string() << "\n"
                  << "  L2 = " << c.pair->second.to_string() << "\n";
    }

    if (!with_oracle) return kExitOk;
    if (g != 0) {
        std::cerr << "error: --oracle requires g = 0 (exact cohomology is only "
                     "available on Hirzebruch surfaces)\n";
        return kExitInvalidInput;
    }
    ulrich::SearchBox box = box_text ? parse_box(*box_text)
                                     : ulrich::SearchBox::default_for(h);
    auto scan = ulrich::search_ulrich_lines(e, h, box);
    std::cout << "oracle scan over a in [" << box.a_min << ", " << box.a_max
              << "], b in [" << box.b_min << ", " << box.b_max << "]:\n";
    for (const auto& d : scan) std::cout << "  " << d.to_string() << "\n";
    if (scan.empty()) std::cout << "  (none)\n";

    bool agree = ulrich::reconcile_with_oracle(e, h, box);
    std::cout << (agree ? "AGREE" : "DISAGREE") << "\n";
    return agree ? kExitOk : kExitVerificationFailure;
}

int run_construct(Int g, Int e, Int alpha, Int beta, const std::string& format) {
    ulrich::RuledSurface s(g, e);
    ulrich::Polarization h(alpha, beta, s);

    ulrich::ExtensionData x = ulrich::construct_rank2(s, h);
    ulrich::StabilityReport stab = ulrich::stability_report(s, h, x);
    bool chi_ok = ulrich::verify_initialized_reduction(s, h);
    std::optional<ulrich::CbBudget> cb;
    if (alpha >= 3) cb = ulrich::cayley_bacharach_budget(s, h);
    bool step2_ok = alpha < 2 || ulrich::step2_section_count(s, h) == x.z_length;

    if (format == "json") {
        nlohmann::json j = ulrich::to_json(x);
        j["g"] = g;
        j["e"] = e;
        j["alpha"] = alpha;
        j["beta"] = beta;
        j["chi_ok"] = chi_ok;
        j["step2_ok"] = step2_ok;
        j["sub_degree"] = stab.sub_degree;
        j["c1_degree"] = stab.c1_degree;
        j["slope_equal"] = stab.slope_equal;
        if (cb) {
            j["cb_budget"] = cb->h0_budget;
            j["cb_ok"] = cb->ok;
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "| field | value |\n| --- | --- |\n"
                  << "| sub | " << x.sub.to_string() << " |\n"
                  << "| quot | " << x.quot.to_string() << " |\n"
                  << "| z_length | " << x.z_length << " |\n"
                  << "| c1 | " << x.c1.to_string() << " |\n"
                  << "| c2 | " << x.c2 << " |\n";
        if (x.ext_dim) std::cout << "| ext_dim | " << *x.ext_dim << " |\n";
        if (x.family_dim) std::cout << "| family_dim | " << *x.family_dim << " |\n";
        std::cout << "| stability | " << ulrich::to_string(x.stability) << " |\n"
                  << "| H.sub | " << stab.sub_degree << " |\n"
                  << "| H.c1 | " << stab.c1_degree << " |\n"
                  << "| chi_ok | " << (chi_ok ? "true" : "false") << " |\n"
                  << "| step2_ok | " << (step2_ok ? "true" : "false") << " |\n";
        if (cb)
            std::cout << "| cb_budget | " << cb->h0_budget << " |\n"
                      << "| cb_ok | " << (cb->ok ? "true" : "false") << " |\n";
        for (const auto& req : x.genericity)
            std::cout << "| genericity | " << req << " |\n";
    }
    if (!chi_ok || !step2_ok || (cb && !cb->ok)) return kExitVerificationFailure;
    return kExitOk;
}

int run_sweep(const ulrich::SweepRanges& ranges, const std::string& format,
              const std::string& out_path, bool with_oracle) {
    std::vector<ulrich::SweepRow> rows = ulrich::run_sweep(ranges, with_oracle);

    std::ostringstream body;
    if (format == "csv") {
        body << ulrich::sweep_csv_header() << "\n";
        for (const auto& r : rows) body << ulrich::sweep_csv_row(r) << "\n";
        body << ulrich::sweep_footer(rows, "# ");
    } else if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : rows) arr.push_back(ulrich::to_json(r));
        body << arr.dump(2) << "\n";
    } else {
        body << ulrich::sweep_markdown(rows) << "\n"
             << ulrich::sweep_footer(rows, "**summary** ");
    }

    if (out_path.empty() || out_path == "-") {
        std::cout << body.str();
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return kExitInvalidInput;
        }
        out << body.str();
        std::cout << ulrich::sweep_footer(rows, "");
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ulrich bundles on geometrically ruled surfaces"};
    app.require_subcommand(1);

    Int g = 0, e = 1, alpha = 1, beta = 2;
    bool with_oracle = false;
    std::optional<std::string> box_text;
    std::string format = "json";
    std::string out_path;
    ulrich::SweepRanges ranges;

    auto add_params = [&](CLI::App* cmd) {
        cmd->add_option("--g", g, "genus of the base curve")->required();
        cmd->add_option("--e", e, "invariant of the ruling")->required();
        cmd->add_option("--alpha", alpha, "C0-coefficient of H")->required();
        cmd->add_option("--beta", beta, "F-coefficient of H")->required();
    };

    CLI::App* classify = app.add_subcommand(
        "classify", "classify Ulrich line bundles for a polarization");
    add_params(classify);
    classify->add_flag("--oracle", with_oracle,
                       "cross-check against the exhaustive cohomology scan (g=0)");
    classify->add_option("--box", box_text, "scan box amin:amax:bmin:bmax");

    CLI::App* construct = app.add_subcommand(
        "construct", "emit the numerical data of a rank-2 special Ulrich bundle");
    add_params(construct);
    construct->add_option("--format", format, "json|md")
        ->check(CLI::IsMember({"json", "md"}));

    CLI::App* sweep = app.add_subcommand("sweep", "grid run over (g,e,alpha,beta)");
    sweep->add_option("--g-min", ranges.g_min)->required();
    sweep->add_option("--g-max", ranges.g_max)->required();
    sweep->add_option("--e-min", ranges.e_min)->required();
    sweep->add_option("--e-max", ranges.e_max)->required();
    sweep->add_option("--alpha-min", ranges.alpha_min)->required();
    sweep->add_option("--alpha-max", ranges.alpha_max)->required();
    sweep->add_option("--beta-off-min", ranges.beta_off_min,
                      "beta starts at alpha*e + this offset")->required();
    sweep->add_option("--beta-off-max", ranges.beta_off_max)->required();
    sweep->add_option("--format", format, "csv|json|md")
        ->check(CLI::IsMember({"csv", "json", "md"}));
    sweep->add_flag("--oracle", with_oracle, "add oracle agreement on g=0 rows");
    sweep->add_option("--out", out_path, "output file ('-' for stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify->parsed())
            return run_classify(g, e, alpha, beta, with_oracle, box_text);
        if (construct->parsed()) return run_construct(g, e, alpha, beta, format);
        return run_sweep(ranges, format, out_path, with_oracle);
    } catch (const ulrich::ConditionViolated& ex) {
        std::cerr << "error: condition violated on branch " << ex.branch << ": "
                  << ex.what() << "\n";
        return kExitConditionViolated;
    } catch (const ulrich::VerificationError& ex) {
        std::cerr << "internal verification failure: " << ex.what() << "\n";
        return kExitVerificationFailure;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitInvalidInput;
    }
}
