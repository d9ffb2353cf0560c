#include "ulrich/report.hpp"

#include <sstream>

namespace ulrich {

using nlohmann::json;

SweepRow evaluate_row(Int g, Int e, Int alpha, Int beta, bool with_oracle) {
    SweepRow row;
    row.g = g;
    row.e = e;
    row.alpha = alpha;
    row.beta = beta;

    std::optional<RuledSurface> s;
    std::optional<Polarization> h;
    try {
        s.emplace(g, e);
        h.emplace(alpha, beta, *s);
    } catch (const std::invalid_argument&) {
        row.status = "invalid_polarization";
        return row;
    }

    row.classification = classify_line_bundles(*s, *h);
    row.chi_ok = verify_initialized_reduction(*s, *h);

    try {
        row.extension = construct_rank2(*s, *h);
        row.cond_ok = true;
        row.status = "ok";
    } catch (const ConditionViolated&) {
        row.cond_ok = false;
        row.status = "cond_violated";
    }

    if (row.extension && alpha >= 3)
        row.cb_ok = cayley_bacharach_budget(*s, *h).ok;

    if (g == 0 && with_oracle)
        row.oracle_ok = reconcile_with_oracle(e, *h, SearchBox::default_for(*h));

    return row;
}

std::vector<SweepRow> run_sweep(const SweepRanges& r, bool with_oracle) {
    std::vector<SweepRow> rows;
    if (r.empty()) return rows;
    for (Int g = r.g_min; g <= r.g_max; ++g)
        for (Int e = r.e_min; e <= r.e_max; ++e)
            for (Int alpha = r.alpha_min; alpha <= r.alpha_max; ++alpha)
                for (Int off = r.beta_off_min; off <= r.beta_off_max; ++off)
                    rows.push_back(
                        evaluate_row(g, e, alpha, alpha * e + off, with_oracle));
    return rows;
}

json to_json(const DivisorClass& d) {
    return {{"a", d.a}, {"b", d.b}, {"twist", d.twist.to_string()}};
}

json to_json(const Classification& c) {
    if (c.empty()) return {{"result", "empty"}};
    return {{"result", "pair"},
            {"l1", to_json(c.pair->first)},
            {"l2", to_json(c.pair->second)}};
}

json to_json(const ExtensionData& x) {
    json j = {{"sub", to_json(x.sub)},       {"quot", to_json(x.quot)},
              {"z_length", x.z_length},      {"c1", to_json(x.c1)},
              {"c2", x.c2},                  {"stability", to_string(x.stability)},
              {"genericity", x.genericity}};
    if (x.ext_dim) j["ext_dim"] = *x.ext_dim;
    if (x.family_dim) j["family_dim"] = *x.family_dim;
    return j;
}

json to_json(const SweepRow& row) {
    json j = {{"g", row.g},         {"e", row.e},
              {"alpha", row.alpha}, {"beta", row.beta},
              {"status", row.status}};
    if (row.classification) j["classification"] = to_json(*row.classification);
    if (row.extension) j["extension"] = to_json(*row.extension);
    if (row.status != "invalid_polarization") {
        j["chi_ok"] = row.chi_ok;
        j["cond_ok"] = row.cond_ok;
    }
    if (row.cb_ok) j["cb_ok"] = *row.cb_ok;
    if (row.oracle_ok) j["oracle_ok"] = *row.oracle_ok;
    return j;
}

bool verify_row_json(const json& j) {
    SweepRow fresh = evaluate_row(j.at("g").get<Int>(), j.at("e").get<Int>(),
                                  j.at("alpha").get<Int>(), j.at("beta").get<Int>(),
                                  j.contains("oracle_ok"));
    return j == to_json(fresh);
}

namespace {

std::string opt_int(const std::optional<Int>& v) {
    return v ? std::to_string(*v) : std::string();
}

std::string opt_bool(const std::optional<bool>& v) {
    return v ? (*v ? "true" : "false") : std::string();
}

std::vector<std::string> row_cells(const SweepRow& row) {
    std::vector<std::string> c;
    auto num = [](Int v) { return std::to_string(v); };
    c = {num(row.g), num(row.e), num(row.alpha), num(row.beta), row.status};
    if (row.classification && !row.classification->empty()) {
        const auto& [l1, l2] = *row.classification->pair;
        c.insert(c.end(), {"pair", num(l1.a), num(l1.b), num(l2.a), num(l2.b)});
    } else if (row.classification) {
        c.insert(c.end(), {"empty", "", "", "", ""});
    } else {
        c.insert(c.end(), {"", "", "", "", ""});
    }
    if (row.extension) {
        const ExtensionData& x = *row.extension;
        c.insert(c.end(),
                 {num(x.sub.a), num(x.sub.b), num(x.quot.a), num(x.quot.b),
                  num(x.z_length), num(x.c1.a), num(x.c1.b), num(x.c2),
                  opt_int(x.ext_dim), opt_int(x.family_dim),
                  to_string(x.stability)});
    } else {
        c.insert(c.end(), 11, "");
    }
    if (row.status == "invalid_polarization") {
        c.insert(c.end(), {"", ""});
    } else {
        c.push_back(row.chi_ok ? "true" : "false");
        c.push_back(row.cond_ok ? "true" : "false");
    }
    c.push_back(opt_bool(row.cb_ok));
    c.push_back(opt_bool(row.oracle_ok));
    return c;
}

const char* kColumns =
    "g,e,alpha,beta,status,classification,l1_a,l1_b,l2_a,l2_b,"
    "sub_a,sub_b,quot_a,quot_b,z_length,c1_a,c1_b,c2,ext_dim,family_dim,"
    "stability,chi_ok,cond_ok,cb_ok,oracle_ok";

std::string join(const std::vector<std::string>& cells, const std::string& sep) {
    std::string out;
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i) out += sep;
        out += cells[i];
    }
    return out;
}

}  // namespace

std::string sweep_csv_header() { return kColumns; }

std::string sweep_csv_row(const SweepRow& row) { return join(row_cells(row), ","); }

std::string sweep_markdown(const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    std::istringstream header(kColumns);
    std::vector<std::string> names;
    for (std::string col; std::getline(header, col, ',');) names.push_back(col);
    out << "| " << join(names, " | ") << " |\n|";
    for (size_t i = 0; i < names.size(); ++i) out << " --- |";
    out << "\n";
    for (const SweepRow& row : rows) out << "| " << join(row_cells(row), " | ") << " |\n";
    return out.str();
}

std::string sweep_footer(const std::vector<SweepRow>& rows, const std::string& prefix) {
    size_t ok = 0, invalid = 0, cond = 0, chi = 0, cb_checked = 0, cb_ok = 0,
           oracle_checked = 0, oracle_ok = 0;
    for (const SweepRow& r : rows) {
        if (r.status == "ok") ++ok;
        if (r.status == "invalid_polarization") ++invalid;
        if (r.status == "cond_violated") ++cond;
        if (r.chi_ok) ++chi;
        if (r.cb_ok) {
            ++cb_checked;
            if (*r.cb_ok) ++cb_ok;
        }
        if (r.oracle_ok) {
            ++oracle_checked;
            if (*r.oracle_ok) ++oracle_ok;
        }
    }
    std::ostringstream out;
    out << prefix << "rows=" << rows.size() << " ok=" << ok
        << " invalid_polarization=" << invalid << " cond_violated=" << cond << "\n"
        << prefix << "chi_ok=" << chi << " cb_ok=" << cb_ok << "/" << cb_checked
        << " oracle_ok=" << oracle_ok << "/" << oracle_checked << "\n";
    return out.str();
}

}  // namespace ulrich
