// Command-line surface: construct approximant systems, verify their
// certificates, compute independence measures, and regenerate the reference
// tables. Exit codes: 0 success, 1 certificate failure, 2 bad flags/config.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "padelog/padelog.hpp"

using namespace padelog;

namespace {

constexpr const char* kSchema = "padelog/1";

std::vector<Rat> parse_rat_list(const std::string& s) {
    std::vector<Rat> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rat(item));
    return out;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
}

struct GlobalOpts {
    bool json = false;
    unsigned precision_bits = 256;
    int trunc_margin = 3;
};

void emit(const GlobalOpts& g, const Json& report, const std::string& human) {
    if (g.json)
        std::cout << report.dump(2) << "\n";
    else
        std::cout << human;
}

Json envelope(const std::string& command) {
    Json j;
    j["schema"] = kSchema;
    j["command"] = command;
    return j;
}

// ---- construct -------------------------------------------------------------

int run_construct(const GlobalOpts& g, const std::string& omegas_s, const std::string& rs_s,
                  int n, int k) {
    std::vector<Rat> omegas;
    std::vector<int> rs;
    try {
        omegas = parse_rat_list(omegas_s);
        rs = parse_int_list(rs_s);
    } catch (const std::exception& e) {
        std::cerr << "error: unparseable list: " << e.what() << "\n";
        return 2;
    }
    Json rep = envelope("construct");
    std::ostringstream human;
    try {
        if (k > 0) {
            SingleSystem sys = build_system(SystemConfig{omegas, rs, n, k}, g.trunc_margin);
            rep["system"] = to_json(sys);
            rep["pass"] = true;
            human << "certified order " << sys.certified_order << " for column k=" << k << "\n";
        } else {
            PadeSystem sys = build_all(omegas, rs, n, g.trunc_margin);
            rep["system"] = to_json(sys);
            rep["pass"] = true;
            human << "built " << sys.columns.size() << " columns, scaling D = " << sys.scaling
                  << "\n";
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: invalid config: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: certificate failure: " << e.what() << "\n";
        return 1;
    }
    emit(g, rep, human.str());
    return 0;
}

// ---- verify ----------------------------------------------------------------

std::vector<std::vector<Rat>> omega_grid(const std::vector<Rat>& pool, int max_m) {
    std::vector<std::vector<Rat>> out;
    size_t P = pool.size();
    for (unsigned mask = 1; mask < (1u << P); ++mask) {
        std::vector<Rat> om;
        for (size_t b = 0; b < P; ++b)
            if (mask & (1u << b)) om.push_back(pool[b]);
        if (static_cast<int>(om.size()) <= max_m) out.push_back(om);
    }
    return out;
}

std::vector<std::vector<int>> weight_grid(size_t m, int max_sum) {
    std::vector<std::vector<int>> out;
    std::vector<int> rs(m, 1);
    while (true) {
        int total = 0;
        for (int r : rs) total += r;
        if (total <= max_sum) out.push_back(rs);
        size_t pos = 0;
        while (pos < m) {
            if (++rs[pos] <= max_sum) break;
            rs[pos++] = 1;
        }
        if (pos == m) break;
    }
    return out;
}

int run_verify_grid(const GlobalOpts& g, const std::string& suite, int max_sum_r, int max_n,
                    const std::string& pool_s, int max_m) {
    std::vector<Rat> pool = parse_rat_list(pool_s);
    Json rep = envelope("verify " + suite);
    Json rows = Json::array();
    bool all_ok = true;
    std::ostringstream human;
    for (const auto& om : omega_grid(pool, max_m)) {
        for (const auto& rs : weight_grid(om.size(), max_sum_r)) {
            int total = 0;
            for (int r : rs) total += r;
            for (int n = 0; n <= max_n; ++n) {
                Json row;
                Json oms = Json::array();
                for (const auto& w : om) oms.push_back(to_string(w));
                row["omegas"] = oms;
                row["rs"] = rs;
                row["n"] = n;
                bool ok = true;
                std::string detail;
                try {
                    if (suite == "order") {
                        for (int k = 1; k <= total; ++k)
                            build_system(SystemConfig{om, rs, n, k}, g.trunc_margin);
                        detail = "orders exact for all k";
                    } else if (suite == "integrality") {
                        ok = check_integrality(build_all(om, rs, n, g.trunc_margin));
                        detail = ok ? "D*P integral" : "non-integer coefficient";
                    } else if (suite == "determinant") {
                        auto cert = delta_certificate(build_all(om, rs, n, g.trunc_margin));
                        ok = cert.monomial_ok;
                        row["certificate"] = to_json(cert);
                        detail = ok ? "monomial certificate" : "determinant not a pure monomial";
                    }
                } catch (const std::exception& e) {
                    ok = false;
                    detail = e.what();
                }
                row["pass"] = ok;
                row["detail"] = detail;
                rows.push_back(row);
                all_ok = all_ok && ok;
            }
        }
    }
    rep["rows"] = rows;
    rep["pass"] = all_ok;
    human << "verify " << suite << ": " << rows.size() << " configs, "
          << (all_ok ? "all pass" : "FAILURES") << "\n";
    emit(g, rep, human.str());
    return all_ok ? 0 : 1;
}

int run_verify_perfectness(const GlobalOpts& g, int max_total) {
    Json rep = envelope("verify perfectness");
    Json rows = Json::array();
    bool all_ok = true;
    std::vector<Rat> nodes = {Rat(0), Rat(1), Rat(2), Rat(3)};
    for (unsigned mask = 1; mask < 16; ++mask) {
        std::vector<Rat> om;
        for (int b = 0; b < 4; ++b)
            if (mask & (1u << b)) om.push_back(nodes[b]);
        if (om.size() < 2) continue;
        std::vector<int> wt(om.size(), 0);
        while (true) {
            int total = 0;
            for (int r : wt) total += r + 1;
            if (total <= max_total) {
                bool ok = false;
                std::string detail;
                try {
                    ok = check_perfectness(om, wt, g.trunc_margin);
                    detail = ok ? "order exact" : "remainder order too high";
                } catch (const std::exception& e) {
                    detail = e.what();
                }
                Json row;
                Json oms = Json::array();
                for (const auto& w : om) oms.push_back(to_string(w));
                row["omegas"] = oms;
                row["weights"] = wt;
                row["pass"] = ok;
                row["detail"] = detail;
                rows.push_back(row);
                all_ok = all_ok && ok;
            }
            size_t pos = 0;
            while (pos < wt.size()) {
                if (++wt[pos] <= max_total) break;
                wt[pos++] = 0;
            }
            if (pos == wt.size()) break;
        }
    }
    rep["rows"] = rows;
    rep["pass"] = all_ok;
    std::ostringstream human;
    human << "verify perfectness: " << rows.size() << " systems, "
          << (all_ok ? "all pass" : "FAILURES") << "\n";
    emit(g, rep, human.str());
    return all_ok ? 0 : 1;
}

int run_verify_hankel(const GlobalOpts& g, int max_r, int max_n) {
    Json rep = envelope("verify hankel");
    Json rows = Json::array();
    bool all_ok = true;
    for (int r = 1; r <= max_r; ++r)
        for (int n = 1; n <= max_n; ++n) {
            Rat det = polylog_hankel_det(r, n);
            bool ok = det > 0;
            rows.push_back(Json{{"r", r}, {"n", n}, {"det", to_string(det)}, {"pass", ok}});
            all_ok = all_ok && ok;
        }
    rep["rows"] = rows;
    rep["pass"] = all_ok;
    std::ostringstream human;
    human << "verify hankel: " << rows.size() << " determinants, "
          << (all_ok ? "all positive" : "FAILURES") << "\n";
    emit(g, rep, human.str());
    return all_ok ? 0 : 1;
}

// ---- measure ---------------------------------------------------------------

int run_measure(const GlobalOpts& g, const std::string& omegas_s, const std::string& rs_s,
                const std::string& alpha_s, const std::string& place_s, double eps) {
    MeasureInputs in;
    try {
        in.omegas = parse_rat_list(omegas_s);
        in.rs = parse_int_list(rs_s);
        in.alpha = parse_rat(alpha_s);
        in.place = place_s == "inf" ? PlaceSpec::infinite_place()
                                    : PlaceSpec::finite_place(Int(place_s));
        in.epsilon = Real(eps);
    } catch (const std::exception& e) {
        std::cerr << "error: bad measure inputs: " << e.what() << "\n";
        return 2;
    }
    Json rep = envelope("measure");
    std::ostringstream human;
    try {
        set_precision_bits(g.precision_bits);
        MeasureReport mr = measure(in);
        rep["report"] = to_json(mr);
        rep["pass"] = mr.valid;
        if (mr.valid)
            human << "mu = " << real_str(mr.mu, 10) << ", log C = " << real_str(Real(log(mr.C_eps)), 10)
                  << "\n";
        else
            human << "no measure: " << mr.reason << "\n";
        emit(g, rep, human.str());
        return mr.valid ? 0 : 1;
    } catch (const HypothesisViolation& e) {
        std::cerr << "error: hypothesis violated: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: invalid config: " << e.what() << "\n";
        return 2;
    }
}

// ---- tables ----------------------------------------------------------------

int run_tables_thresholds(const GlobalOpts& g, int r_min, int r_max) {
    set_precision_bits(g.precision_bits);
    // Reference row from the published table; entries for r >= 5 disagree with
    // the displayed threshold formula (r-1)((r+1) log 2 + r), so those rows
    // carry an explicit discrepancy note.
    const std::map<int, std::string> reference = {
        {3, "103278"},   {4, "22.3973"},  {5, "27.2248"},  {6, "40.5361"},
        {7, "56.4495"},  {8, "74.9649"},  {9, "96.0824"},  {10, "119.8020"}};
    Json rep = envelope("tables corollary-thresholds");
    Json rows = Json::array();
    std::ostringstream human;
    for (int r = r_min; r <= r_max; ++r) {
        Real expo = corollary_threshold_exponent(r);
        Json row;
        row["r"] = r;
        row["exponent"] = real_str(expo, 12);
        if (r == 3) {
            Real t = ceil(exp(expo));
            row["threshold_integer"] = real_str(t, 12);
        }
        auto it = reference.find(r);
        if (it != reference.end()) {
            row["reference"] = it->second;
            if (r >= 5)
                row["paper_discrepancy"] =
                    "published entry differs from the displayed threshold formula "
                    "(r-1)((r+1)log2 + r); the formula value is reported here and is the one "
                    "consistent with the mu-table V";
        }
        rows.push_back(row);
        human << "r=" << r << " exponent " << real_str(expo, 8) << "\n";
    }
    rep["rows"] = rows;
    rep["pass"] = true;
    emit(g, rep, human.str());
    return 0;
}

int run_tables_mu(const GlobalOpts& g, int r, double eps, const std::string& alphas_s) {
    set_precision_bits(g.precision_bits);
    const std::map<std::string, std::pair<std::string, std::string>> reference = {
        {"1e16", {"1740.6055", "-1368.98"}}, {"1e17", {"81.2650", "-245.38"}},
        {"1e18", {"43.9892", "-229.14"}},    {"1e19", {"31.1889", "-229.62"}},
        {"1e20", {"24.7161", "-234.41"}},    {"1e21", {"20.8088", "-240.95"}},
        {"1e22", {"18.1940", "-248.38"}}};
    std::vector<std::string> alphas;
    {
        std::stringstream ss(alphas_s);
        std::string item;
        while (std::getline(ss, item, ',')) alphas.push_back(item);
    }
    Json rep = envelope("tables mu");
    Json rows = Json::array();
    std::ostringstream human;
    bool all_ok = true;
    for (const auto& a : alphas) {
        Json row;
        row["alpha"] = a;
        try {
            MeasureInputs in;
            in.omegas = {Rat(0)};
            in.rs = {r};
            in.alpha = parse_rat(a);
            in.place = PlaceSpec::infinite_place();
            in.epsilon = Real(eps);
            MeasureReport mr = measure(in);
            row["valid"] = mr.valid;
            if (mr.valid) {
                row["mu"] = real_str(mr.mu, 12);
                row["log_C"] = real_str(Real(log(mr.C_eps)), 12);
                auto it = reference.find(a);
                if (it != reference.end()) {
                    row["mu_reference"] = it->second.first;
                    row["log_C_reference"] = it->second.second + " + log(1/2)";
                    row["paper_discrepancy"] =
                        "the published C exponent does not match the displayed C formula "
                        "evaluated at these inputs; log_C here is the formula value, "
                        "internally consistent with the reported B, U, V terms";
                }
                human << "alpha=" << a << " mu=" << real_str(mr.mu, 8) << "\n";
            } else {
                row["reason"] = mr.reason;
                human << "alpha=" << a << " no measure: " << mr.reason << "\n";
            }
        } catch (const std::exception& e) {
            row["valid"] = false;
            row["reason"] = e.what();
            human << "alpha=" << a << " error: " << e.what() << "\n";
        }
        rows.push_back(row);
    }
    rep["rows"] = rows;
    rep["pass"] = all_ok;
    emit(g, rep, human.str());
    return 0;
}

// ---- hankel ----------------------------------------------------------------

int run_hankel(const GlobalOpts& g, int r, int n) {
    Json rep = envelope("hankel");
    if (r < 1 || n < 1) {
        std::cerr << "error: r and n must be >= 1\n";
        return 2;
    }
    Rat det = polylog_hankel_det(r, n);
    rep["r"] = r;
    rep["n"] = n;
    rep["det"] = to_string(det);
    rep["sign"] = det > 0 ? 1 : (det < 0 ? -1 : 0);
    rep["pass"] = det != 0;
    std::ostringstream human;
    human << "det = " << to_string(det) << "\n";
    emit(g, rep, human.str());
    return det != 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Pade approximants for binomial-log systems"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags usable after a subcommand name
    GlobalOpts g;
    app.add_flag("--json", g.json, "emit a JSON report instead of text");
    app.add_option("--precision-bits", g.precision_bits, "working precision for real output");
    app.add_option("--trunc-margin", g.trunc_margin, "extra series terms beyond the target order");

    // construct
    auto* construct = app.add_subcommand("construct", "build one column or a full system");
    std::string c_omegas, c_rs;
    int c_n = 0, c_k = 0;
    construct->add_option("--omegas", c_omegas, "comma-separated rationals in [0,1)")->required();
    construct->add_option("--rs", c_rs, "comma-separated weights")->required();
    construct->add_option("--n", c_n, "degree parameter")->required();
    construct->add_option("--k", c_k, "column index; omit for all columns");

    // verify
    auto* verify = app.add_subcommand("verify", "run a certificate suite");
    verify->require_subcommand(1);
    int v_max_sum_r = 4, v_max_n = 5, v_max_m = 2, v_max_total = 8;
    int v_polylog_r = 4, v_polylog_n = 8, v_det_max_n = 3;
    std::string v_pool = "0,1/3,1/2";
    auto* v_order = verify->add_subcommand("order", "remainder order exactness over a grid");
    v_order->add_option("--max-sum-r", v_max_sum_r);
    v_order->add_option("--max-n", v_max_n);
    v_order->add_option("--max-m", v_max_m);
    v_order->add_option("--omega-pool", v_pool);
    auto* v_int = verify->add_subcommand("integrality", "scaled coefficients are integers");
    v_int->add_option("--max-sum-r", v_max_sum_r);
    v_int->add_option("--max-n", v_max_n);
    v_int->add_option("--max-m", v_max_m);
    v_int->add_option("--omega-pool", v_pool);
    auto* v_det = verify->add_subcommand("determinant", "monomial determinant certificates");
    v_det->add_option("--max-sum-r", v_max_sum_r);
    v_det->add_option("--max-n", v_det_max_n);
    v_det->add_option("--max-m", v_max_m);
    v_det->add_option("--omega-pool", v_pool);
    auto* v_perf = verify->add_subcommand("perfectness", "exponential remainder orders");
    v_perf->add_option("--max-total", v_max_total);
    auto* v_hank = verify->add_subcommand("hankel", "polylog Hankel determinant positivity");
    v_hank->add_option("--polylog-r", v_polylog_r);
    v_hank->add_option("--polylog-n", v_polylog_n);

    // measure
    auto* meas = app.add_subcommand("measure", "linear independence measure report");
    std::string m_omegas, m_rs, m_alpha, m_place = "inf";
    double m_eps = 0.1;
    meas->add_option("--omegas", m_omegas)->required();
    meas->add_option("--rs", m_rs)->required();
    meas->add_option("--alpha", m_alpha)->required();
    meas->add_option("--place", m_place, "inf or a prime");
    meas->add_option("--eps", m_eps);

    // tables
    auto* tables = app.add_subcommand("tables", "regenerate the reference tables");
    tables->require_subcommand(1);
    int t_rmin = 3, t_rmax = 10, t_r = 5;
    double t_eps = 0.1;
    std::string t_alphas = "1e16,1e17,1e18,1e19,1e20,1e21,1e22";
    auto* t_thresh = tables->add_subcommand("corollary-thresholds", "V > 0 thresholds per r");
    t_thresh->add_option("--r-min", t_rmin);
    t_thresh->add_option("--r-max", t_rmax);
    auto* t_mu = tables->add_subcommand("mu", "mu and C rows");
    t_mu->add_option("--r", t_r);
    t_mu->add_option("--eps", t_eps);
    t_mu->add_option("--alphas", t_alphas);

    // hankel
    auto* hank = app.add_subcommand("hankel", "one exact polylog Hankel determinant");
    int h_r = 1, h_n = 1;
    hank->add_option("--r", h_r)->required();
    hank->add_option("--n", h_n)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*construct) return run_construct(g, c_omegas, c_rs, c_n, c_k);
        if (*verify) {
            if (*v_order) return run_verify_grid(g, "order", v_max_sum_r, v_max_n, v_pool, v_max_m);
            if (*v_int)
                return run_verify_grid(g, "integrality", v_max_sum_r, v_max_n, v_pool, v_max_m);
            if (*v_det)
                return run_verify_grid(g, "determinant", v_max_sum_r, v_det_max_n, v_pool, v_max_m);
            if (*v_perf) return run_verify_perfectness(g, v_max_total);
            if (*v_hank) return run_verify_hankel(g, v_polylog_r, v_polylog_n);
        }
        if (*meas) return run_measure(g, m_omegas, m_rs, m_alpha, m_place, m_eps);
        if (*tables) {
            if (*t_thresh) return run_tables_thresholds(g, t_rmin, t_rmax);
            if (*t_mu) return run_tables_mu(g, t_r, t_eps, t_alphas);
        }
        if (*hank) return run_hankel(g, h_r, h_n);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
