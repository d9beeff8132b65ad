// Copyright 2026 The ltz Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end over the ltz C API:
//   ltz eval | constants | certify | reduce | minimize
// Exit codes: 0 pass, 1 certification violation, 2 usage/domain error.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ltz.h"

using nlohmann::json;

namespace {

struct Global {
    double tol = 1e-13;
    bool json_out = false;
    std::string dump_path;
    std::string config_path;
    int threads = 0;
};

// key=value config file; '#' starts a comment. Flags win over config.
std::map<std::string, std::string> read_config(const std::string& path) {
    std::map<std::string, std::string> kv;
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--config", "cannot open " + path);
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r");
            const auto b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (!key.empty()) kv[key] = val;
    }
    return kv;
}

class Report {
  public:
    Report(std::string command, bool as_json) : as_json_(as_json) {
        j_["command"] = std::move(command);
        j_["inputs"] = json::object();
        j_["results"] = json::array();
        j_["certificates"] = json::array();
        start_ = std::chrono::steady_clock::now();
    }

    json& inputs() { return j_["inputs"]; }

    void add_result(const std::string& name, double value, double err) {
        j_["results"].push_back({{"name", name}, {"value", value}, {"err", err}});
        if (!as_json_) std::printf("%s = %.10g  (err <= %.3g)\n", name.c_str(), value, err);
    }

    void add_text(const std::string& name, const std::string& text) {
        j_["results"].push_back({{"name", name}, {"text", text}});
        if (!as_json_) std::printf("%s: %s\n", name.c_str(), text.c_str());
    }

    void attach_claim_report(const json& claim_report) { j_["claim_report"] = claim_report; }
    void add_certificates(const json& certs) {
        for (const auto& c : certs) j_["certificates"].push_back(c);
    }

    int finish(const std::string& status) {
        j_["status"] = status;
        j_["wall_time"] =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        if (as_json_) std::printf("%s\n", j_.dump(2).c_str());
        else std::printf("status: %s\n", status.c_str());
        return status == "pass" ? 0 : (status == "fail" ? 1 : 2);
    }

  private:
    json j_;
    bool as_json_;
    std::chrono::steady_clock::time_point start_;
};

int fail_status(ltz_ctx* ctx, ltz_status st, Report& rep) {
    std::fprintf(stderr, "error: %s: %s\n", ltz_status_str(st), ltz_last_error(ctx));
    rep.finish("error");
    return 2;
}

struct FnInfo {
    ltz_fn id;
    bool is_theta;  // needs --alpha (else --s)
};

const std::map<std::string, FnInfo> kLatticeFns = {
    {"theta", {LTZ_THETA, true}},       {"theta-x", {LTZ_THETA_X, true}},
    {"theta-y", {LTZ_THETA_Y, true}},   {"theta-xy", {LTZ_THETA_XY, true}},
    {"theta-xyy", {LTZ_THETA_XYY, true}}, {"zeta", {LTZ_ZETA, false}},
    {"zeta-x", {LTZ_ZETA_X, false}},    {"zeta-y", {LTZ_ZETA_Y, false}},
    {"zeta-xy", {LTZ_ZETA_XY, false}},  {"zeta-xyy", {LTZ_ZETA_XYY, false}},
};

const std::map<std::string, int> kTheta1dFns = {
    {"theta1d", 0}, {"theta1d-dy", 1}, {"theta1d-dxy", 2}, {"theta1d-dxxy", 3}, {"theta1d-dx", 4},
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lattice theta / Epstein zeta toolkit"};
    app.require_subcommand(1);

    Global g;
    // --config must take effect before flag defaults are applied; scan early.
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--config") g.config_path = argv[i + 1];
    std::map<std::string, std::string> cfg;
    try {
        if (!g.config_path.empty()) cfg = read_config(g.config_path);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    auto cfg_num = [&](const char* key, double dflt) {
        auto it = cfg.find(key);
        return it == cfg.end() ? dflt : std::stod(it->second);
    };
    g.tol = cfg_num("tol", g.tol);
    g.threads = static_cast<int>(cfg_num("threads", g.threads));

    app.add_option("--tol", g.tol, "absolute tolerance")->capture_default_str();
    app.add_flag("--json", g.json_out, "emit a JSON run report");
    app.add_option("--dump", g.dump_path, "write grid samples as CSV");
    app.add_option("--config", g.config_path, "key=value config file");
    app.add_option("--threads", g.threads, "worker threads (0 = auto)");

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate a function at a point");
    std::string fn_name;
    double alpha = 1.0, s_param = 2.0, px = 0.0, py = 1.0, pX = 1.0, pY = 0.0;
    bool has_alpha = false, has_s = false;
    eval->add_option("--fn", fn_name, "function name")->required();
    eval->add_option("--alpha", alpha, "Gaussian parameter alpha")->trigger_on_parse(false);
    auto* alpha_opt = eval->get_option("--alpha");
    eval->add_option("--s", s_param, "Riesz exponent s");
    auto* s_opt = eval->get_option("--s");
    eval->add_option("--x", px, "Re z");
    eval->add_option("--y", py, "Im z");
    eval->add_option("--X", pX, "1-d width parameter");
    eval->add_option("--Y", pY, "1-d phase parameter");

    // constants
    auto* constants = app.add_subcommand("constants", "reproduce the quoted constants");

    // certify
    auto* certify = app.add_subcommand("certify", "run a certification claim");
    std::string claim;
    int grid = 0;
    double ycap = 10.0, inset = 1e-3, resolution = 1e-2;
    std::vector<double> alphas, svals;
    certify->add_option("--claim", claim, "claim name")->required();
    certify->add_option("--grid", grid, "grid size per axis");
    certify->add_option("--alpha", alphas, "alpha sweep")->delimiter(',');
    certify->add_option("--s", svals, "s sweep")->delimiter(',');
    certify->add_option("--ycap", ycap, "finite sampling ceiling in y");
    certify->add_option("--inset", inset, "inset from open boundaries");
    certify->add_option("--resolution", resolution, "grid resolution for arc claims");

    // reduce
    auto* reduce = app.add_subcommand("reduce", "fundamental-domain representative");
    double rx_in = 0.0, ry_in = 1.0;
    reduce->add_option("--x", rx_in)->required();
    reduce->add_option("--y", ry_in)->required();

    // minimize
    auto* minimize = app.add_subcommand("minimize", "minimize theta or zeta over the domain");
    std::string min_fn = "theta";
    double start_x = 0.3, start_y = 1.1;
    minimize->add_option("--fn", min_fn, "theta or zeta");
    minimize->add_option("--alpha", alpha);
    minimize->add_option("--s", s_param);
    minimize->add_option("--start-x", start_x);
    minimize->add_option("--start-y", start_y);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }
    has_alpha = alpha_opt->count() > 0;
    has_s = s_opt->count() > 0;

    ycap = cfg_num("ycap", ycap);
    inset = cfg_num("inset", inset);
    resolution = cfg_num("resolution", resolution);
    if (grid == 0) grid = static_cast<int>(cfg_num("grid", 0));

    ltz_ctx* ctx = ltz_ctx_new();
    ltz_ctx_set_abs_tol(ctx, g.tol);
    ltz_ctx_set_threads(ctx, g.threads);

    int rc = 2;
    if (*eval) {
        Report rep("eval", g.json_out);
        rep.inputs() = {{"fn", fn_name}, {"tol", g.tol}};
        double v = 0.0, e = 0.0;
        ltz_status st = LTZ_OK;
        if (auto it = kLatticeFns.find(fn_name); it != kLatticeFns.end()) {
            const double param = it->second.is_theta ? alpha : s_param;
            if (it->second.is_theta && has_s) {
                std::fprintf(stderr, "error: %s takes --alpha, not --s\n", fn_name.c_str());
                ltz_ctx_free(ctx);
                return rep.finish("error");
            }
            if (!it->second.is_theta && has_alpha) {
                std::fprintf(stderr, "error: %s takes --s, not --alpha\n", fn_name.c_str());
                ltz_ctx_free(ctx);
                return rep.finish("error");
            }
            rep.inputs()[it->second.is_theta ? "alpha" : "s"] = param;
            rep.inputs()["x"] = px;
            rep.inputs()["y"] = py;
            st = ltz_eval(ctx, it->second.id, param, px, py, &v, &e);
        } else if (auto jt = kTheta1dFns.find(fn_name); jt != kTheta1dFns.end()) {
            rep.inputs()["X"] = pX;
            rep.inputs()["Y"] = pY;
            st = ltz_theta1d(ctx, jt->second, pX, pY, &v, &e);
        } else {
            std::fprintf(stderr, "error: unknown --fn %s\n", fn_name.c_str());
            ltz_ctx_free(ctx);
            return rep.finish("error");
        }
        if (st != LTZ_OK) {
            rc = fail_status(ctx, st, rep);
        } else {
            rep.add_result(fn_name, v, e);
            rc = rep.finish("pass");
        }
    } else if (*constants) {
        Report rep("constants", g.json_out);
        double computed[6], quoted[6];
        int pass = 0;
        const ltz_status st = ltz_constants(ctx, computed, quoted, &pass);
        if (st != LTZ_OK) {
            rc = fail_status(ctx, st, rep);
        } else {
            static const char* names[6] = {"c1", "c2", "c3", "c4", "c5", "c6"};
            for (int i = 0; i < 6; ++i) {
                json row{{"name", names[i]},
                         {"computed", computed[i]},
                         {"quoted", quoted[i]},
                         {"abs_diff", std::abs(computed[i] - quoted[i])}};
                if (i == 0)
                    row["note"] =
                        "computed from the series oracle; the quoted 0.8729 differs by ~1.1e-3";
                rep.inputs();  // keep inputs object present
                rep.add_result(names[i], computed[i], 0.0);
                if (!g.json_out)
                    std::printf("  quoted %.4f  |diff| = %.2e%s\n", quoted[i],
                                std::abs(computed[i] - quoted[i]),
                                i == 0 ? "  (known discrepancy, oracle value reported)" : "");
                rep.add_certificates(json::array({row}));
            }
            rc = rep.finish(pass ? "pass" : "fail");
        }
    } else if (*certify) {
        Report rep("certify", g.json_out);
        json opts{{"tol", g.tol},     {"inset", inset},           {"ycap", ycap},
                  {"threads", g.threads}, {"resolution", resolution}, {"dump", !g.dump_path.empty()}};
        if (grid > 0) opts["grid"] = grid;
        if (!alphas.empty()) opts["alphas"] = alphas;
        if (!svals.empty()) opts["svals"] = svals;
        rep.inputs() = {{"claim", claim}, {"options", opts}};
        ltz_report* out = nullptr;
        const ltz_status st = ltz_certify(ctx, claim.c_str(), opts.dump().c_str(), &out);
        if (st != LTZ_OK) {
            rc = fail_status(ctx, st, rep);
        } else {
            const json claim_report = json::parse(ltz_report_json(out));
            rep.attach_claim_report(claim_report);
            if (claim_report.contains("certificates"))
                rep.add_certificates(claim_report["certificates"]);
            if (!g.json_out) std::printf("%s\n", claim_report.dump(2).c_str());
            if (!g.dump_path.empty()) {
                const char* csv = ltz_report_csv(out);
                std::ofstream f(g.dump_path);
                if (!f || !csv) {
                    std::fprintf(stderr, "error: cannot write %s\n", g.dump_path.c_str());
                    ltz_report_free(out);
                    ltz_ctx_free(ctx);
                    return rep.finish("error");
                }
                f << csv;
            }
            rc = rep.finish(ltz_report_passed(out) ? "pass" : "fail");
            ltz_report_free(out);
        }
    } else if (*reduce) {
        Report rep("reduce", g.json_out);
        rep.inputs() = {{"x", rx_in}, {"y", ry_in}};
        double ox = 0.0, oy = 0.0;
        char word[4096];
        const ltz_status st = ltz_reduce(ctx, rx_in, ry_in, &ox, &oy, word, sizeof word);
        if (st != LTZ_OK) {
            rc = fail_status(ctx, st, rep);
        } else {
            rep.add_result("x", ox, 0.0);
            rep.add_result("y", oy, 0.0);
            rep.add_text("word", word);
            rc = rep.finish("pass");
        }
    } else if (*minimize) {
        Report rep("minimize", g.json_out);
        const bool is_theta = min_fn == "theta";
        if (!is_theta && min_fn != "zeta") {
            std::fprintf(stderr, "error: --fn must be theta or zeta\n");
            ltz_ctx_free(ctx);
            return rep.finish("error");
        }
        const double param = is_theta ? alpha : s_param;
        rep.inputs() = {{"fn", min_fn},
                        {is_theta ? "alpha" : "s", param},
                        {"start", {start_x, start_y}}};
        double mx = 0.0, my = 0.0, mv = 0.0;
        long evals = 0;
        const ltz_status st =
            ltz_minimize(ctx, is_theta ? LTZ_THETA : LTZ_ZETA, param, start_x, start_y, &mx, &my,
                         &mv, &evals);
        if (st != LTZ_OK) {
            rc = fail_status(ctx, st, rep);
        } else {
            rep.add_result("x", mx, 0.0);
            rep.add_result("y", my, 0.0);
            rep.add_result("value", mv, 0.0);
            rep.add_text("evaluations", std::to_string(evals));
            rc = rep.finish("pass");
        }
    }
    ltz_ctx_free(ctx);
    return rc;
}
