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

#include "../include/ltz.h"

#include <cstring>
#include <sstream>
#include <string>

#include <json.hpp>

#include "claims.hpp"
#include "lattice.hpp"
#include "modular.hpp"
#include "series_bounds.hpp"
#include "theta1d.hpp"
#include "types.hpp"

using nlohmann::json;

struct ltz_ctx {
    ltz::Truncation trunc;
    int threads = 0;
    std::string last_error;
};

struct ltz_report {
    bool pass = false;
    std::string json_text;
    std::string csv_text;  // empty unless dump requested
};

namespace {

ltz_status guard(ltz_ctx* ctx, const std::function<void()>& body) {
    if (!ctx) return LTZ_ERR_BAD_ARGUMENT;
    try {
        body();
        return LTZ_OK;
    } catch (const ltz::invalid_domain& e) {
        ctx->last_error = e.what();
        return LTZ_ERR_DOMAIN;
    } catch (const ltz::tolerance_not_met& e) {
        ctx->last_error = e.what();
        return LTZ_ERR_TOLERANCE;
    } catch (const ltz::degenerate_denominator& e) {
        ctx->last_error = e.what();
        return LTZ_ERR_DEGENERATE;
    } catch (const ltz::not_converged& e) {
        ctx->last_error = e.what();
        return LTZ_ERR_NOT_CONVERGED;
    } catch (const std::invalid_argument& e) {
        ctx->last_error = e.what();
        return LTZ_ERR_BAD_ARGUMENT;
    } catch (const std::exception& e) {
        ctx->last_error = e.what();
        return LTZ_ERR_INTERNAL;
    }
}

}  // namespace

extern "C" {

ltz_ctx* ltz_ctx_new(void) { return new (std::nothrow) ltz_ctx; }

void ltz_ctx_free(ltz_ctx* ctx) { delete ctx; }

ltz_status ltz_ctx_set_abs_tol(ltz_ctx* ctx, double abs_tol) {
    if (!ctx) return LTZ_ERR_BAD_ARGUMENT;
    if (!(abs_tol >= 0.0)) {
        ctx->last_error = "abs_tol must be >= 0";
        return LTZ_ERR_BAD_ARGUMENT;
    }
    ctx->trunc.abs_tol = abs_tol;
    return LTZ_OK;
}

ltz_status ltz_ctx_set_max_terms(ltz_ctx* ctx, int max_terms) {
    if (!ctx) return LTZ_ERR_BAD_ARGUMENT;
    if (max_terms < 1) {
        ctx->last_error = "max_terms must be >= 1";
        return LTZ_ERR_BAD_ARGUMENT;
    }
    ctx->trunc.max_terms = max_terms;
    return LTZ_OK;
}

ltz_status ltz_ctx_set_threads(ltz_ctx* ctx, int threads) {
    if (!ctx) return LTZ_ERR_BAD_ARGUMENT;
    ctx->threads = threads < 0 ? 0 : threads;
    return LTZ_OK;
}

const char* ltz_status_str(ltz_status st) {
    switch (st) {
        case LTZ_OK: return "ok";
        case LTZ_ERR_DOMAIN: return "invalid domain";
        case LTZ_ERR_TOLERANCE: return "tolerance not met";
        case LTZ_ERR_DEGENERATE: return "degenerate denominator";
        case LTZ_ERR_NOT_CONVERGED: return "not converged";
        case LTZ_ERR_BAD_ARGUMENT: return "bad argument";
        default: return "internal error";
    }
}

const char* ltz_last_error(const ltz_ctx* ctx) {
    return ctx ? ctx->last_error.c_str() : "null context";
}

ltz_status ltz_theta1d(ltz_ctx* ctx, int deriv, double X, double Y, double* value, double* err) {
    if (!value) return LTZ_ERR_BAD_ARGUMENT;
    return guard(ctx, [&] {
        ltz::ValueWithError v;
        switch (deriv) {
            case 0: v = ltz::theta1d::theta(X, Y, ctx->trunc); break;
            case 1: v = ltz::theta1d::theta_dY(X, Y, ctx->trunc); break;
            case 2: v = ltz::theta1d::theta_dXY(X, Y, ctx->trunc); break;
            case 3: v = ltz::theta1d::theta_dXXY(X, Y, ctx->trunc); break;
            case 4: v = ltz::theta1d::theta_dX(X, Y, ctx->trunc); break;
            default: throw std::invalid_argument("theta1d deriv must be 0..4");
        }
        *value = v.value;
        if (err) *err = v.err;
    });
}

ltz_status ltz_eval(ltz_ctx* ctx, ltz_fn fn, double param, double x, double y, double* value,
                    double* err) {
    if (!value) return LTZ_ERR_BAD_ARGUMENT;
    return guard(ctx, [&] {
        const ltz::UpperHalfPoint z{x, y};
        ltz::ValueWithError v;
        using ltz::lattice::ZetaDeriv;
        switch (fn) {
            case LTZ_THETA: v = ltz::lattice::theta_expansion(param, z, ctx->trunc); break;
            case LTZ_THETA_X: v = ltz::lattice::theta_x(param, z, ctx->trunc); break;
            case LTZ_THETA_Y: v = ltz::lattice::theta_y(param, z, ctx->trunc); break;
            case LTZ_THETA_XY: v = ltz::lattice::theta_xy(param, z, ctx->trunc); break;
            case LTZ_THETA_XYY: v = ltz::lattice::theta_xyy(param, z, ctx->trunc); break;
            case LTZ_ZETA: v = ltz::lattice::zeta_mellin(param, z, ctx->trunc); break;
            case LTZ_ZETA_X:
                v = ltz::lattice::zeta_deriv_mellin(ZetaDeriv::x, param, z, ctx->trunc);
                break;
            case LTZ_ZETA_Y:
                v = ltz::lattice::zeta_deriv_mellin(ZetaDeriv::y, param, z, ctx->trunc);
                break;
            case LTZ_ZETA_XY:
                v = ltz::lattice::zeta_deriv_mellin(ZetaDeriv::xy, param, z, ctx->trunc);
                break;
            case LTZ_ZETA_XYY:
                v = ltz::lattice::zeta_deriv_mellin(ZetaDeriv::xyy, param, z, ctx->trunc);
                break;
            default: throw std::invalid_argument("unknown function id");
        }
        *value = v.value;
        if (err) *err = v.err;
    });
}

ltz_status ltz_aux_series(ltz_ctx* ctx, const char* kind, double X, double* value, double* err) {
    if (!value || !kind) return LTZ_ERR_BAD_ARGUMENT;
    return guard(ctx, [&] {
        using ltz::series_bounds::AuxKind;
        const std::string k = kind;
        AuxKind id;
        if (k == "mu") id = AuxKind::mu;
        else if (k == "nu") id = AuxKind::nu;
        else if (k == "omega") id = AuxKind::omega;
        else if (k == "mu_hat") id = AuxKind::mu_hat;
        else if (k == "nu_hat") id = AuxKind::nu_hat;
        else if (k == "omega_hat") id = AuxKind::omega_hat;
        else throw std::invalid_argument("unknown aux series kind: " + k);
        const ltz::ValueWithError v = ltz::series_bounds::aux_series(id, X, ctx->trunc);
        *value = v.value;
        if (err) *err = v.err;
    });
}

ltz_status ltz_constants(ltz_ctx* ctx, double computed[6], double quoted[6], int* pass) {
    return guard(ctx, [&] {
        const auto table = ltz::series_bounds::paper_constants(ctx->trunc);
        for (int i = 0; i < 6; ++i) {
            if (computed) computed[i] = table.computed[i];
            if (quoted) quoted[i] = table.quoted[i];
        }
        if (pass) *pass = table.pass ? 1 : 0;
    });
}

ltz_status ltz_reduce(ltz_ctx* ctx, double x, double y, double* rx, double* ry, char* word,
                      size_t word_cap) {
    if (!rx || !ry) return LTZ_ERR_BAD_ARGUMENT;
    return guard(ctx, [&] {
        const auto red = ltz::modular::reduce({x, y});
        *rx = red.point.x;
        *ry = red.point.y;
        if (word && word_cap > 0) {
            const std::string w = red.word.str();
            std::snprintf(word, word_cap, "%s", w.c_str());
        }
    });
}

ltz_status ltz_contains(ltz_ctx* ctx, double x, double y, int closed, int* result) {
    if (!result) return LTZ_ERR_BAD_ARGUMENT;
    return guard(ctx, [&] { *result = ltz::modular::contains({x, y}, closed != 0) ? 1 : 0; });
}

ltz_status ltz_minimize(ltz_ctx* ctx, ltz_fn fn, double param, double start_x, double start_y,
                        double* min_x, double* min_y, double* min_value, long* evals) {
    if (!min_x || !min_y || !min_value) return LTZ_ERR_BAD_ARGUMENT;
    return guard(ctx, [&] {
        using ltz::lattice::Functional;
        Functional f;
        if (fn == LTZ_THETA) f = Functional::theta_gauss;
        else if (fn == LTZ_ZETA) f = Functional::zeta_riesz;
        else throw std::invalid_argument("minimize: fn must be LTZ_THETA or LTZ_ZETA");
        const auto res = ltz::lattice::minimize(f, param, {start_x, start_y}, ctx->trunc);
        *min_x = res.argmin.x;
        *min_y = res.argmin.y;
        *min_value = res.value;
        if (evals) *evals = res.evals;
    });
}

ltz_status ltz_certify(ltz_ctx* ctx, const char* claim, const char* options_json,
                       ltz_report** out) {
    if (!claim || !out) return LTZ_ERR_BAD_ARGUMENT;
    *out = nullptr;
    return guard(ctx, [&] {
        ltz::claims::ClaimOptions opt;
        opt.tol = ctx->trunc.abs_tol;
        opt.threads = ctx->threads;
        if (options_json && *options_json) {
            json j;
            try {
                j = json::parse(options_json);
            } catch (const json::exception& e) {
                throw std::invalid_argument(std::string("bad options JSON: ") + e.what());
            }
            if (j.contains("grid")) opt.grid = j["grid"].get<int>();
            if (j.contains("inset")) opt.inset = j["inset"].get<double>();
            if (j.contains("ycap")) opt.y_cap = j["ycap"].get<double>();
            if (j.contains("tol")) opt.tol = j["tol"].get<double>();
            if (j.contains("resolution")) opt.resolution = j["resolution"].get<double>();
            if (j.contains("threads")) opt.threads = j["threads"].get<int>();
            if (j.contains("dump")) opt.dump = j["dump"].get<bool>();
            if (j.contains("alphas")) opt.alphas = j["alphas"].get<std::vector<double>>();
            if (j.contains("svals")) opt.svals = j["svals"].get<std::vector<double>>();
        }
        const auto run = ltz::claims::run_claim(claim, opt);
        auto* rep = new ltz_report;
        rep->pass = run.pass;
        rep->json_text = run.report.dump();
        if (opt.dump) {
            std::ostringstream csv;
            csv << "x,y,value,err\n";
            csv.precision(17);
            for (const auto& p : run.samples)
                csv << p.x << ',' << p.y << ',' << p.value << ',' << p.err << '\n';
            rep->csv_text = csv.str();
        }
        *out = rep;
    });
}

int ltz_report_passed(const ltz_report* rep) { return rep && rep->pass ? 1 : 0; }

const char* ltz_report_json(const ltz_report* rep) {
    return rep ? rep->json_text.c_str() : nullptr;
}

const char* ltz_report_csv(const ltz_report* rep) {
    return rep && !rep->csv_text.empty() ? rep->csv_text.c_str() : nullptr;
}

void ltz_report_free(ltz_report* rep) { delete rep; }

const char* const* ltz_claim_names(void) {
    static std::vector<const char*> names = [] {
        std::vector<const char*> v;
        for (const auto& n : ltz::claims::claim_names()) v.push_back(n.c_str());
        v.push_back(nullptr);
        return v;
    }();
    return names.data();
}

}  // extern "C"
