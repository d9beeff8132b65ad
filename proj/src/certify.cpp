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

#include "certify.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "lattice.hpp"
#include "modular.hpp"
#include "parallel.hpp"
#include "series_bounds.hpp"
#include "theta1d.hpp"

namespace ltz::certify {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kDomTol = 1e-12;

using series_bounds::AuxKind;
using series_bounds::aux_series;

double aux(AuxKind k, double X, const Truncation& t) { return aux_series(k, X, t).value; }

// sum_{n>=2} n^w e^{-pi a (y (n^2-1) - 1/(4y))}
double shifted_tail_sum(int w, double alpha, double y) {
    const double beta = kPi * alpha * y;
    const double shift = std::exp(kPi * alpha / (4.0 * y));
    double s = 0.0;
    for (int n = 2; n <= 40; ++n) {
        double term = std::exp(-beta * (static_cast<double>(n) * n - 1.0));
        for (int i = 0; i < w; ++i) term *= n;
        s += term;
        if (term < 1e-20 * s) break;
    }
    return shift * s;
}

}  // namespace

ValueWithError epsilon1(double alpha, double y, const Truncation& t) {
    if (!(alpha > 0.0) || !(y > 0.0)) throw invalid_domain("epsilon1: alpha, y must be > 0");
    if (y / alpha < 0.5 - kDomTol)
        throw invalid_domain("epsilon1: requires y/alpha >= 1/2");
    t.validate();
    const double Xa = y / alpha, Xy = alpha * y;
    const double mu_a = aux(AuxKind::mu, Xa, t);
    const double nu_a = aux(AuxKind::nu, Xa, t);
    const double om_a = aux(AuxKind::omega, Xa, t);
    const double mu_y = aux(AuxKind::mu, Xy, t);
    const double nu_y = aux(AuxKind::nu, Xy, t);
    const double om_y = aux(AuxKind::omega, Xy, t);
    const double a2 = alpha * alpha;
    const double v = (1 + mu_a) / (1 - mu_a) *
                         (om_y + mu_y / (4.0 * kPi * kPi * a2 * y * y) + nu_y / (kPi * alpha * y)) +
                     (1 + nu_a) / (1 - mu_a) *
                         (mu_y / (kPi * a2 * alpha * y) + 2.0 * nu_y / a2) +
                     mu_y / (a2 * a2) * (1 + om_a) / (1 - mu_a);
    return {v, 16.0 * std::numeric_limits<double>::epsilon() * (std::abs(v) + 1.0) + 8.0 * t.abs_tol};
}

ValueWithError epsilon2(double alpha, double y, const Truncation& t) {
    const double s3 = std::sqrt(3.0);
    if (!(alpha >= s3 - kDomTol) || !(y >= s3 / 2.0 - kDomTol))
        throw invalid_domain("epsilon2: requires alpha >= sqrt(3), y >= sqrt(3)/2");
    t.validate();
    const double s6 = shifted_tail_sum(6, alpha, y);
    const double s4 = shifted_tail_sum(4, alpha, y);
    const double s2 = shifted_tail_sum(2, alpha, y);
    const double a2 = alpha * alpha, y2 = y * y;
    const double v = s6 / kPi + (4.0 / (kPi * kPi * alpha * y) + 1.0 / (2.0 * kPi * y2)) * s4 +
                     (11.0 / (2.0 * kPi * kPi * kPi * a2 * y2) +
                      1.0 / (4.0 * kPi * kPi * alpha * y2 * y) + 1.0 / (4.0 * kPi * kPi * y2 * y2)) *
                         s2;
    return {v, 32.0 * std::numeric_limits<double>::epsilon() * (std::abs(v) + 1e-6)};
}

double theta_xy_smallX_tail(double alpha, double y) {
    const double s4 = shifted_tail_sum(4, alpha, y);
    const double s2 = shifted_tail_sum(2, alpha, y);
    return s4 / kPi + (2.0 / (kPi * kPi * alpha * y) + 1.0 / (4.0 * kPi * y * y)) * s2;
}

namespace {

// Composite constants (1+mu)/(1-mu) mu(3/5) and (1+mu)/(1-mu) nu(3/5) at
// X = 1/2 enter the large-X bracket; cache them.
struct BracketConstants {
    double c2, c3;
    BracketConstants() {
        Truncation t;
        const double mu = aux(AuxKind::mu, 0.5, t);
        c2 = (1 + mu) / (1 - mu) * aux(AuxKind::mu, 0.6, t);
        c3 = (1 + mu) / (1 - mu) * aux(AuxKind::nu, 0.6, t);
    }
};

const BracketConstants& bracket_constants() {
    static BracketConstants c;
    return c;
}

}  // namespace

double theta_xy_bracket_largeX(double alpha, double y) {
    const auto& c = bracket_constants();
    return 1.0 - (1.0 + c.c2) / (2.0 * kPi * alpha * y) - c.c3;
}

double theta_xy_bracket_smallX(double alpha, double y) {
    return 1.0 - 1.0 / (2.0 * kPi * alpha * y) - 1.0 / (4.0 * y * y) -
           theta_xy_smallX_tail(alpha, y);
}

double theta_xyy_bracket_largeX(double alpha, double y, const Truncation& t) {
    return 1.0 - 1.0 / (kPi * alpha * y) - epsilon1(alpha, y, t).value;
}

double theta_xyy_bracket_smallX(double alpha, double y, const Truncation& t) {
    const double e2pi = std::exp(-2.0 * kPi);
    const double coef = 3.5 - (1.5 + 16.0 * kPi * e2pi) / (1.0 - 8.0 * kPi * e2pi);
    return 1.0 + coef / (kPi * kPi * alpha * alpha * y * y) - 1.0 / (kPi * alpha * y) -
           1.0 / (2.0 * y * y) - 1.0 / (4.0 * kPi * y * y * y * y) -
           epsilon2(alpha, y, t).value;
}

namespace {

ValueWithError scaled_neg_theta1_dY(double coef, double X, double x, const Truncation& t) {
    const ValueWithError vY = theta1d::theta_dY(X, x, t);
    return {coef * (-vY.value), std::abs(coef) * vY.err};
}

}  // namespace

BoundPair lower_bound_theta_xy(double alpha, UpperHalfPoint z, const Truncation& t) {
    if (!(alpha >= 1.0 - kDomTol)) throw invalid_domain("lower_bound_theta_xy: alpha >= 1");
    if (!(z.x > 0.0 && z.x < 0.5 && z.y >= 0.6 - kDomTol))
        throw invalid_domain("lower_bound_theta_xy: needs 0 < x < 1/2, y >= 3/5");
    BoundPair out;
    const double coef = (kPi / 10.0) * std::sqrt(alpha * z.y) * std::exp(-kPi * alpha * z.y);
    out.bound = scaled_neg_theta1_dY(coef, z.y / alpha, z.x, t);
    out.actual = lattice::theta_xy(alpha, z, t);
    out.holds = out.actual.value >= out.bound.value - (out.bound.err + out.actual.err);
    return out;
}

BoundPair lower_bound_neg_theta_xyy(double alpha, UpperHalfPoint z, const Truncation& t) {
    if (!(alpha >= 1.0 - kDomTol)) throw invalid_domain("lower_bound_neg_theta_xyy: alpha >= 1");
    if (!modular::contains(z, false))
        throw invalid_domain("lower_bound_neg_theta_xyy: z must lie in the open domain");
    BoundPair out;
    const double coef = (kPi * kPi / 50.0) * alpha * std::sqrt(alpha) * std::sqrt(z.y) *
                        std::exp(-kPi * alpha * z.y);
    out.bound = scaled_neg_theta1_dY(coef, z.y / alpha, z.x, t);
    const ValueWithError v = lattice::theta_xyy(alpha, z, t);
    out.actual = {-v.value, v.err};
    out.holds = out.actual.value >= out.bound.value - (out.bound.err + out.actual.err);
    return out;
}

bool derivative_is_theta(Derivative d) {
    switch (d) {
        case Derivative::theta_x:
        case Derivative::theta_y:
        case Derivative::theta_xy:
        case Derivative::theta_xyy: return true;
        default: return false;
    }
}

std::string derivative_name(Derivative d) {
    switch (d) {
        case Derivative::theta_x: return "theta_x";
        case Derivative::theta_y: return "theta_y";
        case Derivative::theta_xy: return "theta_xy";
        case Derivative::theta_xyy: return "theta_xyy";
        case Derivative::zeta_x: return "zeta_x";
        case Derivative::zeta_y: return "zeta_y";
        case Derivative::zeta_xy: return "zeta_xy";
        case Derivative::zeta_xyy: return "zeta_xyy";
    }
    return "?";
}

std::string Region::describe(double y_cap) const {
    std::ostringstream os;
    switch (kind) {
        case Kind::strip: os << "strip 0<x<1/2, " << y0 << "<=y<=" << y_cap; break;
        case Kind::fundamental_open: os << "open fundamental domain, y<=" << y_cap; break;
        case Kind::fundamental_closed: os << "closed fundamental domain, y<=" << y_cap; break;
    }
    return os.str();
}

ValueWithError eval_derivative(Derivative d, double param, UpperHalfPoint z,
                               const Truncation& t) {
    switch (d) {
        case Derivative::theta_x: return lattice::theta_x(param, z, t);
        case Derivative::theta_y: return lattice::theta_y(param, z, t);
        case Derivative::theta_xy: return lattice::theta_xy(param, z, t);
        case Derivative::theta_xyy: return lattice::theta_xyy(param, z, t);
        case Derivative::zeta_x: return lattice::zeta_deriv_mellin(lattice::ZetaDeriv::x, param, z, t);
        case Derivative::zeta_y: return lattice::zeta_deriv_mellin(lattice::ZetaDeriv::y, param, z, t);
        case Derivative::zeta_xy:
            return lattice::zeta_deriv_mellin(lattice::ZetaDeriv::xy, param, z, t);
        case Derivative::zeta_xyy:
            return lattice::zeta_deriv_mellin(lattice::ZetaDeriv::xyy, param, z, t);
    }
    throw invalid_domain("unknown derivative");
}

SignCertificate certify_sign(const Region& region, Derivative d, double param, int claimed_sign,
                             bool strict, const GridSpec& grid, const Truncation& t,
                             bool keep_samples) {
    if (derivative_is_theta(d)) {
        if (!(param > 0.0)) throw invalid_domain("certify: alpha must be > 0");
    } else if (!(param > 1.0)) {
        throw invalid_domain("certify: s must be > 1");
    }
    if (grid.nx < 2 || grid.ny < 2) throw invalid_domain("certify: grid must be at least 2x2");
    t.validate();

    // Sample coordinates; fundamental regions sit above the unit circle.
    std::vector<UpperHalfPoint> pts;
    pts.reserve(static_cast<std::size_t>(grid.nx) * grid.ny);
    const bool closed = region.kind == Region::Kind::fundamental_closed;
    for (int i = 0; i < grid.nx; ++i) {
        double x;
        if (closed)
            x = 0.5 * i / (grid.nx - 1);
        else
            x = grid.inset + i * (0.5 - 2.0 * grid.inset) / (grid.nx - 1);
        double ylo = region.y0;
        if (region.kind != Region::Kind::strip) {
            ylo = std::sqrt(1.0 - x * x);
            if (!closed) ylo += grid.inset;
        }
        for (int j = 0; j < grid.ny; ++j) {
            const double y = ylo + j * (grid.y_cap - ylo) / (grid.ny - 1);
            pts.push_back({x, y});
        }
    }

    const bool ride_bound =
        param >= 1.0 && ((d == Derivative::theta_xy && region.kind == Region::Kind::strip &&
                          region.y0 >= 0.6 - kDomTol) ||
                         (d == Derivative::theta_xyy &&
                          region.kind == Region::Kind::fundamental_open));

    struct Cell {
        double value = 0.0, err = 0.0, slack = kInf;
        bool skipped = false;
    };
    std::vector<Cell> cells(pts.size());
    parallel_for(pts.size(), grid.threads, [&](std::size_t i) {
        Cell& c = cells[i];
        try {
            const ValueWithError v = eval_derivative(d, param, pts[i], t);
            c.value = v.value;
            c.err = v.err;
            if (ride_bound) {
                const BoundPair bp = d == Derivative::theta_xy
                                         ? lower_bound_theta_xy(param, pts[i], t)
                                         : lower_bound_neg_theta_xyy(param, pts[i], t);
                c.slack = bp.actual.value - bp.bound.value + bp.actual.err + bp.bound.err;
            }
        } catch (const degenerate_denominator&) {
            c.skipped = true;
        }
    });

    SignCertificate cert;
    cert.region = region.describe(grid.y_cap);
    cert.derivative = derivative_name(d);
    cert.param = param;
    cert.claimed_sign = claimed_sign;
    cert.strict = strict;
    cert.samples = static_cast<long>(pts.size());
    {
        std::ostringstream os;
        os << grid.nx << "x" << grid.ny << " grid, inset " << grid.inset << ", y_cap "
           << grid.y_cap;
        cert.grid = os.str();
    }
    cert.worst_margin = kInf;
    cert.worst_margin_net = kInf;
    cert.pass = true;
    cert.bound_checked = ride_bound;
    cert.bound_worst_slack = kInf;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Cell& c = cells[i];
        if (c.skipped) {
            ++cert.skipped;
            continue;
        }
        const double margin = claimed_sign * c.value;
        cert.worst_margin = std::min(cert.worst_margin, margin);
        cert.worst_margin_net = std::min(cert.worst_margin_net, margin - c.err);
        const bool ok = strict ? margin > c.err : margin >= -c.err;
        if (!ok && !cert.violation) {
            cert.violation = SamplePoint{pts[i].x, pts[i].y, c.value, c.err};
            cert.pass = false;
        } else if (!ok) {
            cert.pass = false;
        }
        if (ride_bound) cert.bound_worst_slack = std::min(cert.bound_worst_slack, c.slack);
        if (keep_samples) cert.dump.push_back({pts[i].x, pts[i].y, c.value, c.err});
    }
    cert.bound_holds = !ride_bound || cert.bound_worst_slack >= 0.0;
    if (ride_bound && !cert.bound_holds) cert.pass = false;
    return cert;
}

ArcReport arc_restriction_check(Derivative d, double param, double resolution, double y_cap,
                                const Truncation& t, int threads, bool keep_samples) {
    if (!(resolution > 0.0) || !(y_cap > 1.0))
        throw invalid_domain("arc check: resolution > 0 and y_cap > 1 required");
    const double h = resolution;

    std::vector<UpperHalfPoint> dom;
    std::vector<std::size_t> row0;  // indices of on-arc domain samples
    const int nx = static_cast<int>(std::round(0.5 / h));
    for (int i = 0; i <= nx; ++i) {
        const double x = std::min(0.5, i * h);
        const double ylo = std::sqrt(1.0 - x * x);
        row0.push_back(dom.size());
        for (double y = ylo; y <= y_cap + 1e-12; y += h) dom.push_back({x, y});
    }
    std::vector<UpperHalfPoint> arc;
    const int na = std::max(8, static_cast<int>(std::ceil((kPi / 6.0) / h)));
    for (int j = 0; j <= na; ++j) {
        const double th = kPi / 3.0 + j * (kPi / 6.0) / na;
        arc.push_back({std::cos(th), std::sin(th)});
    }

    std::vector<ValueWithError> dv(dom.size()), av(arc.size());
    parallel_for(dom.size(), threads, [&](std::size_t i) { dv[i] = eval_derivative(d, param, dom[i], t); });
    parallel_for(arc.size(), threads, [&](std::size_t i) { av[i] = eval_derivative(d, param, arc[i], t); });

    ArcReport rep;
    rep.derivative = derivative_name(d);
    rep.param = param;
    rep.resolution = h;

    std::size_t idom = 0;
    double err_max = 0.0;
    for (std::size_t i = 0; i < dom.size(); ++i) {
        if (dv[i].value < dv[idom].value) idom = i;
        err_max = std::max(err_max, dv[i].err);
    }
    rep.min_domain = dv[idom].value;
    rep.min_domain_x = dom[idom].x;
    rep.min_domain_y = dom[idom].y;

    // Arc minimum over the theta-uniform samples plus the on-arc domain rows.
    std::size_t iarc = 0;
    for (std::size_t j = 0; j < arc.size(); ++j)
        if (av[j].value < av[iarc].value) iarc = j;
    rep.min_arc = av[iarc].value;
    rep.min_arc_x = arc[iarc].x;
    rep.min_arc_y = arc[iarc].y;
    for (std::size_t r : row0) {
        if (dv[r].value < rep.min_arc) {
            rep.min_arc = dv[r].value;
            rep.min_arc_x = dom[r].x;
            rep.min_arc_y = dom[r].y;
        }
    }

    // Grid tolerance: one cell of observed variation along the arc.
    double lip = 0.0;
    for (std::size_t j = 0; j + 1 < arc.size(); ++j)
        lip = std::max(lip, std::abs(av[j + 1].value - av[j].value));
    rep.tolerance = 2.0 * lip + 10.0 * err_max + 1e-12;
    rep.min_matches = std::abs(rep.min_domain - rep.min_arc) <= rep.tolerance;

    const double tie = std::max(2.0 * dv[idom].err, 1e-11 * (1.0 + std::abs(rep.min_domain)));
    for (std::size_t i = 0; i < dom.size(); ++i) {
        if (dv[i].value <= rep.min_domain + tie) {
            const double r = std::hypot(dom[i].x, dom[i].y);
            if (std::abs(r - 1.0) <= std::sqrt(2.0) * h) {
                rep.argmin_on_arc = true;
                break;
            }
        }
    }
    rep.pass = rep.min_matches && rep.argmin_on_arc;

    if (keep_samples) {
        rep.dump.reserve(dom.size() + arc.size());
        for (std::size_t i = 0; i < dom.size(); ++i)
            rep.dump.push_back({dom[i].x, dom[i].y, dv[i].value, dv[i].err});
        for (std::size_t j = 0; j < arc.size(); ++j)
            rep.dump.push_back({arc[j].x, arc[j].y, av[j].value, av[j].err});
    }
    return rep;
}

}  // namespace ltz::certify
