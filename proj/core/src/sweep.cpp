// fama-lab: performance analysis toolkit for fluid antenna multiple access
// Copyright (C) 2026 The fama-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "fama/sweep.hpp"

#include "fama/channel.hpp"
#include "fama/design.hpp"
#include "fama/errors.hpp"
#include "fama/specfun.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace fama {

const char *const kCsvHeader = "gamma_db,N,W,NI,sigma,sigma_i,method,value,ci_halfwidth,capacity_lb,mult_gain,note";

const char *axis_name(SweepAxis axis) noexcept {
    switch (axis) {
    case SweepAxis::kGammaDb: return "gamma_db";
    case SweepAxis::kPorts: return "n_ports";
    case SweepAxis::kInterferers: return "n_interferers";
    case SweepAxis::kWidth: return "width";
    case SweepAxis::kMultGain: return "mult_gain";
    }
    return "?";
}

const char *kind_name(SweepKind kind) noexcept {
    switch (kind) {
    case SweepKind::kOutage: return "outage";
    case SweepKind::kCapacity: return "capacity";
    case SweepKind::kGainVsWidth: return "gain-vs-width";
    case SweepKind::kPortsVsGain: return "ports-vs-gain";
    case SweepKind::kWidthVsPorts: return "width-vs-ports";
    }
    return "?";
}

const char *sweep_method_name(SweepMethod method) noexcept {
    switch (method) {
    case SweepMethod::kExact: return "exact";
    case SweepMethod::kBoundI: return "bound-I";
    case SweepMethod::kBoundII: return "bound-II";
    case SweepMethod::kMonteCarlo: return "mc";
    case SweepMethod::kFormula: return "formula";
    }
    return "?";
}

SweepAxis parse_axis(const std::string &text) {
    for (SweepAxis a :
         {SweepAxis::kGammaDb, SweepAxis::kPorts, SweepAxis::kInterferers, SweepAxis::kWidth, SweepAxis::kMultGain})
        if (text == axis_name(a)) return a;
    if (text == "N") return SweepAxis::kPorts;
    if (text == "NI") return SweepAxis::kInterferers;
    if (text == "W") return SweepAxis::kWidth;
    if (text == "m") return SweepAxis::kMultGain;
    throw std::invalid_argument("unknown axis '" + text +
                                "' (expected gamma_db, n_ports, n_interferers, width or mult_gain)");
}

SweepKind parse_kind(const std::string &text) {
    for (SweepKind k : {SweepKind::kOutage, SweepKind::kCapacity, SweepKind::kGainVsWidth, SweepKind::kPortsVsGain,
                        SweepKind::kWidthVsPorts})
        if (text == kind_name(k)) return k;
    throw std::invalid_argument("unknown sweep kind '" + text + "'");
}

SweepMethod parse_sweep_method(const std::string &text) {
    for (SweepMethod m : {SweepMethod::kExact, SweepMethod::kBoundI, SweepMethod::kBoundII, SweepMethod::kMonteCarlo,
                          SweepMethod::kFormula})
        if (text == sweep_method_name(m)) return m;
    throw std::invalid_argument("unknown method '" + text + "' (expected exact, bound-I, bound-II, mc or formula)");
}

namespace {

std::vector<std::string> split(const std::string &text, char sep) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, sep)) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        parts.push_back(b == std::string::npos ? std::string() : item.substr(b, e - b + 1));
    }
    return parts;
}

double parse_real(const std::string &text) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception &) {
        throw std::invalid_argument("not a number: '" + text + "'");
    }
    if (used != text.size()) throw std::invalid_argument("not a number: '" + text + "'");
    return v;
}

} // namespace

std::vector<SweepMethod> parse_methods(const std::string &comma_list) {
    std::vector<SweepMethod> methods;
    for (const auto &token : split(comma_list, ',')) {
        if (token.empty()) continue;
        const SweepMethod m = parse_sweep_method(token);
        if (std::find(methods.begin(), methods.end(), m) == methods.end()) methods.push_back(m);
    }
    if (methods.empty()) throw std::invalid_argument("no methods given");
    return methods;
}

std::vector<double> parse_values(const std::string &text) {
    std::vector<double> values;
    if (text.find(':') != std::string::npos) {
        const auto parts = split(text, ':');
        if (parts.size() != 3) throw std::invalid_argument("range must be start:stop:step, got '" + text + "'");
        const double start = parse_real(parts[0]);
        const double stop = parse_real(parts[1]);
        const double step = parse_real(parts[2]);
        if (!(step > 0.0)) throw std::invalid_argument("range step must be positive");
        if (stop < start) throw std::invalid_argument("range stop is below start");
        const auto count = static_cast<long>(std::floor((stop - start) / step + 1e-9)) + 1;
        if (count > 1000000) throw std::invalid_argument("range has too many points");
        for (long i = 0; i < count; ++i) values.push_back(start + static_cast<double>(i) * step);
        return values;
    }
    for (const auto &token : split(text, ','))
        if (!token.empty()) values.push_back(parse_real(token));
    return values;
}

namespace {

bool integral_axis(SweepAxis a) noexcept { return a == SweepAxis::kPorts || a == SweepAxis::kInterferers; }

struct Point {
    double gamma_db;
    int n_ports;
    double width;
    int n_interferers;
    double mult_gain;
    double sigma;
    double sigma_i;

    double gamma() const { return db_to_linear(gamma_db); }
    double q() const { return sigma_i * sigma_i * gamma() / (sigma * sigma); }

    FamaScenario scenario() const {
        FamaScenario s;
        s.geometry = make_geometry(n_ports, width);
        s.sigma = sigma;
        s.sigma_i = sigma_i;
        s.n_interferers = n_interferers;
        s.gamma = gamma();
        return s;
    }

    DesignTarget target() const {
        DesignTarget t;
        t.mult_gain = mult_gain;
        t.gamma = gamma();
        t.n_interferers = n_interferers;
        t.q_override = q();
        return t;
    }
};

Point make_point(const SweepSpec &spec, double axis_value) {
    Point p{spec.gamma_db, spec.n_ports, spec.width, spec.n_interferers, spec.mult_gain, spec.sigma, 0.0};
    switch (spec.axis) {
    case SweepAxis::kGammaDb: p.gamma_db = axis_value; break;
    case SweepAxis::kPorts: p.n_ports = static_cast<int>(std::lround(axis_value)); break;
    case SweepAxis::kInterferers: p.n_interferers = static_cast<int>(std::lround(axis_value)); break;
    case SweepAxis::kWidth: p.width = axis_value; break;
    case SweepAxis::kMultGain: p.mult_gain = axis_value; break;
    }
    p.sigma_i = spec.sigma_i.value_or(spec.sigma * std::sqrt(static_cast<double>(p.n_interferers)));
    return p;
}

std::vector<Point> make_points(const SweepSpec &spec) {
    std::vector<Point> points;
    points.reserve(spec.axis_values.size());
    for (double v : spec.axis_values) points.push_back(make_point(spec, v));
    return points;
}

std::vector<SweepMethod> supported_methods(SweepKind kind) {
    switch (kind) {
    case SweepKind::kOutage:
        return {SweepMethod::kExact, SweepMethod::kBoundI, SweepMethod::kBoundII, SweepMethod::kMonteCarlo};
    case SweepKind::kCapacity:
    case SweepKind::kGainVsWidth:
        return {SweepMethod::kExact, SweepMethod::kBoundI, SweepMethod::kBoundII, SweepMethod::kMonteCarlo,
                SweepMethod::kFormula};
    case SweepKind::kPortsVsGain:
        return {SweepMethod::kBoundI, SweepMethod::kBoundII, SweepMethod::kMonteCarlo, SweepMethod::kFormula};
    case SweepKind::kWidthVsPorts: return {SweepMethod::kFormula};
    }
    return {};
}

SweepRow base_row(const Point &p) {
    SweepRow row;
    row.gamma_db = p.gamma_db;
    row.n_ports = p.n_ports;
    row.width = p.width;
    row.n_interferers = p.n_interferers;
    row.sigma = p.sigma;
    row.sigma_i = p.sigma_i;
    return row;
}

void mark_infeasible(SweepRow &row, std::string reason) {
    row.value.reset();
    row.infeasible = true;
    row.note = std::move(reason);
}

struct OutageValue {
    double epsilon;
    std::optional<double> ci;
    std::string note;
};

OutageValue evaluate_outage(const Point &p, SweepMethod method, const SweepSpec &spec, unsigned mc_threads) {
    const FamaScenario s = p.scenario();
    switch (method) {
    case SweepMethod::kExact: {
        const OutageEstimate e = outage_exact(s, spec.quadrature);
        return {e.probability, std::nullopt, ""};
    }
    case SweepMethod::kBoundI: {
        const OutageEstimate e = outage_ub_integral(s, spec.quadrature);
        return {e.probability, std::nullopt, ""};
    }
    case SweepMethod::kBoundII: {
        const double mu = s.geometry.max_abs_mu();
        if (!(mu < 1.0)) throw SingularCorrelationError("bound-II needs max |mu_k| < 1");
        try {
            const ClosedFormBound b = outage_ub_closed(p.n_ports, mu, p.q());
            std::string note = "mu=max|mu_k|";
            if (b.clamped) note += "; clamped";
            if (b.degenerate_mu) note += "; independent ports";
            return {b.value, std::nullopt, note};
        } catch (const PrecisionError &) {
            const double v =
                outage_ub_closed_integral(p.n_ports, mu, p.q(), ClosedFormVariant::kLargeQ, spec.quadrature);
            return {std::clamp(v, 0.0, 1.0), std::nullopt, "mu=max|mu_k|; integral fallback"};
        }
    }
    case SweepMethod::kMonteCarlo: {
        McOptions options;
        options.threads = mc_threads;
        options.interference = spec.interference;
        const OutageEstimate e = estimate_outage(s, spec.trials, spec.seed, options);
        std::string note = "trials=" + std::to_string(e.trials);
        if (e.infinite_sir_events > 0) note += "; infinite SIR events=" + std::to_string(e.infinite_sir_events);
        return {e.probability, e.ci_halfwidth, note};
    }
    case SweepMethod::kFormula: break;
    }
    throw std::logic_error("evaluate_outage: not an outage method");
}

void fill_design_row(SweepRow &row, const Point &p, const DesignResult<int> &r) {
    row.n_ports.reset();
    row.capacity_lb = p.mult_gain * std::log2(1.0 + p.gamma());
    row.mult_gain = p.mult_gain;
    if (r.value) {
        row.value = *r.value;
        row.note = r.note;
    } else {
        mark_infeasible(row, r.note);
    }
}

std::vector<SweepRow> evaluate_point(const Point &p, const SweepSpec &spec, unsigned mc_threads) {
    std::vector<SweepRow> rows;
    const double log_rate = std::log2(1.0 + p.gamma());
    const double users = p.n_interferers + 1.0;
    std::vector<SweepMethod> methods = spec.methods;
    if (spec.refine_mc && spec.kind == SweepKind::kPortsVsGain &&
        std::find(methods.begin(), methods.end(), SweepMethod::kMonteCarlo) == methods.end())
        methods.push_back(SweepMethod::kMonteCarlo);

    for (SweepMethod method : methods) {
        SweepRow row = base_row(p);
        row.method = sweep_method_name(method);
        switch (spec.kind) {
        case SweepKind::kOutage:
        case SweepKind::kCapacity:
        case SweepKind::kGainVsWidth: {
            if (method == SweepMethod::kFormula) {
                const double m = mg_approx_general(p.n_ports, p.width, p.q(), p.n_interferers);
                row.mult_gain = m;
                row.capacity_lb = m * log_rate;
                row.value = spec.kind == SweepKind::kCapacity ? m * log_rate : m;
                row.note = "approximation";
                break;
            }
            const OutageValue o = evaluate_outage(p, method, spec, mc_threads);
            row.capacity_lb = capacity_lower_bound(p.n_interferers, p.gamma(), o.epsilon);
            row.mult_gain = multiplexing_gain(p.n_interferers + 1, o.epsilon);
            row.note = o.note;
            double scale = 1.0;
            if (spec.kind == SweepKind::kOutage) {
                row.value = o.epsilon;
            } else if (spec.kind == SweepKind::kCapacity) {
                row.value = *row.capacity_lb;
                scale = users * log_rate;
            } else {
                row.value = *row.mult_gain;
                scale = users;
            }
            if (o.ci) row.ci_halfwidth = *o.ci * scale;
            break;
        }
        case SweepKind::kPortsVsGain: {
            const DesignTarget t = p.target();
            if (method == SweepMethod::kFormula) {
                fill_design_row(row, p, min_ports_general(t, p.width));
            } else if (method == SweepMethod::kBoundI) {
                fill_design_row(row, p, min_ports_integral(t, p.width, spec.quadrature));
            } else if (method == SweepMethod::kBoundII) {
                const double mu = std::abs(specfun::bessel_j0(std::numbers::pi * p.width));
                if (mu > 0.0 && mu < 1.0) {
                    DesignResult<int> r = min_ports_equal_corr(t, mu, spec.quadrature);
                    r.note += "; mu=|J0(pi W)|";
                    fill_design_row(row, p, r);
                } else {
                    fill_design_row(row, p, DesignResult<int>{std::nullopt, "infeasible: |J0(pi W)| outside (0, 1)"});
                }
            } else {
                // Search up to the closed-form requirement, which is typically
                // conservative; fall back to a generous cap if it is infeasible.
                const DesignResult<int> formula = min_ports_general(t, p.width);
                const int upper = formula.value ? std::max(2, *formula.value) : 4096;
                fill_design_row(row, p, min_ports_monte_carlo(t, p.width, upper, spec.trials, spec.seed, mc_threads));
            }
            break;
        }
        case SweepKind::kWidthVsPorts: {
            const DesignResult<double> r = min_width(p.target(), p.n_ports);
            row.width.reset();
            row.capacity_lb = p.mult_gain * log_rate;
            row.mult_gain = p.mult_gain;
            if (r.value) {
                row.value = *r.value;
                row.note = r.note;
            } else {
                mark_infeasible(row, r.note);
            }
            break;
        }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

template <class Fn>
std::vector<std::vector<SweepRow>> run_points(const std::vector<Point> &points, unsigned threads, Fn &&fn) {
    std::vector<std::vector<SweepRow>> out(points.size());
    std::vector<std::exception_ptr> errors(points.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < points.size(); i = next.fetch_add(1)) {
            try {
                out[i] = fn(points[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(points.size())));
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
        worker();
    }
    for (auto &e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

} // namespace

void SweepSpec::validate() const {
    if (axis_values.empty()) throw std::invalid_argument("sweep: axis values are empty");
    for (std::size_t i = 1; i < axis_values.size(); ++i)
        if (!(axis_values[i] > axis_values[i - 1]))
            throw std::invalid_argument("sweep: axis values must be strictly increasing");
    if (integral_axis(axis))
        for (double v : axis_values)
            if (std::abs(v - std::round(v)) > 1e-9)
                throw std::invalid_argument(std::string("sweep: ") + axis_name(axis) + " values must be integers");
    if (methods.empty()) throw std::invalid_argument("sweep: no methods");
    const auto allowed = supported_methods(kind);
    for (SweepMethod m : methods)
        if (std::find(allowed.begin(), allowed.end(), m) == allowed.end())
            throw std::invalid_argument(std::string("sweep: method ") + sweep_method_name(m) +
                                        " is not available for " + kind_name(kind));
    const bool wants_mc = std::find(methods.begin(), methods.end(), SweepMethod::kMonteCarlo) != methods.end() ||
                          (refine_mc && kind == SweepKind::kPortsVsGain);
    if (wants_mc && trials < 1000) throw std::invalid_argument("sweep: mc needs at least 1000 trials");
    if (!(sigma > 0.0)) throw std::invalid_argument("sweep: sigma must be positive");
    if (sigma_i && !(*sigma_i > 0.0)) throw std::invalid_argument("sweep: sigma_i must be positive");
    quadrature.validate();

    for (const Point &p : make_points(*this)) {
        if (p.n_ports < 1) throw std::invalid_argument("sweep: N must be at least 1");
        if (p.n_interferers < 1) throw std::invalid_argument("sweep: N_I must be at least 1");
        if (!std::isfinite(p.gamma_db)) throw std::invalid_argument("sweep: gamma_db must be finite");
        if (kind != SweepKind::kWidthVsPorts && !(p.width > 0.0))
            throw std::invalid_argument("sweep: width must be positive");
        if (kind == SweepKind::kPortsVsGain || kind == SweepKind::kWidthVsPorts) {
            if (!(p.mult_gain > 0.0) || p.mult_gain > p.n_interferers + 1.0)
                throw std::invalid_argument("sweep: multiplexing gain must lie in (0, N_I + 1]");
        }
        if (kind == SweepKind::kWidthVsPorts && p.n_ports / 2 < 2)
            throw std::invalid_argument("sweep: width-vs-ports needs N >= 4");
        if (std::find(methods.begin(), methods.end(), SweepMethod::kExact) != methods.end() &&
            p.n_ports > quadrature.exact_cap)
            throw std::invalid_argument("sweep: exact method limited to N <= " + std::to_string(quadrature.exact_cap) +
                                        " (got N = " + std::to_string(p.n_ports) + ")");
        if (kind == SweepKind::kGainVsWidth || kind == SweepKind::kCapacity)
            for (SweepMethod m : methods)
                if (m == SweepMethod::kFormula && p.n_ports < 3)
                    throw std::invalid_argument("sweep: formula gain needs N >= 3");
    }
}

bool SweepResult::infeasible_only() const noexcept {
    return !rows.empty() && std::all_of(rows.begin(), rows.end(), [](const SweepRow &r) { return r.infeasible; });
}

SweepResult run_sweep(const SweepSpec &spec) {
    spec.validate();
    const std::vector<Point> points = make_points(spec);
    const unsigned threads = std::max(1u, spec.threads);
    // Spare workers go to the Monte Carlo shards when there are fewer points
    // than threads; shard results merge exactly, so rows do not depend on it.
    const unsigned mc_threads = points.size() >= threads ? 1u : threads / static_cast<unsigned>(points.size());
    auto per_point = run_points(points, threads, [&](const Point &p) { return evaluate_point(p, spec, mc_threads); });
    SweepResult result;
    for (auto &rows : per_point)
        for (auto &row : rows) result.rows.push_back(std::move(row));
    return result;
}

SweepResult run_design(const SweepSpec &spec) {
    spec.quadrature.validate();
    const Point p = make_point(spec, spec.axis == SweepAxis::kPorts         ? spec.n_ports
                                     : spec.axis == SweepAxis::kWidth       ? spec.width
                                     : spec.axis == SweepAxis::kInterferers ? spec.n_interferers
                                     : spec.axis == SweepAxis::kMultGain    ? spec.mult_gain
                                                                            : spec.gamma_db);
    const DesignTarget t = p.target();
    t.validate();
    const double log_rate = std::log2(1.0 + p.gamma());

    SweepResult result;
    auto add = [&](const char *method, std::optional<double> value, const std::string &note, bool keep_n, bool keep_w) {
        SweepRow row = base_row(p);
        if (!keep_n) row.n_ports.reset();
        if (!keep_w) row.width.reset();
        row.method = method;
        row.capacity_lb = p.mult_gain * log_rate;
        row.mult_gain = p.mult_gain;
        if (value) {
            row.value = value;
            row.note = note;
        } else {
            mark_infeasible(row, note);
        }
        result.rows.push_back(std::move(row));
    };
    auto as_real = [](const DesignResult<int> &r) -> std::optional<double> {
        if (r.value) return static_cast<double>(*r.value);
        return std::nullopt;
    };

    const DesignResult<int> general = min_ports_general(t, p.width);
    add("ports-general", as_real(general), general.note, false, true);

    const double mu_w = std::abs(specfun::bessel_j0(std::numbers::pi * p.width));
    if (mu_w > 0.0 && mu_w < 1.0) {
        const DesignResult<int> eq = min_ports_equal_corr(t, mu_w, spec.quadrature);
        add("ports-equal-corr", as_real(eq), eq.note + "; mu=|J0(pi W)|", false, true);
    } else {
        add("ports-equal-corr", std::nullopt, "infeasible: |J0(pi W)| outside (0, 1)", false, true);
    }

    const DesignResult<int> integral = min_ports_integral(t, p.width, spec.quadrature);
    add("ports-bound-I", as_real(integral), integral.note, false, true);

    if (spec.refine_mc) {
        if (spec.trials < 1000) throw std::invalid_argument("design: mc needs at least 1000 trials");
        const int upper = general.value ? std::max(2, *general.value) : 4096;
        const DesignResult<int> mc =
            min_ports_monte_carlo(t, p.width, upper, spec.trials, spec.seed, std::max(1u, spec.threads));
        add("ports-mc", as_real(mc), mc.note, false, true);
    }

    if (p.n_ports / 2 >= 2) {
        const DesignResult<double> w = min_width(t, p.n_ports);
        add("width", w.value, w.note, true, false);
    } else {
        add("width", std::nullopt, "infeasible: width rule needs N >= 4", true, false);
    }

    if (p.n_ports >= 2) {
        const CriticalMu mu = critical_mu(t, p.n_ports);
        add("mu-critical", mu.exact.value, mu.exact.note, true, false);
        add("mu-critical-approx", mu.approx.value, mu.approx.note, true, false);
    }
    return result;
}

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::string fmt(const std::optional<double> &v) { return v ? fmt(*v) : std::string(); }

std::string csv_text(std::string s) {
    std::replace(s.begin(), s.end(), ',', ';');
    std::replace(s.begin(), s.end(), '\n', ' ');
    return s;
}

} // namespace

void write_csv(std::ostream &os, const SweepResult &result) {
    os << kCsvHeader << '\n';
    for (const SweepRow &r : result.rows) {
        os << fmt(r.gamma_db) << ',' << (r.n_ports ? std::to_string(*r.n_ports) : std::string()) << ',' << fmt(r.width)
           << ',' << r.n_interferers << ',' << fmt(r.sigma) << ',' << fmt(r.sigma_i) << ',' << r.method << ','
           << fmt(r.value) << ',' << fmt(r.ci_halfwidth) << ',' << fmt(r.capacity_lb) << ',' << fmt(r.mult_gain) << ','
           << csv_text(r.note) << '\n';
    }
}

int exit_status(const SweepResult &result) noexcept { return result.infeasible_only() ? 2 : 0; }

} // namespace fama
