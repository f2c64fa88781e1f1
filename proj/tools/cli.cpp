/*
   Copyright 2026 The raysweep Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "cli.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <optional>

#include <CLI11.hpp>

#include "raysweep/errors.hpp"
#include "raysweep/io.hpp"
#include "raysweep/subharmonic.hpp"

namespace raysweep::cli {

namespace {

using io::json;

double angle_arg(double x, bool deg)
{
    return deg ? x * kPi / 180.0 : x;
}

RaySystem load_rays(const std::string& path, bool deg)
{
    json j = io::read_json_file(path);
    // --deg reinterprets a plain directions array given in degrees
    if (deg && j.is_object() && j.contains("directions_rad")) {
        j["directions_deg"] = j["directions_rad"];
        j.erase("directions_rad");
    }
    return io::ray_system_from_json(j);
}

bool ends_with(const std::string& s, const std::string& suffix)
{
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

ZeroSequence load_zeros(const std::string& path)
{
    if (ends_with(path, ".json")) {
        ZeroSequence z;
        for (const Atom& a : io::measure_from_json(io::read_json_file(path)).atoms()) {
            if (a.w != std::round(a.w) || a.w < 1) {
                throw InputError("zero multiplicities must be positive integers");
            }
            for (int k = 0; k < static_cast<int>(a.w); ++k) {
                z.points.push_back(a.z);
            }
        }
        return z;
    }
    return io::zeros_from_csv(path);
}

Side parse_side(const std::string& s)
{
    if (s == "alpha") {
        return Side::alpha;
    }
    if (s == "beta") {
        return Side::beta;
    }
    throw InputError("side must be alpha or beta");
}

DiskPart parse_part(const std::string& s)
{
    if (s == "inside") {
        return DiskPart::inside;
    }
    if (s == "outside") {
        return DiskPart::outside;
    }
    throw InputError("part must be inside or outside");
}

long long count_arg(double x, const char* name)
{
    if (!(x >= 1) || x != std::floor(x) || x > 9e18) {
        throw InputError(std::string(name) + " must be a positive integer");
    }
    return static_cast<long long>(x);
}

// Every estimate whose regime holds at z; refused regimes are skipped.
json half_plane_bounds(complex z, double t1, double t2, double a, double b)
{
    json est = json::object();
    double upper = 1.0;
    double lower = 0.0;
    auto try_upper = [&](const char* name, const std::function<double()>& f) {
        try {
            const double v = f();
            est[name] = v;
            upper = std::min(upper, v);
        } catch (const RegimeError&) {
        }
    };
    auto try_lower = [&](const char* name, const std::function<double()>& f) {
        try {
            const double v = f();
            est[name] = v;
            lower = std::max(lower, v);
        } catch (const RegimeError&) {
        }
    };
    try_upper("upper_far", [&] { return upper_bound_far(z, t1, t2, a); });
    try_upper("upper_near", [&] { return upper_bound_near(z, t1, t2, a); });
    try_lower("lower_far", [&] { return lower_bound_far(z, t1, t2, a); });
    try_lower("lower_outside_disk", [&] { return lower_bound_outside_disk(z, t1, t2, b); });
    try_upper("upper_opposite_quadrant", [&] { return upper_bound_opposite_quadrant(z, t1, t2); });
    try_upper("upper_cone", [&] { return upper_bound_cone(z, t1, t2); });
    try_upper("upper_cone_a", [&] { return upper_bound_cone_a(z, t1, t2, a); });
    try_lower("lower_cone", [&] { return lower_bound_cone(z, t1, t2); });
    try {
        const DiskBounds d = sharp_disk_bounds(z, 0.5 * (t1 + t2), 0.5 * (t2 - t1));
        est["disk_upper"] = d.upper;
        upper = std::min(upper, d.upper);
        if (d.lower) {
            est["disk_lower"] = *d.lower;
            lower = std::max(lower, *d.lower);
        }
    } catch (const RegimeError&) {
    }
    return {{"lower", lower}, {"upper", upper}, {"estimates", est}};
}

// Mass of the open real interval (t1, t2) for a measure swept onto the real axis.
double real_interval_mass(const SweptMeasure& sm, double t1, double t2, Variation v)
{
    double mass = 0.0;
    if (t1 >= 0.0) {
        mass = sm.interval_mass(0, t1, t2, v);
    } else if (t2 <= 0.0) {
        mass = sm.interval_mass(1, -t2, -t1, v);
    } else {
        mass = sm.interval_mass(0, 0.0, t2, v) + sm.interval_mass(1, 0.0, -t1, v);
        for (const Atom& a : sm.retained().atoms()) {
            if (a.z == complex(0.0, 0.0)) {
                mass += weight_of(a.w, v);
            }
        }
    }
    return mass;
}

bool is_real_axis(const RaySystem& s)
{
    const auto& d = s.directions();
    return d.size() == 2 && d[0] == 0.0 && std::fabs(d[1] - kPi) <= 1e-12;
}

void emit(std::ostream& out, json body, const std::string& command, const json& params,
          const std::vector<std::uint64_t>& seeds = {})
{
    body["manifest"] = io::manifest(command, params, seeds);
    out << body.dump(2) << "\n";
}

struct Options {
    // shared
    bool deg = false;
    std::string z;
    std::string interval;
    std::string sector;
    std::string side = "alpha";
    std::string measure;
    std::string rays;
    std::string variation = "signed";
    std::string radii;
    double p = 1.0;
    double r0 = 1.0;
    std::string at = "inf";
    // hm
    double a = 0.5;
    double b = 2.0;
    // sweep
    std::optional<std::size_t> ray;
    std::string density_grid;
    double density_step = 1e-6;
    // check
    std::string kind;
    // growth
    std::string profile;
    double window_decades = 2.0;
    // extend
    std::string boundary;
    double tail = 0.0;
    int panels = 10000;
    // crg
    std::string zeros;
    std::string nk;
    // oracle
    double walks = 1e6;
    std::uint64_t seed = 42;
    double eps = 1e-6;
    double max_steps = 1e5;
    int threads = 0;
    std::optional<double> disk;
    std::string part = "inside";
};

int cmd_hm(const Options& o, std::ostream& out)
{
    const complex z = io::parse_complex(o.z);
    const auto [t1, t2] = io::parse_pair(o.interval);
    json params = {{"z", io::to_json(z)}, {"interval", {t1, t2}}};
    json body;
    if (o.sector.empty()) {
        body["omega"] = omega_half_plane(z, t1, t2);
        body["regime"] = to_string(classify_half_plane(z, t1, t2));
        body["bounds"] = z.imag() > 0.0 && t1 < t2 ? half_plane_bounds(z, t1, t2, o.a, o.b) : json(nullptr);
        params["a"] = o.a;
        params["b"] = o.b;
    } else {
        const auto [al, be] = io::parse_pair(o.sector);
        const Sector s(angle_arg(al, o.deg), angle_arg(be, o.deg));
        const IntervalOnRay iv{s, parse_side(o.side), t1, t2};
        params["sector"] = {s.alpha(), s.beta()};
        params["side"] = o.side;
        body["omega"] = omega_sector_interval(z, iv);
        if (s.contains_open(z)) {
            const complex w = s.reduce_to_half_plane(z);
            double u1 = s.reduced_boundary_coordinate(iv.side, t1);
            double u2 = s.reduced_boundary_coordinate(iv.side, t2);
            if (u1 > u2) {
                std::swap(u1, u2);
            }
            body["regime"] = to_string(classify_half_plane(w, u1, u2));
            body["reduced"] = {{"z", io::to_json(w)}, {"interval", {u1, u2}}};
            body["bounds"] = std::isfinite(u1) && std::isfinite(u2) && u1 < u2
                                 ? half_plane_bounds(w, u1, u2, o.a, o.b)
                                 : json(nullptr);
        } else {
            body["regime"] = "boundary";
            body["bounds"] = nullptr;
        }
    }
    emit(out, body, "hm", params);
    return ok;
}

int cmd_sweep(const Options& o, std::ostream& out)
{
    const AtomicMeasure m = io::measure_from_json(io::read_json_file(o.measure));
    const RaySystem sys = load_rays(o.rays, o.deg);
    const Variation v = parse_variation(o.variation);
    const SweptMeasure sm = sweep(m, sys);
    json params = {{"measure", o.measure}, {"rays", io::to_json(sys)}, {"variation", to_string(v)}};

    if (!o.density_grid.empty()) {
        if (!(o.density_step > 0.0 && o.density_step < 1.0)) {
            throw InputError("--density-step must lie in (0, 1)");
        }
        const auto grid = io::grid_from_csv(o.density_grid, sys.size());
        params["grid"] = o.density_grid;
        out << "# manifest: " << io::manifest("sweep", params).dump() << "\n";
        out << "ray_index,radius,density_total,density_signed\n";
        out.precision(17);
        for (const auto& [ray, r] : grid) {
            const double lo = r * (1.0 - o.density_step);
            const double hi = r * (1.0 + o.density_step);
            out << ray << "," << r << "," << sm.interval_mass(ray, lo, hi, Variation::total) / (hi - lo) << ","
                << sm.interval_mass(ray, lo, hi, Variation::net) / (hi - lo) << "\n";
        }
        return ok;
    }

    json body = {{"retained_atoms", sm.retained().size()}, {"swept_atoms", sm.sources().size()}};
    json sectors = json::array();
    for (const Sector& s : sm.sectors()) {
        sectors.push_back({s.alpha(), s.beta()});
    }
    body["sectors"] = sectors;
    if (!o.interval.empty()) {
        const auto [t1, t2] = io::parse_pair(o.interval);
        params["interval"] = {t1, t2};
        if (o.ray) {
            if (*o.ray >= sys.size()) {
                throw InputError("ray index out of range");
            }
            params["ray"] = *o.ray;
            body["mass"] = sm.interval_mass(*o.ray, t1, t2, v);
        } else {
            if (!is_real_axis(sys)) {
                throw InputError("--interval without --ray needs the real axis as ray system");
            }
            if (!(t1 <= t2)) {
                throw InputError("interval needs t1 <= t2");
            }
            body["mass"] = real_interval_mass(sm, t1, t2, v);
        }
    } else {
        const double cutoff = 1e6 * std::max(1.0, m.max_modulus());
        params["cutoff"] = cutoff;
        body["mass"] = sm.disk_mass(cutoff, v);
    }
    emit(out, body, "sweep", params);
    return ok;
}

int cmd_check(const Options& o, std::ostream& out)
{
    const AtomicMeasure m = io::measure_from_json(io::read_json_file(o.measure));
    json params = {{"kind", o.kind}, {"measure", o.measure}, {"r0", o.r0}};
    std::vector<double> radii = o.radii.empty() ? std::vector<double>{} : io::parse_radii(o.radii);
    ConditionReport r;
    if (o.kind == "blaschke") {
        const RaySystem sys = load_rays(o.rays, o.deg);
        params["rays"] = io::to_json(sys);
        params["at"] = o.at;
        r = blaschke_report(m, sys, o.r0, parse_limit(o.at), radii);
    } else if (o.kind == "lindelof") {
        if (o.p != std::round(o.p)) {
            throw InputError("the Lindelof condition needs an integer p");
        }
        params["p"] = o.p;
        r = lindelof_report(m, static_cast<int>(o.p), o.r0, radii);
    } else if (o.kind == "admissible") {
        const RaySystem sys = load_rays(o.rays, o.deg);
        params["rays"] = io::to_json(sys);
        params["p"] = o.p;
        r = admissibility_report(m, sys, o.p, o.r0);
    } else {
        throw InputError("unknown kind '" + o.kind + "'");
    }
    emit(out, io::to_json(r), "check", params);
    return ok;
}

int cmd_growth(const Options& o, std::ostream& out)
{
    const RadialProfile f = io::profile_from_csv(o.profile);
    GrowthOptions opt;
    opt.window_decades = o.window_decades;
    const GrowthReport r = growth_report(f, o.p, parse_limit(o.at), opt);
    emit(out, io::to_json(r), "growth",
         {{"profile", o.profile}, {"p", o.p}, {"at", o.at}, {"window_decades", o.window_decades}});
    return ok;
}

int cmd_extend(const Options& o, std::ostream& out)
{
    const RaySystem sys = load_rays(o.rays, o.deg);
    const BoundaryData f = io::boundary_from_csv(o.boundary, sys.size(), o.tail);
    const complex z = io::parse_complex(o.z);
    PoissonOptions opt;
    opt.panels_per_ray = o.panels;
    const double value = poisson_extend(f, sys, z, opt);
    emit(out, {{"value", value}, {"z", io::to_json(z)}}, "extend",
         {{"rays", io::to_json(sys)}, {"boundary", o.boundary}, {"tail", o.tail}, {"panels", o.panels}});
    return ok;
}

int cmd_example1(const Options& o, std::ostream& out)
{
    const ZeroSequence z = load_zeros(o.zeros);
    const std::vector<double> radii = io::parse_radii(o.radii.empty() ? "geometric:1,1e4,1.2" : o.radii);
    emit(out, io::to_json(example1_limits(z, radii, o.r0)), "crg example1",
         {{"zeros", o.zeros}, {"radii", o.radii}, {"r0", o.r0}});
    return ok;
}

int cmd_example2(const Options& o, std::ostream& out)
{
    std::vector<std::string> files;
    std::stringstream ss(o.nk);
    std::string item;
    while (std::getline(ss, item, ',')) {
        files.push_back(item);
    }
    if (files.size() != 4) {
        throw InputError("--nk needs four comma-separated CSV files");
    }
    const std::array<RadialProfile, 4> nk = {io::profile_from_csv(files[0]), io::profile_from_csv(files[1]),
                                             io::profile_from_csv(files[2]), io::profile_from_csv(files[3])};
    const std::vector<double> radii = io::parse_radii(o.radii.empty() ? "geometric:1,1e4,1.2" : o.radii);
    emit(out, io::to_json(example2_limits(nk, radii, o.tail)), "crg example2",
         {{"nk", files}, {"radii", o.radii}, {"tail", o.tail}});
    return ok;
}

int cmd_oracle(const Options& o, std::ostream& out)
{
    const complex z = io::parse_complex(o.z);
    WalkConfig cfg;
    cfg.n_walks = count_arg(o.walks, "--walks");
    cfg.seed = o.seed;
    cfg.boundary_eps = o.eps;
    cfg.max_steps = count_arg(o.max_steps, "--max-steps");
    cfg.threads = o.threads;
    json params = {{"z", io::to_json(z)}, {"walks", cfg.n_walks}, {"eps", cfg.boundary_eps},
                   {"max_steps", cfg.max_steps}};
    OracleTarget target;
    if (o.sector.empty()) {
        const auto [t1, t2] = io::parse_pair(o.interval);
        params["interval"] = {t1, t2};
        target = HalfPlaneInterval{t1, t2};
    } else {
        const auto [al, be] = io::parse_pair(o.sector);
        const Sector s(angle_arg(al, o.deg), angle_arg(be, o.deg));
        params["sector"] = {s.alpha(), s.beta()};
        if (o.disk) {
            params["disk"] = *o.disk;
            params["part"] = o.part;
            target = SectorDiskTarget{s, *o.disk, parse_part(o.part)};
        } else {
            const auto [r1, r2] = io::parse_pair(o.interval);
            params["interval"] = {r1, r2};
            params["side"] = o.side;
            target = IntervalOnRay{s, parse_side(o.side), r1, r2};
        }
    }
    const OracleEstimate e = estimate_omega(z, target, cfg);
    emit(out, io::to_json(e), "oracle", params, {cfg.seed});
    return ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Balayage of measures onto ray systems", "raysweep"};
    app.require_subcommand(1);
    app.set_version_flag("--version", io::version());
    Options o;

    auto add_deg = [&](CLI::App* c) { c->add_flag("--deg", o.deg, "Angles are given in degrees"); };

    CLI::App* hm = app.add_subcommand("hm", "Harmonic measure of an interval (half-plane or sector side)");
    hm->add_option("--z", o.z, "Point a+bi")->required();
    hm->add_option("--interval", o.interval, "t1,t2 (radii on the side for sectors)")->required();
    hm->add_option("--sector", o.sector, "alpha,beta");
    hm->add_option("--side", o.side, "alpha|beta");
    hm->add_option("--a", o.a, "Parameter of the far/near/cone estimates");
    hm->add_option("--b", o.b, "Parameter of the outside-disk estimate");
    add_deg(hm);

    CLI::App* sw = app.add_subcommand("sweep", "Sweep an atomic measure onto a ray system");
    sw->add_option("--measure", o.measure, "Measure JSON")->required();
    sw->add_option("--rays", o.rays, "Ray system JSON")->required();
    sw->add_option("--interval", o.interval, "t1,t2 on the real axis, or radii with --ray");
    sw->add_option("--ray", o.ray, "Ray index for --interval");
    sw->add_option("--variation", o.variation, "signed|total|plus|minus");
    sw->add_option("--emit-density", o.density_grid, "Grid CSV (ray_index,radius); writes density CSV");
    sw->add_option("--density-step", o.density_step, "Relative half-width of the differencing interval");
    add_deg(sw);

    CLI::App* ck = app.add_subcommand("check", "Blaschke, Lindelof or admissibility report");
    ck->add_option("--kind", o.kind, "blaschke|lindelof|admissible")->required();
    ck->add_option("--measure", o.measure, "Measure JSON")->required();
    ck->add_option("--rays", o.rays, "Ray system JSON");
    ck->add_option("--p", o.p, "Order");
    ck->add_option("--r0", o.r0, "Inner cut radius");
    ck->add_option("--at", o.at, "inf|zero (blaschke)");
    ck->add_option("--radii", o.radii, "geometric:r0,r1,ratio or a list");
    add_deg(ck);

    CLI::App* gr = app.add_subcommand("growth", "Order, type and convergence class of a radial profile");
    gr->add_option("--profile", o.profile, "CSV r,value")->required();
    gr->add_option("--p", o.p, "Order p");
    gr->add_option("--at", o.at, "inf|zero");
    gr->add_option("--window-decades", o.window_decades, "Trend window");

    CLI::App* ex = app.add_subcommand("extend", "Poisson extension of boundary data into the sectors");
    ex->add_option("--rays", o.rays, "Ray system JSON")->required();
    ex->add_option("--boundary", o.boundary, "CSV ray_index,radius,value")->required();
    ex->add_option("--tail", o.tail, "Power-law tail exponent");
    ex->add_option("--at", o.z, "Point a+bi")->required();
    ex->add_option("--panels", o.panels, "Panels per ray");
    add_deg(ex);

    CLI::App* crg = app.add_subcommand("crg", "Completely regular growth diagnostics");
    crg->require_subcommand(1);
    CLI::App* e1 = crg->add_subcommand("example1", "Zeros on the real axis");
    e1->add_option("--zeros", o.zeros, "CSV re,im or JSON")->required();
    e1->add_option("--radii", o.radii, "geometric:r0,r1,ratio or a list");
    e1->add_option("--r0", o.r0, "Inner cut radius");
    CLI::App* e2 = crg->add_subcommand("example2", "Zeros on the four half-axes");
    e2->add_option("--nk", o.nk, "Four counting-function CSVs, comma-separated")->required();
    e2->add_option("--radii", o.radii, "geometric:r0,r1,ratio or a list");
    e2->add_option("--tail", o.tail, "Tail exponent of the counting functions");

    CLI::App* orc = app.add_subcommand("oracle", "Monte Carlo harmonic measure");
    orc->add_option("--z", o.z, "Point a+bi")->required();
    orc->add_option("--interval", o.interval, "t1,t2 (radii on the side for sectors)");
    orc->add_option("--sector", o.sector, "alpha,beta");
    orc->add_option("--side", o.side, "alpha|beta");
    orc->add_option("--disk", o.disk, "Disk radius target instead of an interval");
    orc->add_option("--part", o.part, "inside|outside");
    orc->add_option("--walks", o.walks, "Number of walks");
    orc->add_option("--seed", o.seed, "Seed");
    orc->add_option("--eps", o.eps, "Absorption distance relative to |z|");
    orc->add_option("--max-steps", o.max_steps, "Step cap per walk");
    orc->add_option("--threads", o.threads, "Worker threads (0: hardware)");
    add_deg(orc);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::CallForVersion&) {
        out << io::version() << "\n";
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return invalid_input;
    }

    try {
        if (hm->parsed()) {
            return cmd_hm(o, out);
        }
        if (sw->parsed()) {
            return cmd_sweep(o, out);
        }
        if (ck->parsed()) {
            return cmd_check(o, out);
        }
        if (gr->parsed()) {
            return cmd_growth(o, out);
        }
        if (ex->parsed()) {
            return cmd_extend(o, out);
        }
        if (e1->parsed()) {
            return cmd_example1(o, out);
        }
        if (e2->parsed()) {
            return cmd_example2(o, out);
        }
        if (orc->parsed()) {
            if (o.interval.empty() && !o.disk) {
                throw InputError("oracle needs --interval or --disk");
            }
            return cmd_oracle(o, out);
        }
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return invalid_input;
    } catch (const RegimeError& e) {
        err << "refused: " << e.what() << "\n";
        return regime_refused;
    } catch (const io::json::exception& e) {
        err << "input error: " << e.what() << "\n";
        return invalid_input;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return internal_error;
    }
    err << "no subcommand\n";
    return invalid_input;
}

} // namespace raysweep::cli
