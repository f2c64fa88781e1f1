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

#include "raysweep/io.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <map>
#include <sstream>

#include "raysweep/errors.hpp"

namespace raysweep::io {

namespace {

double to_number(const std::string& s)
{
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw InputError("not a number: '" + s + "'");
    }
    if (used != s.size()) {
        throw InputError("not a number: '" + s + "'");
    }
    return v;
}

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) {
        return "";
    }
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) {
        out.push_back(trim(item));
    }
    return out;
}

// Numeric rows of a CSV file; a first line that does not parse is taken as header.
std::vector<std::vector<double>> read_csv(const std::string& path, std::size_t columns)
{
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open " + path);
    }
    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') {
            continue;
        }
        const std::vector<std::string> cells = split(line, ',');
        std::vector<double> row;
        try {
            for (const std::string& c : cells) {
                row.push_back(to_number(c));
            }
        } catch (const InputError&) {
            if (rows.empty() && lineno == 1) {
                continue; // header
            }
            throw InputError(path + ":" + std::to_string(lineno) + ": malformed row");
        }
        if (row.size() != columns) {
            throw InputError(path + ":" + std::to_string(lineno) + ": expected " + std::to_string(columns) +
                             " columns");
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

double number_at(const json& j, const char* key)
{
    if (!j.contains(key) || !j.at(key).is_number()) {
        throw InputError(std::string("missing numeric field '") + key + "'");
    }
    return j.at(key).get<double>();
}

json number_or_null(double x)
{
    return std::isfinite(x) ? json(x) : json(nullptr);
}

} // namespace

const char* version()
{
#ifdef RAYSWEEP_VERSION
    return RAYSWEEP_VERSION;
#else
    return "unknown";
#endif
}

complex parse_complex(const std::string& raw)
{
    std::string s;
    for (char c : raw) {
        if (c != ' ') {
            s.push_back(c);
        }
    }
    if (s.empty()) {
        throw InputError("empty complex number");
    }
    const char last = s.back();
    if (last != 'i' && last != 'j') {
        return {to_number(s), 0.0};
    }
    s.pop_back();
    // split at the last sign that is not part of an exponent
    std::size_t split_at = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            split_at = k;
            break;
        }
    }
    std::string re = split_at == std::string::npos ? "" : s.substr(0, split_at);
    std::string im = split_at == std::string::npos ? s : s.substr(split_at);
    double imag = 0.0;
    if (im.empty() || im == "+") {
        imag = 1.0;
    } else if (im == "-") {
        imag = -1.0;
    } else {
        imag = to_number(im);
    }
    return {re.empty() ? 0.0 : to_number(re), imag};
}

std::pair<double, double> parse_pair(const std::string& s)
{
    const std::vector<std::string> parts = split(s, ',');
    if (parts.size() != 2) {
        throw InputError("expected two comma-separated numbers, got '" + s + "'");
    }
    return {to_number(parts[0]), to_number(parts[1])};
}

std::vector<double> parse_radii(const std::string& s)
{
    const std::string prefix = "geometric:";
    if (s.rfind(prefix, 0) == 0) {
        const std::vector<std::string> parts = split(s.substr(prefix.size()), ',');
        if (parts.size() != 3) {
            throw InputError("geometric radii need r0,r1,ratio");
        }
        return geometric_grid(to_number(parts[0]), to_number(parts[1]), to_number(parts[2]));
    }
    std::vector<double> out;
    for (const std::string& p : split(s, ',')) {
        out.push_back(to_number(p));
    }
    if (out.empty()) {
        throw InputError("empty radius list");
    }
    return out;
}

json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open " + path);
    }
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw InputError(path + ": " + e.what());
    }
}

RaySystem ray_system_from_json(const json& j)
{
    if (!j.is_object()) {
        throw InputError("ray system must be a JSON object");
    }
    const bool deg = j.contains("directions_deg");
    const char* key = deg ? "directions_deg" : "directions_rad";
    if (!j.contains(key) || !j.at(key).is_array()) {
        throw InputError("ray system needs a directions_rad (or directions_deg) array");
    }
    std::vector<double> d;
    for (const json& x : j.at(key)) {
        if (!x.is_number()) {
            throw InputError("ray directions must be numbers");
        }
        d.push_back(deg ? x.get<double>() * kPi / 180.0 : x.get<double>());
    }
    return RaySystem(std::move(d));
}

json to_json(const RaySystem& s)
{
    return {{"directions_rad", s.directions()}};
}

AtomicMeasure measure_from_json(const json& j)
{
    if (!j.is_object()) {
        throw InputError("measure must be a JSON object");
    }
    std::vector<Atom> atoms;
    if (j.contains("atoms")) {
        if (!j.at("atoms").is_array()) {
            throw InputError("'atoms' must be an array");
        }
        for (const json& a : j.at("atoms")) {
            if (!a.is_object()) {
                throw InputError("every atom must be an object with re, im, w");
            }
            atoms.push_back({complex(number_at(a, "re"), number_at(a, "im")), number_at(a, "w")});
        }
    } else if (j.contains("zeros")) {
        if (!j.at("zeros").is_array()) {
            throw InputError("'zeros' must be an array");
        }
        for (const json& z : j.at("zeros")) {
            if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
                throw InputError("every zero must be a [re, im] pair");
            }
            atoms.push_back({complex(z[0].get<double>(), z[1].get<double>()), 1.0});
        }
    } else {
        throw InputError("measure needs an 'atoms' or 'zeros' array");
    }
    return AtomicMeasure(std::move(atoms));
}

json to_json(const AtomicMeasure& m)
{
    json atoms = json::array();
    for (const Atom& a : m.atoms()) {
        atoms.push_back({{"re", a.z.real()}, {"im", a.z.imag()}, {"w", a.w}});
    }
    return {{"atoms", atoms}};
}

ZeroSequence zeros_from_csv(const std::string& path)
{
    ZeroSequence z;
    for (const auto& row : read_csv(path, 2)) {
        z.points.emplace_back(row[0], row[1]);
    }
    return z;
}

RadialProfile profile_from_csv(const std::string& path)
{
    std::vector<double> g;
    std::vector<double> v;
    for (const auto& row : read_csv(path, 2)) {
        g.push_back(row[0]);
        v.push_back(row[1]);
    }
    return RadialProfile(std::move(g), std::move(v));
}

std::vector<std::pair<std::size_t, double>> grid_from_csv(const std::string& path, std::size_t ray_count)
{
    std::vector<std::pair<std::size_t, double>> out;
    for (const auto& row : read_csv(path, 2)) {
        if (row[0] < 0 || row[0] != std::floor(row[0]) || row[0] >= static_cast<double>(ray_count)) {
            throw InputError("ray index out of range in " + path);
        }
        if (!(row[1] > 0.0) || !std::isfinite(row[1])) {
            throw InputError("grid radii must be positive and finite in " + path);
        }
        out.emplace_back(static_cast<std::size_t>(row[0]), row[1]);
    }
    return out;
}

BoundaryData boundary_from_csv(const std::string& path, std::size_t ray_count, double tail_exponent)
{
    std::vector<RaySamples> rays(ray_count);
    for (const auto& row : read_csv(path, 3)) {
        const double idx = row[0];
        if (idx < 0 || idx != std::floor(idx) || idx >= static_cast<double>(ray_count)) {
            throw InputError("ray index out of range in " + path);
        }
        RaySamples& r = rays[static_cast<std::size_t>(idx)];
        r.radii.push_back(row[1]);
        r.values.push_back(row[2]);
    }
    return BoundaryData(std::move(rays), tail_exponent);
}

json to_json(complex z)
{
    return {{"re", number_or_null(z.real())}, {"im", number_or_null(z.imag())}};
}

json to_json(const TrendResult& t)
{
    return {{"trend", to_string(t.trend)},
            {"slope", number_or_null(t.slope)},
            {"window", {t.window_lo, t.window_hi}},
            {"last_oscillation", t.last_oscillation}};
}

json to_json(const ConditionReport& r)
{
    json params = json::object();
    for (const auto& [k, v] : r.parameters) {
        params[k] = number_or_null(v);
    }
    json sectors = json::array();
    for (const SectorEvidence& s : r.sectors) {
        json e = {{"index", s.index},
                  {"alpha", s.alpha},
                  {"beta", s.beta},
                  {"sum", s.sum},
                  {"wide", s.wide},
                  {"sparse", s.sparse}};
        e["trend"] = s.trend ? to_json(*s.trend) : json(nullptr);
        sectors.push_back(e);
    }
    json out = {{"kind", r.kind},
                {"verdict", to_string(r.verdict)},
                {"parameters", params},
                {"total", number_or_null(r.total)},
                {"radii", r.radii},
                {"partial_sums", r.partial_sums},
                {"sectors", sectors},
                {"trend", to_json(r.trend)},
                {"notes", r.notes}};
    if (!r.complex_partial_sums.empty()) {
        json c = json::array();
        for (complex z : r.complex_partial_sums) {
            c.push_back(to_json(z));
        }
        out["complex_partial_sums"] = c;
    }
    return out;
}

json to_json(const LimitTrace& t)
{
    return {{"name", t.name},
            {"radii", t.radii},
            {"values", t.values},
            {"estimate", number_or_null(t.estimate)},
            {"trend", to_json(t.trend)}};
}

json to_json(const ComplexLimitTrace& t)
{
    json values = json::array();
    for (complex z : t.values) {
        values.push_back(to_json(z));
    }
    return {{"name", t.name},
            {"radii", t.radii},
            {"values", values},
            {"estimate", to_json(t.estimate)},
            {"trend", to_string(t.trend)},
            {"real_part", to_json(t.real_part)},
            {"imag_part", to_json(t.imag_part)}};
}

json to_json(const CRGReport& r)
{
    json limits = json::object();
    for (const LimitTrace& t : r.limits) {
        limits[t.name] = to_json(t);
    }
    json sums = json::object();
    for (const auto& [k, v] : r.sums) {
        sums[k] = number_or_null(v);
    }
    json out = {{"limits", limits}, {"sums", sums}, {"notes", r.notes}};
    out["lindelof"] = r.lindelof ? to_json(*r.lindelof) : json(nullptr);
    out["class_A"] = r.class_A ? to_json(*r.class_A) : json(nullptr);
    return out;
}

json to_json(const GrowthReport& r)
{
    json out = {{"p", r.p}, {"at", to_string(r.at)}};
    if (r.order) {
        out["order"] = {{"estimate", r.order->order},
                        {"ratio_sup", r.order->ratio_sup},
                        {"trend", to_string(r.order->trend)},
                        {"first_half_slope", r.order->first_half_slope},
                        {"second_half_slope", r.order->second_half_slope},
                        {"window", {r.order->window_lo, r.order->window_hi}}};
    } else {
        out["order"] = nullptr;
    }
    out["type"] = {{"estimate", number_or_null(r.type.value)},
                   {"finite", r.type.finite()},
                   {"trend", to_json(r.type.trend)},
                   {"window", {r.type.window_lo, r.type.window_hi}}};
    out["convergence_class"] = {{"integral", number_or_null(r.class_integral.value)},
                                {"trend", to_json(r.class_integral.trend)}};
    return out;
}

json to_json(const OracleEstimate& e)
{
    return {{"mean", e.mean}, {"std_err", e.std_err}, {"hits", e.hits}, {"walks", e.walks},
            {"censored", e.censored}};
}

json manifest(const std::string& command, const json& parameters, const std::vector<std::uint64_t>& seeds)
{
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return {{"command", command},
            {"parameters", parameters},
            {"version", version()},
            {"seeds", seeds},
            {"timestamp", buf}};
}

} // namespace raysweep::io
