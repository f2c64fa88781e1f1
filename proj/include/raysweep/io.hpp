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

#pragma once

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

#include "raysweep/balayage.hpp"
#include "raysweep/boundary_data.hpp"
#include "raysweep/growth.hpp"
#include "raysweep/mc_oracle.hpp"
#include "raysweep/regular_growth.hpp"

namespace raysweep::io {

using json = nlohmann::json;

const char* version();

/// "a+bi", "a-bi", "bi", "a", "i", "-i"; throws InputError otherwise.
complex parse_complex(const std::string& s);
/// "t1,t2" into two numbers.
std::pair<double, double> parse_pair(const std::string& s);
/// "geometric:r0,r1,ratio" or an explicit comma-separated list.
std::vector<double> parse_radii(const std::string& s);

/// Parses a file as JSON; parse errors become InputError.
json read_json_file(const std::string& path);

/// {"directions_rad": [...]} or {"directions_deg": [...]}.
RaySystem ray_system_from_json(const json& j);
json to_json(const RaySystem& s);

/// {"atoms": [{"re", "im", "w"}]} or {"zeros": [[re, im], ...]}.
AtomicMeasure measure_from_json(const json& j);
json to_json(const AtomicMeasure& m);

/// CSV with columns re,im (header optional), one zero per line.
ZeroSequence zeros_from_csv(const std::string& path);
/// CSV with columns r,value.
RadialProfile profile_from_csv(const std::string& path);
/// CSV with columns ray_index,radius.
std::vector<std::pair<std::size_t, double>> grid_from_csv(const std::string& path, std::size_t ray_count);
/// CSV with columns ray_index,radius,value; every ray of the system needs samples.
BoundaryData boundary_from_csv(const std::string& path, std::size_t ray_count, double tail_exponent);

json to_json(complex z);
json to_json(const TrendResult& t);
json to_json(const ConditionReport& r);
json to_json(const LimitTrace& t);
json to_json(const ComplexLimitTrace& t);
json to_json(const CRGReport& r);
json to_json(const GrowthReport& r);
json to_json(const OracleEstimate& e);

/// Reproducibility block embedded in every output document.
json manifest(const std::string& command, const json& parameters, const std::vector<std::uint64_t>& seeds = {});

} // namespace raysweep::io
