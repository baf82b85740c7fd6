// Copyright 2026 The gaugeqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "report.hpp"

#include <algorithm>
#include <cstdio>

namespace gqc::cli {

void RunReport::add_input(std::string_view text) {
    for (const unsigned char c : text) {
        digest_ ^= c;
        digest_ *= 1099511628211ULL;
    }
    // Separator so ("ab", "c") and ("a", "bc") differ.
    digest_ ^= 0xff;
    digest_ *= 1099511628211ULL;
}

void RunReport::add_check(std::string name, double deviation, double tolerance) {
    checks_.push_back({std::move(name), deviation, tolerance, deviation <= tolerance});
}

void RunReport::add_boolean_check(std::string name, bool pass) {
    checks_.push_back({std::move(name), pass ? 0.0 : 1.0, 0.0, pass});
}

bool RunReport::passed() const {
    return std::all_of(checks_.begin(), checks_.end(), [](const CheckResult& c) { return c.pass; });
}

double RunReport::max_deviation() const {
    double m = 0.0;
    for (const auto& c : checks_) m = std::max(m, c.deviation);
    return m;
}

Json RunReport::to_json(bool include_timing) const {
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(digest_));
    Json j;
    j["command"] = command_;
    j["inputs_digest"] = std::string(hex);
    j["results"] = results_;
    Json checks = Json::array();
    for (const auto& c : checks_) {
        Json cj;
        cj["name"] = c.name;
        cj["deviation"] = c.deviation;
        cj["tolerance"] = c.tolerance;
        cj["pass"] = c.pass;
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    j["max_deviation"] = max_deviation();
    j["status"] = passed() ? "pass" : "fail";
    if (include_timing) j["wall_seconds"] = wall_seconds_;
    return j;
}

std::string RunReport::summary() const {
    std::string out;
    char line[256];
    for (const auto& c : checks_) {
        std::snprintf(line, sizeof line, "  [%s] %-40s deviation %.3e (tolerance %.1e)\n", c.pass ? "PASS" : "FAIL",
                      c.name.c_str(), c.deviation, c.tolerance);
        out += line;
    }
    std::snprintf(line, sizeof line, "%s: %s, max deviation %.3e, %.3f s\n", command_.c_str(),
                  passed() ? "pass" : "FAIL", max_deviation(), wall_seconds_);
    out += line;
    return out;
}

}  // namespace gqc::cli
