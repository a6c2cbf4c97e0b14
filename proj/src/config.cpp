// Copyright 2026 The gravrotor Authors
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

#include "gravrotor/config.hpp"

#include <fmt/format.h>

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <sstream>

namespace gravrotor {

namespace {

std::string join_messages(const std::vector<std::string>& messages) {
  std::string out;
  for (const auto& m : messages) {
    if (!out.empty()) out += '\n';
    out += m;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::optional<double> to_double(std::string_view s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::optional<std::size_t> to_count(std::string_view s) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

enum class Kind { positive, positive_or_inf, count, text };

struct KeySpec {
  Kind kind;
  std::function<void(RunConfig&, double)> set_number;
  std::function<void(RunConfig&, std::string_view)> set_text;  // for Kind::text; may throw
};

const std::map<std::string, KeySpec, std::less<>>& key_table() {
  using K = Kind;
  static const std::map<std::string, KeySpec, std::less<>> table = {
      {"density", {K::positive, [](RunConfig& c, double v) { c.sweep.material.density = v; }, {}}},
      {"remanence", {K::positive, [](RunConfig& c, double v) { c.sweep.material.remanence = v; }, {}}},
      {"sound_speed", {K::positive, [](RunConfig& c, double v) { c.sweep.material.sound_speed = v; }, {}}},
      {"T2", {K::positive, [](RunConfig& c, double v) { c.sweep.params.T2 = v; }, {}}},
      {"T3", {K::positive, [](RunConfig& c, double v) { c.sweep.params.T3 = v; }, {}}},
      {"T4", {K::positive, [](RunConfig& c, double v) { c.sweep.params.T4 = v; }, {}}},
      {"dipole", {K::positive, [](RunConfig& c, double v) { c.sweep.params.dipole = v; }, {}}},
      {"E_field", {K::positive, [](RunConfig& c, double v) { c.sweep.params.e_field = v; }, {}}},
      {"B_field", {K::positive, [](RunConfig& c, double v) { c.sweep.params.b_field = v; }, {}}},
      {"r_min", {K::positive, [](RunConfig& c, double v) { c.sweep.params.r_min = v; }, {}}},
      {"phi_min", {K::positive_or_inf, [](RunConfig& c, double v) { c.sweep.params.phi_min = v; }, {}}},
      {"shape", {K::text, {}, [](RunConfig& c, std::string_view v) { c.sweep.shape = parse_shape(v); }}},
      {"disc_aspect", {K::positive, [](RunConfig& c, double v) { c.sweep.disc_aspect = v; }, {}}},
      {"R_min", {K::positive, [](RunConfig& c, double v) { c.sweep.radius.min = v; }, {}}},
      {"R_max", {K::positive, [](RunConfig& c, double v) { c.sweep.radius.max = v; }, {}}},
      {"omega_min", {K::positive, [](RunConfig& c, double v) { c.sweep.omega.min = v; }, {}}},
      {"omega_max", {K::positive, [](RunConfig& c, double v) { c.sweep.omega.max = v; }, {}}},
      {"nR", {K::count, [](RunConfig& c, double v) { c.sweep.radius.count = static_cast<std::size_t>(v); }, {}}},
      {"nOmega", {K::count, [](RunConfig& c, double v) { c.sweep.omega.count = static_cast<std::size_t>(v); }, {}}},
      {"relax", {K::positive, [](RunConfig& c, double v) { c.sweep.relax = v; }, {}}},
      {"threads", {K::count, [](RunConfig& c, double v) { c.threads = static_cast<unsigned>(v); }, {}}},
      {"out_dir", {K::text, {}, [](RunConfig& c, std::string_view v) { c.out_dir = std::string(v); }}},
      {"tol", {K::positive, [](RunConfig& c, double v) { c.dynamics.tol = v; }, {}}},
      {"duration", {K::positive, [](RunConfig& c, double v) { c.dynamics.duration = v; }, {}}},
      {"theta0", {K::positive, [](RunConfig& c, double v) { c.dynamics.theta0 = v; }, {}}},
      {"theta0_min", {K::positive, [](RunConfig& c, double v) { c.dynamics.theta0_min = v; }, {}}},
      {"theta0_max", {K::positive, [](RunConfig& c, double v) { c.dynamics.theta0_max = v; }, {}}},
      {"theta0_count",
       {K::count, [](RunConfig& c, double v) { c.dynamics.theta0_count = static_cast<std::size_t>(v); }, {}}},
      {"fit_tail", {K::positive, [](RunConfig& c, double v) { c.dynamics.fit_tail = v; }, {}}},
  };
  return table;
}

}  // namespace

ConfigError::ConfigError(std::vector<std::string> messages)
    : std::runtime_error(join_messages(messages)), messages_(std::move(messages)) {}

RunConfig parse_config(std::istream& in, std::string_view source) {
  RunConfig cfg;
  std::vector<std::string> errors;
  std::map<std::string, std::size_t, std::less<>> seen;  // key -> line
  const auto& table = key_table();

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto where = [&](std::string_view msg) { return fmt::format("{}:{}: {}", source, line_no, msg); };
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      errors.push_back(where("expected 'key = value'"));
      continue;
    }
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    const auto spec = table.find(key);
    if (spec == table.end()) {
      errors.push_back(where(fmt::format("unknown key '{}'", key)));
      continue;
    }
    if (const auto prev = seen.find(key); prev != seen.end()) {
      errors.push_back(where(fmt::format("duplicate key '{}' (first set on line {})", key, prev->second)));
      continue;
    }
    seen.emplace(std::string(key), line_no);
    if (value.empty()) {
      errors.push_back(where(fmt::format("missing value for '{}'", key)));
      continue;
    }

    const KeySpec& ks = spec->second;
    switch (ks.kind) {
      case Kind::text:
        try {
          ks.set_text(cfg, value);
        } catch (const std::exception& e) {
          errors.push_back(where(e.what()));
        }
        break;
      case Kind::count: {
        const auto n = to_count(value);
        if (!n) {
          errors.push_back(where(fmt::format("'{}' must be a non-negative integer, got '{}'", key, value)));
        } else {
          ks.set_number(cfg, static_cast<double>(*n));
        }
        break;
      }
      case Kind::positive:
      case Kind::positive_or_inf: {
        const auto v = to_double(value);
        const bool inf_ok = ks.kind == Kind::positive_or_inf;
        if (!v) {
          errors.push_back(where(fmt::format("'{}' is not a number: '{}'", key, value)));
        } else if (!(*v > 0.0) || (!inf_ok && !std::isfinite(*v))) {
          errors.push_back(where(fmt::format("'{}' must be positive{}, got {}", key, inf_ok ? "" : " and finite", value)));
        } else {
          ks.set_number(cfg, *v);
        }
        break;
      }
    }
  }

  // cross-field checks, reported against the line that set the later key
  const auto line_of = [&](std::string_view a, std::string_view b) {
    std::size_t n = 0;
    for (auto k : {a, b}) {
      if (auto it = seen.find(k); it != seen.end()) n = std::max(n, it->second);
    }
    return n;
  };
  const auto cross = [&](bool ok, std::string_view a, std::string_view b, std::string_view msg) {
    if (ok) return;
    const auto n = line_of(a, b);
    errors.push_back(n ? fmt::format("{}:{}: {}", source, n, msg) : fmt::format("{}: {}", source, msg));
  };
  cross(cfg.sweep.radius.min < cfg.sweep.radius.max, "R_min", "R_max", "R_min must be below R_max");
  cross(cfg.sweep.omega.min < cfg.sweep.omega.max, "omega_min", "omega_max", "omega_min must be below omega_max");
  cross(cfg.sweep.radius.count >= 2, "nR", "nR", "nR must be at least 2");
  cross(cfg.sweep.omega.count >= 2, "nOmega", "nOmega", "nOmega must be at least 2");
  cross(cfg.sweep.relax >= 1.0, "relax", "relax", "relax must be at least 1");
  cross(cfg.dynamics.tol <= 1e-2, "tol", "tol", "tol must not exceed 1e-2");
  cross(cfg.dynamics.theta0 < 1.5707963267948966, "theta0", "theta0", "theta0 must be below pi/2");
  cross(cfg.dynamics.theta0_min < cfg.dynamics.theta0_max, "theta0_min", "theta0_max",
        "theta0_min must be below theta0_max");
  cross(cfg.dynamics.theta0_max < 1.0, "theta0_max", "theta0_max", "theta0_max must be below 1");
  cross(cfg.dynamics.theta0_count >= 1, "theta0_count", "theta0_count", "theta0_count must be at least 1");

  if (!errors.empty()) throw ConfigError(std::move(errors));
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError({fmt::format("{}: cannot open config file", path.string())});
  return parse_config(in, path.string());
}

std::string serialize_config(const RunConfig& c) {
  const auto& m = c.sweep.material;
  const auto& p = c.sweep.params;
  const auto& s = c.sweep;
  const auto& d = c.dynamics;
  std::ostringstream out;
  out << "# material\n"
      << fmt::format("density = {:.17g}\nremanence = {:.17g}\nsound_speed = {:.17g}\n", m.density, m.remanence,
                     m.sound_speed)
      << "# protocol\n"
      << fmt::format("T2 = {:.17g}\nT3 = {:.17g}\nT4 = {:.17g}\n", p.T2, p.T3, p.T4)
      << fmt::format("dipole = {:.17g}\nE_field = {:.17g}\nB_field = {:.17g}\n", p.dipole, p.e_field, p.b_field)
      << fmt::format("r_min = {:.17g}\nphi_min = {:.17g}\n", p.r_min, p.phi_min) << "# sweep\n"
      << fmt::format("shape = {}\ndisc_aspect = {:.17g}\n", to_string(s.shape), s.disc_aspect)
      << fmt::format("R_min = {:.17g}\nR_max = {:.17g}\nnR = {}\n", s.radius.min, s.radius.max, s.radius.count)
      << fmt::format("omega_min = {:.17g}\nomega_max = {:.17g}\nnOmega = {}\n", s.omega.min, s.omega.max,
                     s.omega.count)
      << fmt::format("relax = {:.17g}\nthreads = {}\n", s.relax, c.threads) << "# dynamics\n"
      << fmt::format("tol = {:.17g}\nduration = {:.17g}\ntheta0 = {:.17g}\n", d.tol, d.duration, d.theta0)
      << fmt::format("theta0_min = {:.17g}\ntheta0_max = {:.17g}\ntheta0_count = {}\nfit_tail = {:.17g}\n",
                     d.theta0_min, d.theta0_max, d.theta0_count, d.fit_tail)
      << fmt::format("out_dir = {}\n", c.out_dir);
  return out.str();
}

}  // namespace gravrotor
