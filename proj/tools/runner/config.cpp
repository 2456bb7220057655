#include "runner/config.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace burgers::cli {

std::string_view to_string(Command c) {
  switch (c) {
  case Command::solve:
    return "solve";
  case Command::converge:
    return "converge";
  case Command::check_stability:
    return "check-stability";
  }
  return "?";
}

ConfigError::ConfigError(int line, std::string key, const std::string& what)
    : ValidationError(std::move(key), (line > 0 ? "line " + std::to_string(line) + ": " : "") + what),
      line_(line) {}

namespace {

constexpr std::array kKnownKeys = {
    "command", "problem", "R",      "T",          "M",           "N",        "h",
    "coupling", "substeps", "out", "format", "snapshot_t", "time_sum",
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string normalize_key(std::string_view key) {
  std::string out(key);
  std::replace(out.begin(), out.end(), '-', '_');
  return out;
}

bool known_key(std::string_view key) {
  return std::find(kKnownKeys.begin(), kKnownKeys.end(), key) != kKnownKeys.end();
}

std::vector<std::string_view> split_list(std::string_view text) {
  std::vector<std::string_view> items;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto item = trim(text.substr(start, comma == std::string_view::npos ? comma : comma - start));
    if (!item.empty()) {
      items.push_back(item);
    }
    if (comma == std::string_view::npos) {
      break;
    }
    start = comma + 1;
  }
  return items;
}

int parse_int(std::string_view text) {
  int value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ValidationError("integer", "'" + std::string(text) + "' is not an integer");
  }
  return value;
}

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// Runs `fn`, rewrapping validation failures with the entry's key and line.
template <class Fn>
auto with_entry(const ConfigMap& map, std::string_view key, Fn&& fn) {
  const auto& entry = map.find(key)->second;
  try {
    return fn(entry.value);
  } catch (const ConfigError&) {
    throw;
  } catch (const ValidationError& e) {
    throw ConfigError(entry.line, std::string(key), e.what());
  }
}

} // namespace

double parse_number(std::string_view text) {
  text = trim(text);
  if (text.starts_with("2^")) {
    const int p = parse_int(text.substr(2));
    return std::ldexp(1.0, p);
  }
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw ValidationError("number", "'" + std::string(text) + "' is not a number");
  }
  return value;
}

ConfigMap parse_key_values(std::string_view text) {
  ConfigMap map;
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++lineno;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(lineno, "syntax", "expected 'key = value'");
    }
    const std::string key = normalize_key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (!known_key(key)) {
      throw ConfigError(lineno, key, "unknown key '" + key + "'");
    }
    if (const auto it = map.find(key); it != map.end()) {
      throw ConfigError(lineno, key,
                        "duplicate key (first set on line " + std::to_string(it->second.line) + ")");
    }
    map.emplace(key, ConfigEntry{std::string(value), lineno});
  }
  return map;
}

void apply_overrides(ConfigMap& map, const std::map<std::string, std::string>& overrides) {
  for (const auto& [raw_key, value] : overrides) {
    const std::string key = normalize_key(raw_key);
    if (!known_key(key)) {
      throw ConfigError(0, key, "unknown option '" + key + "'");
    }
    if (key == "M" || key == "N") {
      map.erase("h");
      map.erase("coupling");
    } else if (key == "h" || key == "coupling") {
      map.erase("M");
      map.erase("N");
    }
    map[key] = ConfigEntry{value, 0};
  }
}

RunConfig resolve_config(const ConfigMap& map) {
  RunConfig cfg;
  auto has = [&](std::string_view key) { return map.find(key) != map.end(); };
  auto line_of = [&](std::string_view key) { return map.find(key)->second.line; };

  if (has("command")) {
    cfg.command = with_entry(map, "command", [](const std::string& v) {
      for (Command c : {Command::solve, Command::converge, Command::check_stability}) {
        if (to_string(c) == v) {
          return c;
        }
      }
      throw ValidationError("command", "unknown command '" + v + "'");
    });
  }
  if (has("problem")) {
    cfg.problem = map.find("problem")->second.value;
    const auto names = problem_names();
    if (std::find(names.begin(), names.end(), cfg.problem) == names.end()) {
      throw ConfigError(line_of("problem"), "problem", "unknown problem '" + cfg.problem + "'");
    }
  }
  if (!has("R")) {
    throw ConfigError(0, "R", "missing required key 'R'");
  }
  cfg.R = with_entry(map, "R", [](const std::string& v) {
    const double R = parse_number(v);
    if (!(R > 0.0) || !std::isfinite(R)) {
      throw ValidationError("R", "Reynolds number must be positive");
    }
    return R;
  });
  if (has("T")) {
    cfg.T = with_entry(map, "T", [](const std::string& v) {
      const double T = parse_number(v);
      if (!(T > 0.0) || !std::isfinite(T)) {
        throw ValidationError("T", "final time must be positive");
      }
      return T;
    });
  }

  const bool explicit_form = has("M") || has("N");
  const bool coupled_form = has("h") || has("coupling");
  if (explicit_form && coupled_form) {
    const auto line = std::max({has("M") ? line_of("M") : 0, has("N") ? line_of("N") : 0,
                                has("h") ? line_of("h") : 0,
                                has("coupling") ? line_of("coupling") : 0});
    throw ConfigError(line, "grid", "give either M and N or h and coupling, not both");
  }
  if (explicit_form) {
    if (!has("M") || !has("N")) {
      throw ConfigError(0, has("M") ? "N" : "M", "M and N must be given together");
    }
    ExplicitGrid g;
    g.M = with_entry(map, "M", [](const std::string& v) { return parse_int(v); });
    g.N = with_entry(map, "N", [](const std::string& v) { return parse_int(v); });
    if (g.M < 2) {
      throw ConfigError(line_of("M"), "M", "need at least 2 cells per axis");
    }
    if (g.N < 1) {
      throw ConfigError(line_of("N"), "N", "need at least 1 time step");
    }
    cfg.grid = g;
  } else if (coupled_form) {
    if (!has("h") || !has("coupling")) {
      throw ConfigError(0, has("h") ? "coupling" : "h", "h and coupling must be given together");
    }
    CoupledGrid g;
    g.h = with_entry(map, "h", [](const std::string& v) {
      std::vector<double> hs;
      for (auto item : split_list(v)) {
        const double h = parse_number(item);
        if (!(h > 0.0) || h > 1.0) {
          throw ValidationError("h", "spacing must lie in (0, 1]");
        }
        hs.push_back(h);
      }
      if (hs.empty()) {
        throw ValidationError("h", "empty list of spacings");
      }
      return hs;
    });
    g.coupling = with_entry(map, "coupling", [](const std::string& v) {
      const auto c = parse_coupling(v);
      if (!c) {
        throw ValidationError("coupling", "unknown coupling '" + v + "'");
      }
      return *c;
    });
    cfg.grid = g;
  } else {
    throw ConfigError(0, "grid", "missing grid: give M and N, or h and coupling");
  }

  if (has("substeps")) {
    cfg.substeps = with_entry(map, "substeps", [](const std::string& v) {
      if (v == "auto") {
        return 0;
      }
      const int m = parse_int(v);
      if (m < 1) {
        throw ValidationError("substeps", "must be a positive integer or 'auto'");
      }
      return m;
    });
  }
  if (has("out")) {
    cfg.out = map.find("out")->second.value;
  }
  if (has("format")) {
    cfg.format = with_entry(map, "format", [](const std::string& v) {
      const auto f = parse_table_format(v);
      if (!f) {
        throw ValidationError("format", "unknown format '" + v + "'");
      }
      return *f;
    });
  }
  if (has("snapshot_t")) {
    cfg.snapshot_t = with_entry(map, "snapshot_t", [](const std::string& v) {
      std::vector<double> ts;
      for (auto item : split_list(v)) {
        const double t = parse_number(item);
        if (!(t >= 0.0)) {
          throw ValidationError("snapshot_t", "snapshot times must be nonnegative");
        }
        ts.push_back(t);
      }
      return ts;
    });
  }
  if (has("time_sum")) {
    cfg.time_sum = with_entry(map, "time_sum", [](const std::string& v) {
      if (v == "include_initial") {
        return TimeSum::include_initial;
      }
      if (v == "exclude_initial") {
        return TimeSum::exclude_initial;
      }
      throw ValidationError("time_sum", "expected include_initial or exclude_initial");
    });
  }
  return cfg;
}

RunConfig parse_config(std::string_view text) { return resolve_config(parse_key_values(text)); }

std::string serialize(const RunConfig& cfg) {
  std::ostringstream out;
  out << "command = " << to_string(cfg.command) << '\n';
  out << "problem = " << cfg.problem << '\n';
  out << "R = " << format_number(cfg.R) << '\n';
  out << "T = " << format_number(cfg.T) << '\n';
  if (const auto* g = std::get_if<ExplicitGrid>(&cfg.grid)) {
    out << "M = " << g->M << '\n';
    out << "N = " << g->N << '\n';
  } else {
    const auto& c = std::get<CoupledGrid>(cfg.grid);
    out << "h = ";
    for (std::size_t q = 0; q < c.h.size(); ++q) {
      out << (q ? ", " : "") << format_number(c.h[q]);
    }
    out << '\n';
    out << "coupling = " << to_string(c.coupling) << '\n';
  }
  out << "substeps = " << (cfg.substeps == 0 ? std::string("auto") : std::to_string(cfg.substeps))
      << '\n';
  if (!cfg.out.empty()) {
    out << "out = " << cfg.out << '\n';
  }
  out << "format = " << to_string(cfg.format) << '\n';
  if (!cfg.snapshot_t.empty()) {
    out << "snapshot_t = ";
    for (std::size_t q = 0; q < cfg.snapshot_t.size(); ++q) {
      out << (q ? ", " : "") << format_number(cfg.snapshot_t[q]);
    }
    out << '\n';
  }
  out << "time_sum = "
      << (cfg.time_sum == TimeSum::include_initial ? "include_initial" : "exclude_initial") << '\n';
  return out.str();
}

} // namespace burgers::cli
