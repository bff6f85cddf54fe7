#include <charconv>
#include <cmath>
#include <fmt/format.h>
#include <numbers>
#include <optional>
#include <string>

#include "optosteer/errors.hpp"
#include "optosteer/sweep.hpp"

namespace optosteer {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\v\f";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

double parse_number(std::string_view text, std::size_t line, std::string_view key) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc{} || res.ptr != last || !std::isfinite(value)) {
    throw ParseError(line, fmt::format("'{}' is not a finite number for key '{}'", text, key));
  }
  return value;
}

std::size_t parse_count(std::string_view text, std::size_t line, std::string_view key) {
  std::size_t value = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
    throw ParseError(line, fmt::format("'{}' is not a non-negative integer for key '{}'", text, key));
  }
  return value;
}

std::vector<Column> parse_columns(std::string_view text, std::size_t line) {
  std::vector<Column> cols;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = trim(text.substr(0, comma));
    bool found = false;
    for (Column c : default_columns()) {
      if (to_string(c) == item) {
        cols.push_back(c);
        found = true;
      }
    }
    if (!found) throw ParseError(line, fmt::format("unknown output column '{}'", item));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return cols;
}

// Accumulates settings; defaults that depend on other keys are resolved last.
class ConfigBuilder {
 public:
  void set(std::string_view key, std::string_view value, std::size_t line) {
    PhysicalParams& p = spec_.base;
    auto num = [&] { return parse_number(value, line, key); };
    auto hz = [&] { return kTwoPi * num(); };

    if (key == "omega_m") p.omega_m = hz();
    else if (key == "gamma1") p.gamma1 = hz();
    else if (key == "gamma2") p.gamma2 = hz();
    else if (key == "kappa") p.kappa = hz();
    else if (key == "omega_c") p.omega_c = hz();
    else if (key == "omega_L") p.omega_L = hz();
    else if (key == "delta") delta_ = hz();
    else if (key == "power") p.power = num();
    else if (key == "m1") p.m1 = num();
    else if (key == "m2") p.m2 = num();
    else if (key == "l1") p.l1 = num();
    else if (key == "l2") p.l2 = num();
    else if (key == "theta1") p.theta1 = num();
    else if (key == "theta2") p.theta2 = num();
    else if (key == "r") p.r = num();
    else if (key == "nth1") p.nth1 = num();
    else if (key == "nth2") p.nth2 = num();
    else if (key == "nth") p.nth1 = p.nth2 = num();
    else if (key == "start") start_ = num();
    else if (key == "stop") stop_ = num();
    else if (key == "steps") steps_ = parse_count(value, line, key);
    else if (key == "outputs") spec_.outputs = parse_columns(value, line);
    else if (key == "sweep") {
      const auto param = parse_sweep_param(value);
      if (!param) throw ParseError(line, fmt::format("'{}' is not a sweepable parameter", value));
      spec_.swept = *param;
    } else {
      throw UnknownKey(fmt::format("line {}: unknown key '{}'", line, key));
    }
  }

  void apply_text(std::string_view text) {
    for (std::size_t line = 1;; ++line) {
      const auto nl = text.find('\n');
      apply_line(text.substr(0, nl), line);
      if (nl == std::string_view::npos) break;
      text.remove_prefix(nl + 1);
    }
  }

  void apply_line(std::string_view raw, std::size_t line) {
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    raw = trim(raw);
    if (raw.empty()) return;
    const auto eq = raw.find('=');
    if (eq == std::string_view::npos) throw ParseError(line, "expected 'key = value'");
    const auto key = trim(raw.substr(0, eq));
    const auto value = trim(raw.substr(eq + 1));
    if (key.empty()) throw ParseError(line, "missing key");
    if (value.empty()) throw ParseError(line, fmt::format("missing value for key '{}'", key));
    set(key, value, line);
  }

  SweepSpec finish() {
    PhysicalParams& p = spec_.base;
    p.delta = delta_.value_or(-p.omega_m);

    const bool has_default_range = spec_.swept == SweepParam::r || spec_.swept == SweepParam::nth;
    if (!has_default_range && (!start_ || !stop_)) {
      throw RangeError(fmt::format("sweep over '{}' requires explicit start and stop",
                                   to_string(spec_.swept)));
    }
    if (spec_.swept == SweepParam::r) {
      spec_.start = start_.value_or(0.0);
      spec_.stop = stop_.value_or(3.5);
      spec_.steps = steps_.value_or(141);
    } else {
      spec_.start = start_.value_or(0.0);
      spec_.stop = stop_.value_or(5.0);
      spec_.steps = steps_.value_or(101);
    }

    const auto rep = validate_params(p);
    if (!rep.ok()) throw RangeError(rep.errors.front());
    validate_sweep(spec_);
    return spec_;
  }

 private:
  SweepSpec spec_;
  std::optional<double> delta_;
  std::optional<double> start_;
  std::optional<double> stop_;
  std::optional<std::size_t> steps_;
};

}  // namespace

SweepSpec parse_config(std::string_view text) { return parse_config(text, {}); }

SweepSpec parse_config(std::string_view text, const std::vector<std::string>& overrides) {
  ConfigBuilder builder;
  builder.apply_text(text);
  for (const auto& o : overrides) {
    // Overrides have no file line; report them as line 0.
    builder.apply_line(o, 0);
  }
  return builder.finish();
}

}  // namespace optosteer
