#include "optosteer/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <fmt/format.h>
#include <thread>

#include "optosteer/errors.hpp"

namespace optosteer {

std::string_view to_string(SweepParam param) {
  switch (param) {
    case SweepParam::r: return "r";
    case SweepParam::nth: return "nth";
    case SweepParam::power: return "power";
    case SweepParam::l1: return "l1";
    case SweepParam::l2: return "l2";
    case SweepParam::theta1: return "theta1";
    case SweepParam::theta2: return "theta2";
  }
  return "?";
}

std::optional<SweepParam> parse_sweep_param(std::string_view name) {
  for (auto p : {SweepParam::r, SweepParam::nth, SweepParam::power, SweepParam::l1,
                 SweepParam::l2, SweepParam::theta1, SweepParam::theta2}) {
    if (to_string(p) == name) return p;
  }
  return std::nullopt;
}

double get_param(const PhysicalParams& p, SweepParam param) {
  switch (param) {
    case SweepParam::r: return p.r;
    case SweepParam::nth: return p.nth1;
    case SweepParam::power: return p.power;
    case SweepParam::l1: return p.l1;
    case SweepParam::l2: return p.l2;
    case SweepParam::theta1: return p.theta1;
    case SweepParam::theta2: return p.theta2;
  }
  return 0.0;
}

void set_param(PhysicalParams& p, SweepParam param, double value) {
  switch (param) {
    case SweepParam::r: p.r = value; break;
    case SweepParam::nth: p.nth1 = p.nth2 = value; break;
    case SweepParam::power: p.power = value; break;
    case SweepParam::l1: p.l1 = value; break;
    case SweepParam::l2: p.l2 = value; break;
    case SweepParam::theta1: p.theta1 = value; break;
    case SweepParam::theta2: p.theta2 = value; break;
  }
}

double SweepSpec::grid_value(std::size_t i) const {
  if (i + 1 >= steps) return stop;
  return start + (stop - start) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

void validate_sweep(const SweepSpec& spec) {
  if (!(spec.start < spec.stop)) {
    throw RangeError(fmt::format("sweep start ({}) must be below stop ({})", spec.start, spec.stop));
  }
  if (spec.steps < 2) throw RangeError("sweep steps must be at least 2");
  if (spec.outputs.empty()) throw RangeError("outputs must name at least one column");
  for (double endpoint : {spec.start, spec.stop}) {
    PhysicalParams p = spec.base;
    set_param(p, spec.swept, endpoint);
    const auto rep = validate_params(p);
    if (!rep.ok()) {
      throw RangeError(fmt::format("{} = {}: {}", to_string(spec.swept), endpoint, rep.errors.front()));
    }
  }
}

std::string_view SweepRecord::regime_label() const {
  switch (status) {
    case PointStatus::ok: return to_string(regime);
    case PointStatus::not_hurwitz: return "NotHurwitz";
    case PointStatus::numerical_failure: return "NumericalFailure";
  }
  return "?";
}

SteeringReport evaluate_point(const PhysicalParams& params) {
  return report(mechanical_covariance(steady_covariance(params)));
}

namespace {

SweepRecord evaluate_record(const SweepSpec& spec, std::size_t i) {
  SweepRecord rec;
  rec.value = spec.grid_value(i);
  PhysicalParams p = spec.base;
  set_param(p, spec.swept, rec.value);
  try {
    const auto rep = evaluate_point(p);
    rec.g_ab = rep.g_ab;
    rec.g_ba = rep.g_ba;
    rec.e_n = rep.e_n;
    rec.nu = rep.nu;
    rec.regime = rep.regime;
  } catch (const NotHurwitz&) {
    rec.status = PointStatus::not_hurwitz;
  } catch (const NumericalError&) {
    rec.status = PointStatus::numerical_failure;
  }
  return rec;
}

}  // namespace

std::vector<SweepRecord> run_sweep(const SweepSpec& spec, unsigned threads) {
  validate_sweep(spec);
  std::vector<SweepRecord> records(spec.steps);

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, spec.steps));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < spec.steps; i = next++) records[i] = evaluate_record(spec, i);
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return records;
}

std::optional<FigureId> parse_figure_id(std::string_view name) {
  for (auto id : {FigureId::fig2a, FigureId::fig2b, FigureId::fig3a, FigureId::fig3b}) {
    if (to_string(id) == name) return id;
  }
  return std::nullopt;
}

std::string_view to_string(FigureId id) {
  switch (id) {
    case FigureId::fig2a: return "fig2a";
    case FigureId::fig2b: return "fig2b";
    case FigureId::fig3a: return "fig3a";
    case FigureId::fig3b: return "fig3b";
  }
  return "?";
}

SweepSpec figure_preset(FigureId id) {
  SweepSpec spec;
  PhysicalParams& p = spec.base;
  p.l1 = 112e-6;
  p.l2 = 85e-6;
  p.theta1 = std::numbers::pi / 6;
  p.theta2 = std::numbers::pi / 3;
  p.nth1 = p.nth2 = 5.0;
  if (id == FigureId::fig2b || id == FigureId::fig3b) {
    std::swap(p.l1, p.l2);
    std::swap(p.theta1, p.theta2);
  }
  if (id == FigureId::fig2a || id == FigureId::fig2b) {
    p.r = 0.0;
    spec.swept = SweepParam::r;
    spec.start = 0.0;
    spec.stop = 3.5;
    spec.steps = 141;
  } else {
    p.r = 1.5;
    spec.swept = SweepParam::nth;
    spec.start = 0.0;
    spec.stop = 5.0;
    spec.steps = 101;
  }
  return spec;
}

}  // namespace optosteer
