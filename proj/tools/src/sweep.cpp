#include "sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <numbers>
#include <sstream>
#include <thread>
#include <vector>

#include "hybridcomb/bands.hpp"
#include "hybridcomb/error.hpp"
#include "hybridcomb/secular.hpp"

namespace hybridcomb::cli {

namespace {

bool known_name(const std::string& name) {
  return name == "w0" || name == "w1" || name == "v0" || name == "v1" || name == "d" || name == "a" ||
         name == "eps";
}

using Rows = std::vector<std::vector<Cell>>;

// Lowest band, widening the window until one complete band is inside it.
std::optional<Band> lowest_band(const CombParams& p) {
  const double a = lattice_spacing(p);
  double eps_max = std::pow(2.0 * std::numbers::pi / a, 2) + 1.0;
  for (int attempt = 0; attempt < 8; ++attempt, eps_max *= 4.0) {
    const auto bands = enumerate_bands(p, default_eps_min(p), eps_max);
    if (!bands.empty()) return bands.front();
  }
  return std::nullopt;
}

}  // namespace

double Axis::value(std::size_t i) const noexcept {
  if (steps < 2) return min;
  if (i + 1 == steps) return max;
  return min + (max - min) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

Axis parse_axis(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
  if (parts.size() != 4) {
    throw Error(ErrorKind::InvalidParameter, "axis must be name:min:max:steps, got '" + text + "'");
  }
  Axis axis;
  axis.name = parts[0];
  try {
    std::size_t used = 0;
    axis.min = std::stod(parts[1], &used);
    if (used != parts[1].size()) throw std::invalid_argument("min");
    axis.max = std::stod(parts[2], &used);
    if (used != parts[2].size()) throw std::invalid_argument("max");
    const long long steps = std::stoll(parts[3], &used);
    if (used != parts[3].size() || steps < 0) throw std::invalid_argument("steps");
    axis.steps = static_cast<std::size_t>(steps);
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::InvalidParameter, "axis '" + text + "' has a malformed number");
  }
  return axis;
}

std::size_t SweepSpec::cell_count() const noexcept {
  const std::size_t n1 = axis1.steps;
  const std::size_t n2 = axis2 ? axis2->steps : 1;
  if (n2 != 0 && n1 > std::numeric_limits<std::size_t>::max() / n2) {
    return std::numeric_limits<std::size_t>::max();
  }
  return n1 * n2;
}

void SweepSpec::validate() const {
  for (const Axis* axis : {&axis1, axis2 ? &*axis2 : nullptr}) {
    if (!axis) continue;
    if (!known_name(axis->name)) {
      throw Error(ErrorKind::InvalidParameter, "unknown sweep parameter '" + axis->name + "'");
    }
    if (axis->steps < 2) throw Error(ErrorKind::InvalidParameter, "axis '" + axis->name + "' needs steps >= 2");
    if (!(axis->min < axis->max) || !std::isfinite(axis->min) || !std::isfinite(axis->max)) {
      throw Error(ErrorKind::InvalidParameter, "axis '" + axis->name + "' needs finite min < max");
    }
  }
  if (axis2 && axis2->name == axis1.name) throw Error(ErrorKind::InvalidParameter, "axes must differ");
  const bool has_eps = axis1.name == "eps" || (axis2 && axis2->name == "eps");
  if (quantity == SweepQuantity::BandMask && !has_eps) {
    throw Error(ErrorKind::InvalidParameter, "band_mask needs an eps axis");
  }
  if (quantity != SweepQuantity::BandMask && has_eps) {
    throw Error(ErrorKind::InvalidParameter, "only band_mask accepts an eps axis");
  }
  if (quantity == SweepQuantity::GapWidths && emin && !(*emin < emax)) {
    throw Error(ErrorKind::InvalidParameter, "energy window needs emin < emax");
  }
  if (cell_count() > kMaxSweepCells) {
    throw Error(ErrorKind::GridTooLarge, "sweep grid exceeds 1e7 cells");
  }
}

unsigned sweep_threads() {
  if (const char* env = std::getenv("HYBRIDCOMB_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return static_cast<unsigned>(std::min<long>(n, 1024));
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

Table run_sweep(const SweepSpec& spec, unsigned threads) {
  spec.validate();
  const std::size_t n2 = spec.axis2 ? spec.axis2->steps : 1;
  const std::size_t cells = spec.cell_count();

  Table table;
  table.columns.push_back(spec.axis1.name);
  if (spec.axis2) table.columns.push_back(spec.axis2->name);
  switch (spec.quantity) {
    case SweepQuantity::BandMask: table.columns.push_back("allowed"); break;
    case SweepQuantity::GapWidths:
      for (const char* c : {"gap", "lo", "hi", "width"}) table.columns.push_back(c);
      break;
    case SweepQuantity::CurvatureSign: table.columns.push_back("curvature_sign"); break;
  }

  auto evaluate = [&](std::size_t cell) {
    const std::size_t i = cell / n2;
    const std::size_t j = cell % n2;
    ParamInput input = spec.fixed;
    double eps = 0.0;
    std::vector<Cell> prefix;
    auto apply = [&](const Axis& axis, std::size_t index) {
      const double v = axis.value(index);
      prefix.emplace_back(v);
      if (axis.name == "eps") eps = v;
      else input.set(axis.name, v);
    };
    apply(spec.axis1, i);
    if (spec.axis2) apply(*spec.axis2, j);
    const CombParams p = input.build();
    validate(p);

    Rows rows;
    auto row_with = [&](std::initializer_list<Cell> tail) {
      std::vector<Cell> row = prefix;
      row.insert(row.end(), tail);
      rows.push_back(std::move(row));
    };
    switch (spec.quantity) {
      case SweepQuantity::BandMask: {
        // A critical comb has a discrete spectrum: no interval of allowed energy.
        const bool allowed = !is_opaque(p) && secular(eps, p).allowed();
        row_with({std::int64_t{allowed ? 1 : 0}});
        break;
      }
      case SweepQuantity::GapWidths: {
        if (is_opaque(p)) break;
        const double lo = spec.emin.value_or(default_eps_min(p));
        const auto gaps = band_gaps(enumerate_bands(p, lo, spec.emax));
        for (std::size_t g = 0; g < gaps.size(); ++g) {
          row_with({static_cast<std::int64_t>(g), gaps[g].lo, gaps[g].hi, gaps[g].width()});
        }
        break;
      }
      case SweepQuantity::CurvatureSign: {
        std::int64_t sign = 0;
        if (!is_opaque(p)) {
          if (const auto band = lowest_band(p)) sign = band->curvature_sign;
        }
        row_with({sign});
        break;
      }
    }
    return rows;
  };

  std::vector<Rows> results(cells);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t cell = next++; cell < cells; cell = next++) {
      try {
        results[cell] = evaluate(cell);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = cells;
      }
    }
  };
  const unsigned n_workers = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, threads), cells));
  std::vector<std::thread> pool;
  pool.reserve(n_workers);
  for (unsigned t = 0; t < n_workers; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  for (auto& rows : results) {
    for (auto& row : rows) table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace hybridcomb::cli
