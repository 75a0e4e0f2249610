#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "hybridcomb/hybridcomb.hpp"
#include "inputs.hpp"
#include "output.hpp"
#include "sweep.hpp"

#ifndef HYBRIDCOMB_VERSION
#define HYBRIDCOMB_VERSION "unknown"
#endif

namespace hybridcomb::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Common {
  ParamInput params;
  double v0 = 0.0;
  double v1 = 0.0;
  double d = 0.5;
  double emin = 0.0;
  double emax = 0.0;
  int grid = 0;
  double tol = kDefaultEdgeTolerance;
  std::string format = "csv";
  std::string output = "-";

  CLI::Option* v0_opt = nullptr;
  CLI::Option* v1_opt = nullptr;
  CLI::Option* d_opt = nullptr;
  CLI::Option* emin_opt = nullptr;
  CLI::Option* emax_opt = nullptr;
  CLI::Option* grid_opt = nullptr;

  Format fmt() const { return format == "json" ? Format::Json : Format::Csv; }
  std::optional<double> emin_given() const { return emin_opt->count() ? std::optional(emin) : std::nullopt; }
  int grid_or(int fallback) const { return grid_opt->count() ? grid : fallback; }

  // Two species as soon as any second-node flag appears.
  ParamInput input() const {
    ParamInput in = params;
    if (v0_opt->count()) in.v0 = v0;
    if (v1_opt->count()) in.v1 = v1;
    if (d_opt->count()) in.d = d;
    return in;
  }

  double emax_or_default(double a) const { return emax_opt->count() ? emax : 100.0 / (a * a); }
};

/// What a subcommand produced: the data file body.
struct Output {
  std::string body;
};

Json params_json(const CombParams& p) {
  Json j = Json::object();
  if (const auto* one = std::get_if<OneSpeciesParams>(&p)) {
    j["species"] = 1;
    j["w0"] = one->w0;
    j["w1"] = one->w1;
    j["a"] = one->a;
  } else {
    const auto& two = std::get<TwoSpeciesParams>(p);
    j["species"] = 2;
    j["w0"] = two.w0;
    j["w1"] = two.w1;
    j["v0"] = two.v0;
    j["v1"] = two.v1;
    j["d"] = two.d;
    j["a"] = two.a;
  }
  return j;
}

Json document(const std::string& command, const CombParams* p) {
  Json doc = Json::object();
  doc["schema_version"] = 1;
  doc["command"] = command;
  if (p) doc["params"] = params_json(*p);
  return doc;
}

Output emit_table(const Common& c, const std::string& command, const CombParams* p, const Table& table,
                  const std::function<void(Json&)>& extra = {}) {
  std::ostringstream os;
  if (c.fmt() == Format::Csv) {
    write_csv(os, table);
    return {os.str()};
  }
  Json doc = document(command, p);
  if (extra) extra(doc);
  doc["columns"] = table.columns;
  doc["rows"] = table_records(table);
  return {dump_json(doc)};
}

struct Window {
  double lo;
  double hi;
};

Window energy_window(const Common& c, const CombParams& p) {
  const Window w{c.emin_given().value_or(default_eps_min(p)), c.emax_or_default(lattice_spacing(p))};
  if (!(w.lo < w.hi)) throw Error(ErrorKind::InvalidParameter, "energy window needs emin < emax");
  return w;
}

int positive_grid(const Common& c, int fallback, const char* what) {
  const int n = c.grid_or(fallback);
  if (n < 1) throw Error(ErrorKind::InvalidParameter, fmt::format("--grid ({}) must be >= 1", what));
  return n;
}

std::int64_t as_int(std::size_t n) { return static_cast<std::int64_t>(n); }
std::int64_t as_int(EdgeSign s) { return static_cast<std::int64_t>(s); }

// bands --------------------------------------------------------------------------------------

Output cmd_bands(const Common& c) {
  const CombParams p = c.input().build();
  require_band_mode(p);
  const Window w = energy_window(c, p);
  const int n_scan = positive_grid(c, kDefaultScanPerBand, "scan points per band");
  const auto bands = enumerate_bands(p, w.lo, w.hi, n_scan, c.tol);

  if (c.fmt() == Format::Csv) {
    Table t{{"band", "lower", "upper", "lower_sign", "upper_sign", "lower_touching", "upper_touching", "width",
             "curvature_sign"},
            {}};
    for (const auto& b : bands) {
      t.rows.push_back({as_int(b.index), b.lower.epsilon, b.upper.epsilon, as_int(b.lower.edge_sign),
                        as_int(b.upper.edge_sign), std::int64_t{b.lower.touching}, std::int64_t{b.upper.touching},
                        b.width(), std::int64_t{b.curvature_sign}});
    }
    std::ostringstream os;
    write_csv(os, t);
    return {os.str()};
  }

  auto edge_json = [](const BandEdge& e) {
    Json j = Json::object();
    j["epsilon"] = e.epsilon;
    j["edge_sign"] = static_cast<int>(e.edge_sign);
    j["touching"] = e.touching;
    return j;
  };
  Json doc = document("bands", &p);
  doc["window"] = {{"emin", w.lo}, {"emax", w.hi}};
  doc["bands"] = Json::array();
  for (const auto& b : bands) {
    Json jb = Json::object();
    jb["index"] = b.index;
    jb["lower"] = edge_json(b.lower);
    jb["upper"] = edge_json(b.upper);
    jb["width"] = b.width();
    jb["curvature_sign"] = b.curvature_sign;
    doc["bands"].push_back(std::move(jb));
  }
  return {dump_json(doc)};
}

// dispersion ---------------------------------------------------------------------------------

Output cmd_dispersion(const Common& c, const std::vector<std::size_t>& wanted) {
  const CombParams p = c.input().build();
  require_band_mode(p);
  const Window w = energy_window(c, p);
  const int n_samples = positive_grid(c, 65, "samples per band");
  if (n_samples < 2) throw Error(ErrorKind::InvalidParameter, "dispersion needs --grid >= 2");
  const auto bands = enumerate_bands(p, w.lo, w.hi, kDefaultScanPerBand, c.tol, static_cast<std::size_t>(n_samples));
  for (std::size_t index : wanted) {
    if (index >= bands.size()) {
      throw Error(ErrorKind::InvalidParameter,
                  fmt::format("band {} is not inside the window ({} complete bands)", index, bands.size()));
    }
  }

  Table t{{"band", "q", "epsilon"}, {}};
  Json curvature = Json::array();
  for (const auto& b : bands) {
    if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), b.index) == wanted.end()) continue;
    for (const auto& s : b.samples) t.rows.push_back({as_int(b.index), s.q, s.epsilon});
    curvature.push_back({{"band", b.index}, {"curvature_sign", b.curvature_sign}});
  }
  return emit_table(c, "dispersion", &p, t, [&](Json& doc) { doc["curvature"] = curvature; });
}

// dos ----------------------------------------------------------------------------------------

struct DosOptions {
  std::string statistics;
  double mu = 0.0;
  double temperature = 1.0;
  bool allowed_only = false;
};

Output cmd_dos(const Common& c, const DosOptions& o) {
  const CombParams p = c.input().build();
  require_band_mode(p);
  const Window w = energy_window(c, p);
  const int n = positive_grid(c, 1001, "energy points");

  std::optional<OccupationSpec> occ;
  if (!o.statistics.empty()) {
    occ = OccupationSpec{o.statistics == "bose_einstein" ? Statistics::BoseEinstein : Statistics::FermiDirac, o.mu,
                         o.temperature};
    occ->validate();
  }
  std::vector<EnergyInterval> allowed;
  if (o.allowed_only) allowed = allowed_intervals(p, w.lo, w.hi, kDefaultScanPerBand, c.tol);
  auto inside = [&](double e) {
    return std::any_of(allowed.begin(), allowed.end(), [e](const EnergyInterval& iv) { return e >= iv.lo && e <= iv.hi; });
  };

  Table t{{"epsilon", "g"}, {}};
  if (occ) t.columns.push_back("occupation");
  for (int i = 0; i < n; ++i) {
    const double e = n == 1 ? w.lo : w.lo + (w.hi - w.lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    if (o.allowed_only && !inside(e)) continue;
    DosSample s = density_of_states(e, p);
    std::vector<Cell> row{s.epsilon, s.g};
    if (occ) {
      // No states, nothing to occupy; this also keeps gaps below μ finite for bosons.
      if (s.g == 0.0) s.occupation = 0.0;
      else s = occupation(s, *occ);
      row.emplace_back(*s.occupation);
    }
    t.rows.push_back(std::move(row));
  }
  return emit_table(c, "dos", &p, t, [&](Json& doc) {
    doc["window"] = {{"emin", w.lo}, {"emax", w.hi}};
    if (occ) doc["occupation"] = {{"statistics", o.statistics}, {"mu", o.mu}, {"temperature", o.temperature}};
  });
}

// discrete -----------------------------------------------------------------------------------

Output cmd_discrete(const Common& c, int count) {
  const ParamInput in = c.input();
  if (in.two_species()) throw Error(ErrorKind::InvalidParameter, "discrete handles one species only");
  if (count < 0) throw Error(ErrorKind::InvalidParameter, "--count must be >= 0");
  const OneSpeciesParams p{in.w0, in.w1, in.a};
  const auto roots = discrete_spectrum_critical(p, static_cast<std::size_t>(count), c.tol);
  Table t{{"n", "k", "epsilon"}, {}};
  for (std::size_t i = 0; i < roots.size(); ++i) t.rows.push_back({as_int(i), std::sqrt(roots[i]), roots[i]});
  const CombParams cp = p;
  return emit_table(c, "discrete", &cp, t);
}

// merge --------------------------------------------------------------------------------------

Output cmd_merge(const Common& c, const std::string& direction) {
  const ParamInput in = c.input();
  if (!in.two_species()) {
    throw Error(ErrorKind::InvalidParameter, "merge needs a second node: give --v0, --v1 or --d");
  }
  const auto two = std::get<TwoSpeciesParams>(in.build());
  Table t{{"direction", "u0", "u1"}, {}};
  if (direction != "a") {
    const auto m = merge_d_to_zero(two);
    t.rows.push_back({std::string("to_zero"), m.u0, m.u1});
  }
  if (direction != "zero") {
    const auto m = merge_d_to_a(two);
    t.rows.push_back({std::string("to_a"), m.u0, m.u1});
  }
  const CombParams cp = two;
  return emit_table(c, "merge", &cp, t);
}

// sweep --------------------------------------------------------------------------------------

struct SweepOptions {
  std::string axis1;
  std::string axis2;
  std::string quantity = "band_mask";
};

Output cmd_sweep(const Common& c, const SweepOptions& o) {
  SweepSpec spec;
  spec.axis1 = parse_axis(o.axis1);
  if (!o.axis2.empty()) spec.axis2 = parse_axis(o.axis2);
  spec.fixed = c.input();
  spec.quantity = o.quantity == "gap_widths"       ? SweepQuantity::GapWidths
                  : o.quantity == "curvature_sign" ? SweepQuantity::CurvatureSign
                                                   : SweepQuantity::BandMask;
  spec.emin = c.emin_given();
  spec.emax = c.emax_or_default(spec.fixed.a);
  const Table t = run_sweep(spec, sweep_threads());
  return emit_table(c, "sweep", nullptr, t, [&](Json& doc) {
    doc["fixed"] = params_json(spec.fixed.build());
    doc["quantity"] = o.quantity;
  });
}

// units --------------------------------------------------------------------------------------

Output cmd_units(const Common& c, const PhysicalUnitsSpec& spec) {
  const OneSpeciesParams p = to_dimensionless(spec);
  Table t{{"w0", "w1", "a"}, {{p.w0, p.w1, p.a}}};
  return emit_table(c, "units", nullptr, t, [&](Json& doc) {
    doc["physical"] = {{"mu_eV_A", spec.mu}, {"lambda_eV_A2", spec.lambda}, {"y0_A", spec.y0}, {"mass_me", spec.mass}};
  });
}

// plumbing -----------------------------------------------------------------------------------

std::string utc_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

struct IoFailure {
  std::string message;
};

void write_file(const std::string& path, const std::string& body) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoFailure{"cannot open '" + path + "' for writing"};
  f << body;
  f.flush();
  if (!f) throw IoFailure{"failed writing '" + path + "'"};
}

void add_common(CLI::App& app, Common& c) {
  auto* g = "Comb parameters";
  app.add_option("--w0", c.params.w0, "delta strength of the first node")->group(g);
  app.add_option("--w1", c.params.w1, "delta-prime strength of the first node (|w1| = 1 is opaque)")->group(g);
  c.v0_opt = app.add_option("--v0", c.v0, "delta strength of the second node (selects two species)")->group(g);
  c.v1_opt = app.add_option("--v1", c.v1, "delta-prime strength of the second node")->group(g);
  c.d_opt = app.add_option("--d", c.d, "offset of the second node inside the cell, 0 < d < a (default a/2)")->group(g);
  app.add_option("--a", c.params.a, "lattice spacing")->capture_default_str()->group(g);

  auto* w = "Numerics and output";
  c.emin_opt = app.add_option("--emin", c.emin, "lower energy (default: below every negative band)")->group(w);
  c.emax_opt = app.add_option("--emax", c.emax, "upper energy (default 100/a^2)")->group(w);
  c.grid_opt = app.add_option("--grid", c.grid,
                              "resolution: scan points per band (bands), samples per band (dispersion), "
                              "energy points (dos)")
                   ->group(w);
  app.add_option("--tol", c.tol, "absolute tolerance on band-edge energies")->capture_default_str()->group(w);
  app.add_option("--format", c.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str()
      ->group(w);
  app.add_option("--output", c.output, "data file, '-' for stdout; metadata goes to <output>.meta.json")
      ->capture_default_str()
      ->group(w);
}

}  // namespace

int exit_code_for(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidParameter:
    case ErrorKind::OpaqueRegime:
    case ErrorKind::NotCritical:
    case ErrorKind::InvalidRegime:
    case ErrorKind::MergeSingular:
    case ErrorKind::GridTooLarge:
    case ErrorKind::NonPositiveInput:
    case ErrorKind::NotApplicable:
      return kExitParameter;
    case ErrorKind::DegenerateMomentum:
    case ErrorKind::PoleHit:
    case ErrorKind::SingularConversion:
    case ErrorKind::ScanTooCoarse:
    case ErrorKind::QuadratureFailure:
    case ErrorKind::BoseDivergence:
      return kExitNumerical;
  }
  return kExitNumerical;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Band structure, dispersion and density of states of periodic delta/delta-prime combs.\n"
               "Energies are in units of mc^2/2 and lengths in hbar/mc; temperatures absorb k_B.",
               "hybridcomb"};
  app.require_subcommand(1);
  app.set_config("--config", "",
                 "'key = value' file using the flag names, subcommand options under [subcommand]; "
                 "flags override it");
  app.set_version_flag("--version", HYBRIDCOMB_VERSION);

  Common c;
  add_common(app, c);

  std::function<Output()> action;

  auto* bands = app.add_subcommand("bands", "allowed bands inside an energy window");
  bands->callback([&] { action = [&] { return cmd_bands(c); }; });

  std::vector<std::size_t> band_indices;
  auto* dispersion = app.add_subcommand("dispersion", "sampled dispersion relations eps_n(q)");
  dispersion->add_option("--bands", band_indices, "band indices to emit (default all)")->delimiter(',');
  dispersion->callback([&] { action = [&] { return cmd_dispersion(c, band_indices); }; });

  DosOptions dos_opts;
  auto* dos = app.add_subcommand("dos", "density of states on an energy grid");
  dos->add_option("--statistics", dos_opts.statistics, "attach an occupation: fermi_dirac or bose_einstein")
      ->check(CLI::IsMember({"fermi_dirac", "bose_einstein"}));
  dos->add_option("--mu", dos_opts.mu, "chemical potential")->capture_default_str();
  dos->add_option("--temperature", dos_opts.temperature, "temperature in energy units (k_B = 1)")
      ->capture_default_str();
  dos->add_flag("--allowed-only", dos_opts.allowed_only, "emit only energies inside allowed bands");
  dos->callback([&] { action = [&] { return cmd_dos(c, dos_opts); }; });

  int count = 5;
  auto* discrete = app.add_subcommand("discrete", "discrete spectrum of the opaque comb (|w1| = 1)");
  discrete->add_option("--count", count, "number of levels")->capture_default_str();
  discrete->callback([&] { action = [&] { return cmd_discrete(c, count); }; });

  std::string direction = "both";
  auto* merge = app.add_subcommand("merge", "single-node couplings of two coalescing nodes");
  merge->add_option("--direction", direction, "zero (d -> 0), a (d -> a) or both")
      ->check(CLI::IsMember({"zero", "a", "both"}))
      ->capture_default_str();
  merge->callback([&] { action = [&] { return cmd_merge(c, direction); }; });

  SweepOptions sweep_opts;
  auto* sweep = app.add_subcommand("sweep", "parameter maps; workers capped by HYBRIDCOMB_THREADS");
  sweep->add_option("--axis1", sweep_opts.axis1, "name:min:max:steps, name in w0 w1 v0 v1 d a eps")->required();
  sweep->add_option("--axis2", sweep_opts.axis2, "optional second axis, same syntax");
  sweep->add_option("--quantity", sweep_opts.quantity, "band_mask, gap_widths or curvature_sign")
      ->check(CLI::IsMember({"band_mask", "gap_widths", "curvature_sign"}))
      ->capture_default_str();
  sweep->callback([&] { action = [&] { return cmd_sweep(c, sweep_opts); }; });

  PhysicalUnitsSpec units_spec;
  auto* units = app.add_subcommand("units", "convert physical couplings to dimensionless ones");
  units->add_option("--mu", units_spec.mu, "delta strength in eV*Angstrom")->capture_default_str();
  units->add_option("--lambda", units_spec.lambda, "delta-prime strength in eV*Angstrom^2")->capture_default_str();
  units->add_option("--y0", units_spec.y0, "node spacing in Angstrom")->capture_default_str();
  units->add_option("--mass", units_spec.mass, "particle mass in electron masses")->capture_default_str();
  units->callback([&] { action = [&] { return cmd_units(c, units_spec); }; });

  for (auto* sub : {bands, dispersion, dos, discrete, merge, sweep, units}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::FileError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParameter;
  }

  const auto started = std::chrono::steady_clock::now();
  const std::string started_utc = utc_now();
  try {
    const Output result = action();
    if (c.output == "-") {
      out << result.body;
      out.flush();
      return out ? kExitOk : kExitIo;
    }
    write_file(c.output, result.body);

    Json meta = Json::object();
    meta["schema_version"] = 1;
    meta["tool"] = "hybridcomb";
    meta["version"] = HYBRIDCOMB_VERSION;
    meta["arguments"] = args;
    meta["data_file"] = c.output;
    meta["format"] = c.format;
    meta["started_utc"] = started_utc;
    meta["elapsed_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    meta["sweep_threads"] = sweep_threads();
    write_file(c.output + ".meta.json", dump_json(meta));
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    if (e.kind() == ErrorKind::OpaqueRegime) {
      err << "hint: |w1| = 1 has no bands; run 'hybridcomb discrete' for its levels\n";
    }
    return exit_code_for(e.kind());
  } catch (const IoFailure& e) {
    err << "error: " << e.message << '\n';
    return kExitIo;
  }
}

}  // namespace hybridcomb::cli
