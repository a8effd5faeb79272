#include "medianlab/cli.hpp"

#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>

#include "medianlab/cubes.hpp"
#include "medianlab/dynamics.hpp"
#include "medianlab/errors.hpp"
#include "medianlab/factorization.hpp"
#include "medianlab/io.hpp"
#include "medianlab/measures.hpp"
#include "medianlab/oracle.hpp"
#include "medianlab/walk.hpp"
#include "medianlab/walls.hpp"

namespace medianlab::cli {

namespace {

using io::Json;

// A command fills both renderings; dispatch keeps the requested one.
struct Report {
  Json json = Json::object();
  std::ostringstream table;
  int exit_code = 0;
};

std::string fixed(double v, int precision) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(precision) << v;
  return os.str();
}

const std::string& single_input(const RunConfig& c) {
  if (c.inputs.size() != 1) {
    throw MedianError(ErrorCode::InvalidInput, c.command + " takes exactly one algebra file");
  }
  return c.inputs.front();
}

void run_check(const RunConfig& c, Report& r) {
  const std::string& path = single_input(c);
  const Json j = io::read_json(path);
  if (j.is_object() && j.contains("median") && j.contains("n") && j.at("n").is_number_unsigned()) {
    const auto n = j.at("n").get<std::size_t>();
    std::vector<Point> table;
    if (j.at("median").is_array()) {
      for (const Json& v : j.at("median")) {
        if (!v.is_number_unsigned() || v.get<std::size_t>() >= n) {
          throw MedianError(ErrorCode::InvalidInput, path + ": median entry out of range");
        }
        table.push_back(v.get<Point>());
      }
    }
    if (table.size() != n * n * n) {
      throw MedianError(ErrorCode::InvalidInput, path + ": median table must have n^3 entries");
    }
    const ValidationReport report = check_axioms(n, table, 1'000'000, c.seed);
    Json failures = Json::array();
    for (const AxiomFailure& f : report.failures) {
      failures.push_back({{"axiom", f.axiom}, {"witness", f.witness}});
    }
    r.json = {{"n", n}, {"representation", "table"}, {"sampled", report.sampled},
              {"valid", report.ok()}, {"violations", failures}};
    r.table << "points          " << n << "\nrepresentation  table\n"
            << "axioms          " << (report.ok() ? "ok" : "violated") << "\n";
    if (!report.ok()) r.table << report.describe() << "\n";
    r.exit_code = report.ok() ? 0 : 1;
    return;
  }
  const MedianAlgebra m = io::read_algebra(path);
  r.json = {{"n", m.size()},
            {"representation", m.has_embedding() ? "embedding" : "table"},
            {"sampled", m.size() > MedianAlgebra::kMaxTablePoints},
            {"valid", true},
            {"violations", Json::array()}};
  r.table << "points          " << m.size() << "\nrepresentation  "
          << (m.has_embedding() ? "embedding" : "table") << "\naxioms          ok\n";
}

void run_walls(const RunConfig& c, Report& r) {
  const MedianAlgebra m = io::read_algebra(single_input(c));
  const std::vector<Wall> walls = enumerate_walls(m);
  const auto adj = transversality_matrix(walls);
  Json sides = Json::array();
  Json matrix = Json::array();
  r.table << "walls " << walls.size() << "\n";
  for (std::size_t i = 0; i < walls.size(); ++i) {
    const std::string bits = to_bitstring(walls[i].canonical_side());
    sides.push_back(bits);
    std::string row;
    for (bool b : adj[i]) row += b ? '1' : '0';
    matrix.push_back(row);
    r.table << std::setw(4) << i << "  " << bits << "  " << row << "\n";
  }
  r.json = {{"n", m.size()}, {"wall_count", walls.size()}, {"walls", sides}, {"transverse", matrix}};
}

void run_cubes(const RunConfig& c, Report& r) {
  const MedianAlgebra m = io::read_algebra(single_input(c));
  const std::vector<Cube> cubes = enumerate_cubes(m, c.maximal);
  Json list = Json::array();
  r.table << (c.maximal ? "maximal cubes " : "cubes ") << cubes.size() << "\n";
  for (const Cube& cube : cubes) {
    list.push_back({{"members", to_bitstring(cube.members)},
                    {"dim", cube.dim},
                    {"hull", to_bitstring(cube.hull)}});
    r.table << to_bitstring(cube.members) << "  dim " << cube.dim << "  hull "
            << to_bitstring(cube.hull) << "\n";
  }
  r.json = {{"n", m.size()}, {"maximal_only", c.maximal}, {"count", cubes.size()}, {"cubes", list}};
}

void run_decompose(const RunConfig& c, Report& r) {
  const MedianAlgebra m = io::read_algebra(single_input(c));
  const Decomposition dec = cubical_factor(m);
  Json iso = Json::array();
  for (Point x = 0; x < m.size(); ++x) iso.push_back({dec.to_prime[x], dec.to_cube[x]});
  Json w1 = Json::array();
  for (const Wall& w : dec.w1) w1.push_back(to_bitstring(w.canonical_side()));
  r.json = {{"n", m.size()},
            {"w1_count", dec.w1.size()},
            {"w1", w1},
            {"dim_c", dec.dim()},
            {"m_prime", io::algebra_to_json(dec.m_prime)},
            {"fiber", to_bitstring(dec.fiber)},
            {"iso", iso}};
  r.table << "|W1|   " << dec.w1.size() << "\ndim C  " << dec.dim() << "\n|M'|   "
          << dec.m_prime.size() << "\nfiber  " << to_bitstring(dec.fiber) << "\n";
  if (dec.w1.empty()) r.table << "no cubical factor\n";
  r.table << "M'     " << io::algebra_to_json(dec.m_prime).dump() << "\n";
  r.table << "iso    point -> (M' point, C point)\n";
  for (Point x = 0; x < m.size(); ++x) {
    r.table << std::setw(6) << x << " -> (" << dec.to_prime[x] << ", " << dec.to_cube[x] << ")\n";
  }
}

void run_balanced(const RunConfig& c, Report& r) {
  const MedianAlgebra m = io::read_algebra(single_input(c));
  const FixedPointSearch search = find_phi_fixed_points(m, c.starts, c.iters, c.tol, c.seed);
  const std::vector<Wall> walls = enumerate_walls(m);
  Json cubes = Json::array();
  r.table << "cubical measures " << search.cubes.size() << "\n";
  for (std::size_t i = 0; i < search.cubes.size(); ++i) {
    const Measure lambda = cubical_measure(search.cubes[i]);
    const auto spectrum = halfspace_mass(m, lambda, walls);
    cubes.push_back({{"members", to_bitstring(search.cubes[i].members)},
                     {"measure", io::measure_to_json(lambda)},
                     {"phi_fixed", static_cast<bool>(search.cube_is_fixed[i])},
                     {"spectrum_entries", spectrum.size()}});
    r.table << std::setw(4) << i << "  " << to_bitstring(search.cubes[i].members)
            << "  fixed " << (search.cube_is_fixed[i] ? "yes" : "no") << "  spectrum ok ("
            << spectrum.size() << ")\n";
  }
  Json runs = Json::array();
  r.table << "runs " << search.runs.size() << ", within tol " << search.within_tol_count() << "\n";
  r.table << "start  nearest  distance  last_step\n";
  for (std::size_t i = 0; i < search.runs.size(); ++i) {
    const FixedPointRun& run = search.runs[i];
    runs.push_back({{"start", i},
                    {"nearest_cube", run.nearest_cube},
                    {"distance", fixed(run.distance, c.precision)},
                    {"last_step", fixed(run.last_step, c.precision)},
                    {"within_tol", run.within_tol}});
    r.table << std::setw(5) << i << "  " << std::setw(7) << run.nearest_cube << "  "
            << fixed(run.distance, c.precision) << "  " << fixed(run.last_step, c.precision)
            << "\n";
  }
  r.json = {{"n", m.size()},
            {"cubes", cubes},
            {"runs", runs},
            {"within_tol", search.within_tol_count()},
            {"starts", c.starts},
            {"iters", c.iters}};
}

io::ActionFile load_action(const RunConfig& c, const MedianAlgebra& m) {
  if (c.action_path.empty()) {
    throw MedianError(ErrorCode::InvalidInput, c.command + " needs --action <file>");
  }
  return io::read_action(m, c.action_path);
}

void run_stationary(const RunConfig& c, Report& r) {
  const MedianAlgebra m = io::read_algebra(single_input(c));
  const io::ActionFile af = load_action(c, m);
  if (!af.mu) throw MedianError(ErrorCode::InvalidInput, c.action_path + ": no \"mu\" given");
  const std::vector<Measure> vertices = stationary_polytope(af.action, *af.mu);
  Json vs = Json::array();
  r.table << "vertices " << vertices.size() << "\n";
  for (const Measure& v : vertices) {
    vs.push_back(io::measure_to_json(v));
    std::string row;
    for (const Rational& w : v.weights()) row += (row.empty() ? "" : " ") + format_rational(w);
    r.table << "  " << row << "\n";
  }
  r.json = {{"n", m.size()}, {"vertex_count", vertices.size()}, {"vertices", vs}};
}

void run_minimal(const RunConfig& c, Report& r) {
  const MedianAlgebra m = io::read_algebra(single_input(c));
  const io::ActionFile af = load_action(c, m);
  const MinimalityReport rep = is_minimal(af.action);
  r.json = {{"n", m.size()}, {"minimal", rep.minimal}};
  r.json["witness"] = rep.witness ? Json(to_bitstring(*rep.witness)) : Json(nullptr);
  r.table << "minimal  " << (rep.minimal ? "yes" : "no") << "\n";
  if (rep.witness) r.table << "witness  " << to_bitstring(*rep.witness) << "\n";
}

void run_simulate(const RunConfig& c, Report& r) {
  WalkConfig w;
  w.depth = c.depth;
  w.steps = c.steps;
  w.trajectories = c.trajectories;
  w.seed = c.seed;
  if (!c.mu.empty()) w.mu = StepDistribution::parse(c.mu);
  const WalkReport rep = simulate_walk(w);
  const WalkPrediction pred = predict_walk(w);
  const std::vector<double> emp = rep.prefix_distribution();
  const double tv = total_variation(emp, pred.cylinders);
  const std::vector<double> flips = rep.sign_flip_stats();
  const int p = c.precision;

  Json cyl = Json::array();
  r.table << "depth " << w.depth << "  steps " << w.steps << "  trajectories " << w.trajectories
          << "  seed " << w.seed << "\nmu " << w.mu.describe() << "\n";
  r.table << "word    count  empirical  exact\n";
  for (std::size_t i = 0; i < rep.cylinders.size(); ++i) {
    cyl.push_back({{"word", rep.cylinders[i]},
                   {"count", rep.prefix_counts[i]},
                   {"exact", fixed(pred.cylinders[i], p)}});
    r.table << std::left << std::setw(6) << rep.cylinders[i] << std::right << std::setw(7)
            << rep.prefix_counts[i] << "  " << fixed(emp[i], p) << "  "
            << fixed(pred.cylinders[i], p) << "\n";
  }
  Json flip = Json::array();
  r.table << "unresolved " << rep.unresolved << "\nprefix TV " << fixed(tv, p)
          << "\nsign +1 " << fixed(rep.sign_plus_fraction(), p) << " (exact "
          << fixed(pred.sign_plus, p) << ")\n";
  for (std::size_t k = 0; k < flips.size(); ++k) {
    flip.push_back({{"k", k + 1},
                    {"count", rep.constant_sign_counts[k]},
                    {"exact", fixed(pred.constant_sign[k], p)}});
    r.table << "constant sign over last " << k + 1 << ": " << fixed(flips[k], p) << " (exact "
            << fixed(pred.constant_sign[k], p) << ")\n";
  }
  r.json = {{"depth", w.depth},
            {"steps", w.steps},
            {"trajectories", w.trajectories},
            {"seed", w.seed},
            {"mu", w.mu.describe()},
            {"cylinders", cyl},
            {"unresolved", rep.unresolved},
            {"prefix_tv", fixed(tv, p)},
            {"sign_counts", {rep.sign_counts[0], rep.sign_counts[1]}},
            {"sign_plus_exact", fixed(pred.sign_plus, p)},
            {"constant_sign", flip}};
}

void run_oracle(const RunConfig& c, Report& r) {
  const oracle::Corpus corpus = oracle::enumerate_hypercube_subalgebras(c.dim);
  Json entries = Json::array();
  std::size_t failures = 0;
  r.table << "corpus {0,1}^" << c.dim << ": " << corpus.entries.size() << " algebras\n";
  for (const auto& e : corpus.entries) {
    const oracle::RecheckReport rep = oracle::brute_recheck(e.algebra, c.seed);
    if (!rep.ok()) ++failures;
    Json j = {{"label", e.label},
              {"algebra", io::algebra_to_json(e.algebra)},
              {"walls", rep.walls},
              {"cubes", rep.cubes},
              {"hulls_checked", rep.hulls_checked},
              {"gates_checked", rep.gates_checked},
              {"diffs", rep.diffs}};
    entries.push_back(std::move(j));
    r.table << e.label << ": walls " << rep.walls << ", cubes " << rep.cubes << ", "
            << (rep.ok() ? "clean" : "MISMATCH") << "\n";
    for (const std::string& d : rep.diffs) r.table << "  " << d << "\n";
  }
  r.json = {{"dim", c.dim}, {"count", corpus.entries.size()}, {"mismatches", failures},
            {"entries", entries}};
  if (failures) r.exit_code = 2;
}

const std::map<std::string, std::function<void(const RunConfig&, Report&)>>& commands() {
  static const std::map<std::string, std::function<void(const RunConfig&, Report&)>> table = {
      {"check", run_check},         {"walls", run_walls},       {"cubes", run_cubes},
      {"decompose", run_decompose}, {"balanced", run_balanced}, {"stationary", run_stationary},
      {"minimal", run_minimal},     {"simulate", run_simulate}, {"oracle", run_oracle},
  };
  return table;
}

}  // namespace

std::vector<std::string> command_names() {
  return {"check", "walls", "cubes", "decompose", "balanced", "stationary", "minimal", "simulate",
          "oracle"};
}

DispatchResult dispatch(const RunConfig& config) {
  DispatchResult result;
  try {
    const auto it = commands().find(config.command);
    if (it == commands().end()) {
      throw MedianError(ErrorCode::InvalidInput, "unknown command '" + config.command + "'");
    }
    if (config.format != "table" && config.format != "json") {
      throw MedianError(ErrorCode::InvalidInput, "--format must be table or json");
    }
    Report report;
    it->second(config, report);
    result.exit_code = report.exit_code;
    result.output = config.format == "json" ? report.json.dump(2) + "\n" : report.table.str();
    if (!config.out.empty()) {
      std::ofstream out(config.out, std::ios::binary);
      if (!out) throw MedianError(ErrorCode::InvalidInput, config.out + ": cannot write");
      out << result.output;
    }
  } catch (const MedianError& e) {
    result.exit_code = e.is_internal() ? 2 : 1;
    result.error = e.what();
  } catch (const std::exception& e) {
    result.exit_code = 2;
    result.error = std::string("unexpected failure: ") + e.what();
  }
  return result;
}

}  // namespace medianlab::cli
