// ffgeom: successive minima, covering and packing of periodic lattices over F_q(x).

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>

#include "ffgeom/errors.hpp"
#include "ffgeom/hankel.hpp"
#include "ffgeom/instance.hpp"
#include "ffgeom/oracle.hpp"
#include "ffgeom/parse.hpp"
#include "ffgeom/verify.hpp"

using namespace ffgeom;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kOther = 1, kVerifyFailed = 2, kPrecision = 3, kParse = 4 };

bool as_json = false;

std::string qtext(const QExp& e) { return e.is_bottom() ? "0" : "q^" + std::to_string(e.exp()); }
json qjson(const QExp& e) { return e.is_bottom() ? json{{"exp", nullptr}} : json{{"exp", e.exp()}}; }

std::string rat_exp_text(const BigRational& r) {
  if (denominator(r) == 1) return "q^" + numerator(r).str();
  return "q^(" + r.str() + ")";
}

json vec_json(const KVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(format(x));
  return a;
}

std::string vec_text(const KVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + format(v[i]);
  return s + ")";
}

void emit(const json& j, const std::string& text) {
  if (as_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text << "\n";
}

/// The instance with Lambda given by `basis` and alpha/reps moved to ambient coordinates.
Instance rebased(const Instance& in, const PeriodicLattice& s, const MatRat& basis) {
  Instance out = in;
  out.basis = basis;
  if (in.frame == Frame::Reduced) {
    if (out.alpha) out.alpha = s.frame().ambient(*out.alpha);
    if (out.reps)
      for (auto& r : *out.reps) r = s.frame().ambient(r);
    out.frame = Frame::Ambient;
  }
  return out;
}

int cmd_reduce(const Instance& in, const std::string& save) {
  const ConvexBody C = in.convex_body();
  const PeriodicLattice s = in.periodic();
  const ReducedBasis rb = reduce_lattice(in.lattice(), C);
  json j;
  j["exps"] = json::array();
  std::string text = "exps:";
  for (int e : rb.exps) {
    j["exps"].push_back({{"exp", e}});
    text += " " + qtext(QExp(e));
  }
  j["basis"] = matrix_to_json(rb.vectors);
  text += "\nbasis (columns):";
  for (std::size_t i = 0; i < rb.dim(); ++i) {
    text += "\n ";
    for (std::size_t k = 0; k < rb.dim(); ++k) text += " " + format(rb.vectors(i, k));
  }
  Instance out = rebased(in, s, rb.vectors);
  j["instance"] = instance_to_json(out);
  if (!save.empty()) {
    std::ofstream f(save);
    if (!f) throw ParseError("cannot write " + save, "save");
    f << instance_to_json(out).dump(2) << "\n";
  }
  emit(j, text);
  return kOk;
}

int cmd_minima(const Instance& in) {
  const ConvexBody C = in.convex_body();
  const PeriodicLattice s = in.periodic();
  auto m = succ_minima_periodic(s, C);
  json j;
  j["minima"] = json::array();
  j["witnesses"] = json::array();
  std::string text;
  for (std::size_t i = 0; i < m.exps.size(); ++i) {
    j["minima"].push_back({{"exp", m.exps[i]}});
    j["witnesses"].push_back(vec_json(m.witnesses[i]));
    text += (i ? " " : "") + qtext(QExp(m.exps[i]));
  }
  emit(j, text);
  return kOk;
}

int cmd_covrad(const Instance& in, bool oracle, bool bounds, int depth) {
  const ConvexBody C = in.convex_body();
  const PeriodicLattice s = in.periodic();
  json j;
  std::string text;
  if (oracle) {
    const int M = depth > 0 ? depth : default_grid_depth(s, C);
    QExp r = covrad_oracle(s, C, M);
    j["covrad"] = qjson(r);
    j["method"] = "oracle";
    j["depth"] = M;
    text = qtext(r);
  } else {
    QExp r = covrad_periodic(s, C);
    j["covrad"] = qjson(r);
    j["method"] = "hankel";
    text = qtext(r);
  }
  if (bounds) {
    if (s.kind() != PeriodicLattice::Kind::Alpha) throw std::invalid_argument("--bounds needs an alpha instance");
    auto b = covrad_bounds(s.lattice(), s.N(), C);
    j["bounds"] = {{"lower", {{"exp", b.lower.str()}}}, {"upper", qjson(b.upper)}};
    text += "\nbounds: " + rat_exp_text(b.lower) + " <= covrad <= " + qtext(b.upper);
  }
  emit(j, text);
  return kOk;
}

int cmd_packrad(const Instance& in) {
  QExp r = packing_radius(in.periodic(), in.convex_body());
  emit({{"packrad", qjson(r)}}, qtext(r));
  return kOk;
}

int cmd_density(const Instance& in) {
  BigRational r = packing_density(in.periodic(), in.convex_body());
  emit({{"density", r.str()}, {"num", numerator(r).str()}, {"den", denominator(r).str()}}, r.str());
  return kOk;
}

int cmd_count(const Instance& in, int R) {
  BigInt n = count_points(in.periodic(), in.convex_body(), R);
  emit({{"radius", {{"exp", R}}}, {"count", n.str()}}, n.str());
  return kOk;
}

int cmd_dinv(const Instance& in) {
  const PeriodicLattice s = in.periodic();
  const ConvexBody C = in.convex_body();
  QExp d = d_invariant(s, C);
  auto b = check_bounds(s, C);
  json j{{"d", qjson(d)}};
  std::string text = qtext(d);
  if (b.sandwich) {
    const auto& w = *b.sandwich;
    const int sum = std::accumulate(b.exps.begin(), b.exps.end(), 0);
    j["hypothesis"] = w.hypothesis;
    j["sandwich"] = {{"lower", w.lower}, {"product", sum}, {"upper", w.upper}, {"holds", w.holds}};
    text += "\nsandwich: q^" + std::to_string(w.lower) + " <= q^" + std::to_string(sum) + " <= q^" +
            std::to_string(w.upper) + (w.holds ? " holds" : " fails") +
            (w.hypothesis ? "" : " (hypothesis not met)");
  }
  emit(j, text);
  return kOk;
}

int cmd_mink(const Instance& in) {
  const PeriodicLattice s = in.periodic();
  const ConvexBody C = in.convex_body();
  auto r = minkowski_search(s, C);
  json j{{"measure", qjson(r.measure)},
         {"threshold", qjson(r.threshold)},
         {"weak_threshold", qjson(r.weak_threshold)},
         {"hypothesis", r.hypothesis}};
  std::string text = "measure " + qtext(r.measure) + ", threshold " + qtext(r.threshold) +
                     (r.hypothesis ? " (hypothesis holds)" : " (hypothesis not met)");
  if (r.point) {
    j["point"] = vec_json(*r.point);
    text += "\npoint " + vec_text(*r.point);
  } else {
    j["point"] = nullptr;
    text += "\nno point";
  }
  emit(j, text);
  return kOk;
}

int cmd_verify(const std::string& grid, std::uint64_t seed, int per_cell) {
  VerifyReport rep = verify(parse_grid(grid), seed, per_cell);
  json j;
  j["seed"] = seed;
  j["ok"] = rep.ok();
  j["checks"] = json::array();
  std::ostringstream t;
  t << std::left;
  for (const auto& r : rep.rows) {
    j["checks"].push_back({{"name", r.name},
                           {"instances", r.instances},
                           {"passed", r.passed},
                           {"skipped", r.skipped},
                           {"failures", r.failures}});
    t << (r.ok() ? "PASS " : "FAIL ") << r.name;
    for (std::size_t k = r.name.size(); k < 20; ++k) t << ' ';
    t << r.passed << "/" << r.instances;
    if (r.skipped) t << " (" << r.skipped << " skipped)";
    t << "\n";
    for (const auto& f : r.failures) t << "    " << f << "\n";
  }
  t << (rep.ok() ? "all checks passed" : "verification FAILED");
  emit(j, t.str());
  return rep.ok() ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Successive minima, covering radius and packing of periodic lattices over F_q(x)"};
  app.require_subcommand(1);
  std::string fmt = "text";
  app.add_option("--format", fmt, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::string file;
  auto with_file = [&](CLI::App* c) { c->add_option("instance", file, "Instance JSON file")->required(); };

  auto* reduce = app.add_subcommand("reduce", "Reduced basis and successive minima of Lambda");
  with_file(reduce);
  std::string save;
  reduce->add_option("--save", save, "Write the instance with the reduced basis");

  auto* minima = app.add_subcommand("minima", "Successive minima of S");
  with_file(minima);

  auto* covrad = app.add_subcommand("covrad", "Covering radius of S");
  with_file(covrad);
  bool oracle = false, bounds = false;
  int depth = 0;
  covrad->add_flag("--oracle", oracle, "Use the grid oracle");
  covrad->add_flag("--bounds", bounds, "Also print the a priori bounds");
  covrad->add_option("--depth", depth, "Oracle grid depth (default N + |e_1| + |e_d| + 4)");

  auto* packrad = app.add_subcommand("packrad", "Packing radius of S");
  with_file(packrad);
  auto* density = app.add_subcommand("density", "Packing density of S");
  with_file(density);
  auto* count = app.add_subcommand("count", "Number of points of S in the ball of radius q^R");
  with_file(count);
  int radius = 0;
  count->add_option("--radius", radius, "Radius exponent R")->required();
  auto* dinv = app.add_subcommand("dinv", "The determinant invariant d and the minima sandwich");
  with_file(dinv);
  auto* mink = app.add_subcommand("mink-search", "Convex body search for a nonzero point of S in C");
  with_file(mink);

  auto* ver = app.add_subcommand("verify", "Closed forms against brute-force oracles on random instances");
  std::string grid = "q=2,3;d=2,3;N=0,1,2";
  std::uint64_t seed = 7;
  int per_cell = 3;
  ver->add_option("--grid", grid, "Grid, e.g. \"q=2,3;d=2,3;N=0,1,2\"");
  ver->add_option("--seed", seed, "Random seed");
  ver->add_option("--per-cell", per_cell, "Instances per grid cell")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }
  as_json = fmt == "json";

  try {
    if (*ver) return cmd_verify(grid, seed, per_cell);
    const Instance in = load_instance(file);
    if (*reduce) return cmd_reduce(in, save);
    if (*minima) return cmd_minima(in);
    if (*covrad) return cmd_covrad(in, oracle, bounds, depth);
    if (*packrad) return cmd_packrad(in);
    if (*density) return cmd_density(in);
    if (*count) return cmd_count(in, radius);
    if (*dinv) return cmd_dinv(in);
    if (*mink) return cmd_mink(in);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const InsufficientPrecision& e) {
    std::cerr << "insufficient precision: " << e.what();
    if (e.required_floor() != InsufficientPrecision::kUnknownFloor)
      std::cerr << " (coefficients needed down to x^" << e.required_floor() << ")";
    std::cerr << "\n";
    return kPrecision;
  } catch (const PrecisionTooCoarse& e) {
    std::cerr << "precision too coarse: " << e.what() << "\n";
    return kPrecision;
  } catch (const NRational& e) {
    std::cerr << "error: " << e.what() << " (witness Q = " << ffgeom::format(e.witness()) << ")\n";
    return kOther;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kOther;
  }
  return kOther;
}
