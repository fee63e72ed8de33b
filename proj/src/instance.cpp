#include "ffgeom/instance.hpp"

#include <fstream>

#include "ffgeom/parse.hpp"

namespace ffgeom {

using nlohmann::json;

namespace {

std::string at(const std::string& field, std::size_t i) { return field + "[" + std::to_string(i) + "]"; }

const json& require(const json& j, const char* key) {
  if (!j.contains(key)) throw ParseError("missing", key);
  return j[key];
}

int as_int(const json& j, const std::string& field) {
  if (!j.is_number_integer()) throw ParseError("expected an integer", field);
  return j.get<int>();
}

KElem element(const Field& F, const json& j, const std::string& field) {
  if (!j.is_string()) throw ParseError("expected an element string", field);
  try {
    return parse_kelem(F, j.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(e.what(), field);
  }
}

RationalFunc rational(const Field& F, const json& j, const std::string& field) {
  KElem e = element(F, j, field);
  if (!e.is_exact()) throw ParseError("series literals are only allowed in alpha and reps", field);
  return e.rational();
}

KVec vector_of(const Field& F, const json& j, std::size_t d, const std::string& field) {
  if (!j.is_array() || j.size() != d) throw ParseError("expected a list of " + std::to_string(d) + " elements", field);
  KVec v;
  for (std::size_t i = 0; i < d; ++i) v.push_back(element(F, j[i], at(field, i)));
  return v;
}

MatRat matrix_of(const Field& F, const json& j, std::size_t d, const std::string& field) {
  if (!j.is_array() || j.size() != d) throw ParseError("expected " + std::to_string(d) + " rows", field);
  MatRat m(d, d, RationalFunc(F));
  for (std::size_t i = 0; i < d; ++i) {
    const json& row = j[i];
    if (!row.is_array() || row.size() != d)
      throw ParseError("expected " + std::to_string(d) + " entries", at(field, i));
    for (std::size_t k = 0; k < d; ++k) m(i, k) = rational(F, row[k], at(at(field, i), k));
  }
  return m;
}

std::string text(const KElem& e) { return format(e); }

}  // namespace

Lattice Instance::lattice() const {
  try {
    return Lattice(basis);
  } catch (const SingularInput& e) {
    throw ParseError(e.what(), "basis");
  }
}

ConvexBody Instance::convex_body() const {
  if (!body) return ConvexBody::identity(*field, dim());
  try {
    return ConvexBody(*body);
  } catch (const SingularInput& e) {
    throw ParseError(e.what(), "body");
  }
}

PeriodicLattice Instance::periodic(std::uint64_t cap) const {
  Lattice l = lattice();
  if (alpha) {
    KVec a = *alpha;
    if (precision)
      for (auto& x : a)
        if (x.is_exact()) x = KElem(expand_rational(x.rational(), *precision).truncated(*precision));
    return make_alpha_lattice(l, a, N, frame, cap);
  }
  if (reps) return PeriodicLattice::coset(l, *reps, frame, cap);
  return PeriodicLattice::plain(l);
}

Instance instance_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("instance must be a JSON object");
  Instance in;
  const int q = as_int(require(j, "q"), "q");
  if (q < 2) throw ParseError("not a field order", "q");
  try {
    if (j.contains("modulus")) {
      const json& m = j["modulus"];
      if (!m.is_string()) throw ParseError("expected a polynomial in t", "modulus");
      std::uint32_t p = 2;
      while (q % static_cast<int>(p) != 0) ++p;
      auto coeffs = parse_modulus(p, m.get<std::string>());
      in.field = &Field::extension(p, coeffs);
      if (in.field->q() != static_cast<std::uint32_t>(q)) throw ParseError("degree does not match q", "modulus");
    } else {
      in.field = &Field::of_order(static_cast<std::uint32_t>(q));
    }
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(e.what(), j.contains("modulus") ? "modulus" : "q");
  }
  const Field& F = *in.field;

  const int d = as_int(require(j, "d"), "d");
  if (d < 2) throw ParseError("dimension must be at least 2", "d");
  const auto ud = static_cast<std::size_t>(d);
  in.basis = matrix_of(F, require(j, "basis"), ud, "basis");
  if (j.contains("body")) in.body = matrix_of(F, j["body"], ud, "body");

  if (j.contains("alpha") && j.contains("reps")) throw ParseError("give alpha or reps, not both", "reps");
  if (j.contains("frame")) {
    const json& f = j["frame"];
    if (f == "reduced")
      in.frame = Frame::Reduced;
    else if (f == "ambient")
      in.frame = Frame::Ambient;
    else
      throw ParseError("expected \"ambient\" or \"reduced\"", "frame");
  }
  if (j.contains("alpha")) {
    in.alpha = vector_of(F, j["alpha"], ud, "alpha");
    in.N = as_int(require(j, "N"), "N");
    if (in.N < 0) throw ParseError("must be nonnegative", "N");
  } else if (j.contains("N")) {
    throw ParseError("N needs alpha", "N");
  }
  if (j.contains("reps")) {
    const json& r = j["reps"];
    if (!r.is_array()) throw ParseError("expected a list of vectors", "reps");
    in.reps.emplace();
    for (std::size_t i = 0; i < r.size(); ++i) in.reps->push_back(vector_of(F, r[i], ud, at("reps", i)));
  }
  if (j.contains("precision")) {
    if (!in.alpha) throw ParseError("precision needs alpha", "precision");
    in.precision = as_int(j["precision"], "precision");
    if (*in.precision >= 0) throw ParseError("must be negative", "precision");
  }
  return in;
}

json matrix_to_json(const MatRat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(format(m(i, k)));
    rows.push_back(row);
  }
  return rows;
}

json instance_to_json(const Instance& in) {
  const Field& F = *in.field;
  json j;
  j["q"] = F.q();
  if (F.q() != F.p()) {
    std::string mod;
    const auto& c = F.modulus();
    for (std::size_t k = c.size(); k-- > 0;) {
      if (c[k] == 0) continue;
      if (!mod.empty()) mod += " + ";
      if (c[k] != 1 || k == 0) mod += std::to_string(c[k]) + (k > 0 ? "*" : "");
      if (k > 0) mod += k == 1 ? "t" : "t^" + std::to_string(k);
    }
    j["modulus"] = mod;
  }
  j["d"] = in.dim();
  j["basis"] = matrix_to_json(in.basis);
  if (in.body) j["body"] = matrix_to_json(*in.body);
  if (in.alpha || in.reps) j["frame"] = in.frame == Frame::Reduced ? "reduced" : "ambient";
  if (in.alpha) {
    json a = json::array();
    for (const auto& x : *in.alpha) a.push_back(text(x));
    j["alpha"] = a;
    j["N"] = in.N;
  }
  if (in.reps) {
    json r = json::array();
    for (const auto& v : *in.reps) {
      json row = json::array();
      for (const auto& x : v) row.push_back(text(x));
      r.push_back(row);
    }
    j["reps"] = r;
  }
  if (in.precision) j["precision"] = *in.precision;
  return j;
}

Instance load_instance(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open " + path, "file");
  json j;
  try {
    j = json::parse(f);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), "file");
  }
  return instance_from_json(j);
}

}  // namespace ffgeom
