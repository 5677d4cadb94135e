#include "ybx/json_io.hpp"

#include <fstream>

namespace ybx {

namespace {

const json& must_get(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw JsonError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw JsonError(path + "/" + key, "missing key");
  return *it;
}

long must_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw JsonError(path, "expected an integer");
  return j.get<long>();
}

Scalar scalar_from_json(const json& j, const Field& f, const std::string& path) {
  if (f.is_rational()) {
    if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
    if (j.is_number_integer()) return Scalar::of_int(f, j.get<long>());
    throw JsonError(path, "expected a rational as a string");
  }
  if (j.is_number_integer()) return Scalar::residue(f, j.get<long long>());
  if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
  throw JsonError(path, "expected a residue as an integer");
}

json scalar_to_json(const Scalar& s) {
  if (s.field().is_rational()) return s.str();
  return static_cast<long>(s.residue_value());
}

}  // namespace

json field_to_json(const Field& f) {
  if (f.is_rational()) return json{{"field", "Q"}};
  return json{{"field", "Fp"}, {"p", f.prime()}};
}

Field field_from_json(const json& doc) {
  const json& tag = must_get(doc, "field", "");
  if (!tag.is_string()) throw JsonError("/field", "expected \"Q\" or \"Fp\"");
  std::string s = tag.get<std::string>();
  if (s == "Q") return Field::rationals();
  if (s == "Fp") {
    long p = must_int(must_get(doc, "p", ""), "/p");
    if (p < 2) throw JsonError("/p", "modulus must be >= 2");
    try {
      return Field::mod(static_cast<std::uint32_t>(p));
    } catch (const NonPrimeModulus& e) {
      throw JsonError("/p", e.what());
    }
  }
  throw JsonError("/field", "unknown field tag '" + s + "'");
}

json linmap_to_json(const LinMap& m) {
  json rows = json::array();
  for (const auto& row : m.dense_rows()) {
    json r = json::array();
    for (const auto& v : row) r.push_back(scalar_to_json(v));
    rows.push_back(std::move(r));
  }
  return json{{"dom", m.dom()}, {"cod", m.cod()}, {"rows", std::move(rows)}};
}

LinMap linmap_from_json(const json& j, const Field& f, const std::string& path) {
  long dom = must_int(must_get(j, "dom", path), path + "/dom");
  long cod = must_int(must_get(j, "cod", path), path + "/cod");
  if (dom < 1 || cod < 1) throw JsonError(path, "dimensions must be positive");
  const json& rows = must_get(j, "rows", path);
  if (!rows.is_array() || static_cast<long>(rows.size()) != cod)
    throw JsonError(path + "/rows", "expected " + std::to_string(cod) + " rows");
  LinMap m(f, dom, cod);
  for (long r = 0; r < cod; ++r) {
    const json& row = rows[r];
    std::string rpath = path + "/rows/" + std::to_string(r);
    if (!row.is_array() || static_cast<long>(row.size()) != dom)
      throw JsonError(rpath, "expected " + std::to_string(dom) + " entries");
    for (long c = 0; c < dom; ++c) {
      Scalar v = scalar_from_json(row[c], f, rpath + "/" + std::to_string(c));
      if (!v.is_zero()) m.set(r, c, v);
    }
  }
  return m;
}

json coalgebra_to_json(const Coalgebra& c) {
  return json{{"dim", c.dim()},
              {"labels", c.labels()},
              {"delta", linmap_to_json(c.delta())},
              {"counit", linmap_to_json(c.counit())}};
}

Coalgebra coalgebra_from_json(const json& j, const Field& f, const std::string& path) {
  long dim = must_int(must_get(j, "dim", path), path + "/dim");
  LinMap delta = linmap_from_json(must_get(j, "delta", path), f, path + "/delta");
  LinMap counit = linmap_from_json(must_get(j, "counit", path), f, path + "/counit");
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    const json& l = j["labels"];
    if (!l.is_array()) throw JsonError(path + "/labels", "expected an array");
    for (const auto& s : l) {
      if (!s.is_string()) throw JsonError(path + "/labels", "labels must be strings");
      labels.push_back(s.get<std::string>());
    }
  }
  if (delta.dom() != dim) throw JsonError(path + "/delta", "delta/dim mismatch");
  try {
    return Coalgebra(std::move(delta), std::move(counit), std::move(labels));
  } catch (const Error& e) {
    throw JsonError(path, e.what());
  }
}

json pair_to_json(const BraidedPair& p) {
  json doc = field_to_json(p.field());
  doc["coalgebra"] = coalgebra_to_json(p.coalgebra());
  doc["r"] = linmap_to_json(p.r());
  return doc;
}

std::pair<Coalgebra, LinMap> raw_pair_from_json(const json& doc) {
  Field f = field_from_json(doc);
  Coalgebra c = coalgebra_from_json(must_get(doc, "coalgebra", ""), f, "/coalgebra");
  LinMap r = linmap_from_json(must_get(doc, "r", ""), f, "/r");
  if (r.dom() != c.dim() * c.dim() || r.cod() != r.dom())
    throw JsonError("/r", "r must be an endomorphism of X^2");
  return {std::move(c), std::move(r)};
}

BraidedPair pair_from_json(const json& doc) {
  auto [c, r] = raw_pair_from_json(doc);
  VerificationReport axioms = check_coalgebra(c);
  if (!axioms.all_pass()) {
    for (const auto& chk : axioms.checks())
      if (!chk.pass)
        throw Error("coalgebra fails " + chk.name + " (witness index " +
                    std::to_string(chk.witness.value_or(-1)) + ")");
  }
  return BraidedPair(std::move(c), std::move(r));
}

json hopf_fields_to_json(const HopfAlgebra& h) {
  return json{{"coalgebra", coalgebra_to_json(h.coalgebra())},
              {"m", linmap_to_json(h.m())},
              {"unit", linmap_to_json(h.unit())},
              {"antipode", linmap_to_json(h.antipode())}};
}

HopfAlgebra hopf_from_fields(const json& j, const Field& f, const std::string& path) {
  Coalgebra c = coalgebra_from_json(must_get(j, "coalgebra", path), f, path + "/coalgebra");
  LinMap m = linmap_from_json(must_get(j, "m", path), f, path + "/m");
  LinMap unit = linmap_from_json(must_get(j, "unit", path), f, path + "/unit");
  LinMap s = linmap_from_json(must_get(j, "antipode", path), f, path + "/antipode");
  try {
    return HopfAlgebra(std::move(c), std::move(m), std::move(unit), std::move(s));
  } catch (const Error& e) {
    throw JsonError(path, e.what());
  }
}

json hopf_to_json(const HopfAlgebra& h) {
  json doc = field_to_json(h.field());
  doc["hopf"] = hopf_fields_to_json(h);
  return doc;
}

HopfAlgebra hopf_from_json(const json& doc) {
  Field f = field_from_json(doc);
  return hopf_from_fields(must_get(doc, "hopf", ""), f, "/hopf");
}

json brace_to_json(const Brace& b) {
  json doc = field_to_json(b.field());
  doc["brace"] = json{{"coalgebra", coalgebra_to_json(b.coalgebra())},
                      {"m", linmap_to_json(b.m())},
                      {"unit", linmap_to_json(b.unit())},
                      {"antipode", linmap_to_json(b.antipode())},
                      {"m_circ", linmap_to_json(b.m_circ())},
                      {"unit_circ", linmap_to_json(b.unit_circ())},
                      {"antipode_circ", linmap_to_json(b.antipode_circ())}};
  return doc;
}

Brace brace_from_json(const json& doc) {
  Field f = field_from_json(doc);
  const json& j = must_get(doc, "brace", "");
  const std::string path = "/brace";
  Coalgebra c = coalgebra_from_json(must_get(j, "coalgebra", path), f, path + "/coalgebra");
  try {
    return Brace(std::move(c),
                 linmap_from_json(must_get(j, "m", path), f, path + "/m"),
                 linmap_from_json(must_get(j, "unit", path), f, path + "/unit"),
                 linmap_from_json(must_get(j, "antipode", path), f, path + "/antipode"),
                 linmap_from_json(must_get(j, "m_circ", path), f, path + "/m_circ"),
                 linmap_from_json(must_get(j, "unit_circ", path), f, path + "/unit_circ"),
                 linmap_from_json(must_get(j, "antipode_circ", path), f,
                                  path + "/antipode_circ"));
  } catch (const JsonError&) {
    throw;
  } catch (const Error& e) {
    throw JsonError(path, e.what());
  }
}

json operator_to_json(const BraidingOperator& o) {
  json doc = field_to_json(o.hopf.field());
  doc["operator"] = json{{"hopf", hopf_fields_to_json(o.hopf)},
                         {"r", linmap_to_json(o.r)}};
  return doc;
}

BraidingOperator operator_from_json(const json& doc) {
  Field f = field_from_json(doc);
  const json& j = must_get(doc, "operator", "");
  HopfAlgebra h = hopf_from_fields(must_get(j, "hopf", "/operator"), f, "/operator/hopf");
  LinMap r = linmap_from_json(must_get(j, "r", "/operator"), f, "/operator/r");
  long n2 = h.dim() * h.dim();
  if (r.dom() != n2 || r.cod() != n2)
    throw JsonError("/operator/r", "r must be an endomorphism of A^2");
  LinMap id = LinMap::identity(f, h.dim());
  LinMap lambda = compose(tensor(id, h.coalgebra().counit()), r);
  LinMap rho = compose(tensor(h.coalgebra().counit(), id), r);
  return BraidingOperator{std::move(h), std::move(r), std::move(lambda), std::move(rho)};
}

json cocycle_to_json(const Cocycle& k) {
  json doc = field_to_json(k.domain.field());
  doc["cocycle"] = json{{"domain", hopf_fields_to_json(k.domain)},
                        {"codomain", hopf_fields_to_json(k.codomain)},
                        {"action", linmap_to_json(k.action)},
                        {"pi", linmap_to_json(k.pi)}};
  return doc;
}

Cocycle cocycle_from_json(const json& doc) {
  Field f = field_from_json(doc);
  const json& j = must_get(doc, "cocycle", "");
  return Cocycle{hopf_from_fields(must_get(j, "domain", "/cocycle"), f, "/cocycle/domain"),
                 hopf_from_fields(must_get(j, "codomain", "/cocycle"), f,
                                  "/cocycle/codomain"),
                 linmap_from_json(must_get(j, "action", "/cocycle"), f, "/cocycle/action"),
                 linmap_from_json(must_get(j, "pi", "/cocycle"), f, "/cocycle/pi")};
}

json prim_to_json(const PrimParams& p) {
  json doc = field_to_json(p.field());
  doc["d"] = p.d;
  doc["g"] = linmap_to_json(p.g);
  doc["h"] = linmap_to_json(p.h);
  doc["sigmaV"] = linmap_to_json(p.sigma_v);
  doc["tauV"] = linmap_to_json(p.tau_v);
  return doc;
}

PrimParams prim_from_json(const json& doc) {
  Field f = field_from_json(doc);
  long d = must_int(must_get(doc, "d", ""), "/d");
  PrimParams p{d, linmap_from_json(must_get(doc, "g", ""), f, "/g"),
               linmap_from_json(must_get(doc, "h", ""), f, "/h"),
               linmap_from_json(must_get(doc, "sigmaV", ""), f, "/sigmaV"),
               linmap_from_json(must_get(doc, "tauV", ""), f, "/tauV")};
  try {
    validate_params(p);
  } catch (const Error& e) {
    throw JsonError("", e.what());
  }
  return p;
}

json doubled_to_json(const DoubledSolution& d) {
  json doc = pair_to_json(d.doubled);
  long n = d.base.dim();
  doc["blocks"] = json{{"X", json::array({0, n})}, {"SX", json::array({n, 2 * n})}};
  doc["S"] = linmap_to_json(d.swap);
  return doc;
}

json presentation_to_json(const Presentation& p) {
  json rels = json::array();
  for (const auto& [lhs, rhs] : p.relations)
    rels.push_back(json{{"lhs", lhs}, {"rhs", rhs}});
  return json{{"generators", p.generators}, {"relations", std::move(rels)}};
}

json report_to_json(const VerificationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks()) {
    json item{{"name", c.name}, {"pass", c.pass}};
    if (c.witness) item["witness"] = *c.witness;
    if (!c.note.empty()) item["note"] = c.note;
    checks.push_back(std::move(item));
  }
  return json{{"pass", r.all_pass()}, {"checks", std::move(checks)}};
}

json load_json_file(const std::string& filename) {
  std::ifstream in(filename);
  if (!in) throw JsonError("", "cannot open '" + filename + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw JsonError("", std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace ybx
