#include "wallcx/json_io.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <sstream>

#ifndef WALLCX_VERSION
#define WALLCX_VERSION "0.0.0"
#endif

namespace wallcx {

namespace {

[[noreturn]] void bad(const std::string& what) { throw JsonFormatError(what); }

void expect_schema(const Json& j, const char* tag) {
  if (!j.is_object()) bad("expected a JSON object");
  auto it = j.find("schema");
  if (it == j.end() || !it->is_string()) bad("missing schema field");
  if (it->get<std::string>() != tag)
    bad("schema mismatch: expected " + std::string(tag) + ", got " + it->get<std::string>());
}

/* Shape violations surface from the object validators as invalid_argument;
   keep the reader contract to a single exception type. */
template <class T>
const T& checked(const T& value) {
  try {
    value.validate();
  } catch (const std::invalid_argument& e) {
    bad(e.what());
  }
  return value;
}

const Json& field(const Json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) bad(std::string("missing field ") + name);
  return *it;
}

std::size_t size_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number_unsigned()) bad(std::string(name) + " must be a nonnegative integer");
  return v.get<std::size_t>();
}

/* 0/1 arrays round-trip the F2 and alpha data. */
Json bits_to_json(const std::vector<std::uint8_t>& bits) {
  Json a = Json::array();
  for (auto b : bits) a.push_back(b & 1);
  return a;
}

std::vector<std::uint8_t> bits_from_json(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  std::vector<std::uint8_t> out;
  out.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_number_integer()) bad(std::string(what) + " entries must be 0 or 1");
    auto v = e.get<std::int64_t>();
    if (v != 0 && v != 1) bad(std::string(what) + " entries must be 0 or 1");
    out.push_back(static_cast<std::uint8_t>(v));
  }
  return out;
}

Json int_rows(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m.get(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix int_rows_from(const Json& j, std::size_t rows, std::size_t cols, const char* what) {
  if (!j.is_array() || j.size() != rows) bad(std::string(what) + ": wrong row count");
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Json& row = j[i];
    if (!row.is_array() || row.size() != cols) bad(std::string(what) + ": wrong column count");
    for (std::size_t k = 0; k < cols; ++k) m.set(i, k, int_from_json(row[k]));
  }
  return m;
}

Json f2_rows(const F2Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.get(i, j) ? 1 : 0);
    rows.push_back(std::move(row));
  }
  return rows;
}

F2Matrix f2_rows_from(const Json& j, std::size_t n, const char* what) {
  if (!j.is_array() || j.size() != n) bad(std::string(what) + ": wrong row count");
  F2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    auto row = bits_from_json(j[i], what);
    if (row.size() != n) bad(std::string(what) + ": wrong column count");
    for (std::size_t k = 0; k < n; ++k)
      if (row[k]) m.set(i, k, 1);
  }
  return m;
}

Json coeffs_to_json(const std::vector<coeff_t>& c) {
  Json a = Json::array();
  for (auto v : c) a.push_back(v);
  return a;
}

std::vector<coeff_t> coeffs_from_json(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  std::vector<coeff_t> out;
  out.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_number_integer()) bad(std::string(what) + " entries must be integers");
    out.push_back(e.get<coeff_t>());
  }
  return out;
}

Json sparse_chain(const std::vector<Int>& chain) {
  Json a = Json::array();
  for (std::size_t i = 0; i < chain.size(); ++i)
    if (chain[i] != 0) a.push_back(Json::array({i, int_to_json(chain[i])}));
  return a;
}

}  // namespace

const char* library_version() { return WALLCX_VERSION; }

Json int_to_json(const Int& v) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (v >= lo && v <= hi) return Json(static_cast<std::int64_t>(v));
  return Json(v.str());
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
    return Int(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s.empty()) bad("empty integer string");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) bad("bad integer string: " + s);
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') bad("bad integer string: " + s);
    return Int(s[0] == '+' ? s.substr(1) : s);
  }
  bad("expected an integer or a decimal string");
}

Json to_json(const PairingPresentation& p) {
  p.validate();
  Json j;
  j["schema"] = presentation_schema;
  j["rank"] = p.rank;
  j["lambda"] = int_rows(p.lambda_matrix);
  j["q"] = f2_rows(p.q_matrix);
  j["alpha"] = bits_to_json(p.alpha_gens);
  return j;
}

PairingPresentation presentation_from_json(const Json& j) {
  expect_schema(j, presentation_schema);
  PairingPresentation p;
  p.rank = size_field(j, "rank");
  p.lambda_matrix = int_rows_from(field(j, "lambda"), p.rank, p.rank, "lambda");
  p.q_matrix = f2_rows_from(field(j, "q"), 2 * p.rank, "q");
  p.alpha_gens = bits_from_json(field(j, "alpha"), "alpha");
  checked(p);
  return p;
}

Json to_json(const SubspacePair& sub, std::size_t rank) {
  Json j;
  j["schema"] = subspace_schema;
  j["rank"] = rank;
  Json vs = Json::array();
  for (const auto& x : sub.v) {
    if (x.c.size() != rank) bad("subspace: x vector of wrong rank");
    vs.push_back(coeffs_to_json(x.c));
  }
  Json ws = Json::array();
  for (const auto& y : sub.w) {
    if (y.free.size() != rank || y.tor.size() != rank) bad("subspace: y vector of wrong rank");
    Json w;
    w["free"] = coeffs_to_json(y.free);
    w["tor"] = bits_to_json(y.tor);
    ws.push_back(std::move(w));
  }
  j["v"] = std::move(vs);
  j["w"] = std::move(ws);
  return j;
}

std::pair<SubspacePair, std::size_t> subspace_from_json(const Json& j) {
  expect_schema(j, subspace_schema);
  const std::size_t rank = size_field(j, "rank");
  SubspacePair sub;
  const Json& vs = field(j, "v");
  if (!vs.is_array()) bad("v must be an array");
  for (const auto& row : vs) {
    XVector x{coeffs_from_json(row, "v")};
    if (x.c.size() != rank) bad("subspace: x vector of wrong rank");
    sub.v.push_back(std::move(x));
  }
  const Json& ws = field(j, "w");
  if (!ws.is_array()) bad("w must be an array");
  for (const auto& e : ws) {
    if (!e.is_object()) bad("w entries must be objects");
    YVector y;
    y.free = coeffs_from_json(field(e, "free"), "w.free");
    y.tor = bits_from_json(field(e, "tor"), "w.tor");
    if (y.free.size() != rank || y.tor.size() != rank) bad("subspace: y vector of wrong rank");
    sub.w.push_back(std::move(y));
  }
  return {std::move(sub), rank};
}

Json to_json(const SimplicialComplex& c) {
  c.validate();
  Json j;
  j["schema"] = complex_schema;
  j["vertices"] = c.vertex_labels;
  Json faces = Json::array();
  for (const auto& layer : c.faces_by_dim)
    for (const auto& f : layer) faces.push_back(f);
  j["faces"] = std::move(faces);
  return j;
}

SimplicialComplex complex_from_json(const Json& j) {
  expect_schema(j, complex_schema);
  SimplicialComplex c;
  const Json& vs = field(j, "vertices");
  if (!vs.is_array()) bad("vertices must be an array");
  for (const auto& v : vs) {
    if (!v.is_string()) bad("vertex labels must be strings");
    c.vertex_labels.push_back(v.get<std::string>());
  }
  const Json& faces = field(j, "faces");
  if (!faces.is_array()) bad("faces must be an array");
  for (const auto& f : faces) {
    if (!f.is_array() || f.empty()) bad("faces must be nonempty index arrays");
    Seq face;
    for (const auto& e : f) {
      if (!e.is_number_unsigned()) bad("face entries must be vertex indices");
      face.push_back(e.get<std::size_t>());
    }
    if (face.size() > c.faces_by_dim.size()) c.faces_by_dim.resize(face.size());
    c.faces_by_dim[face.size() - 1].insert(std::move(face));
  }
  checked(c);
  return c;
}

Json to_json(const SequencePoset& f) {
  f.validate();
  Json j;
  j["schema"] = poset_schema;
  j["ground"] = f.ground;
  Json els = Json::array();
  for (const auto& s : f.elements) els.push_back(s);
  j["elements"] = std::move(els);
  return j;
}

SequencePoset poset_from_json(const Json& j) {
  expect_schema(j, poset_schema);
  SequencePoset f;
  const Json& g = field(j, "ground");
  if (!g.is_array()) bad("ground must be an array");
  for (const auto& l : g) {
    if (!l.is_string()) bad("ground labels must be strings");
    f.ground.push_back(l.get<std::string>());
  }
  const Json& els = field(j, "elements");
  if (!els.is_array()) bad("elements must be an array");
  for (const auto& e : els) {
    if (!e.is_array() || e.empty()) bad("elements must be nonempty index arrays");
    Seq s;
    for (const auto& i : e) {
      if (!i.is_number_unsigned()) bad("element entries must be ground indices");
      s.push_back(i.get<std::size_t>());
    }
    f.elements.insert(std::move(s));
  }
  checked(f);
  return f;
}

Json to_json(const HomologyResult& h) {
  Json j;
  j["schema"] = homology_schema;
  j["reduced"] = h.reduced;
  Json groups = Json::array();
  auto one = [](long long degree, const HomologyGroup& g) {
    Json e;
    e["degree"] = degree;
    e["rank"] = g.rank;
    Json tor = Json::array();
    for (const auto& t : g.torsion) tor.push_back(int_to_json(t));
    e["torsion"] = std::move(tor);
    return e;
  };
  if (h.reduced) groups.push_back(one(-1, h.minus_one));
  for (std::size_t d = 0; d < h.groups.size(); ++d)
    groups.push_back(one(static_cast<long long>(d), h.groups[d]));
  j["groups"] = std::move(groups);
  return j;
}

HomologyResult homology_from_json(const Json& j) {
  expect_schema(j, homology_schema);
  HomologyResult h;
  const Json& red = field(j, "reduced");
  if (!red.is_boolean()) bad("reduced must be a boolean");
  h.reduced = red.get<bool>();
  const Json& groups = field(j, "groups");
  if (!groups.is_array()) bad("groups must be an array");
  long long expected = h.reduced ? -1 : 0;
  for (const auto& e : groups) {
    if (!e.is_object()) bad("group records must be objects");
    const Json& deg = field(e, "degree");
    if (!deg.is_number_integer() || deg.get<long long>() != expected)
      bad("group degrees must be consecutive");
    HomologyGroup g;
    const Json& rank = field(e, "rank");
    if (!rank.is_number_integer() || rank.get<long long>() < 0) bad("rank must be nonnegative");
    g.rank = rank.get<long long>();
    const Json& tor = field(e, "torsion");
    if (!tor.is_array()) bad("torsion must be an array");
    for (const auto& t : tor) g.torsion.push_back(int_from_json(t));
    if (expected == -1)
      h.minus_one = std::move(g);
    else
      h.groups.push_back(std::move(g));
    ++expected;
  }
  return h;
}

std::string homology_to_csv(const HomologyResult& h) {
  std::ostringstream out;
  out << "degree,rank,torsion\n";
  auto row = [&](long long degree, const HomologyGroup& g) {
    out << degree << ',' << g.rank << ',';
    for (std::size_t i = 0; i < g.torsion.size(); ++i) {
      if (i) out << ';';
      out << g.torsion[i].str();
    }
    out << '\n';
  };
  if (h.reduced) row(-1, h.minus_one);
  for (std::size_t d = 0; d < h.groups.size(); ++d) row(static_cast<long long>(d), h.groups[d]);
  return out.str();
}

Json to_json(const HomologyClassSet& s) {
  Json j;
  j["schema"] = cycles_schema;
  j["degree"] = s.degree;
  Json free = Json::array();
  for (const auto& c : s.free_reps) free.push_back(sparse_chain(c));
  j["free"] = std::move(free);
  Json tor = Json::array();
  for (const auto& [chain, order] : s.torsion_reps) {
    Json e;
    e["order"] = int_to_json(order);
    e["chain"] = sparse_chain(chain);
    tor.push_back(std::move(e));
  }
  j["torsion"] = std::move(tor);
  return j;
}

Json to_json(const BuildArtifact& a) {
  if (a.complex.has_value() == a.poset.has_value())
    bad("artifact must hold exactly one of complex/poset");
  Json j;
  j["schema"] = artifact_schema;
  j["kind"] = a.kind;
  j["g"] = a.g;
  j["bound"] = a.bounds.coeff_bound;
  Json caps;
  caps["max_seq_len"] = a.bounds.max_seq_len;
  caps["max_dim"] = a.bounds.max_dim;
  caps["face_budget"] = a.bounds.face_budget;
  j["caps"] = std::move(caps);
  j["builder_version"] = library_version();
  if (a.complex)
    j["complex"] = to_json(*a.complex);
  else
    j["poset"] = to_json(*a.poset);
  return j;
}

BuildArtifact artifact_from_json(const Json& j) {
  expect_schema(j, artifact_schema);
  BuildArtifact a;
  const Json& kind = field(j, "kind");
  if (!kind.is_string()) bad("kind must be a string");
  a.kind = kind.get<std::string>();
  a.g = size_field(j, "g");
  const Json& bound = field(j, "bound");
  if (!bound.is_number_integer() || bound.get<coeff_t>() < 1) bad("bound must be >= 1");
  a.bounds.coeff_bound = bound.get<coeff_t>();
  const Json& caps = field(j, "caps");
  if (!caps.is_object()) bad("caps must be an object");
  a.bounds.max_seq_len = size_field(caps, "max_seq_len");
  a.bounds.max_dim = size_field(caps, "max_dim");
  a.bounds.face_budget = size_field(caps, "face_budget");
  const bool has_complex = j.contains("complex");
  const bool has_poset = j.contains("poset");
  if (has_complex == has_poset) bad("artifact must hold exactly one of complex/poset");
  if (has_complex)
    a.complex = complex_from_json(j["complex"]);
  else
    a.poset = poset_from_json(j["poset"]);
  return a;
}

BuildArtifact build_artifact(const std::string& kind, std::size_t g, const EnumerationBounds& b) {
  BuildArtifact a;
  a.kind = kind;
  a.g = g;
  a.bounds = b;
  const StandardWallPairing p(g);
  if (kind == "kpi")
    a.complex = build_kpi(p, b);
  else if (kind == "unimodular")
    a.complex = build_unimodular_complex(g, b);
  else if (kind == "L")
    a.poset = build_L(p, b).poset;
  else if (kind == "M")
    a.poset = build_M(p, b).poset;
  else
    bad("unknown build kind " + kind);
  return a;
}

SimplicialComplex load_complex_any(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    bad(std::string("not valid JSON: ") + e.what());
  }
  if (!j.is_object()) bad("expected a JSON object");
  auto it = j.find("schema");
  if (it == j.end() || !it->is_string()) bad("missing schema field");
  const std::string tag = it->get<std::string>();
  if (tag == complex_schema) return complex_from_json(j);
  if (tag == poset_schema) return order_complex(poset_from_json(j));
  if (tag == artifact_schema) {
    BuildArtifact a = artifact_from_json(j);
    if (a.complex) return *a.complex;
    return order_complex(*a.poset);
  }
  bad("no complex inside schema " + tag);
}

}  // namespace wallcx
