#include "ncalc/json_io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

#include "ncalc/errors.hpp"

namespace ncalc {

namespace {

Rational parse_rational_at(const Json& node, const std::string& path) {
  if (!node.is_string()) throw Error(ErrorKind::ParseError, "expected a rational string \"p\" or \"p/q\"", path);
  auto r = Rational::parse(node.get<std::string>());
  if (!r) throw Error(ErrorKind::ParseError, "invalid rational '" + node.get<std::string>() + "'", path);
  return *r;
}

RVec parse_rvec_at(const Json& node, std::size_t len, const std::string& path) {
  if (!node.is_array() || node.size() != len)
    throw Error(ErrorKind::ParseError, "expected an array of " + std::to_string(len) + " rationals", path);
  RVec v;
  v.reserve(len);
  for (std::size_t i = 0; i < len; ++i) v.push_back(parse_rational_at(node[i], path + "[" + std::to_string(i) + "]"));
  return v;
}

}  // namespace

Algebra parse_algebra_json(const Json& doc) {
  if (!doc.is_object()) throw Error(ErrorKind::ParseError, "algebra document must be a JSON object", "$");
  if (!doc.contains("dim") || !doc["dim"].is_number_integer() || doc["dim"].get<long>() < 1)
    throw Error(ErrorKind::ParseError, "\"dim\" must be a positive integer", "$.dim");
  const std::size_t n = doc["dim"].get<std::size_t>();

  std::vector<std::string> labels;
  if (doc.contains("basis")) {
    const Json& b = doc["basis"];
    if (!b.is_array() || b.size() != n)
      throw Error(ErrorKind::ParseError, "\"basis\" must list exactly dim labels", "$.basis");
    for (std::size_t i = 0; i < n; ++i) {
      if (!b[i].is_string())
        throw Error(ErrorKind::ParseError, "basis label must be a string", "$.basis[" + std::to_string(i) + "]");
      labels.push_back(b[i].get<std::string>());
    }
  }

  if (!doc.contains("table") || !doc["table"].is_array() || doc["table"].size() != n)
    throw Error(ErrorKind::ParseError, "\"table\" must be an n x n array of coefficient vectors", "$.table");
  std::vector<std::vector<RVec>> table(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Json& row = doc["table"][i];
    const std::string rp = "$.table[" + std::to_string(i) + "]";
    if (!row.is_array() || row.size() != n)
      throw Error(ErrorKind::ParseError, "table row must have n entries", rp);
    for (std::size_t j = 0; j < n; ++j)
      table[i].push_back(parse_rvec_at(row[j], n, rp + "[" + std::to_string(j) + "]"));
  }

  if (!doc.contains("unit")) throw Error(ErrorKind::ParseError, "\"unit\" is required", "$.unit");
  RVec unit = parse_rvec_at(doc["unit"], n, "$.unit");

  return make_algebra(table, unit, labels);
}

Algebra parse_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open file '" + path + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("invalid JSON: ") + e.what(), path);
  }
  return parse_algebra_json(doc);
}

std::vector<Matrix> parse_matrix_list_json(const Json& doc, std::size_t n) {
  if (!doc.is_array()) throw Error(ErrorKind::ParseError, "submodule document must be a JSON array of matrices", "$");
  std::vector<Matrix> out;
  for (std::size_t k = 0; k < doc.size(); ++k) {
    const Json& mj = doc[k];
    const std::string mp = "$[" + std::to_string(k) + "]";
    if (!mj.is_array() || mj.size() != n)
      throw Error(ErrorKind::ParseError, "matrix must have " + std::to_string(n) + " rows", mp);
    Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      RVec row = parse_rvec_at(mj[r], n, mp + "[" + std::to_string(r) + "]");
      for (std::size_t c = 0; c < n; ++c) m.at(r, c) = row[c];
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<Matrix> parse_matrix_list_file(const std::string& path, std::size_t n) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open file '" + path + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("invalid JSON: ") + e.what(), path);
  }
  return parse_matrix_list_json(doc, n);
}

Json rvec_to_json(const RVec& v) {
  Json out = Json::array();
  for (const Rational& x : v) out.push_back(x.str());
  return out;
}

Json matrix_rows_to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(rvec_to_json(m.row(r)));
  return out;
}

Json covector_to_json(const Covector& w) {
  Json out = Json::array();
  for (std::size_t j = 0; j < w.values().cols(); ++j) out.push_back(rvec_to_json(w.values().col(j)));
  return out;
}

Json bidual_element_to_json(const BidualElement& w) {
  Json out = Json::array();
  for (std::size_t j = 0; j < w.values().cols(); ++j) out.push_back(rvec_to_json(w.values().col(j)));
  return out;
}

Json subspace_to_json(const Subspace& s) {
  Json out;
  out["ambient"] = s.ambient();
  out["dim"] = s.dim();
  Json rows = Json::array();
  for (const RVec& r : s.basis()) rows.push_back(rvec_to_json(r));
  out["basis"] = rows;
  return out;
}

Json algebra_to_json(const Algebra& a) {
  const std::size_t n = a.dim();
  Json out;
  out["dim"] = n;
  out["basis"] = a.labels();
  Json table = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < n; ++j) row.push_back(rvec_to_json(a.structure(i, j)));
    table.push_back(std::move(row));
  }
  out["table"] = std::move(table);
  out["unit"] = rvec_to_json(a.unit_coeffs());
  return out;
}

std::string fnv1a64_hex(const std::string& data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex;
  for (int shift = 60; shift >= 0; shift -= 4) os << ((h >> shift) & 0xF);
  return os.str();
}

Json report_to_json(const ReflexivityReport& r, const ReportOptions& opts) {
  Json out;
  out["tool"] = Json{{"name", kToolName}, {"version", kToolVersion}};
  Json input;
  input["digest"] = "fnv1a64:" + opts.input_digest;
  input["source_kind"] = opts.source_kind;
  input["source"] = opts.source_detail;
  out["input"] = std::move(input);
  out["algebra"] = Json{{"dim", r.alg.dim()}, {"basis", r.alg.labels()}};
  out["dims"] = Json{{"algebra", r.alg.dim()},      {"center", r.zcenter.dim()},
                     {"v", r.v.dim()},              {"v_star", r.vstar.dim()},
                     {"v_dagger", r.vdagger.dim()}, {"v_ddagger", r.vddagger.dim()}};
  out["embedding_rank"] = r.embedding_rank;
  out["flags"] = Json{{"injective", r.injective},
                      {"reflexive", r.reflexive},
                      {"nondegenerate", r.nondegenerate},
                      {"certificate_present", r.certificate.has_value()}};
  out["ghosts"] = Json{{"covector_ghost_dim", r.ghosts.ghost_dim}, {"bidual_ghost_dim", r.ghost_bidual_dim}};
  if (!r.certificate.has_value()) {
    // By the dual-basis lemma the failed solve decides projectivity for any
    // finite generating set, so the verdict is generating-set independent.
    out["projectivity"] = "no dual-basis certificate: V is not projective as a finitely generated Z-module";
  } else {
    out["projectivity"] = "dual-basis certificate found: V is a projective finitely generated Z-module";
  }
  if (opts.include_bases) {
    Json bases;
    Json vb = Json::array();
    for (const Derivation& d : r.v.basis()) vb.push_back(matrix_rows_to_json(d.matrix()));
    bases["v"] = std::move(vb);
    Json vsb = Json::array();
    for (const Covector& w : r.vstar.basis()) vsb.push_back(covector_to_json(w));
    bases["v_star"] = std::move(vsb);
    Json vdb = Json::array();
    for (const Covector& w : r.vdagger.basis()) vdb.push_back(covector_to_json(w));
    bases["v_dagger"] = std::move(vdb);
    Json vddb = Json::array();
    for (const BidualElement& w : r.vddagger.basis()) vddb.push_back(bidual_element_to_json(w));
    bases["v_ddagger"] = std::move(vddb);
    if (r.certificate) {
      Json cert;
      Json gens = Json::array();
      for (const Derivation& d : r.certificate->generators()) gens.push_back(matrix_rows_to_json(d.matrix()));
      cert["generators"] = std::move(gens);
      Json cogens = Json::array();
      for (const Covector& w : r.certificate->cogenerators) cogens.push_back(covector_to_json(w));
      cert["cogenerators"] = std::move(cogens);
      bases["certificate"] = std::move(cert);
    } else {
      bases["certificate"] = nullptr;
    }
    Json reps = Json::array();
    for (const Covector& w : r.ghosts.representatives) reps.push_back(covector_to_json(w));
    bases["ghost_covector_representatives"] = std::move(reps);
    out["bases"] = std::move(bases);
  }
  return out;
}

}  // namespace ncalc
