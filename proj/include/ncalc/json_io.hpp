#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ncalc/bidual.hpp"

namespace ncalc {

/// Insertion-ordered JSON keeps every serialization byte-deterministic.
using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "ncalc";
inline constexpr const char* kToolVersion = "1.0.0";

/// Algebra input document -> validated Algebra. Throws ParseError with a
/// JSON-path location for malformed documents; construction errors
/// (NotAssociative, BadUnit, ShapeMismatch) pass through untouched.
Algebra parse_algebra_json(const Json& doc);
Algebra parse_algebra_file(const std::string& path);

/// Submodule generator file: a JSON array of n x n matrices of rational
/// strings (row-major; column j holds the coefficients of the image of e_j).
std::vector<Matrix> parse_matrix_list_json(const Json& doc, std::size_t n);
std::vector<Matrix> parse_matrix_list_file(const std::string& path, std::size_t n);

/// Canonical re-serialization of the algebra in input-document form; the
/// basis of the byte-stable input digest.
Json algebra_to_json(const Algebra& a);

Json rvec_to_json(const RVec& v);
Json matrix_rows_to_json(const Matrix& m);
/// Value-map serializations: the list of value columns in domain-basis order.
Json covector_to_json(const Covector& w);
Json bidual_element_to_json(const BidualElement& w);
Json subspace_to_json(const Subspace& s);

/// 64-bit FNV-1a, hex-encoded; used as the (non-cryptographic) input digest.
std::string fnv1a64_hex(const std::string& data);

struct ReportOptions {
  bool include_bases = false;
  std::string input_digest;      // precomputed over the canonical input form
  std::string source_kind;       // "preset" or "file"
  Json source_detail;            // e.g. {"name": "matrix", "param": 2}
};

Json report_to_json(const ReflexivityReport& r, const ReportOptions& opts);

}  // namespace ncalc
