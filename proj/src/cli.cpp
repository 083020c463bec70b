#include "ncalc/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "ncalc/errors.hpp"
#include "ncalc/json_io.hpp"

namespace ncalc::cli {

namespace {

struct Options {
  std::string algebra_path;
  std::string preset_name;
  std::optional<long> param;
  std::string submodule_path;
  std::string format = "json";
  std::string output_path;
  bool bases = false;
};

struct Input {
  Algebra alg;
  std::string digest;
  std::string source_kind;
  Json source_detail;
  std::optional<std::vector<Matrix>> submodule;  // raw generators, if any
};

Input load_algebra(const Options& o) {
  Algebra alg = o.preset_name.empty() ? parse_algebra_file(o.algebra_path) : preset(o.preset_name, o.param);
  std::string canonical = algebra_to_json(alg).dump();
  Json detail;
  std::string kind;
  if (!o.preset_name.empty()) {
    kind = "preset";
    detail["name"] = o.preset_name;
    if (o.param)
      detail["param"] = *o.param;
    else
      detail["param"] = nullptr;
  } else {
    kind = "file";
  }
  std::optional<std::vector<Matrix>> sub;
  if (!o.submodule_path.empty()) {
    sub = parse_matrix_list_file(o.submodule_path, alg.dim());
    Json subj = Json::array();
    for (const Matrix& m : *sub) subj.push_back(matrix_rows_to_json(m));
    canonical += "|submodule:" + subj.dump();
  }
  return Input{std::move(alg), fnv1a64_hex(canonical), std::move(kind), std::move(detail), std::move(sub)};
}

VModule load_vmodule(const Input& in) {
  if (!in.submodule) return derivations(in.alg);
  std::vector<Derivation> gens;
  for (std::size_t k = 0; k < in.submodule->size(); ++k) {
    try {
      gens.emplace_back(in.alg, (*in.submodule)[k]);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotADerivation) throw;
      throw Error(ErrorKind::NotADerivation, e.message(), "generator[" + std::to_string(k) + "]: " + e.location());
    }
  }
  return z_closure(in.alg, gens);
}

Json header(const Input& in) {
  Json out;
  out["tool"] = Json{{"name", kToolName}, {"version", kToolVersion}};
  Json input;
  input["digest"] = "fnv1a64:" + in.digest;
  input["source_kind"] = in.source_kind;
  input["source"] = in.source_detail;
  out["input"] = std::move(input);
  out["algebra"] = Json{{"dim", in.alg.dim()}, {"basis", in.alg.labels()}};
  return out;
}

std::string render_dims_text(const ReflexivityReport& r) {
  std::ostringstream os;
  os << "dims: A=" << r.alg.dim() << " Z=" << r.zcenter.dim() << " V=" << r.v.dim() << " V*=" << r.vstar.dim()
     << " V+=" << r.vdagger.dim() << " V++=" << r.vddagger.dim() << "\n";
  os << "embedding rank: " << r.embedding_rank << (r.injective ? " (injective)" : " (NOT injective)") << "\n";
  os << "reflexive: " << (r.reflexive ? "yes" : "no") << "\n";
  os << "nondegenerate pairing: " << (r.nondegenerate ? "yes" : "no") << "\n";
  os << "dual-basis certificate: " << (r.certificate ? "present (V projective over Z)" : "absent (V not projective over Z)")
     << "\n";
  os << "ghosts: covector=" << r.ghosts.ghost_dim << " bidual=" << r.ghost_bidual_dim << "\n";
  return os.str();
}

int emit(const Options& o, const Json& payload, const std::string& text, std::ostream& out, std::ostream& err) {
  std::string body = o.format == "json" ? payload.dump(2) + "\n" : text;
  if (!o.output_path.empty()) {
    std::ofstream f(o.output_path, std::ios::binary);
    if (!f) {
      err << "error: cannot write to '" << o.output_path << "'\n";
      return 1;
    }
    f << body;
    return 0;
  }
  out << body;
  return 0;
}

int dispatch(const std::string& cmd, const Options& o, std::ostream& out, std::ostream& err) {
  Input in = load_algebra(o);

  if (cmd == "validate") {
    Json j = header(in);
    j["valid"] = true;
    std::ostringstream text;
    text << "algebra ok: dim " << in.alg.dim() << ", basis";
    for (const auto& l : in.alg.labels()) text << " " << l;
    text << "\n";
    return emit(o, j, text.str(), out, err);
  }

  if (cmd == "center") {
    Center zc = center(in.alg);
    Json j = header(in);
    Json basis = Json::array();
    for (const Element& z : zc.basis()) basis.push_back(rvec_to_json(z.coeffs()));
    j["center"] = Json{{"dim", zc.dim()}, {"basis", std::move(basis)}};
    std::ostringstream text;
    text << "center: dim " << zc.dim() << "\n";
    return emit(o, j, text.str(), out, err);
  }

  VModule v = load_vmodule(in);

  if (cmd == "derivations") {
    Json j = header(in);
    Json basis = Json::array();
    for (const Derivation& d : v.basis()) basis.push_back(matrix_rows_to_json(d.matrix()));
    j["v"] = Json{{"dim", v.dim()}, {"basis", std::move(basis)}};
    std::ostringstream text;
    text << "V: dim " << v.dim() << (in.submodule ? " (center closure of supplied generators)" : " (full Der(A))")
         << "\n";
    return emit(o, j, text.str(), out, err);
  }

  if (cmd == "dual" || cmd == "star-dual") {
    Json j = header(in);
    Json basis = Json::array();
    std::size_t dim = 0;
    if (cmd == "dual") {
      CovectorSpace c = dual(in.alg, v);
      dim = c.dim();
      for (const Covector& w : c.basis()) basis.push_back(covector_to_json(w));
      j["v_dagger"] = Json{{"dim", dim}, {"basis", std::move(basis)}};
    } else {
      StarCovectorSpace c = star_dual(in.alg, v);
      dim = c.dim();
      for (const Covector& w : c.basis()) basis.push_back(covector_to_json(w));
      j["v_star"] = Json{{"dim", dim}, {"basis", std::move(basis)}};
    }
    std::ostringstream text;
    text << (cmd == "dual" ? "V+" : "V*") << ": dim " << dim << " over V of dim " << v.dim() << "\n";
    return emit(o, j, text.str(), out, err);
  }

  if (cmd == "bidual") {
    CovectorSpace c = dual(in.alg, v);
    BidualSpace b = second_dual(in.alg, c);
    Json j = header(in);
    Json basis = Json::array();
    for (const BidualElement& w : b.basis()) basis.push_back(bidual_element_to_json(w));
    j["v_ddagger"] = Json{{"dim", b.dim()}, {"basis", std::move(basis)}};
    j["embedding_rank"] = embedding_rank(c);
    std::ostringstream text;
    text << "V++: dim " << b.dim() << ", embedding rank " << embedding_rank(c) << "\n";
    return emit(o, j, text.str(), out, err);
  }

  if (cmd == "certificate") {
    auto cert = dual_basis_certificate(in.alg, v);
    Json j = header(in);
    j["certificate_present"] = cert.has_value();
    if (cert) {
      Json gens = Json::array();
      for (const Derivation& d : cert->generators()) gens.push_back(matrix_rows_to_json(d.matrix()));
      Json cogens = Json::array();
      for (const Covector& w : cert->cogenerators) cogens.push_back(covector_to_json(w));
      j["certificate"] = Json{{"generators", std::move(gens)}, {"cogenerators", std::move(cogens)}};
    } else {
      j["certificate"] = nullptr;
    }
    std::ostringstream text;
    text << "dual-basis certificate: " << (cert ? "present" : "absent") << "\n";
    return emit(o, j, text.str(), out, err);
  }

  if (cmd == "ghosts") {
    CovectorSpace c = dual(in.alg, v);
    BidualSpace b = second_dual(in.alg, c);
    GhostAnalysis g = ghost_covectors(c);
    Json j = header(in);
    Json reps = Json::array();
    for (const Covector& w : g.representatives) reps.push_back(covector_to_json(w));
    j["ghosts"] = Json{{"covector_ghost_dim", g.ghost_dim},
                       {"bidual_ghost_dim", b.dim() - embedding_rank(c)},
                       {"representatives", std::move(reps)}};
    std::ostringstream text;
    text << "ghosts: covector=" << g.ghost_dim << " bidual=" << (b.dim() - embedding_rank(c)) << "\n";
    return emit(o, j, text.str(), out, err);
  }

  if (cmd == "report") {
    ReflexivityReport r = reflexivity_report(in.alg, v);
    ReportOptions ro;
    ro.include_bases = o.bases;
    ro.input_digest = in.digest;
    ro.source_kind = in.source_kind;
    ro.source_detail = in.source_detail;
    return emit(o, report_to_json(r, ro), render_dims_text(r), out, err);
  }

  err << "error: unknown command '" << cmd << "'\n";
  return 2;
}

int error_exit(const Options& o, const Error& e, std::ostream& out, std::ostream& err) {
  const bool usage = e.kind() == ErrorKind::UnknownPreset || e.kind() == ErrorKind::BadParams;
  if (o.format == "json") {
    Json j;
    Json detail;
    detail["kind"] = error_kind_name(e.kind());
    detail["message"] = e.message();
    if (!e.location().empty()) detail["location"] = e.location();
    j["error"] = std::move(detail);
    out << j.dump(2) << "\n";
  } else {
    err << "error: " << e.what() << "\n";
  }
  return usage ? 2 : 1;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact calculus of derivation modules, covector bimodules and reflexivity on finite-dimensional "
               "rational algebras"};
  app.name("ncalc");
  app.require_subcommand(1);

  Options o;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"validate", "parse and validate an algebra (associativity, unit laws)"},
      {"center", "compute the center Z"},
      {"derivations", "compute the module V (full Der(A) or the closure of supplied generators)"},
      {"dual", "compute the covector bimodule V+ = hom_Z(V, A)"},
      {"star-dual", "compute the Z-valued dual V* = hom_Z(V, Z)"},
      {"bidual", "compute the second dual V++ = hom_A(V+, A)"},
      {"certificate", "search for a dual-basis certificate (projectivity of V over Z)"},
      {"ghosts", "compute ghost dimensions and canonical ghost covector representatives"},
      {"report", "run the full pipeline and emit the reflexivity report"},
  };
  for (const auto& [name, desc] : commands) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("--algebra", o.algebra_path, "path to an algebra JSON file");
    sub->add_option("--preset", o.preset_name, "built-in algebra name");
    sub->add_option("--param", o.param, "preset parameter (e.g. matrix size)");
    sub->add_option("--submodule", o.submodule_path, "path to a JSON list of generator matrices for V");
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--output", o.output_path, "write output to a file instead of stdout");
    if (name == "report") sub->add_flag("--bases", o.bases, "include basis listings in the report");
  }

  std::reverse(args.begin(), args.end());  // CLI11 consumes the vector back to front
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  if (o.algebra_path.empty() == o.preset_name.empty()) {
    err << "usage error: exactly one of --algebra and --preset is required\n";
    return 2;
  }

  try {
    return dispatch(cmd, o, out, err);
  } catch (const Error& e) {
    return error_exit(o, e, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace ncalc::cli
