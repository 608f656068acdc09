// Command-line driver: generators, face/h-vector reports, symmetry search,
// and the theorem verification pipeline over exact rational arithmetic.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "polytopal/errors.hpp"
#include "polytopal/generators.hpp"
#include "polytopal/groupring.hpp"
#include "polytopal/hvector.hpp"
#include "polytopal/io.hpp"
#include "polytopal/symmetry.hpp"
#include "polytopal/theorem.hpp"

namespace {

using namespace polytopal;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitViolation = 3;

struct OutputTarget {
  std::string path;  // empty = stdout

  void emit(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open output file '" + path + "'");
    out << text;
  }
};

std::string render(const OrderedJson& j, const std::string& format, const std::string& text) {
  if (format == "tree") return j.dump(2) + "\n";
  return text;
}

Polytope load_polytope(const std::string& path) {
  VertexFile vf = load_vertex_file(path);
  return make_polytope(vf.dim, vf.points);
}

std::string matrix_to_text(const RatMatrix& A) {
  std::ostringstream out;
  for (std::size_t i = 0; i < A.rows(); ++i) {
    out << "  [";
    for (std::size_t j = 0; j < A.cols(); ++j) {
      if (j) out << ", ";
      out << to_string(A(i, j));
    }
    out << "]\n";
  }
  return out.str();
}

OrderedJson matrix_to_json(const RatMatrix& A) {
  OrderedJson rows = OrderedJson::array();
  for (std::size_t i = 0; i < A.rows(); ++i) {
    OrderedJson row = OrderedJson::array();
    for (std::size_t j = 0; j < A.cols(); ++j) row.push_back(to_string(A(i, j)));
    rows.push_back(row);
  }
  return rows;
}

OrderedJson groupring_poly_to_json(const GroupRingPoly& p) {
  OrderedJson arr = OrderedJson::array();
  for (const auto& c : p.coeffs()) {
    OrderedJson coords = OrderedJson::array();
    for (const auto& x : c.coords()) coords.push_back(to_string(x));
    arr.push_back(coords);
  }
  return arr;
}

RatMatrix negated_identity(int n) {
  RatMatrix A = RatMatrix::identity(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) A(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = -1;
  return A;
}

RatVector vertex_barycenter(const std::vector<RatVector>& pts) {
  RatVector b(pts[0].size(), Rational(0));
  for (const auto& v : pts) b = add(b, v);
  return scale(Rational(1, static_cast<long>(pts.size())), b);
}

void recenter(std::vector<RatVector>& pts) {
  RatVector b = vertex_barycenter(pts);
  for (auto& v : pts) v = sub(v, b);
}

// ---- gen ----------------------------------------------------------------

int run_gen(const std::string& family, int n, long p, long r,
            const std::vector<std::string>& files, const std::string& out_base) {
  std::vector<RatVector> pts;
  int dim = 0;
  RatMatrix symmetry;
  bool has_symmetry = false;
  std::string base = out_base;

  if (family == "simplex") {
    Polytope P = simplex(n);
    dim = n;
    pts = P.vertices();
    if (base.empty()) base = "simplex_n" + std::to_string(n);
  } else if (family == "cube") {
    Polytope P = hypercube(n);
    dim = n;
    pts = P.vertices();
    symmetry = negated_identity(n);
    has_symmetry = true;
    if (base.empty()) base = "cube_n" + std::to_string(n);
  } else if (family == "cross") {
    Polytope P = cross_polytope(n);
    dim = n;
    pts = P.vertices();
    symmetry = negated_identity(n);
    has_symmetry = true;
    if (base.empty()) base = "cross_n" + std::to_string(n);
  } else if (family == "cyclic-simplex") {
    auto [P, A] = cyclic_simplex(p);
    dim = P.ambient_dim();
    pts = P.vertices();
    symmetry = A;
    has_symmetry = true;
    if (base.empty()) base = "cyclic_simplex_p" + std::to_string(p);
  } else if (family == "adin") {
    auto [P, A] = adin_construction(p, r);
    dim = P.ambient_dim();
    pts = P.vertices();
    symmetry = A;
    has_symmetry = true;
    if (base.empty()) base = "adin_p" + std::to_string(p) + "_r" + std::to_string(r);
  } else if (family == "pyramid-of") {
    VertexFile base_vf = load_vertex_file(files.at(0));
    dim = base_vf.dim + 1;
    for (const auto& v : base_vf.points) {
      RatVector w = v;
      w.push_back(0);
      pts.push_back(std::move(w));
    }
    RatVector apex(static_cast<std::size_t>(dim), Rational(0));
    apex.back() = 1;
    pts.push_back(std::move(apex));
    recenter(pts);
    if (base.empty()) base = "pyramid";
  } else if (family == "product-of") {
    VertexFile a = load_vertex_file(files.at(0));
    VertexFile b = load_vertex_file(files.at(1));
    dim = a.dim + b.dim;
    for (const auto& v : a.points)
      for (const auto& w : b.points) {
        RatVector u = v;
        u.insert(u.end(), w.begin(), w.end());
        pts.push_back(std::move(u));
      }
    recenter(pts);
    if (base.empty()) base = "product";
  } else if (family == "dual-of") {
    VertexFile vf = load_vertex_file(files.at(0));
    std::vector<RatVector> centered = vf.points;
    recenter(centered);
    Polytope P = make_polytope(vf.dim, centered);
    dim = vf.dim;
    for (const auto& facet : P.facets())
      pts.push_back(scale(1 / facet.offset, facet.normal));
    if (base.empty()) base = "dual";
  } else {
    std::cerr << "unknown family '" << family << "'\n";
    return kExitUsage;
  }

  {
    std::ofstream out(base + ".vtx");
    if (!out) throw ParseError("cannot open output file '" + base + ".vtx'");
    write_vertex_file(out, dim, pts);
    std::cout << "wrote " << base << ".vtx (" << pts.size() << " vertices, dim " << dim << ")\n";
  }
  if (has_symmetry) {
    std::ofstream out(base + ".mat");
    if (!out) throw ParseError("cannot open output file '" + base + ".mat'");
    write_matrix_file(out, symmetry);
    std::cout << "wrote " << base << ".mat\n";
  }
  return kExitOk;
}

// ---- faces / hvec -------------------------------------------------------

int run_faces(const std::string& vtx, const std::string& format, const OutputTarget& target) {
  Polytope P = load_polytope(vtx);
  FaceLattice L = face_lattice(P);
  std::vector<long> f = f_vector(L);

  OrderedJson j;
  j["dim"] = L.dim();
  j["vertices"] = P.vertices().size();
  j["facets"] = P.facets().size();
  j["dropped_points"] = P.dropped_points().size();
  OrderedJson fj = OrderedJson::array();
  for (long x : f) fj.push_back(std::to_string(x));
  j["f_vector"] = fj;
  OrderedJson faces = OrderedJson::array();
  for (const auto& face : L.faces()) {
    OrderedJson fo;
    fo["dim"] = face.dim;
    OrderedJson verts = OrderedJson::array();
    for (int idx : face.verts.indices()) verts.push_back(idx);
    fo["vertices"] = verts;
    faces.push_back(fo);
  }
  j["faces"] = faces;

  std::ostringstream text;
  text << "dim " << L.dim() << ", " << P.vertices().size() << " vertices, "
       << P.facets().size() << " facets, " << L.faces().size() << " lattice elements\n";
  if (!P.dropped_points().empty())
    text << "note: dropped " << P.dropped_points().size()
         << " duplicate or non-extreme input points\n";
  text << "f-vector: [";
  for (std::size_t i = 0; i < f.size(); ++i) text << (i ? ", " : "") << f[i];
  text << "]\n";
  std::map<int, long> by_dim;
  for (const auto& face : L.faces()) ++by_dim[face.dim];
  for (const auto& [d, count] : by_dim)
    text << "  dim " << d << ": " << count << " face" << (count == 1 ? "" : "s") << "\n";

  target.emit(render(j, format, text.str()));
  return kExitOk;
}

int run_hvec(const std::string& vtx, const std::string& format, const OutputTarget& target) {
  Polytope P = load_polytope(vtx);
  FaceLattice L = face_lattice(P);
  std::vector<long> f = f_vector(L);
  IntPolynomial h = ordinary_h(f, L.dim());
  IntPolynomial htilde = generalized_h(L);
  IntPolynomial g = g_of_polytope(L);
  bool ds = is_symmetric(htilde, L.dim());
  bool unimodal = is_unimodal(htilde, L.dim());

  OrderedJson j;
  j["dim"] = L.dim();
  OrderedJson fj = OrderedJson::array();
  for (long x : f) fj.push_back(std::to_string(x));
  j["f_vector"] = fj;
  j["ordinary_h"] = poly_to_json(h);
  j["generalized_h"] = poly_to_json(htilde);
  j["g_polynomial"] = poly_to_json(g);
  j["dehn_sommerville"] = ds;
  j["unimodal"] = unimodal;

  std::ostringstream text;
  text << "dim " << L.dim() << "\n";
  text << "f-vector: [";
  for (std::size_t i = 0; i < f.size(); ++i) text << (i ? ", " : "") << f[i];
  text << "]\n";
  text << "ordinary h: " << poly_to_text(h) << "\n";
  text << "generalized h: " << poly_to_text(htilde) << "\n";
  text << "g polynomial: " << poly_to_text(g) << "\n";
  text << "Dehn-Sommerville: " << (ds ? "holds" : "FAILS") << "\n";
  text << "unimodal: " << (unimodal ? "yes" : "no") << "\n";

  target.emit(render(j, format, text.str()));
  return kExitOk;
}

// ---- symsearch ----------------------------------------------------------

int run_symsearch(const std::string& vtx, long p, const std::string& format,
                  const OutputTarget& target) {
  Polytope P = load_polytope(vtx);
  FaceLattice L = face_lattice(P);
  auto actions = find_prime_symmetries(P, L, p);

  OrderedJson j;
  j["p"] = p;
  j["count"] = actions.size();
  OrderedJson arr = OrderedJson::array();
  std::ostringstream text;
  text << "found " << actions.size() << " symmetr" << (actions.size() == 1 ? "y" : "ies")
       << " of order " << p << "\n";
  for (const auto& act : actions) {
    bool fpf = is_fixed_point_free(act.matrix);
    OrderedJson entry;
    entry["matrix"] = matrix_to_json(act.matrix);
    entry["fixed_point_free"] = fpf;
    OrderedJson perm = OrderedJson::array();
    for (int v : act.vertex_perm) perm.push_back(v);
    entry["vertex_perm"] = perm;
    arr.push_back(entry);
    text << (fpf ? "fixed-point-free" : "not fixed-point-free") << ":\n"
         << matrix_to_text(act.matrix);
  }
  j["symmetries"] = arr;
  target.emit(render(j, format, text.str()));
  return kExitOk;
}

// ---- verify / series-check / lemma45 ------------------------------------

int run_verify(const std::string& vtx, const std::string& mat, long p, const std::string& format,
               const OutputTarget& target) {
  Polytope P = load_polytope(vtx);
  RatMatrix A = load_matrix_file(mat);
  TheoremReport rep = verify_theorem(P, A, p);
  target.emit(render(report_to_json(rep), format, report_to_text(rep)));
  return report_exit_code(rep);
}

int run_lemma45(long p, long r, const std::string& format, const OutputTarget& target) {
  IdentityPairData data = lemma45_data(p, r);

  OrderedJson j;
  j["p"] = p;
  j["r"] = r;
  j["identity_i"] = data.holds_i();
  j["identity_ii"] = data.holds_ii();
  j["lhs_i"] = groupring_poly_to_json(data.lhs_i);
  j["rhs_i"] = groupring_poly_to_json(data.rhs_i);
  j["lhs_ii"] = groupring_poly_to_json(data.lhs_ii);
  j["rhs_ii"] = groupring_poly_to_json(data.rhs_ii);

  std::ostringstream text;
  auto table = [&text](const char* name, const GroupRingPoly& poly) {
    text << name << ":\n";
    for (std::size_t i = 0; i < poly.coeffs().size(); ++i)
      text << "  x^" << i << ": " << poly.coeffs()[i].to_string() << "\n";
  };
  text << "p = " << p << ", r = " << r << "\n";
  table("(i) left", data.lhs_i);
  table("(i) right", data.rhs_i);
  text << "identity (i): " << (data.holds_i() ? "holds" : "FAILS") << "\n";
  table("(ii) left", data.lhs_ii);
  table("(ii) right", data.rhs_ii);
  text << "identity (ii): " << (data.holds_ii() ? "holds" : "FAILS") << "\n";

  target.emit(render(j, format, text.str()));
  return (data.holds_i() && data.holds_ii()) ? kExitOk : kExitViolation;
}

int run_series_check(const std::string& vtx, const std::string& mat, long p,
                     const std::string& format, const OutputTarget& target) {
  Polytope P = load_polytope(vtx);
  RatMatrix A = load_matrix_file(mat);
  FaceLattice L = face_lattice(P);
  verify_symmetry(P, L, A, p);
  if (!is_fixed_point_free(A))
    throw PreconditionError("not fixed-point-free: A has eigenvalue 1");
  const int n = P.ambient_dim();
  if (n % (p - 1) != 0) throw PreconditionError("(p-1) does not divide n");
  const long r = n / (p - 1);

  IntPolynomial htilde = generalized_h(L);
  const std::size_t T = 2 * static_cast<std::size_t>(n) + 2;
  SeriesCheckData data = series_identity_data(htilde, p, r, T);
  bool ok = data.vanishes_above_2n && data.matches_closed_form;

  OrderedJson j;
  j["p"] = p;
  j["r"] = r;
  j["truncation"] = T;
  j["generalized_h"] = poly_to_json(htilde);
  j["vanishes_above_2n"] = data.vanishes_above_2n;
  j["matches_closed_form"] = data.matches_closed_form;
  j["consistent"] = ok;

  std::ostringstream text;
  text << "p = " << p << ", r = " << r << ", truncation " << T << "\n";
  text << "generalized h: " << poly_to_text(htilde) << "\n";
  text << "refined series vs closed form (coefficients of t^j):\n";
  for (std::size_t deg = 0; deg <= T; deg += 2)
    text << "  t^" << deg << ": " << data.refined.coeff(deg).to_string() << "  |  "
         << data.closed_form.coeff(deg).to_string() << "\n";
  text << "vanishes above 2n: " << (data.vanishes_above_2n ? "yes" : "NO") << "\n";
  text << "matches closed form: " << (data.matches_closed_form ? "yes" : "NO") << "\n";
  text << (ok ? "consistent" : "INCONSISTENT") << "\n";

  target.emit(render(j, format, text.str()));
  return ok ? kExitOk : kExitViolation;
}

// ---- batch ----------------------------------------------------------------

int run_batch(const std::string& manifest, const std::string& format,
              const OutputTarget& target) {
  std::ifstream in(manifest);
  if (!in) throw ParseError("cannot open manifest '" + manifest + "'");

  std::ostringstream out;
  int worst = kExitOk;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw.substr(0, raw.find('#'));
    std::istringstream fields(line);
    std::string vtx, mat, ptok;
    if (!(fields >> vtx)) continue;
    if (!(fields >> mat >> ptok)) {
      out << manifest << ":" << line_no << ": expected 'vertex_file matrix_file p'\n";
      worst = std::max(worst, kExitUsage);
      continue;
    }
    try {
      long p = std::stol(ptok);
      Polytope P = load_polytope(vtx);
      RatMatrix A = load_matrix_file(mat);
      TheoremReport rep = verify_theorem(P, A, p);
      if (format == "tree") {
        OrderedJson j = report_to_json(rep);
        j["input"] = vtx;
        out << j.dump() << "\n";
      } else {
        out << vtx << ": ";
        if (!rep.preconditions_ok())
          out << "precondition failure (" << rep.gate_failure << ")";
        else if (rep.all_checks_pass())
          out << "pass, q = " << poly_to_text(rep.q, rep.n);
        else
          out << "THEOREM VIOLATION, q = " << poly_to_text(rep.q, rep.n);
        out << "\n";
      }
      worst = std::max(worst, report_exit_code(rep));
    } catch (const ParseError& e) {
      out << vtx << ": parse error (" << e.what() << ")\n";
      worst = std::max(worst, kExitUsage);
    } catch (const PreconditionError& e) {
      out << vtx << ": precondition failure (" << e.what() << ")\n";
      worst = std::max(worst, kExitPrecondition);
    } catch (const std::invalid_argument&) {
      out << vtx << ": bad order '" << ptok << "'\n";
      worst = std::max(worst, kExitUsage);
    }
  }
  target.emit(out.str());
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact face-lattice, h-vector, and prime-order symmetry toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // allow --format/--out after the subcommand

  std::string format = "text";
  std::string out_path;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "tree"}));
  app.add_option("--out", out_path, "Write output to a file instead of stdout");

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a vertex file (and matrix file) for a family");
  std::string family;
  int gen_n = 3;
  long gen_p = 2, gen_r = 1;
  std::vector<std::string> gen_files;
  std::string gen_out;
  gen->add_option("family", family,
                  "simplex|cube|cross|cyclic-simplex|adin|pyramid-of|product-of|dual-of")
      ->required();
  gen->add_option("files", gen_files, "Input vertex files for pyramid-of/product-of/dual-of");
  gen->add_option("--n", gen_n, "Dimension for simplex/cube/cross");
  gen->add_option("--p", gen_p, "Prime order for cyclic-simplex/adin");
  gen->add_option("--r", gen_r, "Number of blocks for adin");
  gen->add_option("--out", gen_out, "Output base path (writes BASE.vtx and BASE.mat)");

  // faces / hvec
  auto* faces = app.add_subcommand("faces", "Face lattice summary of a vertex file");
  std::string faces_vtx;
  faces->add_option("vertex_file", faces_vtx)->required();

  auto* hvec = app.add_subcommand("hvec", "f-vector, h-vectors and g-polynomial");
  std::string hvec_vtx;
  hvec->add_option("vertex_file", hvec_vtx)->required();

  // symsearch
  auto* symsearch = app.add_subcommand("symsearch", "Search for order-p linear symmetries");
  std::string sym_vtx;
  long sym_p = 2;
  symsearch->add_option("vertex_file", sym_vtx)->required();
  symsearch->add_option("--p", sym_p, "Prime order")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "Run the full theorem verification pipeline");
  std::string ver_vtx, ver_mat;
  long ver_p = 2;
  verify->add_option("vertex_file", ver_vtx)->required();
  verify->add_option("matrix_file", ver_mat)->required();
  verify->add_option("--p", ver_p, "Prime order")->required();

  // lemma45
  auto* lemma = app.add_subcommand("lemma45", "Check the two group-ring identities");
  long lem_p = 2, lem_r = 1;
  lemma->add_option("--p", lem_p, "Prime")->required();
  lemma->add_option("--r", lem_r, "Exponent")->required();

  // series-check
  auto* series = app.add_subcommand("series-check", "Check the truncated refined-series pipeline");
  std::string ser_vtx, ser_mat;
  long ser_p = 2;
  series->add_option("vertex_file", ser_vtx)->required();
  series->add_option("matrix_file", ser_mat)->required();
  series->add_option("--p", ser_p, "Prime order")->required();

  // batch
  auto* batch = app.add_subcommand("batch", "Verify every (vertex, matrix, p) manifest entry");
  std::string batch_manifest;
  batch->add_option("manifest", batch_manifest)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  OutputTarget target{out_path};
  try {
    if (gen->parsed()) return run_gen(family, gen_n, gen_p, gen_r, gen_files, gen_out);
    if (faces->parsed()) return run_faces(faces_vtx, format, target);
    if (hvec->parsed()) return run_hvec(hvec_vtx, format, target);
    if (symsearch->parsed()) return run_symsearch(sym_vtx, sym_p, format, target);
    if (verify->parsed()) return run_verify(ver_vtx, ver_mat, ver_p, format, target);
    if (lemma->parsed()) return run_lemma45(lem_p, lem_r, format, target);
    if (series->parsed()) return run_series_check(ser_vtx, ser_mat, ser_p, format, target);
    if (batch->parsed()) return run_batch(batch_manifest, format, target);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what();
    if (e.line() > 0) std::cerr << " (line " << e.line() << ")";
    std::cerr << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failure: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const TheoremViolation& e) {
    std::cerr << "theorem violation: " << e.what() << "\n";
    return kExitViolation;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: missing argument (" << e.what() << ")\n";
    return kExitUsage;
  }
  return kExitUsage;
}
