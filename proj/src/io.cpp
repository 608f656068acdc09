#include "polytopal/io.hpp"

#include <fstream>
#include <sstream>

#include "polytopal/errors.hpp"

namespace polytopal {

namespace {

// Strips comments and splits into whitespace tokens; empty for blank lines.
std::vector<std::string> tokenize(const std::string& raw) {
  std::string line = raw.substr(0, raw.find('#'));
  std::istringstream in(line);
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

int parse_dim_header(const std::vector<std::string>& tokens, const std::string& name, int line_no) {
  if (tokens.size() != 2 || tokens[0] != "dim")
    throw ParseError(name + ": expected 'dim n' header", line_no);
  try {
    int dim = std::stoi(tokens[1]);
    if (dim < 1) throw ParseError(name + ": dimension must be >= 1", line_no);
    return dim;
  } catch (const std::invalid_argument&) {
    throw ParseError(name + ": bad dimension '" + tokens[1] + "'", line_no);
  } catch (const std::out_of_range&) {
    throw ParseError(name + ": bad dimension '" + tokens[1] + "'", line_no);
  }
}

RatVector parse_row(const std::vector<std::string>& tokens, int dim, const std::string& name,
                    int line_no) {
  if (tokens.size() != static_cast<std::size_t>(dim))
    throw ParseError(name + ": expected " + std::to_string(dim) + " entries, got " +
                         std::to_string(tokens.size()),
                     line_no);
  RatVector row;
  row.reserve(tokens.size());
  for (const auto& tok : tokens) {
    try {
      row.push_back(parse_rational(tok));
    } catch (const ParseError& e) {
      throw ParseError(name + ": " + e.what(), line_no);
    }
  }
  return row;
}

}  // namespace

VertexFile parse_vertex_file(std::istream& in, const std::string& name) {
  VertexFile vf;
  std::string raw;
  int line_no = 0;
  bool have_dim = false;
  while (std::getline(in, raw)) {
    ++line_no;
    auto tokens = tokenize(raw);
    if (tokens.empty()) continue;
    if (!have_dim) {
      vf.dim = parse_dim_header(tokens, name, line_no);
      have_dim = true;
      continue;
    }
    vf.points.push_back(parse_row(tokens, vf.dim, name, line_no));
  }
  if (!have_dim) throw ParseError(name + ": missing 'dim n' header");
  if (vf.points.empty()) throw ParseError(name + ": no points");
  return vf;
}

VertexFile load_vertex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_vertex_file(in, path);
}

RatMatrix parse_matrix_file(std::istream& in, const std::string& name) {
  std::string raw;
  int line_no = 0;
  int dim = 0;
  bool have_dim = false;
  std::vector<RatVector> rows;
  while (std::getline(in, raw)) {
    ++line_no;
    auto tokens = tokenize(raw);
    if (tokens.empty()) continue;
    if (!have_dim) {
      dim = parse_dim_header(tokens, name, line_no);
      have_dim = true;
      continue;
    }
    if (rows.size() == static_cast<std::size_t>(dim))
      throw ParseError(name + ": more than " + std::to_string(dim) + " matrix rows", line_no);
    rows.push_back(parse_row(tokens, dim, name, line_no));
  }
  if (!have_dim) throw ParseError(name + ": missing 'dim n' header");
  if (rows.size() != static_cast<std::size_t>(dim))
    throw ParseError(name + ": expected " + std::to_string(dim) + " matrix rows");
  return RatMatrix::from_rows(rows);
}

RatMatrix load_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_matrix_file(in, path);
}

void write_vertex_file(std::ostream& out, int dim, const std::vector<RatVector>& points) {
  out << "dim " << dim << "\n";
  for (const auto& pt : points) {
    for (std::size_t i = 0; i < pt.size(); ++i) {
      if (i) out << " ";
      out << to_string(pt[i]);
    }
    out << "\n";
  }
}

void write_matrix_file(std::ostream& out, const RatMatrix& A) {
  out << "dim " << A.rows() << "\n";
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) {
      if (j) out << " ";
      out << to_string(A(i, j));
    }
    out << "\n";
  }
}

OrderedJson poly_to_json(const IntPolynomial& p) { return poly_to_json(p, p.degree()); }

std::string poly_to_text(const IntPolynomial& p) { return poly_to_text(p, p.degree()); }

OrderedJson poly_to_json(const IntPolynomial& p, int degree) {
  OrderedJson arr = OrderedJson::array();
  for (int i = 0; i <= degree; ++i) arr.push_back(to_string(p.coeff(static_cast<std::size_t>(i))));
  return arr;
}

std::string poly_to_text(const IntPolynomial& p, int degree) {
  std::string s = "[";
  for (int i = 0; i <= degree; ++i) {
    if (i) s += ", ";
    s += to_string(p.coeff(static_cast<std::size_t>(i)));
  }
  return s + "]";
}

namespace {

OrderedJson check_to_json(const CheckResult& c) {
  OrderedJson j;
  j["ok"] = c.ok;
  if (!c.ok) j["detail"] = c.detail;
  return j;
}

}  // namespace

OrderedJson report_to_json(const TheoremReport& rep) {
  OrderedJson j;
  j["n"] = rep.n;
  j["p"] = rep.p;
  j["r"] = rep.r;
  OrderedJson f = OrderedJson::array();
  for (long x : rep.f) f.push_back(std::to_string(x));
  j["f_vector"] = f;
  j["ordinary_h"] = poly_to_json(rep.ordinary, rep.n);
  j["generalized_h"] = poly_to_json(rep.generalized, rep.n);
  if (rep.preconditions_ok()) {
    j["q"] = poly_to_json(rep.q, rep.n);
    j["eigenspace_series"] = poly_to_json(rep.eigenspace, 2 * rep.n);
    j["eigenspace_note"] = "identical for every primitive p-th root of unity";
  } else {
    j["q"] = poly_to_json(rep.q);
    j["eigenspace_series"] = poly_to_json(rep.eigenspace);
  }
  if (!rep.preconditions_ok()) {
    j["gate_failure"] = rep.gate_failure;
  } else {
    OrderedJson checks;
    checks["p_minus_1_divides_n"] = check_to_json(rep.checks.p_minus_1_divides_n);
    checks["f_divisible"] = check_to_json(rep.checks.f_divisible);
    checks["q_symmetric"] = check_to_json(rep.checks.q_symmetric);
    checks["q_unimodal"] = check_to_json(rep.checks.q_unimodal);
    checks["q_divisible_by_p"] = check_to_json(rep.checks.q_divisible_by_p);
    checks["q_nonnegative"] = check_to_json(rep.checks.q_nonnegative);
    checks["q_constant_term_zero"] = check_to_json(rep.checks.q_constant_term_zero);
    checks["dehn_sommerville"] = check_to_json(rep.checks.dehn_sommerville);
    checks["series_identity"] = check_to_json(rep.checks.series_identity);
    j["checks"] = checks;
    OrderedJson orbits = OrderedJson::array();
    for (const auto& [len, count] : rep.orbit_summary) {
      OrderedJson o;
      o["length"] = len;
      o["count"] = count;
      orbits.push_back(o);
    }
    j["orbit_summary"] = orbits;
  }
  j["all_pass"] = rep.all_checks_pass();
  return j;
}

std::string report_to_text(const TheoremReport& rep) {
  std::ostringstream out;
  out << "n = " << rep.n << ", p = " << rep.p;
  if (rep.r > 0) out << ", r = " << rep.r;
  out << "\n";
  out << "f-vector: [";
  for (std::size_t i = 0; i < rep.f.size(); ++i) out << (i ? ", " : "") << rep.f[i];
  out << "]\n";
  out << "ordinary h: " << poly_to_text(rep.ordinary, rep.n) << "\n";
  out << "generalized h: " << poly_to_text(rep.generalized, rep.n) << "\n";
  if (!rep.preconditions_ok()) {
    out << "precondition failure: " << rep.gate_failure << "\n";
    return out.str();
  }
  out << "q: " << poly_to_text(rep.q, rep.n) << "\n";
  out << "eigenspace series (in t, identical for every primitive p-th root): "
      << poly_to_text(rep.eigenspace, 2 * rep.n) << "\n";
  auto line = [&out](const char* name, const CheckResult& c) {
    out << "  " << name << ": " << (c.ok ? "ok" : ("FAIL (" + c.detail + ")")) << "\n";
  };
  out << "checks:\n";
  line("(p-1) | n", rep.checks.p_minus_1_divides_n);
  line("p | f_j", rep.checks.f_divisible);
  line("q symmetric", rep.checks.q_symmetric);
  line("q unimodal", rep.checks.q_unimodal);
  line("p | q", rep.checks.q_divisible_by_p);
  line("q nonnegative", rep.checks.q_nonnegative);
  line("q_0 = 0", rep.checks.q_constant_term_zero);
  line("Dehn-Sommerville", rep.checks.dehn_sommerville);
  line("series identity", rep.checks.series_identity);
  out << "orbits:";
  for (const auto& [len, count] : rep.orbit_summary)
    out << " " << count << " of length " << len;
  out << "\n";
  out << (rep.all_checks_pass() ? "VERDICT: pass" : "VERDICT: fail") << "\n";
  return out.str();
}

int report_exit_code(const TheoremReport& rep) {
  if (!rep.preconditions_ok()) return 2;
  return rep.all_checks_pass() ? 0 : 3;
}

}  // namespace polytopal
