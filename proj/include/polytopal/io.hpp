#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "polytopal/linalg.hpp"
#include "polytopal/rational.hpp"
#include "polytopal/theorem.hpp"

namespace polytopal {

using OrderedJson = nlohmann::ordered_json;

/// Vertex file: first content line `dim n`, then one point per line as n
/// whitespace-separated rationals (`a` or `a/b`). `#` starts a comment.
struct VertexFile {
  int dim = 0;
  std::vector<RatVector> points;
};

VertexFile parse_vertex_file(std::istream& in, const std::string& name);
VertexFile load_vertex_file(const std::string& path);

/// Matrix file: `dim n` followed by n rows of n rationals.
RatMatrix parse_matrix_file(std::istream& in, const std::string& name);
RatMatrix load_matrix_file(const std::string& path);

void write_vertex_file(std::ostream& out, int dim, const std::vector<RatVector>& points);
void write_matrix_file(std::ostream& out, const RatMatrix& A);

OrderedJson poly_to_json(const IntPolynomial& p);
std::string poly_to_text(const IntPolynomial& p);
/// Coefficient list padded with zeros up to x^degree inclusive.
OrderedJson poly_to_json(const IntPolynomial& p, int degree);
std::string poly_to_text(const IntPolynomial& p, int degree);

OrderedJson report_to_json(const TheoremReport& rep);
std::string report_to_text(const TheoremReport& rep);

/// 0 all checks pass, 2 precondition failure, 3 theorem violation.
int report_exit_code(const TheoremReport& rep);

}  // namespace polytopal
