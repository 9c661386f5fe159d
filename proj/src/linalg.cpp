#include "holant/linalg.hpp"

#include <sstream>

namespace holant {

CycMatrix evaluate(const PolyMatrix& m, const ScalarBindings& bindings) {
  CycMatrix out(m.rows(), m.cols());
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) out(r, c) = evaluate(m(r, c), bindings);
  return out;
}

PolyMatrix subst(const PolyMatrix& m, const PolyBindings& bindings) {
  PolyMatrix out(m.rows(), m.cols());
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) out(r, c) = subst(m(r, c), bindings);
  return out;
}

PolyMatrix parse_poly_matrix(Eigen::Index rows, Eigen::Index cols, const std::vector<std::string>& entries) {
  if (static_cast<Eigen::Index>(entries.size()) != rows * cols)
    throw Error(ErrorKind::MalformedDocument, "matrix literal has " + std::to_string(entries.size()) +
                                                  " entries, expected " + std::to_string(rows * cols));
  PolyMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = parse_poly(entries[static_cast<std::size_t>(r * cols + c)]);
  return m;
}

namespace {

template <typename Scalar>
std::string matrix_literal(const Matrix<Scalar>& m) {
  std::ostringstream os;
  os << '[';
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    if (r != 0) os << ", ";
    os << '[';
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c != 0) os << ", ";
      os << to_string(m(r, c));
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace

std::string to_string(const CycMatrix& m) { return matrix_literal(m); }
std::string to_string(const PolyMatrix& m) { return matrix_literal(m); }

}  // namespace holant
