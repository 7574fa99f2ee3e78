#include "rmppa/io.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace rmppa {

namespace {

std::ifstream open_in(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open for reading: " + path);
  return f;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  return f;
}

}  // namespace

void write_matrix(std::ostream& os, const Matrix& A) {
  os << A.rows() << ' ' << A.cols() << '\n';
  os << std::setprecision(17);
  for (Index i = 0; i < A.rows(); ++i) {
    for (Index j = 0; j < A.cols(); ++j) {
      if (j) os << ' ';
      os << A(i, j);
    }
    os << '\n';
  }
}

void write_vector(std::ostream& os, const Vector& v) {
  os << v.size() << '\n';
  os << std::setprecision(17);
  for (Index i = 0; i < v.size(); ++i) os << v[i] << '\n';
}

Matrix read_matrix(std::istream& is) {
  Index m = 0, n = 0;
  if (!(is >> m >> n) || m <= 0 || n <= 0)
    throw std::runtime_error("matrix header must be two positive integers");
  Matrix A(m, n);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < n; ++j)
      if (!(is >> A(i, j)))
        throw std::runtime_error("matrix body truncated at row " +
                                 std::to_string(i));
  if (!A.allFinite()) throw std::runtime_error("matrix has non-finite entries");
  return A;
}

Vector read_vector(std::istream& is) {
  Index n = 0;
  if (!(is >> n) || n <= 0)
    throw std::runtime_error("vector header must be a positive integer");
  Vector v(n);
  for (Index i = 0; i < n; ++i)
    if (!(is >> v[i]))
      throw std::runtime_error("vector body truncated at entry " +
                               std::to_string(i));
  if (!v.allFinite()) throw std::runtime_error("vector has non-finite entries");
  return v;
}

void write_matrix_file(const std::string& path, const Matrix& A) {
  auto f = open_out(path);
  write_matrix(f, A);
}

void write_vector_file(const std::string& path, const Vector& v) {
  auto f = open_out(path);
  write_vector(f, v);
}

Matrix read_matrix_file(const std::string& path) {
  auto f = open_in(path);
  return read_matrix(f);
}

Vector read_vector_file(const std::string& path) {
  auto f = open_in(path);
  return read_vector(f);
}

}  // namespace rmppa
