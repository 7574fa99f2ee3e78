#pragma once

#include "rmppa/linops.hpp"

#include <iosfwd>
#include <string>

namespace rmppa {

// Matrix text format: first line "m n", then m lines of n values.
// Vector text format: first line "n", then n values, one per line.

void write_matrix(std::ostream& os, const Matrix& A);
void write_vector(std::ostream& os, const Vector& v);
Matrix read_matrix(std::istream& is);
Vector read_vector(std::istream& is);

void write_matrix_file(const std::string& path, const Matrix& A);
void write_vector_file(const std::string& path, const Vector& v);
Matrix read_matrix_file(const std::string& path);
Vector read_vector_file(const std::string& path);

}  // namespace rmppa
