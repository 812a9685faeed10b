#pragma once
// Dense matrices over a Field.

#include <vector>

#include "gwt/field.hpp"

namespace gwt {

using Matrix = std::vector<std::vector<Elem>>;

Matrix identity(const Field& f, std::size_t n);
Matrix transpose(const Matrix& a);
Matrix mat_mul(const Matrix& a, const Matrix& b);
Elem det(Matrix a);
// Throws std::domain_error for singular input.
Matrix inverse(Matrix a);

}  // namespace gwt
