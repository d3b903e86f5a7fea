#pragma once

#include "altmin/problems/entropic_ot.hpp"
#include "altmin/problems/quadratic.hpp"
#include "altmin/problems/split_quadratic.hpp"

#include <iosfwd>
#include <string>
#include <variant>

namespace altmin::problems {

// Plain-text problem files: a family line ("quadratic", "split_quadratic" or
// "eot"), then each matrix as a "rows cols" header line followed by its
// row-major entries, and each vector as a "n" header line followed by its
// entries. Scalars (gamma) sit on their own line. Numbers are written with
// 17 significant digits so files round-trip exactly.

void write_matrix(std::ostream& os, const Matrix& M);
void write_vector(std::ostream& os, const Vector& v);
Matrix read_matrix(std::istream& is);
Vector read_vector(std::istream& is);

void write_problem(std::ostream& os, const QuadraticProblem& p);
void write_problem(std::ostream& os, const SplitQuadraticProblem& p);
void write_problem(std::ostream& os, const EntropicOTDual& p);

using AnyProblem = std::variant<QuadraticProblem, SplitQuadraticProblem, EntropicOTDual>;

/// Throws IoError on malformed input.
AnyProblem read_problem(std::istream& is);

void save_problem(const std::string& path, const AnyProblem& p);
AnyProblem load_problem(const std::string& path);

}  // namespace altmin::problems
