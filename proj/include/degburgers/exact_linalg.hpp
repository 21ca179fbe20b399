#ifndef DEGBURGERS_EXACT_LINALG_HPP
#define DEGBURGERS_EXACT_LINALG_HPP

#include <optional>
#include <vector>

#include "degburgers/rationals.hpp"

namespace dgb {

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;  // row-major

/// In-place reduced row echelon form; returns the rank.
int rref(RatMat& m);

int rank(RatMat m);

/// Rows of m spanning its row space, in RREF (zero rows dropped).
RatMat row_space_basis(RatMat m);

/// true iff v lies in the row space of basis (basis need not be reduced).
bool in_span(const RatMat& basis, const RatVec& v);

/// Solves A x = b exactly; returns one solution or nullopt if inconsistent.
std::optional<RatVec> solve(RatMat a, RatVec b);

/// Basis of the null space of A (as rows).
RatMat null_space(RatMat a);

/// Determinant of a square matrix.
Rational det(RatMat a);

RatMat mat_mul(const RatMat& a, const RatMat& b);
RatVec mat_vec(const RatMat& a, const RatVec& v);
RatMat identity(int n);

}  // namespace dgb

#endif
