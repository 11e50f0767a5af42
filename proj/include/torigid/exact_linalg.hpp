#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "torigid/matrix.hpp"

namespace torigid {

/// Smith decomposition U*A*V = D with U, V unimodular and D diagonal,
/// d_1 | d_2 | ... nonnegative, trailing zeros last. The transform inverses
/// are tracked during reduction (A = u_inv * D * v_inv).
struct SNFDecomposition {
    IntMatrix u;      // rows x rows
    IntMatrix d;      // rows x cols, diagonal
    IntMatrix v;      // cols x cols
    IntMatrix u_inv;  // inverse of u
    IntMatrix v_inv;  // inverse of v

    std::vector<Int> invariant_factors() const;  // nonzero diagonal entries
    std::size_t rank() const;                    // number of nonzero diagonal entries
};

/// A sublattice of Z^ambient_dim, basis vectors stored as the columns of
/// `basis` in column Hermite normal form; lattice equality is entry-wise
/// equality of the canonical bases.
struct Lattice {
    std::size_t ambient_dim = 0;
    IntMatrix basis;  // ambient_dim x rank, column HNF, no zero columns

    std::size_t rank() const { return basis.cols; }
    bool operator==(const Lattice& other) const = default;
};

SNFDecomposition smith_normal_form(const IntMatrix& a);

/// Canonical column Hermite normal form of the column span: pivot rows
/// strictly increasing, pivots positive, entries left of a pivot reduced into
/// [0, pivot). Zero columns are dropped.
IntMatrix column_hnf(const IntMatrix& a);

Lattice lattice_from_columns(const IntMatrix& generators, std::size_t ambient_dim);

/// Membership test (exact forward substitution against the HNF basis).
bool lattice_contains(const Lattice& lattice, const std::vector<Int>& v);

/// True iff the vectors extend to a Z-basis of Z^dim: linearly independent
/// with every SNF invariant factor equal to 1.
bool is_unimodular_extendable(const std::vector<std::vector<Int>>& cols, std::size_t dim);

/// Integer kernel {x in Z^cols : A x = 0}.
Lattice kernel_basis(const IntMatrix& a);

/// Smallest direct summand of Z^rows containing the columns of A
/// (rational column span intersected with the integer lattice).
Lattice saturation(const IntMatrix& a);

struct CokernelInvariants {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;  // invariant factors > 1, in divisibility order
};

/// Invariant-factor decomposition of Z^rows / column-span(A).
CokernelInvariants cokernel_invariants(const IntMatrix& a);

/// Completes the input vectors to a Z-basis of Z^dim; output begins with the
/// inputs. The completion columns are read from U^-1 of the SNF and are not
/// canonical. Throws NotExtendable when the precondition fails.
std::vector<std::vector<Int>> extend_to_basis(const std::vector<std::vector<Int>>& cols,
                                              std::size_t dim);

struct RationalSolution {
    bool solvable = false;
    RatVector particular;            // one exact solution (free variables 0)
    std::vector<RatVector> kernel;   // rational kernel basis of A
};

/// Exact Gaussian elimination: one solution of A x = b plus the affine kernel,
/// or solvable = false.
RationalSolution solve_rational(const IntMatrix& a, const RatVector& b);

/// Exact inverse of a unimodular integer matrix. Throws InvalidInput if the
/// argument is not square unimodular.
IntMatrix invert_unimodular(const IntMatrix& u);

}  // namespace torigid
