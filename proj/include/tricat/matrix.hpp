#ifndef TRICAT_MATRIX_HPP
#define TRICAT_MATRIX_HPP

#include <optional>
#include <random>
#include <vector>

#include "tricat/field.hpp"

namespace tricat {

/*
 * Dense matrix over an exact field. Row-major; every entry shares the
 * matrix's field descriptor. Dimensions are desk-scale, so nothing here
 * tries to be fast -- only exact and deterministic.
 *
 * A 0xN or Nx0 matrix is legal and represents the unique map to/from the
 * zero space.
 */
class ExactMatrix {
public:
    ExactMatrix() : field_(Field::Q()), rows_(0), cols_(0) {}
    ExactMatrix(const Field& f, int rows, int cols);
    ExactMatrix(const Field& f, int rows, int cols, std::vector<FieldElement> entries);

    static ExactMatrix identity(const Field& f, int n);
    static ExactMatrix zero(const Field& f, int rows, int cols);
    // Row-major integer literal, mainly for tests.
    static ExactMatrix from_ints(const Field& f, int rows, int cols,
                                 const std::vector<long>& v);

    const Field& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const FieldElement& at(int i, int j) const;
    void set(int i, int j, FieldElement v);

    ExactMatrix operator+(const ExactMatrix& o) const;
    ExactMatrix operator-(const ExactMatrix& o) const;
    ExactMatrix operator-() const;
    ExactMatrix operator*(const ExactMatrix& o) const;
    ExactMatrix scaled(const FieldElement& c) const;
    ExactMatrix transposed() const;

    bool operator==(const ExactMatrix& o) const;
    bool operator!=(const ExactMatrix& o) const { return !(*this == o); }
    bool is_zero() const;

    // [this | o] and [this ; o]
    ExactMatrix hstack(const ExactMatrix& o) const;
    ExactMatrix vstack(const ExactMatrix& o) const;
    ExactMatrix submatrix(int row0, int col0, int nrows, int ncols) const;
    ExactMatrix columns(const std::vector<int>& idx) const;

    std::string to_string() const;

private:
    void check_field(const ExactMatrix& o) const;

    Field field_;
    int rows_, cols_;
    std::vector<FieldElement> e_;
};

/// diag(a, b) as a block matrix.
ExactMatrix block_diag(const ExactMatrix& a, const ExactMatrix& b);
/// [[a, b], [c, d]] as one matrix; shapes must be consistent.
ExactMatrix block2x2(const ExactMatrix& a, const ExactMatrix& b,
                     const ExactMatrix& c, const ExactMatrix& d);

struct RrefResult {
    ExactMatrix reduced;
    std::vector<int> pivot_cols;
    int rank = 0;
};

/// Reduced row-echelon form by exact Gauss-Jordan elimination. The row
/// space is preserved; pivot columns are reported in increasing order.
RrefResult rref(const ExactMatrix& m);

int rank(const ExactMatrix& m);

/// Columns form a basis of the null space, in the deterministic order
/// induced by the free columns of the rref. m * kernel_basis(m) == 0.
ExactMatrix kernel_basis(const ExactMatrix& m);

/// A full-row-rank matrix P with P*m == 0 and rank(P) = rows(m) - rank(m);
/// its kernel is exactly the column space of m, so P represents the
/// projection onto a chosen cokernel. Fixed deterministically by pivot
/// order (rows = left null space basis of m).
ExactMatrix cokernel_projection(const ExactMatrix& m);

/// One exact solution of a*x = b (free variables set to zero), or nullopt
/// when some column of b is outside the column space of a.
std::optional<ExactMatrix> solve(const ExactMatrix& a, const ExactMatrix& b);

/// Reusable exact solver: factor a once, then answer many right-hand
/// sides. Matches solve() on results (free variables set to zero).
class LinearSolver {
public:
    explicit LinearSolver(const ExactMatrix& a);
    std::optional<ExactMatrix> operator()(const ExactMatrix& b) const;
    int rank() const { return static_cast<int>(pivots_.size()); }

private:
    Field field_;
    int rows_, cols_;
    ExactMatrix elim_;           // row operations applied to [a | I]
    std::vector<int> pivots_;    // pivot column per reduced row
};

/// Kronecker-structured matrix of U |-> sum_i L_i U R_i acting on row-major
/// vec(U); skips zero entries, so sparse actions stay cheap.
ExactMatrix kron_operator(const Field& f, int u_rows, int u_cols,
                          const std::vector<std::pair<ExactMatrix, ExactMatrix>>& terms);

/// Inverse of a square invertible matrix, or nullopt.
std::optional<ExactMatrix> inverse(const ExactMatrix& m);

/// Uniform-ish random matrix: residues for prime fields, small fractions
/// over Q. Deterministic for a given engine state.
ExactMatrix random_matrix(std::mt19937_64& rng, const Field& f, int rows, int cols);

FieldElement random_element(std::mt19937_64& rng, const Field& f);

/// Portable bounded draw in [lo, hi]; std::uniform_int_distribution is not
/// pinned down by the standard, and reports must reproduce across
/// toolchains for one seed.
long bounded_random(std::mt19937_64& rng, long lo, long hi);

}  // namespace tricat

#endif
