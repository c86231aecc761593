#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace pic {

using Int = mpz_class;
using Rat = mpq_class;
using Vec = std::vector<Int>;

/// Dense matrix over Z with arbitrary-precision entries, row-major.
/// The 0xN and Nx0 matrices are valid.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}
    IntMatrix(int rows, int cols, std::vector<Int> data);

    static IntMatrix identity(int n);
    static IntMatrix from_rows(const std::vector<Vec>& rows);
    static IntMatrix from_cols(const std::vector<Vec>& cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const Int& operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    Vec row(int i) const;
    Vec col(int j) const;

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix operator+(const IntMatrix& rhs) const;
    IntMatrix operator-(const IntMatrix& rhs) const;
    Vec apply(const Vec& x) const;  // matrix * column vector

    bool operator==(const IntMatrix& rhs) const = default;
    bool is_zero() const;

    void swap_cols(int a, int b);
    void negate_col(int j);
    /// col_dst += q * col_src
    void addmul_col(int dst, int src, const Int& q);
    void swap_rows(int a, int b);
    void negate_row(int i);
    void addmul_row(int dst, int src, const Int& q);

    /// Stack side by side / on top of each other.
    static IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
    static IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);
    static IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b);

    IntMatrix top_rows(int k) const;
    IntMatrix left_cols(int k) const;
    IntMatrix drop_zero_cols() const;
    IntMatrix submatrix_cols(const std::vector<int>& idx) const;
    IntMatrix submatrix_rows(const std::vector<int>& idx) const;

    std::string to_string() const;

private:
    int rows_, cols_;
    std::vector<Int> data_;
};

struct HnfResult {
    IntMatrix H;  // = M * U, column-style Hermite normal form
    IntMatrix U;  // unimodular
    int rank = 0;
};

/// Column-style HNF: H = M*U is in column echelon form with pivot rows
/// strictly increasing, positive pivots, and the entries of a pivot row in
/// earlier columns reduced into [0, pivot). Pivot columns come first, zero
/// columns last. Deterministic.
HnfResult hnf(const IntMatrix& m);

struct SnfResult {
    IntMatrix S;  // = U * M * V, diagonal, d1 | d2 | ..., di >= 0
    IntMatrix U;
    IntMatrix V;
};

SnfResult snf(const IntMatrix& m);

/// Invariant factors of coker(M): nontrivial torsion d_i > 1 first (in
/// divisibility order), then one 0 per free factor.
std::vector<Int> cokernel_invariants(const IntMatrix& m);

int rank(const IntMatrix& m);

/// HNF-normalized basis of {x : Mx = 0}, as columns. Saturated by construction.
IntMatrix kernel_basis(const IntMatrix& m);

/// Solve A x = v over Z; nullopt when v is outside the column span.
std::optional<Vec> solve_in_lattice(const IntMatrix& a, const Vec& v);
bool in_lattice(const IntMatrix& a, const Vec& v);

/// Does colspan(sub) lie inside colspan(sup)?
bool lattice_contains(const IntMatrix& sup, const IntMatrix& sub);
/// HNF-equality of column spans.
bool lattice_equal(const IntMatrix& a, const IntMatrix& b);

struct SaturationResult {
    IntMatrix basis;  // HNF basis of (L tensor Q) cap Z^n
    Int index;        // [saturation : L]
};

/// Columns of b must be independent (throws otherwise).
SaturationResult saturation(const IntMatrix& b);

/// Basis of {x in Z^b : f(x) in colspan(s)}.
IntMatrix lattice_preimage(const IntMatrix& f, const IntMatrix& s);

/// Basis of colspan(a) cap colspan(b), both inside Z^n.
IntMatrix lattice_intersection(const IntMatrix& a, const IntMatrix& b);

}  // namespace pic
