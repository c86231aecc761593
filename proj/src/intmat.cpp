#include "pic/intmat.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pic {

namespace {

// g = gcd(a,b) = x*a + y*b
void xgcd(const Int& a, const Int& b, Int& g, Int& x, Int& y) {
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

IntMatrix::IntMatrix(int rows, int cols, std::vector<Int> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != static_cast<size_t>(rows) * cols)
        throw std::invalid_argument("IntMatrix: data size mismatch");
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<Vec>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw std::invalid_argument("from_rows: ragged rows");
        for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::from_cols(const std::vector<Vec>& cols) {
    int c = static_cast<int>(cols.size());
    int r = c == 0 ? 0 : static_cast<int>(cols[0].size());
    IntMatrix m(r, c);
    for (int j = 0; j < c; ++j) {
        if (static_cast<int>(cols[j].size()) != r)
            throw std::invalid_argument("from_cols: ragged columns");
        for (int i = 0; i < r; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

Vec IntMatrix::row(int i) const {
    Vec v(cols_);
    for (int j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
    return v;
}

Vec IntMatrix::col(int j) const {
    Vec v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& a = (*this)(i, k);
            if (a == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
        }
    return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("matrix sum: shape mismatch");
    IntMatrix out(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + rhs.data_[i];
    return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("matrix difference: shape mismatch");
    IntMatrix out(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - rhs.data_[i];
    return out;
}

Vec IntMatrix::apply(const Vec& x) const {
    if (static_cast<int>(x.size()) != cols_)
        throw std::invalid_argument("apply: vector size mismatch");
    Vec out(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if ((*this)(i, j) != 0) out[i] += (*this)(i, j) * x[j];
    return out;
}

bool IntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Int& v) { return v == 0; });
}

void IntMatrix::swap_cols(int a, int b) {
    if (a == b) return;
    for (int i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::negate_col(int j) {
    for (int i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::addmul_col(int dst, int src, const Int& q) {
    if (q == 0) return;
    for (int i = 0; i < rows_; ++i) (*this)(i, dst) += q * (*this)(i, src);
}

void IntMatrix::swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::negate_row(int i) {
    for (int j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::addmul_row(int dst, int src, const Int& q) {
    if (q == 0) return;
    for (int j = 0; j < cols_; ++j) (*this)(dst, j) += q * (*this)(src, j);
}

IntMatrix IntMatrix::hstack(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_) throw std::invalid_argument("hstack: row mismatch");
    IntMatrix out(a.rows_, a.cols_ + b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
        for (int j = 0; j < a.cols_; ++j) out(i, j) = a(i, j);
        for (int j = 0; j < b.cols_; ++j) out(i, a.cols_ + j) = b(i, j);
    }
    return out;
}

IntMatrix IntMatrix::vstack(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.cols_) throw std::invalid_argument("vstack: column mismatch");
    IntMatrix out(a.rows_ + b.rows_, a.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) out(i, j) = a(i, j);
    for (int i = 0; i < b.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) out(a.rows_ + i, j) = b(i, j);
    return out;
}

IntMatrix IntMatrix::block_diag(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix out(a.rows_ + b.rows_, a.cols_ + b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) out(i, j) = a(i, j);
    for (int i = 0; i < b.rows_; ++i)
        for (int j = 0; j < b.cols_; ++j) out(a.rows_ + i, a.cols_ + j) = b(i, j);
    return out;
}

IntMatrix IntMatrix::top_rows(int k) const {
    IntMatrix out(k, cols_);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
    return out;
}

IntMatrix IntMatrix::left_cols(int k) const {
    IntMatrix out(rows_, k);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < k; ++j) out(i, j) = (*this)(i, j);
    return out;
}

IntMatrix IntMatrix::drop_zero_cols() const {
    std::vector<int> keep;
    for (int j = 0; j < cols_; ++j) {
        bool zero = true;
        for (int i = 0; i < rows_ && zero; ++i) zero = (*this)(i, j) == 0;
        if (!zero) keep.push_back(j);
    }
    return submatrix_cols(keep);
}

IntMatrix IntMatrix::submatrix_cols(const std::vector<int>& idx) const {
    IntMatrix out(rows_, static_cast<int>(idx.size()));
    for (int j = 0; j < out.cols_; ++j)
        for (int i = 0; i < rows_; ++i) out(i, j) = (*this)(i, idx[j]);
    return out;
}

IntMatrix IntMatrix::submatrix_rows(const std::vector<int>& idx) const {
    IntMatrix out(static_cast<int>(idx.size()), cols_);
    for (int i = 0; i < out.rows_; ++i)
        for (int j = 0; j < cols_; ++j) out(i, j) = (*this)(idx[i], j);
    return out;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j).get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

HnfResult hnf(const IntMatrix& m) {
    HnfResult res{m, IntMatrix::identity(m.cols()), 0};
    IntMatrix& h = res.H;
    IntMatrix& u = res.U;
    int piv = 0;
    for (int row = 0; row < m.rows() && piv < m.cols(); ++row) {
        // move a nonzero entry into the pivot column
        if (h(row, piv) == 0) {
            int k = piv + 1;
            while (k < m.cols() && h(row, k) == 0) ++k;
            if (k == m.cols()) continue;
            h.swap_cols(piv, k);
            u.swap_cols(piv, k);
        }
        // gcd-eliminate everything to the right of the pivot in this row
        for (int k = piv + 1; k < m.cols(); ++k) {
            if (h(row, k) == 0) continue;
            if (h(row, k) % h(row, piv) == 0) {
                Int q = -(h(row, k) / h(row, piv));
                h.addmul_col(k, piv, q);
                u.addmul_col(k, piv, q);
                continue;
            }
            Int g, x, y;
            xgcd(h(row, piv), h(row, k), g, x, y);
            Int a = h(row, piv) / g, b = h(row, k) / g;
            for (IntMatrix* mat : {&h, &u}) {
                for (int i = 0; i < mat->rows(); ++i) {
                    Int cp = (*mat)(i, piv), ck = (*mat)(i, k);
                    (*mat)(i, piv) = x * cp + y * ck;
                    (*mat)(i, k) = a * ck - b * cp;
                }
            }
        }
        if (h(row, piv) < 0) {
            h.negate_col(piv);
            u.negate_col(piv);
        }
        // reduce the pivot-row entries of earlier columns into [0, pivot)
        for (int k = 0; k < piv; ++k) {
            Int q = floor_div(h(row, k), h(row, piv));
            h.addmul_col(k, piv, -q);
            u.addmul_col(k, piv, -q);
        }
        ++piv;
    }
    res.rank = piv;
    return res;
}

SnfResult snf(const IntMatrix& m) {
    SnfResult res{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
    IntMatrix& s = res.S;
    IntMatrix& u = res.U;
    IntMatrix& v = res.V;
    int n = std::min(m.rows(), m.cols());
    for (int t = 0; t < n; ++t) {
        // pick the smallest-magnitude nonzero entry of the trailing block
        int pi = -1, pj = -1;
        for (int i = t; i < m.rows(); ++i)
            for (int j = t; j < m.cols(); ++j)
                if (s(i, j) != 0 &&
                    (pi < 0 || mpz_cmpabs(s(i, j).get_mpz_t(), s(pi, pj).get_mpz_t()) < 0)) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        s.swap_rows(t, pi);
        u.swap_rows(t, pi);
        s.swap_cols(t, pj);
        v.swap_cols(t, pj);
        for (;;) {
            for (int i = t + 1; i < m.rows(); ++i) {
                if (s(i, t) == 0) continue;
                if (s(i, t) % s(t, t) == 0) {
                    Int q = -(s(i, t) / s(t, t));
                    s.addmul_row(i, t, q);
                    u.addmul_row(i, t, q);
                    continue;
                }
                Int g, x, y;
                xgcd(s(t, t), s(i, t), g, x, y);
                Int a = s(t, t) / g, b = s(i, t) / g;
                for (IntMatrix* mat : {&s, &u}) {
                    for (int j = 0; j < mat->cols(); ++j) {
                        Int rt = (*mat)(t, j), ri = (*mat)(i, j);
                        (*mat)(t, j) = x * rt + y * ri;
                        (*mat)(i, j) = a * ri - b * rt;
                    }
                }
            }
            for (int j = t + 1; j < m.cols(); ++j) {
                if (s(t, j) == 0) continue;
                if (s(t, j) % s(t, t) == 0) {
                    Int q = -(s(t, j) / s(t, t));
                    s.addmul_col(j, t, q);
                    v.addmul_col(j, t, q);
                    continue;
                }
                Int g, x, y;
                xgcd(s(t, t), s(t, j), g, x, y);
                Int a = s(t, t) / g, b = s(t, j) / g;
                for (IntMatrix* mat : {&s, &v}) {
                    for (int i = 0; i < mat->rows(); ++i) {
                        Int ct = (*mat)(i, t), cj = (*mat)(i, j);
                        (*mat)(i, t) = x * ct + y * cj;
                        (*mat)(i, j) = a * cj - b * ct;
                    }
                }
            }
            bool clear = true;
            for (int i = t + 1; i < m.rows() && clear; ++i) clear = s(i, t) == 0;
            if (!clear) continue;
            // force divisibility of the trailing block by the pivot
            bool fixed = false;
            for (int i = t + 1; i < m.rows() && !fixed; ++i)
                for (int j = t + 1; j < m.cols() && !fixed; ++j)
                    if (s(i, j) % s(t, t) != 0) {
                        s.addmul_row(t, i, 1);
                        u.addmul_row(t, i, 1);
                        fixed = true;
                    }
            if (!fixed) break;
        }
        if (s(t, t) < 0) {
            s.negate_row(t);
            u.negate_row(t);
        }
    }
    return res;
}

std::vector<Int> cokernel_invariants(const IntMatrix& m) {
    SnfResult r = snf(m);
    std::vector<Int> out;
    int n = std::min(m.rows(), m.cols());
    int rk = 0;
    for (int t = 0; t < n; ++t)
        if (r.S(t, t) != 0) ++rk;
    for (int t = 0; t < rk; ++t)
        if (r.S(t, t) > 1) out.push_back(r.S(t, t));
    for (int i = 0; i < m.rows() - rk; ++i) out.push_back(0);
    return out;
}

int rank(const IntMatrix& m) { return hnf(m).rank; }

IntMatrix kernel_basis(const IntMatrix& m) {
    HnfResult r = hnf(m);
    std::vector<int> zero_cols;
    for (int j = r.rank; j < m.cols(); ++j) zero_cols.push_back(j);
    IntMatrix k = r.U.submatrix_cols(zero_cols);
    return hnf(k).H;
}

std::optional<Vec> solve_in_lattice(const IntMatrix& a, const Vec& v) {
    if (static_cast<int>(v.size()) != a.rows())
        throw std::invalid_argument("solve_in_lattice: size mismatch");
    HnfResult r = hnf(a);
    Vec res = v;
    Vec y(a.cols());
    int row = 0;
    for (int p = 0; p < r.rank; ++p) {
        // pivot of column p sits at the first nonzero row of that column
        while (row < a.rows() && r.H(row, p) == 0) {
            if (res[row] != 0) return std::nullopt;
            ++row;
        }
        if (row == a.rows()) return std::nullopt;
        if (res[row] % r.H(row, p) != 0) return std::nullopt;
        y[p] = res[row] / r.H(row, p);
        if (y[p] != 0)
            for (int i = row; i < a.rows(); ++i) res[i] -= y[p] * r.H(i, p);
    }
    for (const Int& e : res)
        if (e != 0) return std::nullopt;
    return r.U.apply(y);
}

bool in_lattice(const IntMatrix& a, const Vec& v) { return solve_in_lattice(a, v).has_value(); }

bool lattice_contains(const IntMatrix& sup, const IntMatrix& sub) {
    for (int j = 0; j < sub.cols(); ++j)
        if (!in_lattice(sup, sub.col(j))) return false;
    return true;
}

bool lattice_equal(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows()) return false;
    return hnf(a).H.drop_zero_cols() == hnf(b).H.drop_zero_cols();
}

SaturationResult saturation(const IntMatrix& b) {
    if (rank(b) != b.cols()) throw std::invalid_argument("saturation: dependent columns");
    IntMatrix ortho = kernel_basis(b.transpose());
    IntMatrix sat = ortho.cols() == 0 ? IntMatrix::identity(b.rows())
                                      : kernel_basis(ortho.transpose());
    SnfResult s = snf(b);
    Int index = 1;
    for (int t = 0; t < std::min(b.rows(), b.cols()); ++t)
        if (s.S(t, t) != 0) index *= s.S(t, t);
    return {sat, index};
}

IntMatrix lattice_preimage(const IntMatrix& f, const IntMatrix& s) {
    if (f.rows() != s.rows()) throw std::invalid_argument("lattice_preimage: shape mismatch");
    IntMatrix k = kernel_basis(IntMatrix::hstack(f, s));
    IntMatrix top = k.top_rows(f.cols());
    return hnf(top).H.drop_zero_cols();
}

IntMatrix lattice_intersection(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("lattice_intersection: shape mismatch");
    IntMatrix k = kernel_basis(IntMatrix::hstack(a, b));
    IntMatrix coeff = k.top_rows(a.cols());
    return hnf(a * coeff).H.drop_zero_cols();
}

}  // namespace pic
