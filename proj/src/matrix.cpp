#include "tricat/matrix.hpp"

#include <sstream>

namespace tricat {

ExactMatrix::ExactMatrix(const Field& f, int rows, int cols)
    : field_(f), rows_(rows), cols_(cols),
      e_(static_cast<size_t>(rows) * cols, FieldElement::zero(f)) {
    if (rows < 0 || cols < 0) throw ShapeMismatch("negative matrix dimensions");
}

ExactMatrix::ExactMatrix(const Field& f, int rows, int cols, std::vector<FieldElement> entries)
    : field_(f), rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (rows < 0 || cols < 0) throw ShapeMismatch("negative matrix dimensions");
    if (e_.size() != static_cast<size_t>(rows) * cols)
        throw ShapeMismatch("entry count does not match rows*cols");
    for (const auto& x : e_)
        if (x.field() != field_) throw FieldMismatch("matrix entry in a different field");
}

ExactMatrix ExactMatrix::identity(const Field& f, int n) {
    ExactMatrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, FieldElement::one(f));
    return m;
}

ExactMatrix ExactMatrix::zero(const Field& f, int rows, int cols) {
    return ExactMatrix(f, rows, cols);
}

ExactMatrix ExactMatrix::from_ints(const Field& f, int rows, int cols,
                                   const std::vector<long>& v) {
    if (v.size() != static_cast<size_t>(rows) * cols)
        throw ShapeMismatch("from_ints: wrong literal length");
    ExactMatrix m(f, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m.set(i, j, FieldElement::from_int(f, v[static_cast<size_t>(i) * cols + j]));
    return m;
}

const FieldElement& ExactMatrix::at(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw ShapeMismatch("matrix index out of range");
    return e_[static_cast<size_t>(i) * cols_ + j];
}

void ExactMatrix::set(int i, int j, FieldElement v) {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw ShapeMismatch("matrix index out of range");
    if (v.field() != field_) throw FieldMismatch("matrix entry in a different field");
    e_[static_cast<size_t>(i) * cols_ + j] = std::move(v);
}

void ExactMatrix::check_field(const ExactMatrix& o) const {
    if (field_ != o.field_)
        throw FieldMismatch("matrices over different fields: " + field_.to_string() + " vs " +
                            o.field_.to_string());
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
    check_field(o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("matrix addition shape");
    ExactMatrix r(field_, rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
    return r;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const { return *this + (-o); }

ExactMatrix ExactMatrix::operator-() const {
    ExactMatrix r(field_, rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = -e_[k];
    return r;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    check_field(o);
    if (cols_ != o.rows_)
        throw ShapeMismatch("matrix product shape: " + std::to_string(cols_) + " vs " +
                            std::to_string(o.rows_));
    ExactMatrix r(field_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const FieldElement& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j)
                r.set(i, j, r.at(i, j) + a * o.at(k, j));
        }
    return r;
}

ExactMatrix ExactMatrix::scaled(const FieldElement& c) const {
    ExactMatrix r(field_, rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] * c;
    return r;
}

ExactMatrix ExactMatrix::transposed() const {
    ExactMatrix r(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
    return r;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
    if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t k = 0; k < e_.size(); ++k)
        if (e_[k] != o.e_[k]) return false;
    return true;
}

bool ExactMatrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

ExactMatrix ExactMatrix::hstack(const ExactMatrix& o) const {
    check_field(o);
    if (rows_ != o.rows_) throw ShapeMismatch("hstack row mismatch");
    ExactMatrix r(field_, rows_, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) r.set(i, j, at(i, j));
        for (int j = 0; j < o.cols_; ++j) r.set(i, cols_ + j, o.at(i, j));
    }
    return r;
}

ExactMatrix ExactMatrix::vstack(const ExactMatrix& o) const {
    check_field(o);
    if (cols_ != o.cols_) throw ShapeMismatch("vstack col mismatch");
    ExactMatrix r(field_, rows_ + o.rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.set(i, j, at(i, j));
    for (int i = 0; i < o.rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.set(rows_ + i, j, o.at(i, j));
    return r;
}

ExactMatrix ExactMatrix::submatrix(int row0, int col0, int nrows, int ncols) const {
    if (row0 < 0 || col0 < 0 || row0 + nrows > rows_ || col0 + ncols > cols_)
        throw ShapeMismatch("submatrix out of range");
    ExactMatrix r(field_, nrows, ncols);
    for (int i = 0; i < nrows; ++i)
        for (int j = 0; j < ncols; ++j) r.set(i, j, at(row0 + i, col0 + j));
    return r;
}

ExactMatrix ExactMatrix::columns(const std::vector<int>& idx) const {
    ExactMatrix r(field_, rows_, static_cast<int>(idx.size()));
    for (int j = 0; j < static_cast<int>(idx.size()); ++j)
        for (int i = 0; i < rows_; ++i) r.set(i, j, at(i, idx[j]));
    return r;
}

std::string ExactMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << "[";
        for (int j = 0; j < cols_; ++j) os << at(i, j).to_string() << (j + 1 < cols_ ? ", " : "");
        os << "]" << (i + 1 < rows_ ? ", " : "");
    }
    os << "]";
    return os.str();
}

ExactMatrix block_diag(const ExactMatrix& a, const ExactMatrix& b) {
    return block2x2(a, ExactMatrix::zero(a.field(), a.rows(), b.cols()),
                    ExactMatrix::zero(a.field(), b.rows(), a.cols()), b);
}

ExactMatrix block2x2(const ExactMatrix& a, const ExactMatrix& b,
                     const ExactMatrix& c, const ExactMatrix& d) {
    return a.hstack(b).vstack(c.hstack(d));
}

RrefResult rref(const ExactMatrix& m) {
    RrefResult out{m, {}, 0};
    ExactMatrix& a = out.reduced;
    int lead = 0;
    for (int col = 0; col < a.cols() && lead < a.rows(); ++col) {
        int piv = -1;
        for (int i = lead; i < a.rows(); ++i)
            if (!a.at(i, col).is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        // swap rows piv <-> lead
        if (piv != lead)
            for (int j = 0; j < a.cols(); ++j) {
                FieldElement t = a.at(lead, j);
                a.set(lead, j, a.at(piv, j));
                a.set(piv, j, t);
            }
        FieldElement inv = a.at(lead, col).inverse();
        for (int j = 0; j < a.cols(); ++j) a.set(lead, j, a.at(lead, j) * inv);
        for (int i = 0; i < a.rows(); ++i) {
            if (i == lead || a.at(i, col).is_zero()) continue;
            FieldElement c = a.at(i, col);
            for (int j = 0; j < a.cols(); ++j)
                a.set(i, j, a.at(i, j) - c * a.at(lead, j));
        }
        out.pivot_cols.push_back(col);
        ++lead;
    }
    out.rank = static_cast<int>(out.pivot_cols.size());
    return out;
}

int rank(const ExactMatrix& m) { return rref(m).rank; }

ExactMatrix kernel_basis(const ExactMatrix& m) {
    RrefResult r = rref(m);
    std::vector<int> free_cols;
    {
        size_t p = 0;
        for (int j = 0; j < m.cols(); ++j) {
            if (p < r.pivot_cols.size() && r.pivot_cols[p] == j) { ++p; continue; }
            free_cols.push_back(j);
        }
    }
    ExactMatrix k(m.field(), m.cols(), static_cast<int>(free_cols.size()));
    for (int t = 0; t < static_cast<int>(free_cols.size()); ++t) {
        int fc = free_cols[t];
        k.set(fc, t, FieldElement::one(m.field()));
        for (int p = 0; p < r.rank; ++p)
            k.set(r.pivot_cols[p], t, -r.reduced.at(p, fc));
    }
    return k;
}

ExactMatrix cokernel_projection(const ExactMatrix& m) {
    return kernel_basis(m.transposed()).transposed();
}

std::optional<ExactMatrix> solve(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows() != b.rows()) throw ShapeMismatch("solve: rows(a) != rows(b)");
    if (a.field() != b.field()) throw FieldMismatch("solve: mixed fields");
    RrefResult r = rref(a.hstack(b));
    // Any pivot landing in the b-block means inconsistency.
    for (int p : r.pivot_cols)
        if (p >= a.cols()) return std::nullopt;
    ExactMatrix x(a.field(), a.cols(), b.cols());
    for (int p = 0; p < static_cast<int>(r.pivot_cols.size()); ++p)
        for (int j = 0; j < b.cols(); ++j)
            x.set(r.pivot_cols[p], j, r.reduced.at(p, a.cols() + j));
    return x;
}

LinearSolver::LinearSolver(const ExactMatrix& a)
    : field_(a.field()), rows_(a.rows()), cols_(a.cols()),
      elim_(a.hstack(ExactMatrix::identity(a.field(), a.rows()))) {
    RrefResult r = rref(elim_);
    elim_ = std::move(r.reduced);
    for (int p : r.pivot_cols)
        if (p < cols_) pivots_.push_back(p);
    // pivots inside the identity block would mean dependent rows of [a|I],
    // impossible; pivots in the a-block list the solvable coordinates
}

std::optional<ExactMatrix> LinearSolver::operator()(const ExactMatrix& b) const {
    if (b.rows() != rows_) throw ShapeMismatch("LinearSolver: rhs rows");
    if (b.field() != field_) throw FieldMismatch("LinearSolver: rhs field");
    // y = E b where E is the recorded row-operation block
    ExactMatrix x(field_, cols_, b.cols());
    int nr = static_cast<int>(pivots_.size());
    for (int col = 0; col < b.cols(); ++col) {
        for (int row = 0; row < rows_; ++row) {
            FieldElement y = FieldElement::zero(field_);
            for (int k = 0; k < rows_; ++k) {
                const FieldElement& e = elim_.at(row, cols_ + k);
                if (!e.is_zero()) y = y + e * b.at(k, col);
            }
            if (row < nr) {
                // subtract contributions of free columns (set to zero), so y
                // is directly the pivot-variable value
                x.set(pivots_[static_cast<size_t>(row)], col, y);
            } else if (!y.is_zero()) {
                return std::nullopt;  // inconsistent row
            }
        }
    }
    // consistency also requires that non-pivot columns of the reduced a
    // block do not interfere: with free variables at zero, a*x reproduces b
    // exactly when the residual rows vanished, which was checked above
    return x;
}

ExactMatrix kron_operator(const Field& f, int u_rows, int u_cols,
                          const std::vector<std::pair<ExactMatrix, ExactMatrix>>& terms) {
    int out_rows = terms.empty() ? 0 : terms.front().first.rows();
    int out_cols = terms.empty() ? 0 : terms.front().second.cols();
    ExactMatrix a(f, out_rows * out_cols, u_rows * u_cols);
    for (const auto& [L, R] : terms) {
        if (L.cols() != u_rows || R.rows() != u_cols)
            throw ShapeMismatch("kron_operator: term shapes");
        if (L.rows() != out_rows || R.cols() != out_cols)
            throw ShapeMismatch("kron_operator: inconsistent output shapes");
        for (int r = 0; r < L.rows(); ++r)
            for (int i = 0; i < L.cols(); ++i) {
                const FieldElement& l = L.at(r, i);
                if (l.is_zero()) continue;
                for (int j = 0; j < R.rows(); ++j)
                    for (int c = 0; c < R.cols(); ++c) {
                        const FieldElement& rr = R.at(j, c);
                        if (rr.is_zero()) continue;
                        int eq = r * out_cols + c, var = i * u_cols + j;
                        a.set(eq, var, a.at(eq, var) + l * rr);
                    }
            }
    }
    return a;
}

std::optional<ExactMatrix> inverse(const ExactMatrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    auto x = solve(m, ExactMatrix::identity(m.field(), m.rows()));
    if (!x) return std::nullopt;
    if (!((*x) * m == ExactMatrix::identity(m.field(), m.rows()))) return std::nullopt;
    return x;
}

long bounded_random(std::mt19937_64& rng, long lo, long hi) {
    if (hi < lo) throw Error("bounded_random: empty range");
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

FieldElement random_element(std::mt19937_64& rng, const Field& f) {
    if (f.kind == Field::Kind::prime)
        return FieldElement::residue(f, bounded_random(rng, 0, f.modulus - 1));
    long num = bounded_random(rng, -4, 4);
    long den = bounded_random(rng, 1, 3);
    return FieldElement::rational(num, den);
}

ExactMatrix random_matrix(std::mt19937_64& rng, const Field& f, int rows, int cols) {
    ExactMatrix m(f, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.set(i, j, random_element(rng, f));
    return m;
}

}  // namespace tricat
