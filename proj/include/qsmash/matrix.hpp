#pragma once

#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "qsmash/rational.hpp"

namespace qsmash {

// Dense row-major matrix over the rationals. Vectors throughout the library
// are row vectors; x in M_{ta} maps to x * M(a).
class RatMatrix {
  public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("RatMatrix: negative shape");
    }

    static RatMatrix identity(int n) {
        RatMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static RatMatrix from_rows(const std::vector<std::vector<Rat>>& rows) {
        int r = static_cast<int>(rows.size());
        int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
        RatMatrix m(r, c);
        for (int i = 0; i < r; ++i) {
            if (static_cast<int>(rows[i].size()) != c)
                throw std::invalid_argument("from_rows: ragged rows");
            for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    static RatMatrix from_longs(const std::vector<std::vector<long>>& rows) {
        int r = static_cast<int>(rows.size());
        int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
        RatMatrix m(r, c);
        for (int i = 0; i < r; ++i) {
            if (static_cast<int>(rows[i].size()) != c)
                throw std::invalid_argument("from_longs: ragged rows");
            for (int j = 0; j < c; ++j) m(i, j) = rat(rows[i][j]);
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Rat& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const RatMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const RatMatrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const Rat& x : a_) if (x != 0) return false;
        return true;
    }

    RatMatrix transpose() const {
        RatMatrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    RatMatrix operator+(const RatMatrix& o) const {
        check_same_shape(o, "+");
        RatMatrix r = *this;
        for (size_t k = 0; k < a_.size(); ++k) r.a_[k] += o.a_[k];
        return r;
    }

    RatMatrix operator-(const RatMatrix& o) const {
        check_same_shape(o, "-");
        RatMatrix r = *this;
        for (size_t k = 0; k < a_.size(); ++k) r.a_[k] -= o.a_[k];
        return r;
    }

    RatMatrix& operator+=(const RatMatrix& o) {
        check_same_shape(o, "+=");
        for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
        return *this;
    }

    RatMatrix operator*(const RatMatrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("RatMatrix*: shape mismatch");
        RatMatrix r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Rat& x = (*this)(i, k);
                if (x == 0) continue;
                for (int j = 0; j < o.cols_; ++j) {
                    const Rat& y = o(k, j);
                    if (y != 0) r(i, j) += x * y;
                }
            }
        return r;
    }

    RatMatrix scaled(const Rat& c) const {
        RatMatrix r = *this;
        for (Rat& x : r.a_) x *= c;
        return r;
    }

    Rat trace() const {
        if (rows_ != cols_) throw std::invalid_argument("trace: not square");
        Rat t = 0;
        for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    RatMatrix block(int r0, int c0, int r, int c) const {
        if (r0 < 0 || c0 < 0 || r0 + r > rows_ || c0 + c > cols_)
            throw std::invalid_argument("block: out of range");
        RatMatrix b(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
        return b;
    }

    void set_block(int r0, int c0, const RatMatrix& b) {
        if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_)
            throw std::invalid_argument("set_block: out of range");
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
    }

    std::vector<Rat> row(int i) const {
        std::vector<Rat> r(cols_);
        for (int j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
        return r;
    }

    // Row-major flattening, used wherever matrices become coordinate vectors.
    const std::vector<Rat>& flat() const { return a_; }

  private:
    void check_same_shape(const RatMatrix& o, const char* op) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument(std::string("RatMatrix") + op + ": shape mismatch");
    }

    int rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

inline RatMatrix hcat(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hcat: row mismatch");
    RatMatrix m(a.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(0, a.cols(), b);
    return m;
}

inline RatMatrix vcat(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vcat: col mismatch");
    RatMatrix m(a.rows() + b.rows(), a.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), 0, b);
    return m;
}

// Kronecker product, row-major block layout.
inline RatMatrix kronecker_product(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (a(i, j) == 0) continue;
            m.set_block(i * b.rows(), j * b.cols(), b.scaled(a(i, j)));
        }
    return m;
}

// Reduced row echelon form in place. Pivots are leftmost-nonzero-column,
// topmost-row, so results are reproducible. Returns the pivot columns.
inline std::vector<int> rref_inplace(RatMatrix& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m(i, c) != 0) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Rat inv = m(r, c);
        for (int j = c; j < m.cols(); ++j) m(r, j) /= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rat f = m(i, c);
            for (int j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline int rank(const RatMatrix& m) {
    RatMatrix c = m;
    return static_cast<int>(rref_inplace(c).size());
}

// Basis of the left kernel {x : x * m = 0}, one row per basis vector, in the
// canonical reduced-echelon parameterization (free columns ascending).
inline RatMatrix kernel_basis(const RatMatrix& m) {
    RatMatrix t = m.transpose();
    std::vector<int> piv = rref_inplace(t);
    std::vector<bool> is_pivot(m.rows(), false);
    for (int c : piv) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < m.rows(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    RatMatrix k(static_cast<int>(free_cols.size()), m.rows());
    for (size_t b = 0; b < free_cols.size(); ++b) {
        int f = free_cols[b];
        k(static_cast<int>(b), f) = 1;
        for (size_t i = 0; i < piv.size(); ++i) k(static_cast<int>(b), piv[i]) = -t(static_cast<int>(i), f);
    }
    rref_inplace(k);
    return k;
}

// Exact determinant: denominators are cleared per row, then fraction-free
// Bareiss elimination runs over the integers.
inline Rat det(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: not square");
    int n = m.rows();
    if (n == 0) return rat(1);
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    Rat scale = 1;
    for (int i = 0; i < n; ++i) {
        Int l = 1;
        for (int j = 0; j < n; ++j) l = lcm(l, m(i, j).get_den());
        scale /= Rat(l);
        for (int j = 0; j < n; ++j) {
            Rat x = m(i, j) * Rat(l);
            a[i][j] = x.get_num();
        }
    }
    int sign = 1;
    Int prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        int p = -1;
        for (int i = k; i < n; ++i)
            if (a[i][k] != 0) { p = i; break; }
        if (p < 0) return rat(0);
        if (p != k) { std::swap(a[p], a[k]); sign = -sign; }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    Rat d = Rat(a[n - 1][n - 1]) * scale;
    if (sign < 0) d = -d;
    d.canonicalize();
    return d;
}

// Solve x * a = b for x (shape b.rows x a.rows); the particular solution sets
// free variables to zero. Returns nullopt when the system is inconsistent.
inline std::optional<RatMatrix> solve_left(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("solve_left: shape mismatch");
    RatMatrix aug = hcat(a.transpose(), b.transpose());
    std::vector<int> piv = rref_inplace(aug);
    int n = a.rows();
    // Pivot in the b-part means inconsistency.
    for (int c : piv)
        if (c >= n) return std::nullopt;
    RatMatrix x(b.rows(), a.rows());
    for (size_t i = 0; i < piv.size(); ++i)
        for (int k = 0; k < b.rows(); ++k) x(k, piv[i]) = aug(static_cast<int>(i), n + k);
    return x;
}

// Yale display triplet: three parallel arrays (values, row indices, column
// indices), 1-based, nonzeros listed in row-major scan order.
struct YaleTriplet {
    std::vector<Rat> values;
    std::vector<int> row_indices;
    std::vector<int> col_indices;

    bool operator==(const YaleTriplet& o) const = default;
};

inline YaleTriplet to_yale(const RatMatrix& m) {
    YaleTriplet t;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) {
                t.values.push_back(m(i, j));
                t.row_indices.push_back(i + 1);
                t.col_indices.push_back(j + 1);
            }
    return t;
}

inline RatMatrix from_yale(const YaleTriplet& t, int rows, int cols) {
    if (t.values.size() != t.row_indices.size() || t.values.size() != t.col_indices.size())
        throw std::invalid_argument("from_yale: ragged triplet");
    RatMatrix m(rows, cols);
    for (size_t k = 0; k < t.values.size(); ++k) {
        int i = t.row_indices[k], j = t.col_indices[k];
        if (i < 1 || i > rows || j < 1 || j > cols)
            throw std::out_of_range("from_yale: index outside declared shape");
        if (m(i - 1, j - 1) != 0)
            throw std::invalid_argument("from_yale: duplicate entry");
        m(i - 1, j - 1) = t.values[k];
    }
    return m;
}

// Span utilities: rows of `basis` are vectors; all exact.

// Echelonized span basis of the given row vectors (unique per subspace).
inline RatMatrix row_space_basis(const RatMatrix& vectors) {
    RatMatrix c = vectors;
    std::vector<int> piv = rref_inplace(c);
    RatMatrix b(static_cast<int>(piv.size()), vectors.cols());
    for (size_t i = 0; i < piv.size(); ++i)
        for (int j = 0; j < vectors.cols(); ++j) b(static_cast<int>(i), j) = c(static_cast<int>(i), j);
    return b;
}

// Incremental echelon container for building span bases vector by vector.
class SpanBuilder {
  public:
    explicit SpanBuilder(int dim) : dim_(dim) {}

    // Returns true if v enlarged the span. Keeps rows fully reduced.
    bool add(std::vector<Rat> v) {
        if (static_cast<int>(v.size()) != dim_) throw std::invalid_argument("SpanBuilder: dim");
        reduce(v);
        int lead = -1;
        for (int j = 0; j < dim_; ++j)
            if (v[j] != 0) { lead = j; break; }
        if (lead < 0) return false;
        Rat inv = v[lead];
        for (int j = lead; j < dim_; ++j) v[j] /= inv;
        for (size_t r = 0; r < rows_.size(); ++r) {
            Rat f = rows_[r][lead];
            if (f == 0) continue;
            for (int j = 0; j < dim_; ++j) rows_[r][j] -= f * v[j];
        }
        size_t pos = 0;
        while (pos < leads_.size() && leads_[pos] < lead) ++pos;
        rows_.insert(rows_.begin() + pos, std::move(v));
        leads_.insert(leads_.begin() + pos, lead);
        return true;
    }

    bool contains(std::vector<Rat> v) const {
        reduce(v);
        for (const Rat& x : v)
            if (x != 0) return false;
        return true;
    }

    // Residual of v after reduction against the span (linear in v).
    std::vector<Rat> residual(std::vector<Rat> v) const {
        reduce(v);
        return v;
    }

    // Coordinates of v in the echelon basis; nullopt if outside the span.
    std::optional<std::vector<Rat>> coordinates(std::vector<Rat> v) const {
        std::vector<Rat> coef(rows_.size());
        for (size_t r = 0; r < rows_.size(); ++r) {
            Rat f = v[leads_[r]];
            coef[r] = f;
            if (f == 0) continue;
            for (int j = 0; j < dim_; ++j) v[j] -= f * rows_[r][j];
        }
        for (const Rat& x : v)
            if (x != 0) return std::nullopt;
        return coef;
    }

    int size() const { return static_cast<int>(rows_.size()); }
    int dim() const { return dim_; }
    const std::vector<Rat>& basis_row(int i) const { return rows_[i]; }

    RatMatrix basis_matrix() const {
        RatMatrix b(size(), dim_);
        for (int i = 0; i < size(); ++i)
            for (int j = 0; j < dim_; ++j) b(i, j) = rows_[i][j];
        return b;
    }

  private:
    void reduce(std::vector<Rat>& v) const {
        for (size_t r = 0; r < rows_.size(); ++r) {
            Rat f = v[leads_[r]];
            if (f == 0) continue;
            for (int j = 0; j < dim_; ++j) v[j] -= f * rows_[r][j];
        }
    }

    int dim_;
    std::vector<std::vector<Rat>> rows_;
    std::vector<int> leads_;
};

inline RatMatrix random_matrix(Rng& rng, int rows, int cols, long height) {
    RatMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = rng.rat_in(height);
    return m;
}

inline RatMatrix random_invertible(Rng& rng, int n, long height, int budget = 64) {
    for (int t = 0; t < budget; ++t) {
        RatMatrix m = random_matrix(rng, n, n, height);
        if (det(m) != 0) return m;
    }
    throw std::runtime_error("random_invertible: budget exhausted");
}

}  // namespace qsmash
