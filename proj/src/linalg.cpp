#include "gnf/linalg.hpp"

#include <cassert>

#include "gnf/error.hpp"

namespace gnf {

Matrix Matrix::from_columns(const std::vector<Vector>& columns, std::size_t rows) {
    Matrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        assert(columns[j].size() == rows);
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    }
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        assert(rows[i].size() == cols);
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Vector Matrix::operator*(const Vector& x) const {
    assert(x.size() == cols_);
    Vector y(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < cols_; ++j) {
            if ((*this)(i, j) != 0 && x[j] != 0) s += (*this)(i, j) * x[j];
        }
        y[i] = s;
    }
    return y;
}

namespace {

// Scales a rational row to integers by the lcm of its denominators.
std::vector<Integer> clear_denominators(const Matrix& a, std::size_t i, Integer* scale) {
    Integer l = 1;
    for (std::size_t j = 0; j < a.cols(); ++j) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den_mpz_t());
    }
    std::vector<Integer> row(a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        Integer num = a(i, j).get_num() * (l / a(i, j).get_den());
        row[j] = num;
    }
    if (scale) *scale = l;
    return row;
}

struct BareissResult {
    Echelon form;
    int swaps = 0;
    Integer last_pivot = 1;
};

BareissResult bareiss(std::vector<std::vector<Integer>> m, std::size_t cols) {
    BareissResult out;
    out.form.cols = cols;
    Integer prev = 1;
    std::size_t r = 0;
    const std::size_t n = m.size();
    for (std::size_t c = 0; c < cols && r < n; ++c) {
        std::size_t piv = r;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) continue;
        if (piv != r) {
            std::swap(m[piv], m[r]);
            ++out.swaps;
        }
        for (std::size_t i = r + 1; i < n; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Integer v = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = std::move(v);
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        out.form.pivots.push_back(c);
        ++r;
    }
    out.last_pivot = prev;
    m.resize(r);
    out.form.rows = std::move(m);
    return out;
}

// Back substitution on an echelon form: pivot variables in terms of fixed free values.
Vector back_substitute(const Echelon& e, Vector x) {
    for (std::size_t k = e.rows.size(); k-- > 0;) {
        const auto& row = e.rows[k];
        const std::size_t pc = e.pivots[k];
        Rational s = 0;
        for (std::size_t j = pc + 1; j < e.cols; ++j) {
            if (row[j] != 0 && x[j] != 0) s += Rational(row[j]) * x[j];
        }
        x[pc] = -s / Rational(row[pc]);
    }
    return x;
}

}  // namespace

Echelon echelon(const Matrix& a) {
    std::vector<std::vector<Integer>> m;
    m.reserve(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) m.push_back(clear_denominators(a, i, nullptr));
    return bareiss(std::move(m), a.cols()).form;
}

std::size_t rank(const Matrix& a) { return echelon(a).pivots.size(); }

std::vector<Vector> nullspace(const Matrix& a) {
    const Echelon e = echelon(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector x(a.cols(), Rational(0));
        x[f] = 1;
        basis.push_back(back_substitute(e, std::move(x)));
    }
    return basis;
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
    assert(b.size() == a.rows());
    Matrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    Echelon e = echelon(aug);
    if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
    // Treat the augmented column as a fixed variable equal to -1 so that back substitution
    // yields A x = b.
    Vector x(a.cols() + 1, Rational(0));
    x[a.cols()] = -1;
    x = back_substitute(e, std::move(x));
    x.pop_back();
    return x;
}

Rational determinant(const Matrix& a) {
    if (a.rows() != a.cols()) throw Error(ErrorKind::SizeMismatch, "determinant of non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    std::vector<std::vector<Integer>> m;
    Integer scale_product = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Integer s;
        m.push_back(clear_denominators(a, i, &s));
        scale_product *= s;
    }
    BareissResult r = bareiss(std::move(m), n);
    if (r.form.pivots.size() < n) return 0;
    Rational det(r.last_pivot, scale_product);
    det.canonicalize();
    return r.swaps % 2 == 0 ? det : Rational(-det);
}

std::vector<Vector> row_basis(const std::vector<Vector>& vectors, std::size_t dim) {
    if (vectors.empty()) return {};
    const Echelon e = echelon(Matrix::from_rows(vectors, dim));
    // Reduce to RREF over Q.
    std::vector<Vector> rows;
    for (const auto& r : e.rows) {
        Vector v(dim);
        for (std::size_t j = 0; j < dim; ++j) v[j] = Rational(r[j]);
        rows.push_back(std::move(v));
    }
    for (std::size_t k = rows.size(); k-- > 0;) {
        const std::size_t pc = e.pivots[k];
        const Rational p = rows[k][pc];
        for (auto& v : rows[k]) v /= p;
        for (std::size_t i = 0; i < k; ++i) {
            const Rational f = rows[i][pc];
            if (f == 0) continue;
            for (std::size_t j = pc; j < dim; ++j) rows[i][j] -= f * rows[k][j];
        }
    }
    return rows;
}

}  // namespace gnf
