#include "logcentre/linalg.hpp"
#include "logcentre/error.hpp"

#include <numeric>
#include <utility>

namespace logcentre::linalg {

QMatrix::QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols)
{
}

QMatrix QMatrix::identity(std::size_t n)
{
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

QMatrix QMatrix::from_rows(std::vector<RationalVector> const& rows)
{
    if (rows.empty())
        return {};
    QMatrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols())
            fail(ErrorKind::invalid_argument, "ragged matrix rows");
        for (std::size_t c = 0; c < m.cols(); ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

QMatrix QMatrix::from_columns(std::vector<IntVector> const& cols)
{
    if (cols.empty())
        return {};
    QMatrix m(cols.front().size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != m.rows())
            fail(ErrorKind::invalid_argument, "ragged matrix columns");
        for (std::size_t r = 0; r < m.rows(); ++r)
            m(r, c) = Rational(static_cast<long>(cols[c][r]));
    }
    return m;
}

RationalVector QMatrix::column(std::size_t c) const
{
    RationalVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

RationalVector QMatrix::row(std::size_t r) const
{
    return RationalVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

QMatrix QMatrix::transpose() const
{
    QMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

QMatrix operator*(QMatrix const& a, QMatrix const& b)
{
    if (a.cols() != b.rows())
        fail(ErrorKind::invalid_argument, "matrix product: dimension mismatch");
    QMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < b.cols(); ++k) {
            Rational s = 0;
            for (std::size_t j = 0; j < a.cols(); ++j)
                s += a(i, j) * b(j, k);
            out(i, k) = s;
        }
    return out;
}

RationalVector operator*(QMatrix const& a, RationalVector const& v)
{
    if (a.cols() != v.size())
        fail(ErrorKind::invalid_argument, "matrix-vector product: dimension mismatch");
    RationalVector out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out[i] += a(i, j) * v[j];
    return out;
}

Rational dot(RationalVector const& a, RationalVector const& b)
{
    if (a.size() != b.size())
        fail(ErrorKind::invalid_argument, "pairing: dimension mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

Rational dot(RationalVector const& a, IntVector const& b)
{
    if (a.size() != b.size())
        fail(ErrorKind::invalid_argument, "pairing: dimension mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * static_cast<long>(b[i]);
    return s;
}

namespace {

/* In-place row echelon form; returns pivot columns.  Tracks the sign and
 * scale changes so the determinant can be read off. */
std::vector<std::size_t> echelon(QMatrix& m, Rational* det = nullptr)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    if (det)
        *det = 1;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col) == 0)
            ++p;
        if (p == m.rows())
            continue;
        if (p != row) {
            for (std::size_t c = 0; c < m.cols(); ++c)
                std::swap(m(p, c), m(row, c));
            if (det)
                *det = -*det;
        }
        Rational piv = m(row, col);
        if (det)
            *det *= piv;
        for (std::size_t c = col; c < m.cols(); ++c)
            m(row, c) /= piv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col) == 0)
                continue;
            Rational f = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                m(r, c) -= f * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t rank(QMatrix m)
{
    return echelon(m).size();
}

Rational determinant(QMatrix m)
{
    if (m.rows() != m.cols())
        fail(ErrorKind::invalid_argument, "determinant of a non-square matrix");
    Rational det;
    auto pivots = echelon(m, &det);
    return pivots.size() == m.rows() ? det : Rational(0);
}

QMatrix inverse(QMatrix const& m)
{
    std::size_t n = m.rows();
    if (n != m.cols())
        fail(ErrorKind::invalid_argument, "inverse of a non-square matrix");
    QMatrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c)
            aug(r, c) = m(r, c);
        aug(r, n + r) = 1;
    }
    auto pivots = echelon(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1)
        fail(ErrorKind::invalid_argument, "matrix is singular");
    QMatrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            inv(r, c) = aug(r, n + c);
    return inv;
}

std::optional<RationalVector> solve_unique(QMatrix const& a, RationalVector const& b)
{
    if (a.rows() != b.size())
        fail(ErrorKind::invalid_argument, "solve: dimension mismatch");
    QMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c)
            aug(r, c) = a(r, c);
        aug(r, a.cols()) = b[r];
    }
    auto pivots = echelon(aug);
    if (!pivots.empty() && pivots.back() == a.cols())
        return std::nullopt;
    if (pivots.size() != a.cols())
        fail(ErrorKind::invalid_argument, "solve: solution is not unique");
    RationalVector x(a.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        x[pivots[r]] = aug(r, a.cols());
    return x;
}

RationalVector to_rational(IntVector const& v)
{
    RationalVector out;
    out.reserve(v.size());
    for (auto x : v)
        out.emplace_back(static_cast<long>(x));
    return out;
}

std::int64_t gcd(IntVector const& v)
{
    std::int64_t g = 0;
    for (auto x : v)
        g = std::gcd(g, x);
    return g;
}

std::int64_t int_rank(std::vector<IntVector> const& vs)
{
    if (vs.empty())
        return 0;
    return static_cast<std::int64_t>(rank(QMatrix::from_columns(vs)));
}

IntVector hyperplane_normal(std::vector<IntVector> const& vs, std::size_t dim)
{
    if (vs.size() + 1 != dim)
        fail(ErrorKind::invalid_argument, "hyperplane_normal needs dim-1 vectors");
    IntVector normal(dim);
    for (std::size_t skip = 0; skip < dim; ++skip) {
        QMatrix minor(dim - 1, dim - 1);
        for (std::size_t r = 0; r < vs.size(); ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < dim; ++c)
                if (c != skip)
                    minor(r, cc++) = Rational(static_cast<long>(vs[r][c]));
        }
        Rational det = dim == 1 ? Rational(1) : determinant(minor);
        Integer value = det.get_num();
        normal[skip] = to_int64(skip % 2 == 0 ? value : Integer(-value));
    }
    std::int64_t g = gcd(normal);
    if (g != 0)
        for (auto& x : normal)
            x /= g;
    return normal;
}

std::vector<std::vector<Integer>> hermite_normal_form(std::vector<std::vector<Integer>> const& input)
{
    auto cols = input;
    std::size_t d = cols.size();
    for (auto const& c : cols)
        if (c.size() != d)
            fail(ErrorKind::invalid_argument, "hermite_normal_form: matrix must be square");
    auto sub = [&](std::size_t target, std::size_t source, Integer const& q) {
        for (std::size_t r = 0; r < d; ++r)
            cols[target][r] -= q * cols[source][r];
    };
    for (std::size_t i = 0; i < d; ++i) {
        // gcd of row i over columns i..d-1 collected into column i
        for (;;) {
            std::size_t pivot = d;
            for (std::size_t j = i; j < d; ++j)
                if (cols[j][i] != 0 && (pivot == d || abs(cols[j][i]) < abs(cols[pivot][i])))
                    pivot = j;
            if (pivot == d)
                fail(ErrorKind::invalid_argument, "hermite_normal_form: singular basis");
            std::swap(cols[i], cols[pivot]);
            bool done = true;
            for (std::size_t j = i + 1; j < d; ++j) {
                if (cols[j][i] == 0)
                    continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), cols[j][i].get_mpz_t(), cols[i][i].get_mpz_t());
                sub(j, i, q);
                if (cols[j][i] != 0)
                    done = false;
            }
            if (done)
                break;
        }
        if (cols[i][i] < 0)
            for (auto& x : cols[i])
                x = -x;
        for (std::size_t j = 0; j < i; ++j) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), cols[j][i].get_mpz_t(), cols[i][i].get_mpz_t());
            sub(j, i, q);
        }
    }
    return cols;
}

std::vector<IntVector> congruence_sublattice(IntVector const& w, std::int64_t m)
{
    if (m < 1)
        fail(ErrorKind::invalid_argument, "congruence_sublattice: modulus must be positive");
    std::size_t d = w.size();
    // Kernel of the row (w, -m) in Z^{d+1} via unimodular column operations.
    std::vector<Integer> row(d + 1);
    for (std::size_t i = 0; i < d; ++i)
        row[i] = static_cast<long>(w[i]);
    row[d] = -m;
    std::vector<std::vector<Integer>> u(d + 1, std::vector<Integer>(d + 1));
    for (std::size_t i = 0; i <= d; ++i)
        u[i][i] = 1;
    for (;;) {
        std::size_t pivot = d + 1;
        for (std::size_t j = 0; j <= d; ++j)
            if (row[j] != 0 && (pivot == d + 1 || abs(row[j]) < abs(row[pivot])))
                pivot = j;
        bool done = true;
        for (std::size_t j = 0; j <= d; ++j) {
            if (j == pivot || row[j] == 0)
                continue;
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), row[j].get_mpz_t(), row[pivot].get_mpz_t());
            row[j] -= q * row[pivot];
            for (std::size_t r = 0; r <= d; ++r)
                u[j][r] -= q * u[pivot][r];
            if (row[j] != 0)
                done = false;
        }
        if (done) {
            std::vector<std::vector<Integer>> basis;
            for (std::size_t j = 0; j <= d; ++j)
                if (j != pivot)
                    basis.emplace_back(u[j].begin(), u[j].begin() + static_cast<std::ptrdiff_t>(d));
            auto hnf = hermite_normal_form(basis);
            std::vector<IntVector> out;
            for (auto const& col : hnf) {
                IntVector v;
                for (auto const& x : col)
                    v.push_back(to_int64(x));
                out.push_back(std::move(v));
            }
            return out;
        }
    }
}

}  // namespace logcentre::linalg
