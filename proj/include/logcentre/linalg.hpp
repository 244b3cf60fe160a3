#ifndef LOGCENTRE_LINALG_HPP
#define LOGCENTRE_LINALG_HPP

#include "logcentre/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

/* Small dense exact linear algebra over Q and Z. */
namespace logcentre::linalg {

using IntVector = std::vector<std::int64_t>;

class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols);

    static QMatrix identity(std::size_t n);
    static QMatrix from_rows(std::vector<RationalVector> const& rows);
    /* Columns given as integer vectors. */
    static QMatrix from_columns(std::vector<IntVector> const& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Rational const& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    RationalVector column(std::size_t c) const;
    RationalVector row(std::size_t r) const;
    QMatrix transpose() const;

    friend bool operator==(QMatrix const&, QMatrix const&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

QMatrix operator*(QMatrix const& a, QMatrix const& b);
RationalVector operator*(QMatrix const& a, RationalVector const& v);

Rational dot(RationalVector const& a, RationalVector const& b);
Rational dot(RationalVector const& a, IntVector const& b);

std::size_t rank(QMatrix m);
Rational determinant(QMatrix m);
/* Throws invalid_argument if singular. */
QMatrix inverse(QMatrix const& m);

/* Unique solution of a x = b when it exists and is unique; nullopt when the
 * system is inconsistent.  Throws invalid_argument if a has a nontrivial
 * kernel and the system is consistent. */
std::optional<RationalVector> solve_unique(QMatrix const& a, RationalVector const& b);

RationalVector to_rational(IntVector const& v);

std::int64_t gcd(IntVector const& v);
std::int64_t int_rank(std::vector<IntVector> const& vs);

/* Primitive integer normal of the hyperplane spanned by d-1 vectors in Z^d
 * (generalized cross product divided by its content). */
IntVector hyperplane_normal(std::vector<IntVector> const& vs, std::size_t dim);

/* Lower-triangular column Hermite normal form of a nonsingular square
 * integer matrix whose columns are a lattice basis.  Diagonal entries are
 * positive and entries left of the diagonal lie in [0, diagonal). */
std::vector<std::vector<Integer>> hermite_normal_form(std::vector<std::vector<Integer>> const& cols);

/* Basis (as columns) of {n in Z^d : w . n = 0 mod m}. */
std::vector<IntVector> congruence_sublattice(IntVector const& w, std::int64_t m);

}  // namespace logcentre::linalg

#endif
