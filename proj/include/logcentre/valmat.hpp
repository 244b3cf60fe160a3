#ifndef LOGCENTRE_VALMAT_HPP
#define LOGCENTRE_VALMAT_HPP

#include "logcentre/rational.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

/* Matrices of fractional ideals over a DVR R with parameter t.
 *
 * A fractional ideal t^v R is stored by its exponent v; the zero ideal is
 * +infinity.  Products of ideal matrices become min-plus (tropical)
 * products of exponent matrices.  Elements (not ideals) such as the normal
 * element y are handled by MonomialMatrix, which is kept independent of the
 * tropical code so it can serve as an oracle for it. */
namespace logcentre::valmat {

class Valuation {
public:
    constexpr Valuation() = default;
    constexpr Valuation(std::int64_t v) : value_(v) {}  // NOLINT: implicit by design of the algebra

    static constexpr Valuation infinity()
    {
        Valuation v;
        v.infinite_ = true;
        return v;
    }

    bool is_infinite() const { return infinite_; }
    /* Precondition: finite. */
    std::int64_t value() const;

    friend Valuation operator+(Valuation a, Valuation b);
    friend bool operator==(Valuation const&, Valuation const&) = default;
    friend std::strong_ordering operator<=>(Valuation const& a, Valuation const& b);

    std::string str() const;

private:
    std::int64_t value_ = 0;
    bool infinite_ = false;
};

Valuation min(Valuation a, Valuation b);

class ValMatrix {
public:
    explicit ValMatrix(std::size_t size, Valuation fill = Valuation::infinity());
    ValMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

    std::size_t size() const { return size_; }
    Valuation& operator()(std::size_t row, std::size_t col) { return entries_[row * size_ + col]; }
    Valuation const& operator()(std::size_t row, std::size_t col) const { return entries_[row * size_ + col]; }

    /* Multiplication of the ideal by t^shift. */
    ValMatrix shifted(std::int64_t shift) const;

    friend bool operator==(ValMatrix const&, ValMatrix const&) = default;

    std::string str() const;

private:
    std::size_t size_;
    std::vector<Valuation> entries_;
};

/* Block sizes [n_1, ..., n_e] of a block hereditary order. */
struct BlockStructure {
    std::vector<std::size_t> sizes;

    std::size_t total() const;
    static BlockStructure trivial(std::size_t e);
    friend bool operator==(BlockStructure const&, BlockStructure const&) = default;
};

ValMatrix tropical_identity(std::size_t size);
ValMatrix tropical_mul(ValMatrix const& a, ValMatrix const& b);

ValMatrix standard_order(std::int64_t e);
ValMatrix jacobson_radical(std::int64_t e);
ValMatrix dualizing_module(std::int64_t e);

/* J^i, entry (j,k) = -floor((k - j - i) / e); i may be negative. */
ValMatrix radical_power(std::int64_t e, std::int64_t i);

/* omega^i = J^{-i(e-1)}. */
ValMatrix omega_power(std::int64_t e, std::int64_t i);

bool is_bimodule(ValMatrix const& m, ValMatrix const& order);

/* Exponent v of the scalar ideal K.I intersected with M, i.e. the largest
 * (t^v) with t^v I inside M.  Throws precondition_violation unless M is a
 * bimodule over `order` (the standard order of matching size by default). */
Valuation centralizer(ValMatrix const& m);
Valuation centralizer(ValMatrix const& m, ValMatrix const& order);

ValMatrix inflate(ValMatrix const& a, BlockStructure const& blocks);

struct Monomial {
    Rational coeff;
    std::int64_t exponent = 0;
    friend bool operator==(Monomial const&, Monomial const&) = default;
};

class MonomialMatrix {
public:
    explicit MonomialMatrix(std::size_t size);

    std::size_t size() const { return size_; }
    std::optional<Monomial>& operator()(std::size_t row, std::size_t col) { return entries_[row * size_ + col]; }
    std::optional<Monomial> const& operator()(std::size_t row, std::size_t col) const
    {
        return entries_[row * size_ + col];
    }

    friend bool operator==(MonomialMatrix const&, MonomialMatrix const&) = default;

    std::string str() const;

private:
    std::size_t size_;
    std::vector<std::optional<Monomial>> entries_;
};

MonomialMatrix monomial_identity(std::size_t size);
/* t^exponent times the identity. */
MonomialMatrix monomial_scalar(std::size_t size, Rational coeff, std::int64_t exponent);

/* Exact product; throws representation_overflow when an entry is a sum of
 * monomials of distinct degrees that does not collapse to one monomial. */
MonomialMatrix monomial_mul(MonomialMatrix const& a, MonomialMatrix const& b);

/* y: ones on the superdiagonal and t in the bottom-left corner. */
MonomialMatrix normal_element(std::int64_t e);

/* y^k for any integer k, using y^{-1} = t^{-1} y^{e-1}. */
MonomialMatrix normal_element_power(std::int64_t e, std::int64_t k);

/* Entrywise exponents; zero entries become +infinity. */
ValMatrix ideal_of(MonomialMatrix const& m);

}  // namespace logcentre::valmat

#endif
