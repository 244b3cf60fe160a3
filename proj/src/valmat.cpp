#include "logcentre/valmat.hpp"
#include "logcentre/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace logcentre::valmat {

namespace {

void require_positive(std::int64_t e)
{
    if (e < 1)
        fail(ErrorKind::invalid_argument, "ramification index must be positive, got " + std::to_string(e));
}

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        fail(ErrorKind::representation_overflow, "valuation overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        fail(ErrorKind::representation_overflow, "valuation overflow");
    return r;
}

template <class Entry>
ValMatrix tabulate(std::int64_t e, Entry entry)
{
    require_positive(e);
    auto n = static_cast<std::size_t>(e);
    ValMatrix m(n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            m(j, k) = entry(static_cast<std::int64_t>(j), static_cast<std::int64_t>(k));
    return m;
}

}  // namespace

std::int64_t Valuation::value() const
{
    if (infinite_)
        fail(ErrorKind::precondition_violation, "value() of the zero ideal");
    return value_;
}

Valuation operator+(Valuation a, Valuation b)
{
    if (a.infinite_ || b.infinite_)
        return Valuation::infinity();
    return Valuation(checked_add(a.value_, b.value_));
}

std::strong_ordering operator<=>(Valuation const& a, Valuation const& b)
{
    if (a.infinite_ || b.infinite_)
        return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
}

std::string Valuation::str() const
{
    return infinite_ ? std::string("inf") : std::to_string(value_);
}

Valuation min(Valuation a, Valuation b)
{
    return b < a ? b : a;
}

ValMatrix::ValMatrix(std::size_t size, Valuation fill) : size_(size), entries_(size * size, fill)
{
    if (size == 0)
        fail(ErrorKind::invalid_argument, "matrix size must be positive");
}

ValMatrix::ValMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : ValMatrix(rows.size())
{
    std::size_t j = 0;
    for (auto const& row : rows) {
        if (row.size() != size_)
            fail(ErrorKind::invalid_argument, "valuation matrix must be square");
        std::size_t k = 0;
        for (auto v : row)
            (*this)(j, k++) = v;
        ++j;
    }
}

ValMatrix ValMatrix::shifted(std::int64_t shift) const
{
    ValMatrix out = *this;
    for (auto& v : out.entries_)
        v = v + Valuation(shift);
    return out;
}

std::string ValMatrix::str() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t j = 0; j < size_; ++j) {
        os << (j ? ",[" : "[");
        for (std::size_t k = 0; k < size_; ++k)
            os << (k ? "," : "") << (*this)(j, k).str();
        os << ']';
    }
    os << ']';
    return os.str();
}

std::size_t BlockStructure::total() const
{
    return std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
}

BlockStructure BlockStructure::trivial(std::size_t e)
{
    return BlockStructure{std::vector<std::size_t>(e, 1)};
}

ValMatrix tropical_identity(std::size_t size)
{
    ValMatrix m(size);
    for (std::size_t j = 0; j < size; ++j)
        m(j, j) = 0;
    return m;
}

ValMatrix tropical_mul(ValMatrix const& a, ValMatrix const& b)
{
    if (a.size() != b.size())
        fail(ErrorKind::invalid_argument, "tropical_mul: size mismatch");
    std::size_t n = a.size();
    ValMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            Valuation best = Valuation::infinity();
            for (std::size_t j = 0; j < n; ++j)
                best = min(best, a(i, j) + b(j, k));
            out(i, k) = best;
        }
    return out;
}

ValMatrix standard_order(std::int64_t e)
{
    return tabulate(e, [](std::int64_t j, std::int64_t k) { return k >= j ? 0 : 1; });
}

ValMatrix jacobson_radical(std::int64_t e)
{
    return tabulate(e, [](std::int64_t j, std::int64_t k) { return k > j ? 0 : 1; });
}

ValMatrix dualizing_module(std::int64_t e)
{
    return tabulate(e, [](std::int64_t j, std::int64_t k) { return k > j ? -1 : 0; });
}

ValMatrix radical_power(std::int64_t e, std::int64_t i)
{
    return tabulate(e, [e, i](std::int64_t j, std::int64_t k) {
        return -floor_div(checked_add(k - j, -i), e);
    });
}

ValMatrix omega_power(std::int64_t e, std::int64_t i)
{
    if (i < 0)
        fail(ErrorKind::invalid_argument, "omega_power: exponent must be nonnegative");
    require_positive(e);
    return radical_power(e, -checked_mul(i, e - 1));
}

bool is_bimodule(ValMatrix const& m, ValMatrix const& order)
{
    if (m.size() != order.size())
        return false;
    return tropical_mul(order, m) == m && tropical_mul(m, order) == m;
}

Valuation centralizer(ValMatrix const& m)
{
    return centralizer(m, standard_order(static_cast<std::int64_t>(m.size())));
}

Valuation centralizer(ValMatrix const& m, ValMatrix const& order)
{
    if (!is_bimodule(m, order))
        fail(ErrorKind::precondition_violation, "centralizer: matrix is not closed under the order");
    Valuation v = m(0, 0);
    for (std::size_t j = 1; j < m.size(); ++j)
        v = std::max(v, m(j, j));
    return v;
}

ValMatrix inflate(ValMatrix const& a, BlockStructure const& blocks)
{
    if (blocks.sizes.size() != a.size())
        fail(ErrorKind::invalid_argument, "inflate: block structure length differs from matrix size");
    if (std::any_of(blocks.sizes.begin(), blocks.sizes.end(), [](std::size_t n) { return n == 0; }))
        fail(ErrorKind::invalid_argument, "inflate: block sizes must be positive");
    std::vector<std::size_t> owner;
    for (std::size_t b = 0; b < blocks.sizes.size(); ++b)
        owner.insert(owner.end(), blocks.sizes[b], b);
    ValMatrix out(owner.size());
    for (std::size_t j = 0; j < owner.size(); ++j)
        for (std::size_t k = 0; k < owner.size(); ++k)
            out(j, k) = a(owner[j], owner[k]);
    return out;
}

MonomialMatrix::MonomialMatrix(std::size_t size) : size_(size), entries_(size * size)
{
    if (size == 0)
        fail(ErrorKind::invalid_argument, "matrix size must be positive");
}

std::string MonomialMatrix::str() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t j = 0; j < size_; ++j) {
        os << (j ? ",[" : "[");
        for (std::size_t k = 0; k < size_; ++k) {
            if (k)
                os << ',';
            auto const& m = (*this)(j, k);
            if (!m)
                os << '0';
            else
                os << m->coeff.get_str() << "t^" << m->exponent;
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

MonomialMatrix monomial_scalar(std::size_t size, Rational coeff, std::int64_t exponent)
{
    MonomialMatrix m(size);
    if (coeff == 0)
        return m;
    for (std::size_t j = 0; j < size; ++j)
        m(j, j) = Monomial{coeff, exponent};
    return m;
}

MonomialMatrix monomial_identity(std::size_t size)
{
    return monomial_scalar(size, 1, 0);
}

MonomialMatrix monomial_mul(MonomialMatrix const& a, MonomialMatrix const& b)
{
    if (a.size() != b.size())
        fail(ErrorKind::invalid_argument, "monomial_mul: size mismatch");
    std::size_t n = a.size();
    MonomialMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            std::map<std::int64_t, Rational> by_degree;
            for (std::size_t j = 0; j < n; ++j) {
                auto const& x = a(i, j);
                auto const& y = b(j, k);
                if (x && y)
                    by_degree[checked_add(x->exponent, y->exponent)] += x->coeff * y->coeff;
            }
            std::erase_if(by_degree, [](auto const& kv) { return kv.second == 0; });
            if (by_degree.size() > 1)
                fail(ErrorKind::representation_overflow,
                     "monomial_mul: entry is not a single monomial");
            if (!by_degree.empty())
                out(i, k) = Monomial{by_degree.begin()->second, by_degree.begin()->first};
        }
    return out;
}

MonomialMatrix normal_element(std::int64_t e)
{
    require_positive(e);
    auto n = static_cast<std::size_t>(e);
    MonomialMatrix y(n);
    for (std::size_t j = 0; j + 1 < n; ++j)
        y(j, j + 1) = Monomial{1, 0};
    y(n - 1, 0) = Monomial{1, 1};
    return y;
}

MonomialMatrix normal_element_power(std::int64_t e, std::int64_t k)
{
    require_positive(e);
    auto n = static_cast<std::size_t>(e);
    MonomialMatrix base = normal_element(e);
    if (k < 0) {
        // y^{-1} = t^{-1} y^{e-1}
        MonomialMatrix inv = monomial_scalar(n, 1, -1);
        for (std::int64_t s = 0; s < e - 1; ++s)
            inv = monomial_mul(inv, base);
        base = inv;
        k = -k;
    }
    MonomialMatrix out = monomial_identity(n);
    for (std::int64_t s = 0; s < k; ++s)
        out = monomial_mul(out, base);
    return out;
}

ValMatrix ideal_of(MonomialMatrix const& m)
{
    ValMatrix out(m.size());
    for (std::size_t j = 0; j < m.size(); ++j)
        for (std::size_t k = 0; k < m.size(); ++k)
            if (auto const& x = m(j, k))
                out(j, k) = x->exponent;
    return out;
}

}  // namespace logcentre::valmat
