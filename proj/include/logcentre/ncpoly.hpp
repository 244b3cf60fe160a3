#ifndef LOGCENTRE_NCPOLY_HPP
#define LOGCENTRE_NCPOLY_HPP

#include "logcentre/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

/* Noncommutative polynomials over Q and presented algebras given by
 * terminating rewrite systems.  Generators are single characters; a word
 * is the string of its letters. */
namespace logcentre::ncpoly {

using Word = std::string;

/* Degree, then lexicographic on characters. */
struct DegLex {
    bool operator()(Word const& a, Word const& b) const
    {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    }
};

class NCPoly {
public:
    using Terms = std::map<Word, Rational, DegLex>;

    NCPoly() = default;
    NCPoly(Rational const& constant);  // NOLINT: scalars embed as constants
    NCPoly(int constant) : NCPoly(Rational(constant)) {}  // NOLINT
    static NCPoly word(Word w, Rational coeff = 1);

    Terms const& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t degree() const;

    void add_term(Word const& w, Rational const& coeff);

    NCPoly& operator+=(NCPoly const& other);
    NCPoly& operator-=(NCPoly const& other);
    NCPoly& operator*=(Rational const& s);

    friend NCPoly operator+(NCPoly a, NCPoly const& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, NCPoly const& b) { return a -= b; }
    friend NCPoly operator-(NCPoly a) { return a *= Rational(-1); }
    friend NCPoly operator*(NCPoly const& a, NCPoly const& b);

    friend bool operator==(NCPoly const&, NCPoly const&) = default;

    /* Terms in increasing degree-lex order, e.g. "ab - 2c^3". */
    std::string str() const;

private:
    Terms terms_;
};

NCPoly pow(NCPoly const& p, unsigned k);

/* Replaces each listed generator by a polynomial. */
NCPoly substitute(NCPoly const& p, std::map<char, NCPoly> const& images);

/* Parses sums of products with juxtaposition, '*', '^', parentheses and
 * rational constants, e.g. "(ab-ba)^2 - 4c^6".  If `symbols` is nonempty,
 * letters outside it are rejected. */
NCPoly parse(std::string_view text, std::string_view symbols = {});

inline constexpr std::uint64_t default_step_cap = 1'000'000;

struct Rule {
    Word lhs;
    NCPoly rhs;
    friend bool operator==(Rule const&, Rule const&) = default;
};

/* Rules are tried in order; each right side must be smaller than its left
 * word in the weighted degree-lex order (weight sum, then lexicographic by
 * generator rank), which witnesses termination. */
class RewriteSystem {
public:
    RewriteSystem(std::string generators, std::vector<std::int64_t> weights, std::vector<Rule> rules,
                  std::uint64_t step_cap = default_step_cap);

    std::string const& generators() const { return generators_; }
    std::vector<std::int64_t> const& weights() const { return weights_; }
    std::vector<Rule> const& rules() const { return rules_; }
    std::uint64_t step_cap() const { return step_cap_; }
    void set_step_cap(std::uint64_t cap) { step_cap_ = cap; }

    /* Strict weak order used for termination; true if a < b. */
    bool less(Word const& a, Word const& b) const;

    NCPoly parse(std::string_view text) const { return ncpoly::parse(text, generators_); }

    friend bool operator==(RewriteSystem const&, RewriteSystem const&) = default;

private:
    std::int64_t weight(Word const& w) const;
    std::size_t rank(char c) const;

    std::string generators_;
    std::vector<std::int64_t> weights_;
    std::vector<Rule> rules_;
    std::uint64_t step_cap_;
};

/* Throws nontermination_suspected after step_cap rewrites. */
NCPoly normal_form(NCPoly const& p, RewriteSystem const& rs);

bool is_central(NCPoly const& p, RewriteSystem const& rs);
bool is_central(NCPoly const& p, RewriteSystem const& rs, std::vector<NCPoly> const& generators);

bool verify_identity(NCPoly const& lhs, NCPoly const& rhs, RewriteSystem const& rs);

class AlgebraMatrix {
public:
    AlgebraMatrix(std::size_t rows, std::size_t cols);
    static AlgebraMatrix from_rows(std::vector<std::vector<NCPoly>> const& rows);
    static AlgebraMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    NCPoly& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    NCPoly const& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    bool is_zero() const;
    std::string str() const;

    friend bool operator==(AlgebraMatrix const&, AlgebraMatrix const&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<NCPoly> entries_;
};

/* Product M N with every entry reduced to normal form. */
AlgebraMatrix matrix_compose(AlgebraMatrix const& m, AlgebraMatrix const& n, RewriteSystem const& rs);

/* The algebra generated by a, b, c with ac + ca = bc + cb = 0 and
 * ab - ba = 2c^3: rules ca -> -ac, cb -> -bc, ba -> ab - 2c^3 with weights
 * (2, 2, 1). */
RewriteSystem clifford_system();

}  // namespace logcentre::ncpoly

#endif
