#include "logcentre/ncpoly.hpp"
#include "logcentre/error.hpp"

#include <cctype>
#include <sstream>

namespace logcentre::ncpoly {

NCPoly::NCPoly(Rational const& constant)
{
    add_term(Word{}, constant);
}

NCPoly NCPoly::word(Word w, Rational coeff)
{
    NCPoly p;
    p.add_term(w, coeff);
    return p;
}

std::size_t NCPoly::degree() const
{
    return terms_.empty() ? 0 : terms_.rbegin()->first.size();
}

void NCPoly::add_term(Word const& w, Rational const& coeff_in)
{
    Rational coeff = coeff_in;
    coeff.canonicalize();  // callers may build p/q without reducing it
    if (coeff == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(w, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

NCPoly& NCPoly::operator+=(NCPoly const& other)
{
    for (auto const& [w, c] : other.terms_)
        add_term(w, c);
    return *this;
}

NCPoly& NCPoly::operator-=(NCPoly const& other)
{
    for (auto const& [w, c] : other.terms_)
        add_term(w, -c);
    return *this;
}

NCPoly& NCPoly::operator*=(Rational const& s)
{
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, c] : terms_)
        c *= s;
    return *this;
}

NCPoly operator*(NCPoly const& a, NCPoly const& b)
{
    NCPoly out;
    for (auto const& [wa, ca] : a.terms_)
        for (auto const& [wb, cb] : b.terms_)
            out.add_term(wa + wb, ca * cb);
    return out;
}

namespace {

std::string format_word(Word const& w)
{
    std::string out;
    for (std::size_t i = 0; i < w.size();) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i])
            ++j;
        out += w[i];
        if (j - i > 1)
            out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

}  // namespace

std::string NCPoly::str() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (auto const& [w, c] : terms_) {
        Rational mag = abs(c);
        if (first)
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        first = false;
        if (w.empty())
            out += to_string(mag);
        else {
            if (mag != 1)
                out += to_string(mag);
            out += format_word(w);
        }
    }
    return out;
}

NCPoly pow(NCPoly const& p, unsigned k)
{
    NCPoly out(1);
    for (unsigned i = 0; i < k; ++i)
        out = out * p;
    return out;
}

NCPoly substitute(NCPoly const& p, std::map<char, NCPoly> const& images)
{
    NCPoly out;
    for (auto const& [w, c] : p.terms()) {
        NCPoly term(c);
        for (char x : w) {
            auto it = images.find(x);
            term = term * (it == images.end() ? NCPoly::word(Word(1, x)) : it->second);
        }
        out += term;
    }
    return out;
}

namespace {

class Parser {
public:
    Parser(std::string_view text, std::string_view symbols) : text_(text), symbols_(symbols) {}

    NCPoly run()
    {
        NCPoly p = expr();
        skip();
        if (pos_ != text_.size())
            error("unexpected '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void error(std::string const& what) const
    {
        fail(ErrorKind::parse_error,
             "polynomial '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + what);
    }

    void skip()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool peek(char c)
    {
        skip();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool starts_factor()
    {
        skip();
        if (pos_ >= text_.size())
            return false;
        char c = text_[pos_];
        return c == '(' || std::isalpha(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c));
    }

    NCPoly expr()
    {
        NCPoly acc;
        bool negate = false;
        if (peek('-')) {
            ++pos_;
            negate = true;
        } else if (peek('+')) {
            ++pos_;
        }
        NCPoly t = term();
        acc += negate ? -t : t;
        for (;;) {
            if (peek('+')) {
                ++pos_;
                acc += term();
            } else if (peek('-')) {
                ++pos_;
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    NCPoly term()
    {
        NCPoly acc = factor();
        for (;;) {
            if (peek('*')) {
                ++pos_;
                acc = acc * factor();
            } else if (starts_factor()) {
                acc = acc * factor();
            } else {
                return acc;
            }
        }
    }

    NCPoly factor()
    {
        NCPoly base = primary();
        if (peek('^')) {
            ++pos_;
            skip();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (start == pos_)
                error("expected exponent");
            auto k = std::stoul(std::string(text_.substr(start, pos_ - start)));
            if (k > 64)
                error("exponent too large");
            return pow(base, static_cast<unsigned>(k));
        }
        return base;
    }

    NCPoly primary()
    {
        skip();
        if (pos_ >= text_.size())
            error("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            NCPoly inner = expr();
            if (!peek(')'))
                error("expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (pos_ < text_.size() && text_[pos_] == '/') {
                ++pos_;
                std::size_t den = pos_;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    ++pos_;
                if (den == pos_)
                    error("expected denominator");
            }
            return NCPoly(parse_rational(text_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            if (!symbols_.empty() && symbols_.find(c) == std::string_view::npos)
                error("unknown generator '" + std::string(1, c) + "'");
            ++pos_;
            return NCPoly::word(Word(1, c));
        }
        error("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    std::string_view symbols_;
    std::size_t pos_ = 0;
};

}  // namespace

NCPoly parse(std::string_view text, std::string_view symbols)
{
    return Parser(text, symbols).run();
}

RewriteSystem::RewriteSystem(std::string generators, std::vector<std::int64_t> weights, std::vector<Rule> rules,
                             std::uint64_t step_cap)
    : generators_(std::move(generators)), weights_(std::move(weights)), rules_(std::move(rules)), step_cap_(step_cap)
{
    if (generators_.empty())
        fail(ErrorKind::invalid_argument, "rewrite system needs generators");
    if (weights_.empty())
        weights_.assign(generators_.size(), 1);
    if (weights_.size() != generators_.size())
        fail(ErrorKind::invalid_argument, "one weight per generator is required");
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (!std::isalpha(static_cast<unsigned char>(generators_[i])))
            fail(ErrorKind::invalid_argument, "generators must be letters");
        if (generators_.find(generators_[i]) != i)
            fail(ErrorKind::invalid_argument, "duplicate generator '" + std::string(1, generators_[i]) + "'");
        if (weights_[i] < 1)
            fail(ErrorKind::invalid_argument, "generator weights must be positive");
    }
    for (auto const& rule : rules_) {
        if (rule.lhs.empty())
            fail(ErrorKind::invalid_argument, "rule with empty left side");
        for (char c : rule.lhs)
            rank(c);
        for (auto const& [w, coeff] : rule.rhs.terms()) {
            for (char c : w)
                rank(c);
            if (!less(w, rule.lhs))
                fail(ErrorKind::invalid_argument, "rule " + rule.lhs + " -> " + rule.rhs.str()
                                                      + " does not decrease in the term order");
        }
    }
}

std::size_t RewriteSystem::rank(char c) const
{
    auto pos = generators_.find(c);
    if (pos == std::string::npos)
        fail(ErrorKind::invalid_argument, "unknown generator '" + std::string(1, c) + "'");
    return pos;
}

std::int64_t RewriteSystem::weight(Word const& w) const
{
    std::int64_t s = 0;
    for (char c : w)
        s += weights_[rank(c)];
    return s;
}

bool RewriteSystem::less(Word const& a, Word const& b) const
{
    auto wa = weight(a), wb = weight(b);
    if (wa != wb)
        return wa < wb;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        auto ra = rank(a[i]), rb = rank(b[i]);
        if (ra != rb)
            return ra < rb;
    }
    return a.size() < b.size();
}

NCPoly normal_form(NCPoly const& p, RewriteSystem const& rs)
{
    auto order = [&rs](Word const& a, Word const& b) { return rs.less(a, b); };
    std::map<Word, Rational, decltype(order)> work(order);
    for (auto const& [w, c] : p.terms())
        work.emplace(w, c);

    NCPoly result;
    std::uint64_t steps = 0;
    while (!work.empty()) {
        auto top = std::prev(work.end());
        Word w = top->first;
        Rational c = top->second;
        work.erase(top);

        Rule const* hit = nullptr;
        std::size_t at = 0;
        for (auto const& rule : rs.rules()) {
            at = w.find(rule.lhs);
            if (at != Word::npos) {
                hit = &rule;
                break;
            }
        }
        if (!hit) {
            result.add_term(w, c);
            continue;
        }
        if (++steps > rs.step_cap())
            fail(ErrorKind::nontermination_suspected,
                 "normal form exceeded " + std::to_string(rs.step_cap()) + " rewrite steps");
        Word prefix = w.substr(0, at);
        Word suffix = w.substr(at + hit->lhs.size());
        for (auto const& [rw, rc] : hit->rhs.terms()) {
            auto [it, inserted] = work.try_emplace(prefix + rw + suffix, c * rc);
            if (!inserted) {
                it->second += c * rc;
                if (it->second == 0)
                    work.erase(it);
            }
        }
    }
    return result;
}

bool is_central(NCPoly const& p, RewriteSystem const& rs)
{
    std::vector<NCPoly> gens;
    for (char c : rs.generators())
        gens.push_back(NCPoly::word(Word(1, c)));
    return is_central(p, rs, gens);
}

bool is_central(NCPoly const& p, RewriteSystem const& rs, std::vector<NCPoly> const& generators)
{
    for (auto const& g : generators)
        if (!normal_form(p * g - g * p, rs).is_zero())
            return false;
    return true;
}

bool verify_identity(NCPoly const& lhs, NCPoly const& rhs, RewriteSystem const& rs)
{
    return normal_form(lhs - rhs, rs).is_zero();
}

AlgebraMatrix::AlgebraMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols)
{
}

AlgebraMatrix AlgebraMatrix::from_rows(std::vector<std::vector<NCPoly>> const& rows)
{
    AlgebraMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_)
            fail(ErrorKind::invalid_argument, "ragged algebra matrix");
        for (std::size_t c = 0; c < m.cols_; ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

AlgebraMatrix AlgebraMatrix::identity(std::size_t n)
{
    AlgebraMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = NCPoly(1);
    return m;
}

bool AlgebraMatrix::is_zero() const
{
    for (auto const& e : entries_)
        if (!e.is_zero())
            return false;
    return true;
}

std::string AlgebraMatrix::str() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? "; " : "");
        for (std::size_t c = 0; c < cols_; ++c)
            os << (c ? ", " : "") << (*this)(r, c).str();
    }
    os << ']';
    return os.str();
}

AlgebraMatrix matrix_compose(AlgebraMatrix const& m, AlgebraMatrix const& n, RewriteSystem const& rs)
{
    if (m.cols() != n.rows())
        fail(ErrorKind::invalid_argument, "matrix_compose: inner dimensions differ");
    AlgebraMatrix out(m.rows(), n.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t k = 0; k < n.cols(); ++k) {
            NCPoly s;
            for (std::size_t j = 0; j < m.cols(); ++j)
                s += m(i, j) * n(j, k);
            out(i, k) = normal_form(s, rs);
        }
    return out;
}

RewriteSystem clifford_system()
{
    return RewriteSystem("abc", {2, 2, 1},
                         {
                             {"ca", parse("-ac")},
                             {"cb", parse("-bc")},
                             {"ba", parse("ab - 2c^3")},
                         });
}

}  // namespace logcentre::ncpoly
