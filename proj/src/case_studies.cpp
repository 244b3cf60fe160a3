#include "logcentre/case_studies.hpp"
#include "logcentre/error.hpp"
#include "logcentre/ncpoly.hpp"
#include "logcentre/orders.hpp"
#include "logcentre/quotient.hpp"

#include <algorithm>

namespace logcentre::cases {

namespace {

using linalg::IntVector;

toric::Cone francia_cone()
{
    linalg::QMatrix basis = linalg::QMatrix::identity(3);
    basis(2, 2) = Rational(1, 2);
    return toric::Cone(toric::Lattice(basis), {{0, 0, 1}, {0, 1, 2}, {1, 0, 2}, {1, 1, 2}});
}

std::vector<std::string> francia_labels()
{
    return {"D1", "D2", "D3", "D4"};
}

std::string join(std::vector<std::string> const& parts, std::string const& sep = ", ")
{
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i)
        out += (i ? sep : "") + parts[i];
    return out;
}

std::string format_functional(std::optional<toric::CartierFunctional> const& u)
{
    return u ? format_vector(u->u) : std::string("none");
}

/* Monomials of lattice points of M, listed in sorted order. */
std::string monomial_set(std::vector<IntVector> const& gens, toric::Lattice const& dual_lattice)
{
    std::vector<std::string> names;
    for (auto const& g : gens)
        names.push_back(monomial_name(dual_lattice.to_ambient(g)));
    std::sort(names.begin(), names.end());
    return "{" + join(names) + "}";
}

std::string monomial_set(std::vector<RationalVector> const& exponents)
{
    std::vector<std::string> names;
    for (auto const& e : exponents)
        names.push_back(monomial_name(e));
    std::sort(names.begin(), names.end());
    return "{" + join(names) + "}";
}

RationalVector exps(long x, long y, long z)
{
    return {Rational(x), Rational(y), Rational(z)};
}

report::CaseStudyReport run_francia(toric::EnumerationOptions const& options)
{
    report::CaseStudyReport rep("francia");
    auto doc = builtin_document("francia");
    auto const& base = io::get_object<io::ConePairRecord>(doc, "base", "cone_pair");
    auto const& pair = io::get_object<io::ConePairRecord>(doc, "pair", "cone_pair");
    auto const& order = io::get_object<orders::OrderSpec>(doc, "order", "order");
    auto const& cone = pair.pair.cone;

    auto k_functional = toric::q_cartier_functional(base.pair, toric::canonical_divisor(cone));
    rep.add("k-not-q-cartier", "K = -D1-D2-D3-D4 is not Q-Cartier on Spec S", "none", format_functional(k_functional));

    auto centre = orders::log_centre(order);
    rep.add("log-centre", "discriminant of the order ramified with index 2 along D_rho = D1", "1/2*D1",
            centre.divisor.str());
    auto from_centre = toric::pair_from_log_centre(cone, pair.labels, centre);
    rep.add("pair-from-log-centre", "boundary of the log centre on the toric model", format_vector(pair.pair.boundary.coeffs),
            format_vector(from_centre.boundary.coeffs));

    auto klt = toric::klt_check(pair.pair);
    rep.add("pair-q-cartier", "K + 1/2 D1 is Q-Cartier; functional in dual coordinates of N'", "(0,0,1/2)",
            format_functional(klt.functional));

    // The divisor sum n_i D_i lies in the row span of C iff n = c C; here c = -u.
    std::string row_span = "none";
    if (klt.functional) {
        auto k_plus_d = toric::log_canonical_divisor(pair.pair);
        RationalVector combo;
        for (auto const& ray : cone.rays())
            combo.push_back(-linalg::dot(klt.functional->u, ray));
        row_span = combo == k_plus_d.coeffs ? format_vector(combo) : "mismatch";
    }
    rep.add("row-span", "K + 1/2 D1 = -1/2 D1 - D2 - D3 - D4 is (-u) times the ray matrix C", "(-1/2,-1,-1,-1)", row_span);

    std::string index = klt.functional ? std::to_string(toric::cartier_index(*klt.functional, cone.lattice())) : "none";
    rep.add("index", "Cartier index of K + D", "2", index);
    rep.add("klt", "(Spec S, 1/2 D_rho) is Kawamata log terminal", true, klt.klt);

    auto cover = toric::log_canonical_cover(pair.pair);
    bool is_z3 = cover.cover_lattice.same_points_as(toric::Lattice::standard(3));
    rep.add("cover-lattice", "cover lattice is Z^3", "Z^3", is_z3 ? "Z^3" : "other");
    rep.add("cover-degree", "degree of the log canonical cover", "2", std::to_string(cover.degree));
    std::vector<std::string> rays;
    for (auto const& r : cover.cover_cone.rays())
        rays.push_back(format_vector(cover.cover_lattice.to_ambient(r)));
    rep.add("cover-rays", "cover rays are the columns of [[0,0,1,1],[0,1,0,1],[1,1,1,1]] in N = Z^3",
            "(0,0,1) (0,1,1) (1,0,1) (1,1,1)", join(rays, " "));
    std::vector<std::string> ram;
    for (auto r : cover.ramification)
        ram.push_back(std::to_string(r));
    rep.add("cover-ramification", "ramification of the cover along D1..D4", "2 1 1 1", join(ram, " "));

    rep.add("cover-canonical", "the cover Spec R is canonical", true, toric::canonical_check(cover.cover_cone, options));
    auto cover_k = toric::q_cartier_functional(cover.cover_cone, toric::canonical_divisor(cover.cover_cone));
    std::vector<std::string> pairings;
    for (auto const& h : toric::hilbert_basis(cover.cover_cone, options))
        pairings.push_back(to_string(linalg::dot(cover_k->u, h)));
    rep.add("cover-gorenstein", "K of the cover is Cartier: every Hilbert basis element pairs to 1", "1 1 1 1",
            join(pairings, " "));

    auto base_gens = toric::dual_cone_generators(cone, options);
    rep.add("base-semigroup", "S = k[sigma^vee cap M'] is generated by z^2x^-2, z^2x^-1y^-1, z^2y^-2, y, x",
            monomial_set({exps(-2, 0, 2), exps(-1, -1, 2), exps(0, -2, 2), exps(0, 1, 0), exps(1, 0, 0)}),
            monomial_set(base_gens, cone.lattice().dual()));
    auto cover_gens = toric::dual_cone_generators(cover.cover_cone, options);
    rep.add("cover-semigroup", "R = k[sigma^vee cap M] is generated by zx^-1, zy^-1, y, x",
            monomial_set({exps(-1, 0, 1), exps(0, -1, 1), exps(0, 1, 0), exps(1, 0, 0)}),
            monomial_set(cover_gens, cover.cover_lattice.dual()));

    auto corr = toric::cover_correspondence_check(pair.pair, options);
    rep.add("klt-cover-correspondence", "klt of the pair agrees with canonicity of its log canonical cover", true,
            corr.agree);

    auto quotient = quotient::commutative_quotient_check("francia-algebra");
    for (auto const& c : quotient.checks)
        rep.add(c.id, c.description + " in k[a,b,c,d]/(ad-bc) localized at a", true, c.pass);
    return rep;
}

report::CaseStudyReport run_clifford()
{
    using ncpoly::NCPoly;
    report::CaseStudyReport rep("clifford");
    auto doc = builtin_document("clifford");
    auto const& rs = io::get_object<ncpoly::RewriteSystem>(doc, "algebra", "presentation");
    auto const& order = io::get_object<orders::OrderSpec>(doc, "order", "order");
    auto p = [&rs](char const* text) { return rs.parse(text); };
    auto zero = [&rs](NCPoly const& q) { return ncpoly::normal_form(q, rs).str(); };

    rep.add("relation-ac", "ac + ca = 0", "0", zero(p("ac + ca")));
    rep.add("relation-bc", "bc + cb = 0", "0", zero(p("bc + cb")));
    rep.add("relation-ab", "ab - ba - 2c^3 = 0", "0", zero(p("ab - ba - 2c^3")));

    NCPoly x = p("a^2"), y = p("b^2"), z = p("ab + ba"), t = p("c^2");
    rep.add("central-x", "x = a^2 is central", true, ncpoly::is_central(x, rs));
    rep.add("central-y", "y = b^2 is central", true, ncpoly::is_central(y, rs));
    rep.add("central-z", "z = ab + ba is central", true, ncpoly::is_central(z, rs));
    rep.add("central-t", "t = c^2 is central", true, ncpoly::is_central(t, rs));
    rep.add("c-not-central", "c is not central", false, ncpoly::is_central(p("c"), rs));

    rep.add("square-identity", "(ab - ba)^2 = 4c^6", true, ncpoly::verify_identity(p("(ab - ba)^2"), p("4c^6"), rs));
    std::map<char, NCPoly> centre{{'x', x}, {'y', y}, {'z', z}, {'t', t}};
    auto in_centre = [&](char const* text) { return ncpoly::substitute(ncpoly::parse(text, "xyzt"), centre); };
    rep.add("centre-hypersurface", "z^2 - 4xy = (ab - ba)^2 = 4t^3", true,
            ncpoly::verify_identity(in_centre("z^2 - 4xy"), in_centre("4t^3"), rs)
                && ncpoly::verify_identity(in_centre("z^2 - 4xy"), p("(ab - ba)^2"), rs));

    // Clifford relations of the Gram matrix [[2x, z, 0], [z, 2y, 0], [0, 0, 2t]]
    bool gram = ncpoly::verify_identity(p("2a^2"), NCPoly(2) * x, rs)
                && ncpoly::verify_identity(p("ab + ba"), z, rs)
                && ncpoly::verify_identity(p("2b^2"), NCPoly(2) * y, rs)
                && ncpoly::verify_identity(p("ac + ca"), NCPoly(0), rs)
                && ncpoly::verify_identity(p("bc + cb"), NCPoly(0), rs)
                && ncpoly::verify_identity(p("2c^2"), NCPoly(2) * t, rs);
    rep.add("clifford-relations", "2a^2 = 2x, ab + ba = z, 2b^2 = 2y, ac + ca = bc + cb = 0, 2c^2 = 2t", true, gram);

    auto left = ncpoly::AlgebraMatrix::from_rows({{p("b"), p("a"), p("c")}});
    auto middle = ncpoly::AlgebraMatrix::from_rows({
        {p("-c"), p("0"), p("-a")},
        {p("0"), p("c"), p("b")},
        {p("-b"), p("a"), p("-2c^2")},
    });
    auto right = ncpoly::AlgebraMatrix::from_rows({{p("a")}, {p("b")}, {p("c")}});
    rep.add("resolution-first", "(b a c) composed with the 3x3 map is zero", "[0, 0, 0]",
            ncpoly::matrix_compose(left, middle, rs).str());
    rep.add("resolution-second", "the 3x3 map composed with (a b c)^T is zero", "[0; 0; 0]",
            ncpoly::matrix_compose(middle, right, rs).str());

    rep.add("discriminant", "A is ramified with index 2 on B: t = 0, so D = 1/2 B", "1/2*B",
            orders::discriminant(order).str());
    std::string graded;
    for (auto v : orders::cover_graded_valuations(2, orders::local_index(2)))
        graded += (graded.empty() ? "" : " ") + std::to_string(v);
    rep.add("cover-centre", "graded pieces of the canonical cover's centre at B", "0 0", graded);
    bool codim_one = true;
    for (auto const& datum : order.ramification)
        codim_one &= orders::check_cover_at_prime(datum, orders::local_index(datum.e)).agree;
    rep.add("cover-centre-matches-order", "closed form agrees with centralizers of powers of omega", true, codim_one);
    return rep;
}

}  // namespace

std::vector<std::string> builtin_names()
{
    return {"clifford", "francia"};
}

io::InputDocument builtin_document(std::string const& name)
{
    io::InputDocument doc;
    if (name == "francia") {
        auto cone = francia_cone();
        toric::ToricDivisor zero{RationalVector(4, Rational(0))};
        toric::ToricDivisor half{{Rational(1, 2), Rational(0), Rational(0), Rational(0)}};
        doc.objects.emplace("base", io::ConePairRecord{{cone, zero}, francia_labels()});
        doc.objects.emplace("pair", io::ConePairRecord{{cone, half}, francia_labels()});
        doc.objects.emplace("order", orders::OrderSpec{"order", {orders::ramified_at("D1", 2)}});
        return doc;
    }
    if (name == "clifford") {
        doc.objects.emplace("algebra", ncpoly::clifford_system());
        doc.objects.emplace("order", orders::OrderSpec{"order", {orders::ramified_at("B", 2)}});
        return doc;
    }
    fail(ErrorKind::invalid_argument, "unknown case study '" + name + "'");
}

report::CaseStudyReport run_case_study(std::string const& name, toric::EnumerationOptions const& options)
{
    if (name == "francia")
        return run_francia(options);
    if (name == "clifford")
        return run_clifford();
    fail(ErrorKind::invalid_argument, "unknown case study '" + name + "'");
}

std::string monomial_name(RationalVector const& exponents)
{
    static constexpr char vars[] = "xyzw";
    if (exponents.size() > 4)
        fail(ErrorKind::invalid_argument, "monomial_name: at most four variables");
    std::string out;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] == 0)
            continue;
        out += vars[i];
        if (exponents[i] != 1)
            out += "^" + to_string(exponents[i]);
    }
    return out.empty() ? "1" : out;
}

}  // namespace logcentre::cases
