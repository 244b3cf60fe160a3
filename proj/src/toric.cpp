#include "logcentre/toric.hpp"
#include "logcentre/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <thread>

namespace logcentre::toric {

namespace {

std::int64_t pairing(IntVector const& a, IntVector const& b)
{
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

/* Calls f(subset) for every k-subset of {0..n-1} in lexicographic order. */
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F f)
{
    if (k > n)
        return;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
        f(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1)
            --i;
        if (i == 0)
            return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

std::size_t rank_of(std::vector<IntVector> const& rays, std::vector<std::size_t> const& subset)
{
    std::vector<IntVector> vs;
    for (auto i : subset)
        vs.push_back(rays[i]);
    return static_cast<std::size_t>(linalg::int_rank(vs));
}

struct FacetData {
    IntVector normal;
    std::vector<std::size_t> incident;
};

std::vector<FacetData> compute_facets(std::vector<IntVector> const& rays, std::size_t dim)
{
    std::map<IntVector, std::vector<std::size_t>> found;
    for_each_subset(rays.size(), dim - 1, [&](std::vector<std::size_t> const& subset) {
        if (rank_of(rays, subset) != dim - 1)
            return;
        std::vector<IntVector> vs;
        for (auto i : subset)
            vs.push_back(rays[i]);
        IntVector n = linalg::hyperplane_normal(vs, dim);
        bool pos = false, neg = false;
        for (auto const& r : rays) {
            auto p = pairing(n, r);
            pos |= p > 0;
            neg |= p < 0;
        }
        if (pos && neg)
            return;
        if (neg)
            for (auto& x : n)
                x = -x;
        if (found.count(n))
            return;
        std::vector<std::size_t> incident;
        for (std::size_t i = 0; i < rays.size(); ++i)
            if (pairing(n, rays[i]) == 0)
                incident.push_back(i);
        found.emplace(std::move(n), std::move(incident));
    });
    std::vector<FacetData> out;
    for (auto& [n, inc] : found)
        out.push_back({n, inc});
    return out;
}

/* Pulling triangulation of the face spanned by `face` (ray indices). */
void triangulate(std::vector<IntVector> const& rays, std::vector<FacetData> const& facets,
                 std::vector<std::size_t> const& face, std::vector<std::vector<std::size_t>>& out)
{
    std::size_t k = rank_of(rays, face);
    if (face.size() == k) {
        out.push_back(face);
        return;
    }
    std::size_t apex = *std::min_element(face.begin(), face.end(),
                                         [&](std::size_t a, std::size_t b) { return rays[a] < rays[b]; });
    std::set<std::vector<std::size_t>> subfaces;
    for (auto const& f : facets) {
        std::vector<std::size_t> t;
        std::set_intersection(face.begin(), face.end(), f.incident.begin(), f.incident.end(),
                              std::back_inserter(t));
        if (std::find(t.begin(), t.end(), apex) != t.end())
            continue;
        if (t.size() + 1 >= k && rank_of(rays, t) + 1 == k)
            subfaces.insert(t);
    }
    for (auto const& t : subfaces) {
        std::vector<std::vector<std::size_t>> sub;
        triangulate(rays, facets, t, sub);
        for (auto& s : sub) {
            s.push_back(apex);
            std::sort(s.begin(), s.end());
            out.push_back(std::move(s));
        }
    }
}

/* Integer adjugate and determinant of the square matrix with the given
 * columns, so that adj * p = det * lambda when p = V lambda. */
void adjugate(std::vector<IntVector> const& cols, std::vector<IntVector>& adj, std::int64_t& det)
{
    std::size_t d = cols.size();
    QMatrix v = QMatrix::from_columns(cols);
    Rational dq = linalg::determinant(v);
    det = to_int64(dq.get_num());
    QMatrix inv = linalg::inverse(v);
    adj.assign(d, IntVector(d));
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) {
            Rational x = inv(r, c) * dq;
            adj[r][c] = to_int64(x.get_num());
        }
}

/* Nonzero lattice points of the half-open parallelepiped spanned by a
 * simplicial cone's rays. */
std::vector<IntVector> parallelepiped_points(std::vector<IntVector> const& cols, EnumerationOptions const& options,
                                             std::uint64_t& budget)
{
    std::size_t d = cols.size();
    std::vector<IntVector> adj;
    std::int64_t det = 0;
    adjugate(cols, adj, det);
    std::int64_t sign = det < 0 ? -1 : 1;
    std::int64_t absdet = det * sign;
    if (absdet == 1)
        return {};

    IntVector lo(d, 0), hi(d, 0);
    std::uint64_t box = 1;
    for (std::size_t i = 0; i < d; ++i) {
        for (auto const& c : cols) {
            if (c[i] < 0)
                lo[i] += c[i];
            else
                hi[i] += c[i];
        }
        auto width = static_cast<std::uint64_t>(hi[i] - lo[i] + 1);
        if (width > options.point_cap || box > options.point_cap / width)
            fail(ErrorKind::resource_limit, "enumeration region exceeds the lattice point cap");
        box *= width;
    }
    if (box > budget)
        fail(ErrorKind::resource_limit, "enumeration region exceeds the lattice point cap");
    budget -= box;

    auto scan = [&](std::int64_t first_lo, std::int64_t first_hi, std::vector<IntVector>& found) {
        IntVector p(d);
        p[0] = first_lo;
        for (std::size_t i = 1; i < d; ++i)
            p[i] = lo[i];
        if (first_lo > first_hi)
            return;
        for (;;) {
            bool inside = true;
            bool zero = true;
            for (std::size_t r = 0; r < d && inside; ++r) {
                std::int64_t s = sign * pairing(adj[r], p);
                inside = s >= 0 && s < absdet;
                zero &= s == 0;
            }
            if (inside && !zero)
                found.push_back(p);
            std::size_t i = d;
            while (i > 0) {
                --i;
                std::int64_t limit = i == 0 ? first_hi : hi[i];
                std::int64_t start = i == 0 ? first_lo : lo[i];
                if (p[i] < limit) {
                    ++p[i];
                    break;
                }
                p[i] = start;
                if (i == 0)
                    return;
            }
        }
    };

    std::int64_t span = hi[0] - lo[0] + 1;
    unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(span)));
    std::vector<std::vector<IntVector>> shards(threads);
    if (threads == 1) {
        scan(lo[0], hi[0], shards[0]);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            std::int64_t a = lo[0] + span * t / threads;
            std::int64_t b = lo[0] + span * (t + 1) / threads - 1;
            pool.emplace_back([&, a, b, t] { scan(a, b, shards[t]); });
        }
    }
    std::vector<IntVector> out;
    for (auto& s : shards)
        out.insert(out.end(), std::make_move_iterator(s.begin()), std::make_move_iterator(s.end()));
    return out;
}

void check_scale(std::size_t dim)
{
    if (dim == 0)
        fail(ErrorKind::invalid_argument, "dimension must be positive");
    if (dim > max_dimension)
        fail(ErrorKind::resource_limit, "dimension " + std::to_string(dim) + " exceeds the desk-scale limit");
}

}  // namespace

Lattice::Lattice(QMatrix basis) : basis_(std::move(basis))
{
    if (basis_.rows() != basis_.cols() || basis_.rows() == 0)
        fail(ErrorKind::invalid_argument, "lattice basis must be a nonempty square matrix");
    if (linalg::determinant(basis_) == 0)
        fail(ErrorKind::invalid_argument, "lattice basis must be invertible");
}

Lattice Lattice::standard(std::size_t dim)
{
    return Lattice(QMatrix::identity(dim));
}

Lattice Lattice::dual() const
{
    return Lattice(linalg::inverse(basis_).transpose());
}

RationalVector Lattice::to_ambient(IntVector const& coords) const
{
    return basis_ * linalg::to_rational(coords);
}

RationalVector Lattice::coordinates_of(RationalVector const& ambient) const
{
    return linalg::inverse(basis_) * ambient;
}

bool Lattice::same_points_as(Lattice const& other) const
{
    if (dim() != other.dim())
        return false;
    QMatrix change = linalg::inverse(basis_) * other.basis_;
    for (std::size_t r = 0; r < dim(); ++r)
        for (std::size_t c = 0; c < dim(); ++c)
            if (!is_integral(change(r, c)))
                return false;
    Rational det = linalg::determinant(change);
    return det == 1 || det == -1;
}

IntVector primitive(IntVector const& v)
{
    std::int64_t g = linalg::gcd(v);
    if (g == 0)
        fail(ErrorKind::invalid_argument, "primitive: zero vector");
    IntVector out = v;
    for (auto& x : out)
        x /= g;
    return out;
}

IntVector primitive_ray(RationalVector const& ambient_direction, Lattice const& lattice)
{
    if (ambient_direction.size() != lattice.dim())
        fail(ErrorKind::invalid_argument, "primitive_ray: dimension mismatch");
    RationalVector coords = lattice.coordinates_of(ambient_direction);
    Integer den = 1;
    for (auto const& c : coords)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    IntVector scaled;
    for (auto const& c : coords)
        scaled.push_back(to_int64(Integer(c * den)));
    return primitive(scaled);
}

Cone::Cone(Lattice lattice, std::vector<IntVector> rays) : lattice_(std::move(lattice))
{
    std::size_t d = lattice_.dim();
    check_scale(d);
    if (rays.empty())
        fail(ErrorKind::invalid_argument, "cone needs at least one ray");
    for (auto& r : rays) {
        if (r.size() != d)
            fail(ErrorKind::invalid_argument, "ray dimension differs from lattice dimension");
        for (auto x : r)
            if (x > max_ray_coordinate || x < -max_ray_coordinate)
                fail(ErrorKind::resource_limit, "ray coordinate beyond desk scale");
        r = primitive(r);
        if (std::find(rays_.begin(), rays_.end(), r) != rays_.end())
            fail(ErrorKind::invalid_argument, "rays must be pairwise non-proportional");
        rays_.push_back(r);
    }
    if (static_cast<std::size_t>(linalg::int_rank(rays_)) != d)
        fail(ErrorKind::invalid_argument, "cone is not full-dimensional");
    auto facets = compute_facets(rays_, d);
    std::vector<IntVector> normals;
    for (auto const& f : facets)
        normals.push_back(f.normal);
    if (static_cast<std::size_t>(linalg::int_rank(normals)) != d)
        fail(ErrorKind::invalid_argument, "cone is not pointed");
    for (std::size_t i = 0; i < rays_.size(); ++i) {
        std::vector<IntVector> through;
        for (auto const& f : facets)
            if (std::binary_search(f.incident.begin(), f.incident.end(), i))
                through.push_back(f.normal);
        if (static_cast<std::size_t>(linalg::int_rank(through)) + 1 != d)
            fail(ErrorKind::invalid_argument, "ray " + format_vector(rays_[i]) + " is not extreme");
    }
    facets_ = std::move(normals);
}

bool Cone::contains(IntVector const& v) const
{
    return std::all_of(facets_.begin(), facets_.end(), [&](IntVector const& n) { return pairing(n, v) >= 0; });
}

ToricDivisor canonical_divisor(Cone const& cone)
{
    return ToricDivisor{RationalVector(cone.rays().size(), Rational(-1))};
}

ToricDivisor log_canonical_divisor(ConePair const& pair)
{
    if (pair.boundary.coeffs.size() != pair.cone.rays().size())
        fail(ErrorKind::invalid_argument, "boundary needs one coefficient per ray");
    ToricDivisor k = canonical_divisor(pair.cone);
    for (std::size_t i = 0; i < k.coeffs.size(); ++i)
        k.coeffs[i] += pair.boundary.coeffs[i];
    return k;
}

std::optional<CartierFunctional> q_cartier_functional(Cone const& cone, ToricDivisor const& divisor)
{
    auto const& rays = cone.rays();
    if (divisor.coeffs.size() != rays.size())
        fail(ErrorKind::invalid_argument, "divisor needs one coefficient per ray");
    QMatrix system(rays.size(), cone.dim());
    RationalVector rhs(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) {
        for (std::size_t j = 0; j < cone.dim(); ++j)
            system(i, j) = Rational(static_cast<long>(rays[i][j]));
        rhs[i] = -divisor.coeffs[i];
    }
    auto u = linalg::solve_unique(system, rhs);
    if (!u)
        return std::nullopt;
    return CartierFunctional{*u};
}

std::int64_t cartier_index(CartierFunctional const& u, Lattice const& lattice)
{
    if (u.u.size() != lattice.dim())
        fail(ErrorKind::invalid_argument, "functional dimension differs from lattice dimension");
    Integer m = 1;
    for (std::size_t i = 0; i < lattice.dim(); ++i) {
        IntVector e(lattice.dim(), 0);
        e[i] = 1;
        Rational value = linalg::dot(u.u, e);
        mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), value.get_den_mpz_t());
    }
    return to_int64(m);
}

KltResult klt_check(ConePair const& pair)
{
    KltResult result;
    result.functional = q_cartier_functional(pair.cone, log_canonical_divisor(pair));
    if (!result.functional)
        return result;
    result.klt = std::all_of(pair.cone.rays().begin(), pair.cone.rays().end(),
                             [&](IntVector const& v) { return linalg::dot(result.functional->u, v) > 0; });
    return result;
}

std::vector<IntVector> hilbert_basis(Cone const& cone, EnumerationOptions const& options)
{
    auto const& rays = cone.rays();
    std::size_t d = cone.dim();
    auto facets = compute_facets(rays, d);

    std::vector<std::size_t> all(rays.size());
    std::iota(all.begin(), all.end(), 0);
    std::vector<std::vector<std::size_t>> simplices;
    triangulate(rays, facets, all, simplices);

    std::uint64_t budget = options.point_cap;
    std::set<IntVector> candidates(rays.begin(), rays.end());
    for (auto const& s : simplices) {
        std::vector<IntVector> cols;
        for (auto i : s)
            cols.push_back(rays[i]);
        for (auto& p : parallelepiped_points(cols, options, budget))
            candidates.insert(std::move(p));
    }

    IntVector grading(d, 0);
    for (auto const& n : cone.facet_normals())
        for (std::size_t i = 0; i < d; ++i)
            grading[i] += n[i];
    std::vector<std::pair<std::int64_t, IntVector>> by_degree;
    for (auto const& c : candidates)
        by_degree.emplace_back(pairing(grading, c), c);
    std::sort(by_degree.begin(), by_degree.end());

    std::vector<IntVector> basis;
    for (auto const& [deg, h] : by_degree) {
        bool reducible = false;
        for (auto const& [gdeg, g] : by_degree) {
            if (gdeg >= deg)
                break;
            IntVector diff(d);
            for (std::size_t i = 0; i < d; ++i)
                diff[i] = h[i] - g[i];
            if (cone.contains(diff)) {
                reducible = true;
                break;
            }
        }
        if (!reducible)
            basis.push_back(h);
    }
    std::sort(basis.begin(), basis.end());
    return basis;
}

bool canonical_check(Cone const& cone, EnumerationOptions const& options)
{
    auto u = q_cartier_functional(cone, canonical_divisor(cone));
    if (!u)
        fail(ErrorKind::not_applicable, "canonical_check: K is not Q-Cartier");
    auto basis = hilbert_basis(cone, options);
    return std::all_of(basis.begin(), basis.end(), [&](IntVector const& h) { return linalg::dot(u->u, h) >= 1; });
}

LogCanonicalCover log_canonical_cover(ConePair const& pair)
{
    auto const& cone = pair.cone;
    auto const& rays = cone.rays();
    if (pair.boundary.coeffs.size() != rays.size())
        fail(ErrorKind::invalid_argument, "boundary needs one coefficient per ray");
    std::vector<std::int64_t> expected_ramification;
    for (auto const& c : pair.boundary.coeffs) {
        std::int64_t e = orders::standard_denominator(c);
        if (e == 0)
            fail(ErrorKind::non_standard_boundary,
                 "boundary coefficient " + to_string(c) + " is not of the form (e-1)/e");
        expected_ramification.push_back(e);
    }
    auto u = q_cartier_functional(cone, log_canonical_divisor(pair));
    if (!u)
        fail(ErrorKind::not_applicable, "log_canonical_cover: K + D is not Q-Cartier");
    std::int64_t m = cartier_index(*u, cone.lattice());

    IntVector w;
    for (auto const& x : u->u)
        w.push_back(to_int64(Integer(x * m)));
    auto basis = linalg::congruence_sublattice(w, m);
    QMatrix h = QMatrix::from_columns(basis);
    QMatrix h_inv = linalg::inverse(h);

    LogCanonicalCover cover{Lattice(cone.lattice().basis() * h), Cone(cone.lattice(), rays), m, basis, {}, {}};

    Rational index = linalg::determinant(h);
    if (index < 0)
        index = -index;
    if (index != m)
        fail(ErrorKind::precondition_violation, "cover lattice index differs from the Cartier index");

    RationalVector pulled = h.transpose() * u->u;
    for (auto const& x : pulled)
        if (!is_integral(x))
            fail(ErrorKind::precondition_violation, "functional is not integral on the cover lattice");

    std::vector<IntVector> cover_rays;
    for (std::size_t i = 0; i < rays.size(); ++i) {
        Rational value = linalg::dot(u->u, rays[i]);
        std::int64_t k = to_int64(value.get_den());
        RationalVector scaled = linalg::to_rational(rays[i]);
        for (auto& x : scaled)
            x *= k;
        RationalVector coords = h_inv * scaled;
        IntVector ray;
        for (auto const& x : coords) {
            if (!is_integral(x))
                fail(ErrorKind::precondition_violation, "cover ray is not in the cover lattice");
            ray.push_back(to_int64(x.get_num()));
        }
        if (linalg::dot(pulled, ray) != 1)
            fail(ErrorKind::precondition_violation, "cover is not crepant along a ray");
        if (k != expected_ramification[i])
            fail(ErrorKind::precondition_violation, "ramification of the cover differs from the boundary index");
        cover.ramification.push_back(k);
        cover_rays.push_back(std::move(ray));
    }
    cover.cover_cone = Cone(cover.cover_lattice, cover_rays);
    cover.pulled_back = CartierFunctional{pulled};

    // K of the cover must be the pullback of K + D
    auto cover_k = q_cartier_functional(cover.cover_cone, canonical_divisor(cover.cover_cone));
    if (!cover_k || cover_k->u != pulled)
        fail(ErrorKind::precondition_violation, "cover canonical class is not the pullback of K + D");
    return cover;
}

Cone dual_cone(Cone const& cone)
{
    return Cone(cone.lattice().dual(), cone.facet_normals());
}

std::vector<IntVector> dual_cone_generators(Cone const& cone, EnumerationOptions const& options)
{
    return hilbert_basis(dual_cone(cone), options);
}

CorrespondenceResult cover_correspondence_check(ConePair const& pair, EnumerationOptions const& options)
{
    CorrespondenceResult r;
    r.base_klt = klt_check(pair).klt;
    auto cover = log_canonical_cover(pair);
    r.cover_canonical = canonical_check(cover.cover_cone, options);
    r.agree = r.base_klt == r.cover_canonical;
    return r;
}

ConePair pair_from_log_centre(Cone const& cone, std::vector<std::string> const& ray_labels,
                              orders::LogCentre const& centre)
{
    if (ray_labels.size() != cone.rays().size())
        fail(ErrorKind::invalid_argument, "one label per ray is required");
    for (auto const& [prime, coeff] : centre.divisor.terms())
        if (std::find(ray_labels.begin(), ray_labels.end(), prime) == ray_labels.end())
            fail(ErrorKind::invalid_argument, "prime '" + prime + "' is not a toric divisor of the cone");
    ToricDivisor boundary;
    for (auto const& label : ray_labels)
        boundary.coeffs.push_back(centre.divisor.coefficient(label));
    return ConePair{cone, boundary};
}

}  // namespace logcentre::toric
