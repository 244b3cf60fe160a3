#ifndef LOGCENTRE_TORIC_HPP
#define LOGCENTRE_TORIC_HPP

#include "logcentre/linalg.hpp"
#include "logcentre/orders.hpp"
#include "logcentre/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

/* Affine toric log pairs.
 *
 * A lattice N is given by a rational basis matrix (columns are the basis
 * vectors in ambient coordinates).  Cones, divisors and functionals all
 * live in lattice coordinates: rays are integer vectors w.r.t. the basis of
 * N and functionals are rational vectors w.r.t. the dual basis of M, so
 * the pairing is the plain dot product of coordinate vectors. */
namespace logcentre::toric {

using linalg::IntVector;
using linalg::QMatrix;

/* Desk-scale limits.  Exceeding them raises resource_limit. */
inline constexpr std::size_t max_dimension = 4;
inline constexpr std::int64_t max_ray_coordinate = 100;
inline constexpr std::uint64_t default_point_cap = 1'000'000;

struct EnumerationOptions {
    unsigned threads = 1;
    std::uint64_t point_cap = default_point_cap;
};

class Lattice {
public:
    explicit Lattice(QMatrix basis);
    static Lattice standard(std::size_t dim);

    std::size_t dim() const { return basis_.rows(); }
    QMatrix const& basis() const { return basis_; }

    /* Basis of M = Hom(N, Z) in ambient dual coordinates. */
    Lattice dual() const;

    RationalVector to_ambient(IntVector const& coords) const;
    RationalVector coordinates_of(RationalVector const& ambient) const;

    /* Same set of points (basis change is unimodular). */
    bool same_points_as(Lattice const& other) const;

    friend bool operator==(Lattice const&, Lattice const&) = default;

private:
    QMatrix basis_;
};

IntVector primitive(IntVector const& v);

/* Primitive lattice generator of the ray spanned by an ambient vector. */
IntVector primitive_ray(RationalVector const& ambient_direction, Lattice const& lattice);

class Cone {
public:
    /* Rays are made primitive.  Throws invalid_argument unless the cone is
     * full-dimensional and pointed with pairwise distinct extreme rays, and
     * resource_limit beyond desk scale. */
    Cone(Lattice lattice, std::vector<IntVector> rays);

    Lattice const& lattice() const { return lattice_; }
    std::size_t dim() const { return lattice_.dim(); }
    std::vector<IntVector> const& rays() const { return rays_; }

    /* Inner facet normals, primitive in M, sorted. */
    std::vector<IntVector> const& facet_normals() const { return facets_; }
    bool contains(IntVector const& v) const;

    friend bool operator==(Cone const& a, Cone const& b) { return a.lattice_ == b.lattice_ && a.rays_ == b.rays_; }

private:
    Lattice lattice_;
    std::vector<IntVector> rays_;
    std::vector<IntVector> facets_;
};

/* Coefficient of D_i per ray. */
struct ToricDivisor {
    RationalVector coeffs;
    friend bool operator==(ToricDivisor const&, ToricDivisor const&) = default;
};

struct ConePair {
    Cone cone;
    ToricDivisor boundary;
    friend bool operator==(ConePair const&, ConePair const&) = default;
};

/* Represents -(K + D) when produced by klt_check: <u, v_i> = 1 - d_i. */
struct CartierFunctional {
    RationalVector u;
    friend bool operator==(CartierFunctional const&, CartierFunctional const&) = default;
};

ToricDivisor canonical_divisor(Cone const& cone);
ToricDivisor log_canonical_divisor(ConePair const& pair);

/* Unique u with <u, v_i> = -n_i for all rays, or nullopt. */
std::optional<CartierFunctional> q_cartier_functional(Cone const& cone, ToricDivisor const& divisor);
inline std::optional<CartierFunctional> q_cartier_functional(ConePair const& pair, ToricDivisor const& divisor)
{
    return q_cartier_functional(pair.cone, divisor);
}

/* Least m >= 1 with m u in M. */
std::int64_t cartier_index(CartierFunctional const& u, Lattice const& lattice);

struct KltResult {
    bool klt = false;
    std::optional<CartierFunctional> functional;
};

KltResult klt_check(ConePair const& pair);

std::vector<IntVector> hilbert_basis(Cone const& cone, EnumerationOptions const& options = {});

/* Throws not_applicable when K is not Q-Cartier. */
bool canonical_check(Cone const& cone, EnumerationOptions const& options = {});

struct LogCanonicalCover {
    Lattice cover_lattice;
    Cone cover_cone;
    std::int64_t degree = 1;
    /* Basis of the cover lattice in coordinates of the base lattice. */
    std::vector<IntVector> sublattice_basis;
    /* Ramification index of the cover along each D_i. */
    std::vector<std::int64_t> ramification;
    /* The base functional expressed on the cover lattice; integral. */
    CartierFunctional pulled_back;
};

/* Throws non_standard_boundary for coefficients not of the form (e-1)/e,
 * not_applicable when K + D is not Q-Cartier. */
LogCanonicalCover log_canonical_cover(ConePair const& pair);

Cone dual_cone(Cone const& cone);
std::vector<IntVector> dual_cone_generators(Cone const& cone, EnumerationOptions const& options = {});

struct CorrespondenceResult {
    bool base_klt = false;
    bool cover_canonical = false;
    bool agree = false;
};

CorrespondenceResult cover_correspondence_check(ConePair const& pair, EnumerationOptions const& options = {});

/* Boundary from a log centre whose primes are named after the rays. */
ConePair pair_from_log_centre(Cone const& cone, std::vector<std::string> const& ray_labels,
                              orders::LogCentre const& centre);

}  // namespace logcentre::toric

#endif
