#pragma once

#include "minkdef/affine.hpp"

#include <utility>
#include <vector>

namespace minkdef {

struct SpeedOutOfRange : Error {
    SpeedOutOfRange() : Error("boost speed must satisfy -1 < v < 1") {}
};
struct NotOrthonormal : Error {
    NotOrthonormal() : Error("rows do not form an orthonormal matrix") {}
};
struct WrongDeterminant : Error {
    WrongDeterminant() : Error("rotation must have determinant 1") {}
};
struct WrongRegime : Error {
    explicit WrongRegime(const std::string& what) : Error(what) {}
};
struct EqualPoints : Error {
    EqualPoints() : Error("points must be distinct") {}
};
struct TargetNotLightlike : Error {
    TargetNotLightlike() : Error("target pair must be lightlike related") {}
};
struct NoEpsilonFound : Error {
    explicit NoEpsilonFound(const std::string& what) : Error(what) {}
};
struct OnLightConeOfOrigin : Error {
    OnLightConeOfOrigin() : Error("point lies on the light cone through the origin") {}
};

AffineMap translation(const Point& v);
AffineMap scaling(const FieldCtx& ctx, int n, const FieldElem& c);
AffineMap time_reversal(const FieldCtx& ctx, int n);
/// Negates every spatial axis; equals scaling(-1) composed with time
/// reversal, hence an automorphism.
AffineMap spatial_flip(const FieldCtx& ctx, int n);

/// Lorentz boost along spatial axis i (1 <= i <= n-1) with velocity v.
/// Needs sqrt(1 - v^2) in the field; NotASquareError carries the radicand
/// so the caller may retry with a Pythagorean speed.
AffineMap boost(const FieldCtx& ctx, int n, int axis, const FieldElem& v);

/// Block rotation fixing the time axis; `rows` is the (n-1) x (n-1)
/// spatial matrix, validated to be orthonormal with determinant 1.
AffineMap rotation_from_orthonormal(const FieldCtx& ctx, int n,
                                    const std::vector<std::vector<FieldElem>>& rows);

/// Spatial rotation sending the given spatial vector to (|v|, 0, ..., 0),
/// built from a Householder reflection and an axis flip. Needs |v| in the
/// field and spatial dimension >= 2.
AffineMap rotation_to_first_spatial_axis(const std::vector<FieldElem>& spatial);

/// Boost-plus-scaling sending (t,x,0,...) to (1,0,...) for t > x >= 0.
/// Over n = 2 the composite is rational in t and x; for n >= 3 it needs
/// sqrt(t^2 - x^2).
AffineMap boost_scale_tau(const FieldCtx& ctx, int n, const FieldElem& t, const FieldElem& x);
/// Dual map sending (t,x,0,...) to (0,1,0,...) for 0 <= t < x.
AffineMap boost_scale_sigma(const FieldCtx& ctx, int n, const FieldElem& t, const FieldElem& x);

struct CanonicalPair {
    AffineMap map;
    RelKind tag;
};

/// The canonical representative pair for each relation kind:
/// timelike (0..0),(1,0..0); lightlike (0..0),(1,1,0..0);
/// spacelike (0..0),(0,1,0..0).
std::pair<Point, Point> canonical_pair_points(const FieldCtx& ctx, int n, RelKind tag);

/// Relation-preserving map carrying (p,q) to the canonical pair of its
/// kind. Never needs square roots when n = 2; for n >= 3 the blocked
/// radicands (if any) are all reported in one NotASquareError.
CanonicalPair canonicalize_pair(const Point& p, const Point& q);

/// n = 2 only: (t,x) -> (x,t); preserves lightlike, swaps timelike and
/// spacelike.
AffineMap swap_tx(const FieldCtx& ctx);

/// Coordinatewise field conjugation over Q(sqrt(d)); preserves lightlike
/// relatedness but not the ordering-dependent relations.
PartialMap lifted_conjugation(const FieldCtx& ctx, int n);

struct TimeCompression {
    Rat epsilon;
    std::vector<Point> images;
};

/// Finds a rational epsilon in (0,1) such that scaling time by (1-eps)
/// keeps every timelike pair of `points` timelike, keeps non-timelike
/// pairs non-timelike, keeps points distinct, and turns the designated
/// lightlike pair (ia, ib) spacelike. Epsilon is found by halving.
TimeCompression time_compress(const std::vector<Point>& points, int ia, int ib);

/// r -> r / (r0^2 - r1^2 - ... ); involution on the complement of the
/// light cone through the origin.
Point hyperbolic_inversion(const Point& p);
PartialMap hyperbolic_inversion_map(const FieldCtx& ctx, int n);

enum class EscapeRegime { TimelikePair, SpacelikePair };

/// Repeatedly applies the scale-and-translate automorphism of the chosen
/// regime until no point lies on the light cone through the origin.
std::vector<Point> escape_iteration(const std::vector<Point>& points, EscapeRegime regime);

} // namespace minkdef
