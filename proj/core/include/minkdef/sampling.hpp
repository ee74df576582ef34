#pragma once

#include "minkdef/rng.hpp"
#include "minkdef/transforms.hpp"

#include <utility>
#include <vector>

namespace minkdef {

/// Seeded generators of exact points, relation-preserving maps and point
/// pairs of a prescribed kind. Pairs are produced as the image of the
/// canonical pair under a random automorphism built from one Pythagorean
/// boost, a Pythagorean rotation, sign flips, a scaling and a translation;
/// such pairs stay canonicalizable over the rationals.
class Sampler {
  public:
    Sampler(FieldCtx ctx, int n) : ctx_(std::move(ctx)), n_(n) {}

    const FieldCtx& ctx() const { return ctx_; }
    int dim() const { return n_; }

    /// num/den with |num| <= spread and den a small power of two.
    Rat small_rat(Rng& rng, long spread = 8, int max_den_log2 = 2) const;
    FieldElem small_elem(Rng& rng, long spread = 8) const;
    /// Occasionally mixes in a root part over a quadratic context.
    FieldElem small_elem_maybe_root(Rng& rng, long spread = 4) const;

    Point lattice_point(Rng& rng, long spread = 6, int max_den_log2 = 1) const;
    Point lattice_point_near(Rng& rng, const Point& center, long spread = 4,
                             int max_den_log2 = 1) const;

    /// apex + (t, xbar) with |t| > sum |x_i|, so membership in the open
    /// timelike cone holds by construction.
    Point point_in_timelike_cone(Rng& rng, const Point& apex) const;

    /// Random nonzero scaling factor.
    FieldElem random_scale(Rng& rng) const;
    /// Random relation-preserving automorphism (PreservesAll).
    AffineMap random_preserving_map(Rng& rng) const;

    /// Pair with relate(p, q) == kind, together with the map that carried
    /// the canonical pair onto it.
    struct GeneratedPair {
        Point p, q;
        AffineMap map;
    };
    GeneratedPair pair_of_kind(Rng& rng, RelKind kind) const;

    /// Pythagorean speeds a/c with sqrt(1-v^2) = b/c rational.
    static const std::vector<std::pair<long, long>>& pythagorean_speeds();

  private:
    FieldCtx ctx_;
    int n_;
};

} // namespace minkdef
