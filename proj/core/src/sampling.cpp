#include "minkdef/sampling.hpp"

namespace minkdef {

const std::vector<std::pair<long, long>>& Sampler::pythagorean_speeds() {
    // (a, c) from triples (a, b, c): v = a/c, sqrt(1 - v^2) = b/c.
    static const std::vector<std::pair<long, long>> speeds = {
        {3, 5}, {4, 5}, {5, 13}, {12, 13}, {8, 17}, {15, 17}, {7, 25}, {20, 29},
    };
    return speeds;
}

Rat Sampler::small_rat(Rng& rng, long spread, int max_den_log2) const {
    long num = rng.range(-spread, spread);
    long den = 1L << rng.range(0, max_den_log2);
    return rat(num, den);
}

FieldElem Sampler::small_elem(Rng& rng, long spread) const {
    return FieldElem(ctx_, small_rat(rng, spread));
}

FieldElem Sampler::small_elem_maybe_root(Rng& rng, long spread) const {
    Rat a = small_rat(rng, spread);
    if (ctx_.is_quad() && rng.below(3) == 0)
        return FieldElem(ctx_, a, small_rat(rng, 2));
    return FieldElem(ctx_, a);
}

Point Sampler::lattice_point(Rng& rng, long spread, int max_den_log2) const {
    std::vector<FieldElem> coords;
    coords.reserve(static_cast<size_t>(n_));
    for (int i = 0; i < n_; ++i)
        coords.push_back(FieldElem(ctx_, small_rat(rng, spread, max_den_log2)));
    return Point(std::move(coords));
}

Point Sampler::lattice_point_near(Rng& rng, const Point& center, long spread,
                                  int max_den_log2) const {
    return center + lattice_point(rng, spread, max_den_log2);
}

Point Sampler::point_in_timelike_cone(Rng& rng, const Point& apex) const {
    std::vector<Rat> spatial;
    Rat total(0);
    for (int i = 1; i < n_; ++i) {
        Rat xi = small_rat(rng, 4, 2);
        total += abs(xi);
        spatial.push_back(xi);
    }
    Rat t = total + rat(1 + rng.range(0, 5), 1 + rng.range(0, 3));
    if (rng.coin()) t = -t;
    Point offset = Point::origin(ctx_, n_);
    offset[0] = FieldElem(ctx_, t);
    for (int i = 1; i < n_; ++i) offset[i] = FieldElem(ctx_, spatial[static_cast<size_t>(i - 1)]);
    return apex + offset;
}

FieldElem Sampler::random_scale(Rng& rng) const {
    static const long nums[] = {1, 2, 3, 5, 1, 3, 5, 7};
    static const long dens[] = {1, 1, 1, 1, 2, 2, 4, 4};
    size_t i = static_cast<size_t>(rng.below(8));
    Rat c = rat(nums[i], dens[i]);
    if (rng.coin()) c = -c;
    if (ctx_.is_quad() && rng.below(4) == 0)
        return FieldElem(ctx_, c, rat(1, 2)); // e.g. c + rt/2, nonzero since d is irrational
    return FieldElem(ctx_, c);
}

AffineMap Sampler::random_preserving_map(Rng& rng) const {
    AffineMap map = scaling(ctx_, n_, random_scale(rng));

    // Exactly one boost keeps the image pair canonicalizable over Q.
    const auto& speeds = pythagorean_speeds();
    if (rng.below(4) != 0) {
        auto [a, c] = speeds[static_cast<size_t>(rng.below(speeds.size()))];
        long sign = rng.coin() ? 1 : -1;
        int axis = static_cast<int>(1 + rng.below(static_cast<uint64_t>(n_ - 1)));
        map = map.then(boost(ctx_, n_, axis, FieldElem(ctx_, rat(sign * a, c))));
    }

    if (n_ >= 3 && rng.below(4) != 0) {
        // Pythagorean rotation in a random spatial 2-plane.
        auto [a, c] = speeds[static_cast<size_t>(rng.below(speeds.size()))];
        Rat cosv = rat(a, c);
        Rat b2 = Rat(1) - cosv * cosv;
        Rat sinv = *sqrt_rat_exact(b2);
        int i = static_cast<int>(rng.below(static_cast<uint64_t>(n_ - 1)));
        int j = static_cast<int>(rng.below(static_cast<uint64_t>(n_ - 1)));
        if (i != j) {
            int sn = n_ - 1;
            std::vector<std::vector<FieldElem>> rows(
                static_cast<size_t>(sn),
                std::vector<FieldElem>(static_cast<size_t>(sn), FieldElem(ctx_)));
            for (int k = 0; k < sn; ++k) rows[static_cast<size_t>(k)][static_cast<size_t>(k)] = FieldElem(ctx_, Rat(1));
            rows[static_cast<size_t>(i)][static_cast<size_t>(i)] = FieldElem(ctx_, cosv);
            rows[static_cast<size_t>(j)][static_cast<size_t>(j)] = FieldElem(ctx_, cosv);
            rows[static_cast<size_t>(i)][static_cast<size_t>(j)] = FieldElem(ctx_, -sinv);
            rows[static_cast<size_t>(j)][static_cast<size_t>(i)] = FieldElem(ctx_, sinv);
            map = map.then(rotation_from_orthonormal(ctx_, n_, rows));
        }
    }

    if (rng.coin()) map = map.then(time_reversal(ctx_, n_));
    if (rng.coin()) map = map.then(spatial_flip(ctx_, n_));
    map = map.then(translation(lattice_point(rng, 8, 2)));
    return map;
}

Sampler::GeneratedPair Sampler::pair_of_kind(Rng& rng, RelKind kind) const {
    AffineMap map = random_preserving_map(rng);
    if (kind == RelKind::Equal) {
        Point p = map(Point::origin(ctx_, n_));
        return {p, p, map};
    }
    auto [a, b] = canonical_pair_points(ctx_, n_, kind);
    return {map(a), map(b), map};
}

} // namespace minkdef
