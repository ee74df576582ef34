#include "minkdef/transforms.hpp"

namespace minkdef {

namespace {

FieldElem fe(const FieldCtx& ctx, long num, long den = 1) {
    return FieldElem(ctx, rat(num, den));
}

} // namespace

AffineMap translation(const Point& v) {
    return AffineMap(FMatrix::identity(v.ctx(), v.dim()), v, RelationEffect::PreservesAll);
}

AffineMap scaling(const FieldCtx& ctx, int n, const FieldElem& c) {
    if (c.is_zero()) throw ZeroScale();
    FMatrix m(ctx, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = c;
    // Relations depend on squared differences, so either sign preserves all.
    return AffineMap(std::move(m), Point::origin(ctx, n), RelationEffect::PreservesAll);
}

AffineMap time_reversal(const FieldCtx& ctx, int n) {
    FMatrix m = FMatrix::identity(ctx, n);
    m.at(0, 0) = fe(ctx, -1);
    return AffineMap(std::move(m), Point::origin(ctx, n), RelationEffect::PreservesAll);
}

AffineMap spatial_flip(const FieldCtx& ctx, int n) {
    FMatrix m = FMatrix::identity(ctx, n);
    for (int i = 1; i < n; ++i) m.at(i, i) = fe(ctx, -1);
    return AffineMap(std::move(m), Point::origin(ctx, n), RelationEffect::PreservesAll);
}

AffineMap boost(const FieldCtx& ctx, int n, int axis, const FieldElem& v) {
    if (axis < 1 || axis >= n) throw WrongDimension("boost axis must be spatial");
    FieldElem one = fe(ctx, 1);
    FieldElem s2 = one - v * v;
    if (s2.sign() <= 0) throw SpeedOutOfRange();
    auto s = sqrt_exact(s2);
    if (!s) throw NotASquareError({s2.to_string()});
    FieldElem sinv = s->inv();
    FMatrix m = FMatrix::identity(ctx, n);
    m.at(0, 0) = sinv;
    m.at(0, axis) = -v * sinv;
    m.at(axis, 0) = -v * sinv;
    m.at(axis, axis) = sinv;
    return AffineMap(std::move(m), Point::origin(ctx, n), RelationEffect::PreservesAll);
}

AffineMap rotation_from_orthonormal(const FieldCtx& ctx, int n,
                                    const std::vector<std::vector<FieldElem>>& rows) {
    int sn = n - 1;
    if (static_cast<int>(rows.size()) != sn) throw NotOrthonormal();
    for (const auto& row : rows)
        if (static_cast<int>(row.size()) != sn) throw NotOrthonormal();

    FieldElem zero(ctx), one = fe(ctx, 1);
    for (int i = 0; i < sn; ++i)
        for (int j = i; j < sn; ++j) {
            FieldElem dot = zero;
            for (int k = 0; k < sn; ++k) dot += rows[i][k] * rows[j][k];
            if (dot != (i == j ? one : zero)) throw NotOrthonormal();
        }

    FMatrix m = FMatrix::identity(ctx, n);
    for (int i = 0; i < sn; ++i)
        for (int j = 0; j < sn; ++j) m.at(i + 1, j + 1) = rows[i][j];
    if (m.det() != one) throw WrongDeterminant();
    return AffineMap(std::move(m), Point::origin(ctx, n), RelationEffect::PreservesAll);
}

AffineMap rotation_to_first_spatial_axis(const std::vector<FieldElem>& spatial) {
    int sn = static_cast<int>(spatial.size());
    if (sn < 2) throw WrongDimension("spatial rotation needs spatial dimension >= 2");
    const FieldCtx& ctx = spatial[0].ctx();
    int n = sn + 1;

    FieldElem zero(ctx), one = fe(ctx, 1);
    FieldElem norm2 = zero;
    for (const auto& c : spatial) norm2 += c * c;
    if (norm2.is_zero()) return AffineMap(FMatrix::identity(ctx, n), Point::origin(ctx, n),
                                          RelationEffect::PreservesAll);
    auto r = sqrt_exact(norm2);
    if (!r) throw NotASquareError({norm2.to_string()});

    // Householder reflection across the bisector of v and |v| e1, then an
    // axis flip to restore determinant 1. Both fix the image (r,0,...,0).
    std::vector<FieldElem> u;
    u.reserve(static_cast<size_t>(sn));
    for (int i = 0; i < sn; ++i) u.push_back(spatial[i] - (i == 0 ? *r : zero));
    FieldElem uu = zero;
    for (const auto& c : u) uu += c * c;

    FMatrix m = FMatrix::identity(ctx, n);
    if (!uu.is_zero()) {
        FieldElem two_over_uu = fe(ctx, 2) * uu.inv();
        for (int i = 0; i < sn; ++i)
            for (int j = 0; j < sn; ++j) {
                FieldElem h = (i == j ? one : zero) - two_over_uu * u[i] * u[j];
                m.at(i + 1, j + 1) = h;
            }
        // Flip the last spatial axis: negate its row of H.
        for (int j = 0; j < sn; ++j) m.at(sn, j + 1) = -m.at(sn, j + 1);
    }
    return AffineMap(std::move(m), Point::origin(ctx, n), RelationEffect::PreservesAll);
}

namespace {

// Composite matrix on the tx-plane: [[major,-minor],[-minor,major]]/s2
// with s2 = major^2 - minor^2; remaining axes scaled by 1/sqrt(s2), which
// only exists as a requirement when n >= 3.
AffineMap boost_scale(const FieldCtx& ctx, int n, const FieldElem& major,
                      const FieldElem& minor) {
    FieldElem s2 = major * major - minor * minor;
    FieldElem s2inv = s2.inv();
    FMatrix m = FMatrix::identity(ctx, n);
    m.at(0, 0) = major * s2inv;
    m.at(0, 1) = -minor * s2inv;
    m.at(1, 0) = -minor * s2inv;
    m.at(1, 1) = major * s2inv;
    if (n > 2) {
        auto s = sqrt_exact(s2);
        if (!s) throw NotASquareError({s2.to_string()});
        FieldElem sinv = s->inv();
        for (int i = 2; i < n; ++i) m.at(i, i) = sinv;
    }
    return AffineMap(std::move(m), Point::origin(ctx, n), RelationEffect::PreservesAll);
}

} // namespace

AffineMap boost_scale_tau(const FieldCtx& ctx, int n, const FieldElem& t, const FieldElem& x) {
    if (!(t.sign() > 0 && x.sign() >= 0 && x < t))
        throw WrongRegime("boost_scale_tau needs t > x >= 0");
    return boost_scale(ctx, n, t, x);
}

AffineMap boost_scale_sigma(const FieldCtx& ctx, int n, const FieldElem& t, const FieldElem& x) {
    if (!(x.sign() > 0 && t.sign() >= 0 && t < x))
        throw WrongRegime("boost_scale_sigma needs 0 <= t < x");
    // Time and space trade places: x is the major coefficient.
    return boost_scale(ctx, n, x, t);
}

std::pair<Point, Point> canonical_pair_points(const FieldCtx& ctx, int n, RelKind tag) {
    Point a = Point::origin(ctx, n);
    Point b = Point::origin(ctx, n);
    FieldElem one = fe(ctx, 1);
    switch (tag) {
        case RelKind::Timelike: b[0] = one; break;
        case RelKind::Lightlike: b[0] = one; b[1] = one; break;
        case RelKind::Spacelike: b[1] = one; break;
        case RelKind::Equal: throw EqualPoints();
    }
    return {a, b};
}

CanonicalPair canonicalize_pair(const Point& p, const Point& q) {
    if (p == q) throw EqualPoints();
    const FieldCtx& ctx = p.ctx();
    int n = p.dim();

    AffineMap map = translation(-p);
    Point v = q - p;
    if (v[0].sign() < 0) {
        map = map.then(time_reversal(ctx, n));
        v[0] = -v[0];
    }

    if (n == 2) {
        if (v[1].sign() < 0) {
            map = map.then(spatial_flip(ctx, n));
            v[1] = -v[1];
        }
        const FieldElem &t = v[0], &x = v[1];
        if (t > x) {
            map = map.then(boost_scale_tau(ctx, n, t, x));
            return {map, RelKind::Timelike};
        }
        if (t == x) {
            map = map.then(scaling(ctx, n, t.inv()));
            return {map, RelKind::Lightlike};
        }
        map = map.then(boost_scale_sigma(ctx, n, t, x));
        return {map, RelKind::Spacelike};
    }

    // n >= 3: collect every blocking radicand before failing, so one
    // quadratic extension can be suggested when a single root suffices.
    FieldElem norm2(ctx);
    for (int i = 1; i < n; ++i) norm2 += v[i] * v[i];
    FieldElem interval = v[0] * v[0] - norm2;

    std::vector<std::string> blocked;
    std::optional<FieldElem> r;
    if (!norm2.is_zero()) {
        r = sqrt_exact(norm2);
        if (!r) blocked.push_back(norm2.to_string());
    }
    if (interval.sign() != 0) {
        FieldElem abs_interval = interval.sign() > 0 ? interval : -interval;
        if (!sqrt_exact(abs_interval)) blocked.push_back(abs_interval.to_string());
    }
    if (!blocked.empty()) throw NotASquareError(std::move(blocked));

    if (!norm2.is_zero()) {
        std::vector<FieldElem> spatial(v.coords().begin() + 1, v.coords().end());
        AffineMap rot = rotation_to_first_spatial_axis(spatial);
        map = map.then(rot);
        Point vr = rot(v);
        v = vr;
    }

    const FieldElem &t = v[0], &x = v[1];
    int s = interval.sign();
    if (s > 0) {
        map = map.then(boost_scale_tau(ctx, n, t, x));
        return {map, RelKind::Timelike};
    }
    if (s == 0) {
        map = map.then(scaling(ctx, n, t.inv()));
        return {map, RelKind::Lightlike};
    }
    map = map.then(boost_scale_sigma(ctx, n, t, x));
    return {map, RelKind::Spacelike};
}

AffineMap swap_tx(const FieldCtx& ctx) {
    FMatrix m(ctx, 2);
    FieldElem one = fe(ctx, 1);
    m.at(0, 1) = one;
    m.at(1, 0) = one;
    return AffineMap(std::move(m), Point::origin(ctx, 2),
                     RelationEffect::PreservesLightSwapsTimeSpace);
}

PartialMap lifted_conjugation(const FieldCtx& ctx, int n) {
    if (!ctx.is_quad()) throw ContextMismatch();
    (void)n;
    return PartialMap(
        "lifted-conjugation", [](const Point&) { return true; },
        [](const Point& p) {
            std::vector<FieldElem> out;
            out.reserve(static_cast<size_t>(p.dim()));
            for (const auto& c : p.coords()) out.push_back(conjugate(c));
            return Point(std::move(out));
        });
}

TimeCompression time_compress(const std::vector<Point>& points, int ia, int ib) {
    if (ia < 0 || ib < 0 || ia >= static_cast<int>(points.size()) ||
        ib >= static_cast<int>(points.size()) || ia == ib)
        throw Error("bad target pair indices");
    if (relate(points[static_cast<size_t>(ia)], points[static_cast<size_t>(ib)]) != RelKind::Lightlike)
        throw TargetNotLightlike();

    const FieldCtx& ctx = points[0].ctx();
    int n = points[0].dim();

    auto compress = [&](const Rat& eps) {
        FieldElem factor(ctx, Rat(1) - eps);
        std::vector<Point> out;
        out.reserve(points.size());
        for (const auto& pt : points) {
            Point img = pt;
            img[0] = img[0] * factor;
            out.push_back(std::move(img));
        }
        return out;
    };

    std::vector<std::pair<size_t, size_t>> timelike_pairs;
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            if (relate(points[i], points[j]) == RelKind::Timelike)
                timelike_pairs.emplace_back(i, j);

    Rat eps(1, 2);
    for (int iter = 0; iter < 64; ++iter) {
        std::vector<Point> images = compress(eps);
        bool ok = true;
        std::pair<size_t, size_t> bad{0, 0};
        for (const auto& [i, j] : timelike_pairs)
            if (relate(images[i], images[j]) != RelKind::Timelike) {
                ok = false;
                bad = {i, j};
                break;
            }
        if (ok) {
            (void)n;
            return TimeCompression{eps, std::move(images)};
        }
        eps /= 2;
        if (iter == 63)
            throw NoEpsilonFound("timelike pair (" + std::to_string(bad.first) + "," +
                                 std::to_string(bad.second) + ") kept degrading");
    }
    throw NoEpsilonFound("halving search exhausted");
}

Point hyperbolic_inversion(const Point& p) {
    FieldElem q = mink_form_vec(p);
    if (q.is_zero()) throw OnLightConeOfOrigin();
    return p.scaled(q.inv());
}

PartialMap hyperbolic_inversion_map(const FieldCtx& ctx, int n) {
    (void)ctx;
    (void)n;
    return PartialMap(
        "hyperbolic-inversion",
        [](const Point& p) { return !mink_form_vec(p).is_zero(); },
        [](const Point& p) { return hyperbolic_inversion(p); });
}

std::vector<Point> escape_iteration(const std::vector<Point>& points, EscapeRegime regime) {
    if (points.empty()) return {};
    const FieldCtx& ctx = points[0].ctx();
    FieldElem two = fe(ctx, 2), one = fe(ctx, 1);

    auto step = [&](const Point& z) {
        Point out = z.scaled(two);
        if (regime == EscapeRegime::TimelikePair)
            out[1] = out[1] - one; // scale by 2, shift left along the x-axis
        else
            out[0] = out[0] - one; // scale by 2, shift down along the t-axis
        return out;
    };

    std::vector<Point> work = points;
    const int cap = 10 * static_cast<int>(points.size()) + 64;
    for (int iter = 0; iter <= cap; ++iter) {
        bool clean = true;
        for (const auto& z : work)
            if (mink_form_vec(z).is_zero()) {
                clean = false;
                break;
            }
        if (clean) return work;
        std::vector<Point> next;
        next.reserve(work.size());
        for (const auto& z : work) next.push_back(step(z));
        work = std::move(next);
    }
    throw Error("escape iteration did not terminate within its cap");
}

} // namespace minkdef
