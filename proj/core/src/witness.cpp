#include "minkdef/witness.hpp"

namespace minkdef {

std::pair<std::vector<std::string>, Formula> strip_exists(const Formula& f) {
    std::vector<std::string> vars;
    const Formula* cur = &f;
    while (cur->kind() == Formula::Kind::Exists) {
        vars.push_back(cur->var());
        cur = &cur->child();
    }
    return {vars, *cur};
}

Env apply_to_env(const AffineMap& map, const Env& env) {
    Env out;
    for (const auto& [var, pt] : env) out.emplace(var, map(pt));
    return out;
}

namespace {

FieldElem fe(const FieldCtx& ctx, long num, long den = 1) {
    return FieldElem(ctx, rat(num, den));
}

Point plane_point(const FieldCtx& ctx, int n, long t_num, long t_den, long x_num, long x_den) {
    Point p = Point::origin(ctx, n);
    p[0] = fe(ctx, t_num, t_den);
    p[1] = fe(ctx, x_num, x_den);
    return p;
}

AffineMap canonicalize_expecting(const Point& p, const Point& q, RelKind expected,
                                 const char* op) {
    RelKind k = relate(p, q);
    if (k != expected)
        throw WrongRelation(std::string(op) + " needs a " + rel_kind_name(expected) +
                            " pair, got " + rel_kind_name(k));
    CanonicalPair c = canonicalize_pair(p, q);
    return c.map;
}

} // namespace

Env witness_e(const Point& p, const Point& q, RelKind rho) {
    const FieldCtx& ctx = p.ctx();
    int n = p.dim();
    RelKind target = rho == RelKind::Timelike ? RelKind::Spacelike : RelKind::Timelike;
    AffineMap to_canon = canonicalize_expecting(p, q, target, "witness_e");
    AffineMap back = to_canon.inverse();

    // Canonical templates for the eleven-atom matrix; the sigma variant is
    // the tau/sigma swap of the tau one.
    Env canon;
    if (rho == RelKind::Timelike) {
        canon.emplace("r", plane_point(ctx, n, 3, 4, 1, 2));
        canon.emplace("x", plane_point(ctx, n, 3, 8, -1, 8));
        canon.emplace("s", plane_point(ctx, n, 0, 1, 1, 2));
        canon.emplace("z", plane_point(ctx, n, 3, 8, 9, 8));
    } else {
        canon.emplace("r", plane_point(ctx, n, 1, 2, 3, 4));
        canon.emplace("x", plane_point(ctx, n, -1, 8, 3, 8));
        canon.emplace("s", plane_point(ctx, n, 1, 2, 0, 1));
        canon.emplace("z", plane_point(ctx, n, 9, 8, 3, 8));
    }
    Env out = apply_to_env(back, canon);
    out.emplace("p", p);
    out.emplace("q", q);
    return out;
}

Env witness_e_hat(const Point& p, const Point& q, RelKind rho) {
    const FieldCtx& ctx = p.ctx();
    int n = p.dim();
    RelKind target = rho == RelKind::Timelike ? RelKind::Spacelike : RelKind::Timelike;
    AffineMap to_canon = canonicalize_expecting(p, q, target, "witness_e_hat");
    AffineMap back = to_canon.inverse();

    Env canon;
    if (rho == RelKind::Timelike) {
        canon.emplace("y", plane_point(ctx, n, 0, 1, 1, 2)); // midpoint of the pair
        canon.emplace("x", plane_point(ctx, n, 3, 4, 0, 1)); // above p, high enough
        canon.emplace("z", plane_point(ctx, n, 3, 4, 1, 1)); // above q
    } else {
        canon.emplace("y", plane_point(ctx, n, 1, 2, 0, 1));
        canon.emplace("x", plane_point(ctx, n, 0, 1, 3, 4));
        canon.emplace("z", plane_point(ctx, n, 1, 1, 3, 4));
    }
    Env out = apply_to_env(back, canon);
    out.emplace("p", p);
    out.emplace("q", q);
    return out;
}

Point witness_psi_ts_inner(const Point& z, const Point& p, const Point& q) {
    if (z == p || z == q) throw DegenerateZ();
    const FieldCtx& ctx = p.ctx();
    int n = p.dim();
    AffineMap to_canon = canonicalize_expecting(p, q, RelKind::Spacelike, "witness_psi_ts_inner");
    Point zc = to_canon(z);

    Point u = zc;
    if (!zc[0].is_zero()) {
        // z off the horizontal hyperplane of the pair: project vertically.
        u[0] = FieldElem(ctx);
    } else {
        // z inside the hyperplane: nudge in time by less than the smaller
        // spatial distance to the endpoints.
        FieldElem d2p(ctx), d2q(ctx);
        for (int i = 1; i < n; ++i) {
            FieldElem dp = zc[i];
            d2p += dp * dp;
            FieldElem dq = zc[i] - (i == 1 ? fe(ctx, 1) : FieldElem(ctx));
            d2q += dq * dq;
        }
        FieldElem dmin2 = d2p <= d2q ? d2p : d2q;
        FieldElem one = fe(ctx, 1);
        FieldElem delta = (dmin2 <= one ? dmin2 : one) * fe(ctx, 1, 2);
        u[0] = delta;
    }
    return to_canon.inverse()(u);
}

Point witness_psi_st_inner(const Point& z, const Point& p, const Point& q) {
    if (z == p || z == q) throw DegenerateZ();
    const FieldCtx& ctx = p.ctx();
    int n = p.dim();
    AffineMap to_canon = canonicalize_expecting(p, q, RelKind::Timelike, "witness_psi_st_inner");
    Point zc = to_canon(z);

    bool on_axis = true;
    for (int i = 1; i < n; ++i)
        if (!zc[i].is_zero()) {
            on_axis = false;
            break;
        }

    Point u = Point::origin(ctx, n);
    if (!on_axis) {
        // intersection of the vertical line through the pair with the
        // horizontal hyperplane through z
        u[0] = zc[0];
    } else {
        // z on the axis: step sideways by less than its vertical distance
        // to either endpoint
        FieldElem d0 = zc[0].sign() >= 0 ? zc[0] : -zc[0];
        FieldElem d1 = zc[0] - fe(ctx, 1);
        if (d1.sign() < 0) d1 = -d1;
        FieldElem delta = (d0 <= d1 ? d0 : d1) * fe(ctx, 1, 2);
        u = zc;
        u[1] = u[1] + delta;
    }
    return to_canon.inverse()(u);
}

Point refuter_psi_midpoint(const Point& p, const Point& q) {
    if (p == q) throw EqualPoints();
    return (p + q).scaled(FieldElem(p.ctx(), rat(1, 2)));
}

Point witness_psi_ls(const Point& p, const Point& q) {
    const FieldCtx& ctx = p.ctx();
    int n = p.dim();
    if (n < 3) throw WrongDimension("the lam->sig witness needs n >= 3");
    AffineMap to_canon = canonicalize_expecting(p, q, RelKind::Spacelike, "witness_psi_ls");
    Point zc = Point::origin(ctx, n);
    zc[0] = fe(ctx, 1);
    zc[2] = fe(ctx, 1); // ruling of the tangent plane r0 = r2 through q
    return to_canon.inverse()(zc);
}

Point refuter_psi_ls(const Point& p, const Point& q, const Point& z) {
    if (relate(p, q) != RelKind::Timelike)
        throw WrongRelation("refuter_psi_ls needs a timelike pair");
    if (relate(z, p) != RelKind::Lightlike || relate(z, q) == RelKind::Lightlike)
        throw WrongRelation("refuter_psi_ls needs z lam p and z nlam q");

    // In the plane of p, q, z there are exactly two null directions: d and
    // d2 = Q(e) d - 2 B(d,e) e. The line p + r d meets the d2-line through
    // q at r = Q(e) / (2 B(d,e)); everything is rational in the data.
    const FieldCtx& ctx = p.ctx();
    Point d = z - p;
    Point e = q - p;
    FieldElem qe = mink_form_vec(e);
    FieldElem bde = d[0] * e[0];
    for (int i = 1; i < p.dim(); ++i) bde -= d[i] * e[i];
    if (bde.is_zero())
        throw Error("null direction orthogonal to a timelike vector cannot happen");
    FieldElem r = qe * (fe(ctx, 2) * bde).inv();
    return p + d.scaled(r);
}

namespace {

/// z on the horizontal hyperplane t = level, causal to w, spacelike to
/// both free endpoints. Center of the cone slice first, then a fan of
/// probes at exact fractions of the slice radius.
std::optional<Point> wsl_slice_witness(const Point& w, const Point& same_level,
                                       const Point& other, const FieldElem& level) {
    const FieldCtx& ctx = w.ctx();
    int n = w.dim();
    FieldElem radius = w[0] - level;
    if (radius.sign() < 0) radius = -radius;

    auto good = [&](const Point& cand) {
        return relate(cand, w) != RelKind::Spacelike &&
               relate(cand, same_level) == RelKind::Spacelike &&
               relate(cand, other) == RelKind::Spacelike;
    };

    Point center = w;
    center[0] = level;
    if (good(center)) return center;
    static const long fracs[][2] = {{1, 1}, {1, 2}, {3, 4}, {1, 4}, {7, 8}, {15, 16}};
    for (auto [num, den] : fracs) {
        FieldElem step = radius * fe(ctx, num, den);
        if (step.is_zero()) continue;
        for (int axis = 1; axis < n; ++axis) {
            for (int dir : {1, -1}) {
                Point cand = center;
                cand[axis] = cand[axis] + (dir > 0 ? step : -step);
                if (good(cand)) return cand;
            }
        }
        if (n >= 3) {
            Point cand = center;
            cand[1] = cand[1] + step * fe(ctx, 1, 2);
            cand[2] = cand[2] + step * fe(ctx, 1, 2);
            if (good(cand)) return cand;
        }
    }
    return std::nullopt;
}

} // namespace

WslWitness witness_wsl(const Point& p, const Point& q, const Point& u, const Point& v,
                       RelKind rho) {
    if (rho == RelKind::Timelike) {
        // mirror case, n = 2: conjugate by the coordinate swap
        AffineMap s = swap_tx(p.ctx());
        WslWitness w = witness_wsl(s(p), s(q), s(u), s(v), RelKind::Spacelike);
        if (w.z) w.z = s(*w.z); // the swap is an involution
        return w;
    }
    if (rho != RelKind::Spacelike) throw WrongRelation("witness_wsl supports rho in {sig, tau}");
    if (relate(p, q) != RelKind::Lightlike)
        throw WrongRelation("witness_wsl needs a lightlike free pair");

    const FieldCtx& ctx = p.ctx();
    AffineMap to_canon = canonicalize_pair(p, q).map;
    AffineMap back = to_canon.inverse();
    Point pc = to_canon(p), qc = to_canon(q);
    FieldElem zero(ctx), one = fe(ctx, 1);

    Point uc = to_canon(u), vc = to_canon(v);
    bool first = true;
    for (const Point* wp : {&uc, &vc}) {
        for (int which = 0; which < 2; ++which) {
            FieldElem level = which == 0 ? zero : one;
            const Point& same = which == 0 ? pc : qc;
            const Point& other = which == 0 ? qc : pc;
            if (auto z = wsl_slice_witness(*wp, same, other, level))
                return WslWitness{first ? WslWitness::Kind::ZForU : WslWitness::Kind::ZForV,
                                  back(*z)};
        }
        first = false;
    }

    if (relate(u, v) != RelKind::Spacelike)
        return WslWitness{WslWitness::Kind::UVNotSpacelike, std::nullopt};
    throw WitnessNotFound("no slice point for either quantified point");
}

std::pair<Point, Point> refuter_wsl(const Point& p, const Point& q, RelKind rho) {
    if (rho == RelKind::Timelike) {
        AffineMap s = swap_tx(p.ctx());
        auto [u, v] = refuter_wsl(s(p), s(q), RelKind::Spacelike);
        return {s(u), s(v)};
    }
    if (rho != RelKind::Spacelike) throw WrongRelation("refuter_wsl supports rho in {sig, tau}");
    const FieldCtx& ctx = p.ctx();
    int n = p.dim();
    AffineMap back = canonicalize_expecting(p, q, RelKind::Timelike, "refuter_wsl").inverse();
    // mid-level points of the double cone: lightlike to both endpoints,
    // spacelike to each other
    Point u = plane_point(ctx, n, 1, 2, 1, 2);
    Point v = plane_point(ctx, n, 1, 2, -1, 2);
    return {back(u), back(v)};
}

std::vector<std::string> counterexample_names() {
    return {"EstLightlike3D", "EstSpacelike3D", "EstHatLightlike3D"};
}

Counterexample counterexample(const std::string& name, const FieldCtx& ctx, int n) {
    if (n < 3) throw WrongDimension("the explicit counterexamples live in n >= 3");
    auto pt = [&](long a, long b, long c) {
        std::vector<Rat> coords(static_cast<size_t>(n), Rat(0));
        coords[0] = Rat(a);
        coords[1] = Rat(b);
        coords[2] = Rat(c);
        return Point::of_rats(ctx, coords);
    };
    Counterexample out;
    out.name = name;
    if (name == "EstLightlike3D") {
        out.formula = "Est";
        out.assignment = {{"p", pt(-2, -2, 0)}, {"s", pt(0, 0, 0)}, {"q", pt(2, 2, 0)},
                          {"x", pt(-2, 0, 0)},  {"z", pt(2, 0, 0)}, {"r", pt(0, 0, 1)}};
        out.free_pair_relation = RelKind::Lightlike;
    } else if (name == "EstSpacelike3D") {
        out.formula = "Est";
        out.assignment = {{"p", pt(0, -2, 0)}, {"q", pt(0, 2, 0)},   {"x", pt(3, 2, -2)},
                          {"s", pt(3, 0, 1)},  {"z", pt(3, -2, -2)}, {"r", pt(0, 0, -3)}};
        out.free_pair_relation = RelKind::Spacelike;
    } else if (name == "EstHatLightlike3D") {
        out.formula = "EstHat";
        out.assignment = {{"p", pt(-2, -2, 0)}, {"q", pt(2, 2, 0)}, {"x", pt(-2, 0, 3)},
                          {"y", pt(0, 0, 0)},   {"z", pt(2, 0, 3)}};
        out.free_pair_relation = RelKind::Lightlike;
    } else {
        throw UnknownName(name);
    }
    return out;
}

} // namespace minkdef
