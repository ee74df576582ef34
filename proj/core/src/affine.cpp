#include "minkdef/affine.hpp"

#include <json.hpp>

namespace minkdef {

const char* relation_effect_name(RelationEffect e) {
    switch (e) {
        case RelationEffect::PreservesAll: return "preserves-all";
        case RelationEffect::PreservesLightSwapsTimeSpace: return "preserves-light-swaps-time-space";
        case RelationEffect::PreservesLightOnly: return "preserves-light-only";
        case RelationEffect::Custom: return "custom";
    }
    return "?";
}

FMatrix::FMatrix(const FieldCtx& ctx, int n)
    : ctx_(ctx), n_(n), data_(static_cast<size_t>(n) * n, FieldElem(ctx)) {
    if (n < 2) throw WrongDimension("matrices need n >= 2");
}

FMatrix FMatrix::identity(const FieldCtx& ctx, int n) {
    FMatrix m(ctx, n);
    FieldElem one(ctx, Rat(1));
    for (int i = 0; i < n; ++i) m.at(i, i) = one;
    return m;
}

FMatrix FMatrix::operator*(const FMatrix& o) const {
    if (n_ != o.n_ || ctx_ != o.ctx_) throw DimensionMismatch();
    FMatrix out(ctx_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            FieldElem acc(ctx_);
            for (int k = 0; k < n_; ++k) acc += at(i, k) * o.at(k, j);
            out.at(i, j) = acc;
        }
    return out;
}

Point FMatrix::operator*(const Point& p) const {
    if (p.dim() != n_ || p.ctx() != ctx_) throw DimensionMismatch();
    std::vector<FieldElem> out;
    out.reserve(static_cast<size_t>(n_));
    for (int i = 0; i < n_; ++i) {
        FieldElem acc(ctx_);
        for (int j = 0; j < n_; ++j) acc += at(i, j) * p[j];
        out.push_back(acc);
    }
    return Point(std::move(out));
}

FieldElem FMatrix::det() const {
    // Gaussian elimination with exact division.
    FMatrix work(*this);
    FieldElem det(ctx_, Rat(1));
    for (int col = 0; col < n_; ++col) {
        int pivot = -1;
        for (int row = col; row < n_; ++row)
            if (!work.at(row, col).is_zero()) {
                pivot = row;
                break;
            }
        if (pivot < 0) return FieldElem(ctx_);
        if (pivot != col) {
            for (int j = 0; j < n_; ++j) std::swap(work.at(pivot, j), work.at(col, j));
            det = -det;
        }
        det *= work.at(col, col);
        FieldElem inv = work.at(col, col).inv();
        for (int row = col + 1; row < n_; ++row) {
            if (work.at(row, col).is_zero()) continue;
            FieldElem factor = work.at(row, col) * inv;
            for (int j = col; j < n_; ++j)
                work.at(row, j) -= factor * work.at(col, j);
        }
    }
    return det;
}

FMatrix FMatrix::inverse() const {
    FMatrix work(*this);
    FMatrix inv = identity(ctx_, n_);
    for (int col = 0; col < n_; ++col) {
        int pivot = -1;
        for (int row = col; row < n_; ++row)
            if (!work.at(row, col).is_zero()) {
                pivot = row;
                break;
            }
        if (pivot < 0) throw SingularMatrix();
        if (pivot != col)
            for (int j = 0; j < n_; ++j) {
                std::swap(work.at(pivot, j), work.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        FieldElem scale = work.at(col, col).inv();
        for (int j = 0; j < n_; ++j) {
            work.at(col, j) *= scale;
            inv.at(col, j) *= scale;
        }
        for (int row = 0; row < n_; ++row) {
            if (row == col || work.at(row, col).is_zero()) continue;
            FieldElem factor = work.at(row, col);
            for (int j = 0; j < n_; ++j) {
                work.at(row, j) -= factor * work.at(col, j);
                inv.at(row, j) -= factor * inv.at(col, j);
            }
        }
    }
    return inv;
}

namespace {

#ifndef NDEBUG
/// Fixed-sample verification of the declared effect; test builds refuse to
/// construct a map whose declaration lies.
void verify_effect_on_samples(const FMatrix& m, const Point& off, RelationEffect effect) {
    if (effect == RelationEffect::Custom) return;
    const FieldCtx& ctx = m.ctx();
    int n = m.n();
    auto mk = [&](long t, long x) {
        Point p = Point::origin(ctx, n);
        p[0] = FieldElem(ctx, Rat(t));
        p[1] = FieldElem(ctx, Rat(x));
        return p;
    };
    const std::pair<Point, Point> samples[] = {
        {mk(0, 0), mk(1, 0)}, {mk(0, 0), mk(1, 1)},  {mk(0, 0), mk(0, 1)},
        {mk(2, 1), mk(2, 1)}, {mk(-1, 3), mk(2, 0)}, {mk(1, -2), mk(-1, -2)},
    };
    for (const auto& [p, q] : samples) {
        RelKind before = relate(p, q);
        RelKind after = relate(m * p + off, m * q + off);
        bool ok = true;
        switch (effect) {
            case RelationEffect::PreservesAll:
                ok = before == after;
                break;
            case RelationEffect::PreservesLightSwapsTimeSpace:
                ok = after == (before == RelKind::Timelike    ? RelKind::Spacelike
                               : before == RelKind::Spacelike ? RelKind::Timelike
                                                              : before);
                break;
            case RelationEffect::PreservesLightOnly:
                ok = (before == RelKind::Lightlike) == (after == RelKind::Lightlike) &&
                     (before == RelKind::Equal) == (after == RelKind::Equal);
                break;
            case RelationEffect::Custom:
                break;
        }
        if (!ok) throw Error("declared relation effect violated on a sample pair");
    }
}
#endif

} // namespace

AffineMap::AffineMap(FMatrix matrix, Point offset, RelationEffect effect)
    : matrix_(std::move(matrix)), offset_(std::move(offset)), effect_(effect) {
    if (offset_.dim() != matrix_.n() || offset_.ctx() != matrix_.ctx())
        throw DimensionMismatch();
    if (matrix_.det().is_zero()) throw SingularMatrix();
#ifndef NDEBUG
    verify_effect_on_samples(matrix_, offset_, effect_);
#endif
}

Point AffineMap::apply(const Point& p) const {
    return matrix_ * p + offset_;
}

AffineMap AffineMap::inverse() const {
    FMatrix minv = matrix_.inverse();
    return AffineMap(minv, -(minv * offset_), effect_);
}

namespace {

RelationEffect compose_effects(RelationEffect a, RelationEffect b) {
    using E = RelationEffect;
    if (a == E::Custom || b == E::Custom) return E::Custom;
    if (a == E::PreservesLightOnly || b == E::PreservesLightOnly) return E::PreservesLightOnly;
    bool swap_a = a == E::PreservesLightSwapsTimeSpace;
    bool swap_b = b == E::PreservesLightSwapsTimeSpace;
    return (swap_a != swap_b) ? E::PreservesLightSwapsTimeSpace : E::PreservesAll;
}

} // namespace

AffineMap AffineMap::then(const AffineMap& next) const {
    // next(this(x)) = next.M * this.M * x + (next.M * this.off + next.off)
    FMatrix m = next.matrix_ * matrix_;
    Point off = next.matrix_ * offset_ + next.offset_;
    return AffineMap(std::move(m), std::move(off), compose_effects(effect_, next.effect_));
}

std::string affine_to_json(const AffineMap& map) {
    nlohmann::json j;
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < map.dim(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int k = 0; k < map.dim(); ++k) row.push_back(map.matrix().at(i, k).to_string());
        rows.push_back(row);
    }
    j["matrix"] = rows;
    j["offset"] = map.offset().to_string();
    j["effect"] = relation_effect_name(map.effect());
    return j.dump();
}

} // namespace minkdef
