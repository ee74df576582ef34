#include "minkdef/point.hpp"

namespace minkdef {

const char* rel_kind_name(RelKind k) {
    switch (k) {
        case RelKind::Equal: return "Equal";
        case RelKind::Timelike: return "Timelike";
        case RelKind::Lightlike: return "Lightlike";
        case RelKind::Spacelike: return "Spacelike";
    }
    return "?";
}

std::string RelSet::to_string() const {
    using namespace rels;
    if (*this == eq) return "=";
    if (*this == ne) return "!=";
    if (*this == tau) return "tau";
    if (*this == lam) return "lam";
    if (*this == sig) return "sig";
    if (*this == ntau) return "ntau";
    if (*this == nlam) return "nlam";
    if (*this == nsig) return "nsig";
    if (*this == ntau_ne) return "ntau!";
    if (*this == nlam_ne) return "nlam!";
    if (*this == nsig_ne) return "nsig!";
    std::string out = "[";
    if (contains(RelKind::Equal)) out += 'E';
    if (contains(RelKind::Timelike)) out += 'T';
    if (contains(RelKind::Lightlike)) out += 'L';
    if (contains(RelKind::Spacelike)) out += 'S';
    out += ']';
    return out;
}

Point::Point(std::vector<FieldElem> coords) : coords_(std::move(coords)) {
    if (coords_.size() < 2) throw WrongDimension("points need dimension >= 2");
    for (const auto& c : coords_)
        if (c.ctx() != coords_[0].ctx()) throw ContextMismatch();
}

Point Point::of_rats(const FieldCtx& ctx, const std::vector<Rat>& coords) {
    std::vector<FieldElem> elems;
    elems.reserve(coords.size());
    for (const auto& r : coords) elems.emplace_back(ctx, r);
    return Point(std::move(elems));
}

Point Point::origin(const FieldCtx& ctx, int n) {
    return Point(std::vector<FieldElem>(static_cast<size_t>(n), FieldElem(ctx)));
}

Point Point::operator+(const Point& o) const {
    if (dim() != o.dim()) throw DimensionMismatch();
    std::vector<FieldElem> out;
    out.reserve(coords_.size());
    for (size_t i = 0; i < coords_.size(); ++i) out.push_back(coords_[i] + o.coords_[i]);
    return Point(std::move(out));
}

Point Point::operator-(const Point& o) const {
    if (dim() != o.dim()) throw DimensionMismatch();
    std::vector<FieldElem> out;
    out.reserve(coords_.size());
    for (size_t i = 0; i < coords_.size(); ++i) out.push_back(coords_[i] - o.coords_[i]);
    return Point(std::move(out));
}

Point Point::operator-() const {
    std::vector<FieldElem> out;
    out.reserve(coords_.size());
    for (const auto& c : coords_) out.push_back(-c);
    return Point(std::move(out));
}

Point Point::scaled(const FieldElem& c) const {
    std::vector<FieldElem> out;
    out.reserve(coords_.size());
    for (const auto& x : coords_) out.push_back(x * c);
    return Point(std::move(out));
}

bool Point::operator==(const Point& o) const {
    if (dim() != o.dim()) throw DimensionMismatch();
    for (size_t i = 0; i < coords_.size(); ++i)
        if (coords_[i] != o.coords_[i]) return false;
    return true;
}

std::string Point::to_string() const {
    std::string out = "(";
    for (size_t i = 0; i < coords_.size(); ++i) {
        if (i) out += ",";
        out += coords_[i].to_string();
    }
    out += ")";
    return out;
}

Point Point::parse(const FieldCtx& ctx, const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.size() < 2 || t.front() != '(' || t.back() != ')')
        throw Error("bad point literal: " + text);
    std::vector<FieldElem> coords;
    std::string body = t.substr(1, t.size() - 2);
    size_t start = 0;
    while (start <= body.size()) {
        size_t comma = body.find(',', start);
        std::string piece = body.substr(start, comma == std::string::npos ? comma : comma - start);
        coords.push_back(FieldElem::parse(ctx, piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return Point(std::move(coords));
}

FieldElem mink_form(const Point& p, const Point& q) {
    if (p.dim() != q.dim() || p.ctx() != q.ctx()) throw DimensionMismatch();
    FieldElem dt = p[0] - q[0];
    FieldElem acc = dt * dt;
    for (int i = 1; i < p.dim(); ++i) {
        FieldElem dx = p[i] - q[i];
        acc -= dx * dx;
    }
    return acc;
}

FieldElem mink_form_vec(const Point& v) {
    return mink_form(v, Point::origin(v.ctx(), v.dim()));
}

RelKind relate(const Point& p, const Point& q) {
    if (p.dim() != q.dim() || p.ctx() != q.ctx()) throw DimensionMismatch();
    if (p == q) return RelKind::Equal;
    int s = mink_form(p, q).sign();
    if (s > 0) return RelKind::Timelike;
    if (s < 0) return RelKind::Spacelike;
    // Vanishing interval with p != q forces p0 != q0, so this is the
    // strict lightlike relation.
    return RelKind::Lightlike;
}

bool in_future_of(const Point& p, const Point& q, ConeMode mode) {
    RelKind k = relate(p, q);
    if (mode == ConeMode::Timelike)
        return k == RelKind::Timelike && p[0] > q[0];
    return (k == RelKind::Equal || k == RelKind::Timelike || k == RelKind::Lightlike) &&
           p[0] >= q[0];
}

bool in_past_of(const Point& p, const Point& q, ConeMode mode) {
    RelKind k = relate(p, q);
    if (mode == ConeMode::Timelike)
        return k == RelKind::Timelike && p[0] < q[0];
    return (k == RelKind::Equal || k == RelKind::Timelike || k == RelKind::Lightlike) &&
           p[0] <= q[0];
}

bool on_light_cone(const Point& p, const Point& apex) {
    RelKind k = relate(p, apex);
    return k == RelKind::Lightlike || k == RelKind::Equal;
}

bool in_causal_cone(const Point& p, const Point& apex) {
    return relate(p, apex) != RelKind::Spacelike;
}

} // namespace minkdef
