#pragma once

#include "minkdef/point.hpp"

#include <functional>
#include <string>
#include <vector>

namespace minkdef {

struct ZeroScale : Error {
    ZeroScale() : Error("scaling factor must be nonzero") {}
};
struct SingularMatrix : Error {
    SingularMatrix() : Error("affine map matrix is singular") {}
};
struct OutsideDomain : Error {
    explicit OutsideDomain(const std::string& name)
        : Error("point outside the domain of map " + name) {}
};

/// Declared effect of a map on the causal relations.
enum class RelationEffect {
    PreservesAll,
    PreservesLightSwapsTimeSpace,
    PreservesLightOnly,
    Custom,
};

const char* relation_effect_name(RelationEffect e);

/// Exact n x n matrix over one field context, row-major.
class FMatrix {
  public:
    FMatrix(const FieldCtx& ctx, int n);
    static FMatrix identity(const FieldCtx& ctx, int n);

    int n() const { return n_; }
    const FieldCtx& ctx() const { return ctx_; }
    const FieldElem& at(int i, int j) const { return data_[idx(i, j)]; }
    FieldElem& at(int i, int j) { return data_[idx(i, j)]; }

    FMatrix operator*(const FMatrix& o) const;
    Point operator*(const Point& p) const;
    FieldElem det() const;
    FMatrix inverse() const; // SingularMatrix when det == 0

    bool operator==(const FMatrix& o) const { return n_ == o.n_ && data_ == o.data_; }

  private:
    size_t idx(int i, int j) const { return static_cast<size_t>(i) * n_ + j; }
    FieldCtx ctx_;
    int n_;
    std::vector<FieldElem> data_;
};

/// Invertible affine transformation x -> M x + offset with a declared
/// relation effect. Immutable; composition and inversion are exact.
class AffineMap {
  public:
    AffineMap(FMatrix matrix, Point offset, RelationEffect effect);

    int dim() const { return matrix_.n(); }
    const FieldCtx& ctx() const { return matrix_.ctx(); }
    const FMatrix& matrix() const { return matrix_; }
    const Point& offset() const { return offset_; }
    RelationEffect effect() const { return effect_; }

    Point apply(const Point& p) const;
    Point operator()(const Point& p) const { return apply(p); }

    AffineMap inverse() const;
    /// Composition "apply *this first, then next".
    AffineMap then(const AffineMap& next) const;

    bool operator==(const AffineMap& o) const {
        return matrix_ == o.matrix_ && offset_ == o.offset_;
    }

  private:
    FMatrix matrix_;
    Point offset_;
    RelationEffect effect_;
};

/// A map with an explicit domain predicate, for the transformations that
/// are not affine over the ordered field (hyperbolic inversion, the lifted
/// field conjugation). Evaluation outside the domain throws, never
/// returns a wrong value.
class PartialMap {
  public:
    PartialMap(std::string name,
               std::function<bool(const Point&)> domain,
               std::function<Point(const Point&)> fn)
        : name_(std::move(name)), domain_(std::move(domain)), fn_(std::move(fn)) {}

    const std::string& name() const { return name_; }
    bool in_domain(const Point& p) const { return domain_(p); }
    Point apply(const Point& p) const {
        if (!domain_(p)) throw OutsideDomain(name_);
        return fn_(p);
    }

  private:
    std::string name_;
    std::function<bool(const Point&)> domain_;
    std::function<Point(const Point&)> fn_;
};

/// JSON object {matrix, offset, effect} with field-element literals.
std::string affine_to_json(const AffineMap& map);

} // namespace minkdef
