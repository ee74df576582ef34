#pragma once

#include "minkdef/field.hpp"

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace minkdef {

/// The four mutually exclusive ways an ordered pair of points can relate.
/// Lightlike follows the strict convention: distinct points with vanishing
/// interval (which forces distinct time coordinates).
enum class RelKind : uint8_t { Equal = 0, Timelike = 1, Lightlike = 2, Spacelike = 3 };

const char* rel_kind_name(RelKind k);

/// Subset of the four relation kinds, as a 4-bit mask. The sixteen masks
/// form the Boolean algebra of binary concepts generated by the atoms.
class RelSet {
  public:
    constexpr RelSet() : bits_(0) {}
    constexpr explicit RelSet(uint8_t bits) : bits_(bits & 0xF) {}
    constexpr RelSet(RelKind k) : bits_(static_cast<uint8_t>(1u << static_cast<uint8_t>(k))) {}

    static constexpr RelSet none() { return RelSet(uint8_t(0)); }
    static constexpr RelSet all() { return RelSet(uint8_t(0xF)); }

    constexpr bool contains(RelKind k) const {
        return (bits_ >> static_cast<uint8_t>(k)) & 1u;
    }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr uint8_t bits() const { return bits_; }

    constexpr RelSet operator|(RelSet o) const { return RelSet(uint8_t(bits_ | o.bits_)); }
    constexpr RelSet operator&(RelSet o) const { return RelSet(uint8_t(bits_ & o.bits_)); }
    constexpr RelSet operator~() const { return RelSet(uint8_t(~bits_ & 0xF)); }
    constexpr bool operator==(RelSet o) const { return bits_ == o.bits_; }
    constexpr bool operator!=(RelSet o) const { return bits_ != o.bits_; }
    constexpr bool subset_of(RelSet o) const { return (bits_ & ~o.bits_ & 0xF) == 0; }

    /// Compact text form: named sets where the signature has a symbol,
    /// bracket form [ETLS-subset] otherwise.
    std::string to_string() const;

  private:
    uint8_t bits_;
};

namespace rels {
inline constexpr RelSet eq{RelKind::Equal};
inline constexpr RelSet tau{RelKind::Timelike};
inline constexpr RelSet lam{RelKind::Lightlike};
inline constexpr RelSet sig{RelKind::Spacelike};
inline constexpr RelSet ntau = ~tau;          // complement of timelike
inline constexpr RelSet nlam = ~lam;
inline constexpr RelSet nsig = ~sig;          // the causal relation
inline constexpr RelSet ne = ~eq;             // distinctness
inline constexpr RelSet ntau_ne = ntau & ne;  // lightlike-or-spacelike
inline constexpr RelSet nlam_ne = nlam & ne;
inline constexpr RelSet nsig_ne = nsig & ne;  // timelike-or-lightlike
} // namespace rels

/// n-dimensional coordinate vector over one field context; axis 0 is time.
class Point {
  public:
    Point() = default;
    explicit Point(std::vector<FieldElem> coords);
    /// Convenience: all-rational point in the given context.
    static Point of_rats(const FieldCtx& ctx, const std::vector<Rat>& coords);
    static Point origin(const FieldCtx& ctx, int n);

    int dim() const { return static_cast<int>(coords_.size()); }
    const FieldCtx& ctx() const { return coords_.at(0).ctx(); }
    const FieldElem& operator[](int i) const { return coords_.at(static_cast<size_t>(i)); }
    FieldElem& operator[](int i) { return coords_.at(static_cast<size_t>(i)); }
    const std::vector<FieldElem>& coords() const { return coords_; }

    Point operator+(const Point& o) const;
    Point operator-(const Point& o) const;
    Point operator-() const;
    Point scaled(const FieldElem& c) const;

    bool operator==(const Point& o) const;
    bool operator!=(const Point& o) const { return !(*this == o); }

    std::string to_string() const;
    static Point parse(const FieldCtx& ctx, const std::string& text);

  private:
    std::vector<FieldElem> coords_;
};

/// Minkowski interval (p0-q0)^2 - sum_{i>=1} (pi-qi)^2.
FieldElem mink_form(const Point& p, const Point& q);

/// Squared interval of a single vector against the origin.
FieldElem mink_form_vec(const Point& v);

/// Exactly one RelKind holds for every ordered pair; symmetric in p, q.
RelKind relate(const Point& p, const Point& q);

enum class ConeMode { Timelike, Causal };

bool in_future_of(const Point& p, const Point& q, ConeMode mode);
bool in_past_of(const Point& p, const Point& q, ConeMode mode);

/// Membership in the light cone through `apex` (lightlike related or equal).
bool on_light_cone(const Point& p, const Point& apex);
/// Membership in the causal cone through `apex` (equal, timelike or lightlike).
bool in_causal_cone(const Point& p, const Point& apex);

} // namespace minkdef
