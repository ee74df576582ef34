#pragma once

#include "minkdef/errors.hpp"
#include "minkdef/rational.hpp"

#include <optional>
#include <string>

namespace minkdef {

enum class FieldKind { Rationals, QuadExt };

/// Arithmetic context: either Q, or a real quadratic extension Q(sqrt(d))
/// with d normalized to its square-free part at construction.
class FieldCtx {
  public:
    static FieldCtx rationals() { return FieldCtx(FieldKind::Rationals, 0); }
    static FieldCtx quad_ext(const Int& d);

    FieldKind kind() const { return kind_; }
    bool is_quad() const { return kind_ == FieldKind::QuadExt; }
    const Int& d() const { return d_; }

    bool operator==(const FieldCtx& o) const { return kind_ == o.kind_ && d_ == o.d_; }
    bool operator!=(const FieldCtx& o) const { return !(*this == o); }

    std::string to_string() const;
    /// Accepts "Q" or "Q(rtD)" with a positive integer D.
    static FieldCtx parse(const std::string& text);

  private:
    FieldCtx(FieldKind kind, Int d) : kind_(kind), d_(std::move(d)) {}
    FieldKind kind_;
    Int d_;
};

/// Exact element a + b*sqrt(d) of the current context (b = 0 over Q).
/// Immutable value type; all predicates on it are decidable.
class FieldElem {
  public:
    FieldElem() : ctx_(FieldCtx::rationals()), a_(0), b_(0) {}
    explicit FieldElem(const FieldCtx& ctx, Rat a = Rat(0), Rat b = Rat(0));

    const FieldCtx& ctx() const { return ctx_; }
    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    FieldElem operator-() const { return FieldElem(ctx_, -a_, -b_); }
    FieldElem operator+(const FieldElem& y) const;
    FieldElem operator-(const FieldElem& y) const;
    FieldElem operator*(const FieldElem& y) const;
    FieldElem operator/(const FieldElem& y) const { return *this * y.inv(); }
    FieldElem& operator+=(const FieldElem& y) { return *this = *this + y; }
    FieldElem& operator-=(const FieldElem& y) { return *this = *this - y; }
    FieldElem& operator*=(const FieldElem& y) { return *this = *this * y; }

    /// Multiplicative inverse; DivisionByZero on 0.
    FieldElem inv() const;

    bool operator==(const FieldElem& y) const;
    bool operator!=(const FieldElem& y) const { return !(*this == y); }
    bool operator<(const FieldElem& y) const { return (*this - y).sign() < 0; }
    bool operator<=(const FieldElem& y) const { return (*this - y).sign() <= 0; }
    bool operator>(const FieldElem& y) const { return y < *this; }
    bool operator>=(const FieldElem& y) const { return y <= *this; }

    /// Sign of a + b*sqrt(d) as a real number: -1, 0, +1.
    int sign() const;

    FieldElem square() const { return *this * *this; }

    std::string to_string() const;
    static FieldElem parse(const FieldCtx& ctx, const std::string& text);

  private:
    void require_same_ctx(const FieldElem& y) const {
        if (ctx_ != y.ctx_) throw ContextMismatch();
    }
    FieldCtx ctx_;
    Rat a_, b_;
};

/// Exact square root inside the current field, or nullopt when no
/// representative exists (the caller may retry in a larger context).
/// Throws NegativeRadicand when sign(x) < 0. The returned root is >= 0.
std::optional<FieldElem> sqrt_exact(const FieldElem& x);

/// The order-breaking ring automorphism a + b*sqrt(d) -> a - b*sqrt(d).
/// ContextMismatch over plain Q.
FieldElem conjugate(const FieldElem& x);

/// Square-free integers d such that adjoining sqrt(d) would make sqrt(x)
/// exist; empty when x is already a square in Q. Only meaningful for
/// rational x (used to suggest a context after NotASquareError).
std::optional<Int> extension_needed_for_sqrt(const FieldElem& x);

} // namespace minkdef
