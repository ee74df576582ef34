#include "minkdef/field.hpp"

#include <cctype>

namespace minkdef {

std::optional<Int> sqrt_int_exact(const Int& n) {
    if (n < 0) return std::nullopt;
    if (!mpz_perfect_square_p(n.get_mpz_t())) return std::nullopt;
    Int root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    return root;
}

std::optional<Rat> sqrt_rat_exact(const Rat& x) {
    if (x < 0) return std::nullopt;
    auto num = sqrt_int_exact(x.get_num());
    if (!num) return std::nullopt;
    auto den = sqrt_int_exact(x.get_den());
    if (!den) return std::nullopt;
    Rat r(*num, *den);
    r.canonicalize();
    return r;
}

SquareFreeSplit squarefree_split(const Int& n) {
    Int rest = n;
    Int square(1);
    Int p(2);
    // Trial division; radicands at desk scale are tiny.
    while (p * p <= rest && p < 100000) {
        while (rest % (p * p) == 0) {
            rest /= p * p;
            square *= p;
        }
        p += (p == 2) ? 1 : 2;
    }
    if (auto r = sqrt_int_exact(rest)) {
        square *= *r;
        rest = 1;
    }
    return SquareFreeSplit{square, rest};
}

Int squarefree_kernel(const Rat& x) {
    // sqrt(p/q) = sqrt(p*q)/q, so the kernel is the square-free part of p*q.
    Int pq = x.get_num() * x.get_den();
    return squarefree_split(pq).free_part;
}

FieldCtx FieldCtx::quad_ext(const Int& d) {
    if (d < 2) throw Error("quadratic extension needs d >= 2");
    Int free = squarefree_split(d).free_part;
    if (free < 2) throw Error("d must not be a perfect square");
    return FieldCtx(FieldKind::QuadExt, free);
}

std::string FieldCtx::to_string() const {
    if (kind_ == FieldKind::Rationals) return "Q";
    return "Q(rt" + d_.get_str() + ")";
}

FieldCtx FieldCtx::parse(const std::string& text) {
    if (text == "Q") return rationals();
    if (text.rfind("Q(rt", 0) == 0 && text.size() > 5 && text.back() == ')') {
        std::string digits = text.substr(4, text.size() - 5);
        for (char c : digits)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw Error("bad field literal: " + text);
        return quad_ext(Int(digits));
    }
    throw Error("bad field literal: " + text + " (expected Q or Q(rtD))");
}

FieldElem::FieldElem(const FieldCtx& ctx, Rat a, Rat b)
    : ctx_(ctx), a_(std::move(a)), b_(std::move(b)) {
    if (!ctx_.is_quad() && b_ != 0)
        throw ContextMismatch();
}

FieldElem FieldElem::operator+(const FieldElem& y) const {
    require_same_ctx(y);
    return FieldElem(ctx_, a_ + y.a_, b_ + y.b_);
}

FieldElem FieldElem::operator-(const FieldElem& y) const {
    require_same_ctx(y);
    return FieldElem(ctx_, a_ - y.a_, b_ - y.b_);
}

FieldElem FieldElem::operator*(const FieldElem& y) const {
    require_same_ctx(y);
    if (!ctx_.is_quad()) return FieldElem(ctx_, a_ * y.a_);
    Rat d(ctx_.d());
    return FieldElem(ctx_, a_ * y.a_ + b_ * y.b_ * d, a_ * y.b_ + b_ * y.a_);
}

FieldElem FieldElem::inv() const {
    if (is_zero()) throw DivisionByZero();
    if (!ctx_.is_quad()) return FieldElem(ctx_, Rat(1) / a_);
    // 1/(a+b*rt) = (a-b*rt)/(a^2-b^2 d); the norm is nonzero because d is
    // not a rational square.
    Rat norm = a_ * a_ - b_ * b_ * Rat(ctx_.d());
    return FieldElem(ctx_, a_ / norm, -b_ / norm);
}

bool FieldElem::operator==(const FieldElem& y) const {
    require_same_ctx(y);
    return a_ == y.a_ && b_ == y.b_;
}

int FieldElem::sign() const {
    if (b_ == 0) return sgn(a_);
    if (a_ == 0) return sgn(b_);
    int sa = sgn(a_), sb = sgn(b_);
    if (sa == sb) return sa;
    // Mixed signs: compare a^2 against b^2 d; equality cannot happen
    // because d is square-free and >= 2.
    Rat lhs = a_ * a_;
    Rat rhs = b_ * b_ * Rat(ctx_.d());
    return lhs > rhs ? sa : sb;
}

std::string rat_to_string(const Rat& x) {
    return x.get_str();
}

Rat rat_from_string(const std::string& text) {
    std::string t = text;
    if (!t.empty() && t[0] == '+') t = t.substr(1);
    if (t.empty()) throw Error("empty rational literal");
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), t.c_str(), 10) != 0 || (t.find('/') != std::string::npos && t.back() == '/'))
        throw Error("bad rational literal: " + text);
    if (r.get_den() == 0) throw DivisionByZero();
    r.canonicalize();
    return r;
}

std::string FieldElem::to_string() const {
    if (b_ == 0) return rat_to_string(a_);
    std::string out = rat_to_string(a_);
    if (b_ > 0)
        out += "+" + rat_to_string(b_) + "*rt";
    else
        out += "-" + rat_to_string(-b_) + "*rt";
    return out;
}

namespace {

// Splits "a+b*rt" / "a-b*rt" / "b*rt" / "a" at the sign that separates the
// rational part from the root part. The separator is a '+'/'-' that is not
// the leading sign and not immediately after '/'.
size_t find_term_split(const std::string& t) {
    for (size_t i = 1; i < t.size(); ++i) {
        if ((t[i] == '+' || t[i] == '-') && t[i - 1] != '/')
            return i;
    }
    return std::string::npos;
}

} // namespace

FieldElem FieldElem::parse(const FieldCtx& ctx, const std::string& raw) {
    std::string t;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw Error("empty field literal");

    auto parse_root_coeff = [&](const std::string& part) -> Rat {
        // "b*rt", "-rt", "rt"
        std::string body = part;
        bool neg = false;
        if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
            neg = body[0] == '-';
            body = body.substr(1);
        }
        if (body == "rt") return neg ? Rat(-1) : Rat(1);
        size_t star = body.rfind("*rt");
        if (star == std::string::npos || star + 3 != body.size())
            throw Error("bad field literal: " + part);
        Rat b = rat_from_string(body.substr(0, star));
        return neg ? -b : b;
    };

    if (t.find("rt") == std::string::npos)
        return FieldElem(ctx, rat_from_string(t));

    if (!ctx.is_quad())
        throw ContextMismatch();

    size_t split = find_term_split(t);
    if (split == std::string::npos || t.find("rt") < split) {
        // Pure root term.
        return FieldElem(ctx, Rat(0), parse_root_coeff(t));
    }
    Rat a = rat_from_string(t.substr(0, split));
    Rat b = parse_root_coeff(t.substr(split));
    return FieldElem(ctx, std::move(a), std::move(b));
}

std::optional<FieldElem> sqrt_exact(const FieldElem& x) {
    if (x.sign() < 0) throw NegativeRadicand(x.to_string());
    const FieldCtx& ctx = x.ctx();
    if (x.is_zero()) return FieldElem(ctx);

    if (!ctx.is_quad()) {
        auto r = sqrt_rat_exact(x.a());
        if (!r) return std::nullopt;
        return FieldElem(ctx, *r);
    }

    Rat d(ctx.d());
    if (x.is_rational()) {
        if (auto r = sqrt_rat_exact(x.a()))
            return FieldElem(ctx, *r);
        // a = q^2 d gives sqrt(a) = q*rt.
        if (auto q = sqrt_rat_exact(x.a() / d)) {
            FieldElem root(ctx, Rat(0), *q);
            return root.sign() >= 0 ? root : -root;
        }
        return std::nullopt;
    }

    // Solve (p + q*rt)^2 = a + b*rt: p^2 + q^2 d = a and 2pq = b.
    // Substituting q = b/(2p) gives p^2 = (a +- sqrt(a^2 - b^2 d)) / 2.
    auto norm_root = sqrt_rat_exact(x.a() * x.a() - x.b() * x.b() * d);
    if (!norm_root) return std::nullopt;
    for (int pick = 0; pick < 2; ++pick) {
        Rat p2 = (x.a() + (pick == 0 ? *norm_root : -*norm_root)) / 2;
        auto p = sqrt_rat_exact(p2);
        if (!p || *p == 0) continue;
        Rat q = x.b() / (2 * *p);
        FieldElem root(ctx, *p, q);
        if (root.square() == x)
            return root.sign() >= 0 ? root : -root;
    }
    return std::nullopt;
}

FieldElem conjugate(const FieldElem& x) {
    if (!x.ctx().is_quad()) throw ContextMismatch();
    return FieldElem(x.ctx(), x.a(), -x.b());
}

std::optional<Int> extension_needed_for_sqrt(const FieldElem& x) {
    if (x.sign() < 0 || !x.is_rational()) return std::nullopt;
    Int kernel = squarefree_kernel(x.a());
    if (kernel < 2) return std::nullopt;
    return kernel;
}

} // namespace minkdef
