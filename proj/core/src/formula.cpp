#include "minkdef/formula.hpp"

#include <algorithm>
#include <cctype>

namespace minkdef {

// ---------------------------------------------------------------- AST

Formula Formula::atom(std::string lhs, RelSet rel, std::string rhs) {
    Formula f;
    f.kind_ = Kind::Atom;
    f.lhs_ = std::move(lhs);
    f.rhs_ = std::move(rhs);
    f.rel_ = rel;
    return f;
}

Formula Formula::negate(Formula f) {
    Formula out;
    out.kind_ = Kind::Not;
    out.children_.push_back(std::move(f));
    return out;
}

Formula Formula::conj(std::vector<Formula> children) {
    if (children.size() == 1) return std::move(children[0]);
    Formula out;
    out.kind_ = Kind::And;
    for (auto& c : children) {
        if (c.kind_ == Kind::And)
            for (auto& inner : c.children_) out.children_.push_back(std::move(inner));
        else
            out.children_.push_back(std::move(c));
    }
    return out;
}

Formula Formula::disj(std::vector<Formula> children) {
    if (children.size() == 1) return std::move(children[0]);
    Formula out;
    out.kind_ = Kind::Or;
    for (auto& c : children) {
        if (c.kind_ == Kind::Or)
            for (auto& inner : c.children_) out.children_.push_back(std::move(inner));
        else
            out.children_.push_back(std::move(c));
    }
    return out;
}

Formula Formula::exists(std::string var, Formula body) {
    Formula out;
    out.kind_ = Kind::Exists;
    out.var_ = std::move(var);
    out.children_.push_back(std::move(body));
    return out;
}

Formula Formula::forall(std::string var, Formula body) {
    Formula out;
    out.kind_ = Kind::Forall;
    out.var_ = std::move(var);
    out.children_.push_back(std::move(body));
    return out;
}

bool Formula::operator==(const Formula& o) const {
    if (kind_ != o.kind_) return false;
    switch (kind_) {
        case Kind::Atom:
            return lhs_ == o.lhs_ && rhs_ == o.rhs_ && rel_ == o.rel_;
        case Kind::Exists:
        case Kind::Forall:
            if (var_ != o.var_) return false;
            [[fallthrough]];
        default:
            return children_ == o.children_;
    }
}

bool Formula::is_quantifier_free() const {
    if (kind_ == Kind::Exists || kind_ == Kind::Forall) return false;
    for (const auto& c : children_)
        if (!c.is_quantifier_free()) return false;
    return true;
}

namespace {

void collect_vars(const Formula& f, std::vector<std::string>& out,
                  std::vector<std::string>& bound, bool frees_only) {
    auto add = [&](const std::string& v) {
        if (frees_only &&
            std::find(bound.begin(), bound.end(), v) != bound.end())
            return;
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    };
    switch (f.kind()) {
        case Formula::Kind::Atom:
            add(f.lhs());
            add(f.rhs());
            break;
        case Formula::Kind::Exists:
        case Formula::Kind::Forall: {
            if (!frees_only) {
                if (std::find(out.begin(), out.end(), f.var()) == out.end())
                    out.push_back(f.var());
                collect_vars(f.child(), out, bound, frees_only);
            } else {
                bound.push_back(f.var());
                collect_vars(f.child(), out, bound, frees_only);
                bound.pop_back();
            }
            break;
        }
        default:
            for (const auto& c : f.children()) collect_vars(c, out, bound, frees_only);
    }
}

} // namespace

std::vector<std::string> Formula::free_vars() const {
    std::vector<std::string> out, bound;
    collect_vars(*this, out, bound, true);
    return out;
}

std::vector<std::string> Formula::all_vars() const {
    std::vector<std::string> out, bound;
    collect_vars(*this, out, bound, false);
    return out;
}

int count_variables(const Formula& f) {
    return static_cast<int>(f.all_vars().size());
}

// ---------------------------------------------------------------- prefix

namespace {

using Blocks = std::vector<PrefixClass::Block>;

void append_block(Blocks& blocks, bool universal, int count) {
    if (count == 0) return;
    if (!blocks.empty() && blocks.back().universal == universal)
        blocks.back().count += count;
    else
        blocks.push_back({universal, count});
}

/// Minimal-alternation shuffle of two coalesced block sequences. Any
/// interleaving that respects both orders is a legal prenex pull, so we
/// pick one with the fewest alternations by dynamic programming.
Blocks merge_blocks(const Blocks& a, const Blocks& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    size_t na = a.size(), nb = b.size();
    // state: (i, j, last) with last in {0 = none, 1 = E, 2 = A}
    constexpr int NONE = 0;
    auto enc = [](bool universal) { return universal ? 2 : 1; };
    std::vector<int> cost((na + 1) * (nb + 1) * 3, -1);
    std::vector<int> choice((na + 1) * (nb + 1) * 3, 0); // 1 = take a, 2 = take b
    auto idx = [&](size_t i, size_t j, int last) {
        return (i * (nb + 1) + j) * 3 + last;
    };
    // backwards induction
    for (size_t i = na + 1; i-- > 0;)
        for (size_t j = nb + 1; j-- > 0;)
            for (int last = 0; last < 3; ++last) {
                if (i == na && j == nb) {
                    cost[idx(i, j, last)] = 0;
                    continue;
                }
                int best = -1, pick = 0;
                if (i < na) {
                    int step = (enc(a[i].universal) == last) ? 0 : 1;
                    int rest = cost[idx(i + 1, j, enc(a[i].universal))];
                    if (best < 0 || step + rest < best) {
                        best = step + rest;
                        pick = 1;
                    }
                }
                if (j < nb) {
                    int step = (enc(b[j].universal) == last) ? 0 : 1;
                    int rest = cost[idx(i, j + 1, enc(b[j].universal))];
                    if (best < 0 || step + rest < best) {
                        best = step + rest;
                        pick = 2;
                    }
                }
                cost[idx(i, j, last)] = best;
                choice[idx(i, j, last)] = pick;
            }
    Blocks out;
    size_t i = 0, j = 0;
    int last = NONE;
    while (i < na || j < nb) {
        if (choice[idx(i, j, last)] == 1) {
            append_block(out, a[i].universal, a[i].count);
            last = enc(a[i].universal);
            ++i;
        } else {
            append_block(out, b[j].universal, b[j].count);
            last = enc(b[j].universal);
            ++j;
        }
    }
    return out;
}

Blocks signature(const Formula& f, bool flipped) {
    switch (f.kind()) {
        case Formula::Kind::Atom:
            return {};
        case Formula::Kind::Not:
            return signature(f.child(), !flipped);
        case Formula::Kind::Exists:
        case Formula::Kind::Forall: {
            bool universal = (f.kind() == Formula::Kind::Forall) != flipped;
            Blocks inner = signature(f.child(), flipped);
            Blocks out;
            append_block(out, universal, 1);
            for (const auto& blk : inner) append_block(out, blk.universal, blk.count);
            return out;
        }
        default: {
            Blocks acc;
            for (const auto& c : f.children()) acc = merge_blocks(acc, signature(c, flipped));
            return acc;
        }
    }
}

} // namespace

PrefixClass classify_prefix(const Formula& f) {
    PrefixClass out;
    out.blocks = signature(f, false);
    return out;
}

std::string PrefixClass::to_string() const {
    if (other) return "other";
    if (blocks.empty()) return "QF";
    std::string out;
    for (const auto& b : blocks)
        out += (b.universal ? "A" : "E") + std::to_string(b.count);
    return out;
}

// ---------------------------------------------------------------- eval

bool eval_qf(const Formula& f, const Env& env) {
    switch (f.kind()) {
        case Formula::Kind::Atom: {
            auto px = env.find(f.lhs());
            if (px == env.end()) throw UnboundVariable(f.lhs());
            auto py = env.find(f.rhs());
            if (py == env.end()) throw UnboundVariable(f.rhs());
            return f.rel().contains(relate(px->second, py->second));
        }
        case Formula::Kind::Not:
            return !eval_qf(f.child(), env);
        case Formula::Kind::And:
            for (const auto& c : f.children())
                if (!eval_qf(c, env)) return false;
            return true;
        case Formula::Kind::Or:
            for (const auto& c : f.children())
                if (eval_qf(c, env)) return true;
            return false;
        default:
            throw Error("eval_qf requires a quantifier-free formula");
    }
}

// ---------------------------------------------------------------- nnf / swap

Formula to_nnf(const Formula& f) {
    switch (f.kind()) {
        case Formula::Kind::Atom:
            return f;
        case Formula::Kind::And:
        case Formula::Kind::Or: {
            std::vector<Formula> cs;
            cs.reserve(f.children().size());
            for (const auto& c : f.children()) cs.push_back(to_nnf(c));
            return f.kind() == Formula::Kind::And ? Formula::conj(std::move(cs))
                                                  : Formula::disj(std::move(cs));
        }
        case Formula::Kind::Exists:
            return Formula::exists(f.var(), to_nnf(f.child()));
        case Formula::Kind::Forall:
            return Formula::forall(f.var(), to_nnf(f.child()));
        case Formula::Kind::Not: {
            const Formula& g = f.child();
            switch (g.kind()) {
                case Formula::Kind::Atom:
                    // The four kinds partition all pairs, so negating an
                    // atom complements its mask.
                    return Formula::atom(g.lhs(), ~g.rel(), g.rhs());
                case Formula::Kind::Not:
                    return to_nnf(g.child());
                case Formula::Kind::And:
                case Formula::Kind::Or: {
                    std::vector<Formula> cs;
                    cs.reserve(g.children().size());
                    for (const auto& c : g.children())
                        cs.push_back(to_nnf(Formula::negate(c)));
                    return g.kind() == Formula::Kind::And ? Formula::disj(std::move(cs))
                                                          : Formula::conj(std::move(cs));
                }
                case Formula::Kind::Exists:
                    return Formula::forall(g.var(), to_nnf(Formula::negate(g.child())));
                case Formula::Kind::Forall:
                    return Formula::exists(g.var(), to_nnf(Formula::negate(g.child())));
            }
        }
    }
    throw Error("unreachable formula kind");
}

Formula swap_relations(const Formula& f, RelKind a, RelKind b) {
    switch (f.kind()) {
        case Formula::Kind::Atom: {
            RelSet r = f.rel();
            bool has_a = r.contains(a), has_b = r.contains(b);
            RelSet out = r;
            if (has_a != has_b) {
                out = (out & ~RelSet(a)) & ~RelSet(b);
                if (has_a) out = out | RelSet(b);
                if (has_b) out = out | RelSet(a);
            }
            return Formula::atom(f.lhs(), out, f.rhs());
        }
        case Formula::Kind::Not:
            return Formula::negate(swap_relations(f.child(), a, b));
        case Formula::Kind::Exists:
            return Formula::exists(f.var(), swap_relations(f.child(), a, b));
        case Formula::Kind::Forall:
            return Formula::forall(f.var(), swap_relations(f.child(), a, b));
        default: {
            std::vector<Formula> cs;
            cs.reserve(f.children().size());
            for (const auto& c : f.children()) cs.push_back(swap_relations(c, a, b));
            return f.kind() == Formula::Kind::And ? Formula::conj(std::move(cs))
                                                  : Formula::disj(std::move(cs));
        }
    }
}

// ---------------------------------------------------------------- parser

namespace {

struct Token {
    enum Type { Ident, RelLetter, Neq, Eq, AndOp, OrOp, NotOp, LParen, RParen, Comma, BracketSet, End } type;
    std::string text;
    RelSet rel;  // for RelLetter / BracketSet / Neq / Eq
    size_t pos;
};

bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

RelSet named_rel(const std::string& id) {
    using namespace rels;
    if (id == "tau") return tau;
    if (id == "lam") return lam;
    if (id == "sig") return sig;
    if (id == "eq") return eq;
    if (id == "ntau") return ntau;
    if (id == "nlam") return nlam;
    if (id == "nsig") return nsig;
    if (id == "neq") return ne;
    return RelSet::none();
}

class Lexer {
  public:
    explicit Lexer(const std::string& text) : text_(text) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_ws();
            if (pos_ >= text_.size()) break;
            size_t start = pos_;
            char c = text_[pos_];
            if (c == '!' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '=') {
                pos_ += 2;
                out.push_back({Token::Neq, "!=", rels::ne, start});
            } else if (c == '!') {
                ++pos_;
                out.push_back({Token::NotOp, "!", {}, start});
            } else if (c == '=') {
                ++pos_;
                out.push_back({Token::Eq, "=", rels::eq, start});
            } else if (c == '&') {
                ++pos_;
                out.push_back({Token::AndOp, "&", {}, start});
            } else if (c == '|') {
                ++pos_;
                out.push_back({Token::OrOp, "|", {}, start});
            } else if (c == '(') {
                ++pos_;
                out.push_back({Token::LParen, "(", {}, start});
            } else if (c == ')') {
                ++pos_;
                out.push_back({Token::RParen, ")", {}, start});
            } else if (c == ',') {
                ++pos_;
                out.push_back({Token::Comma, ",", {}, start});
            } else if (c == '[') {
                out.push_back(lex_bracket_set());
            } else if (c == '~') {
                ++pos_;
                out.push_back(lex_rel_letter(true, start));
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                out.push_back(lex_word());
            } else {
                throw SyntaxError("unexpected character '" + std::string(1, c) + "'", start);
            }
        }
        out.push_back({Token::End, "", {}, text_.size()});
        return out;
    }

  private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    Token lex_bracket_set() {
        size_t start = pos_;
        ++pos_; // '['
        RelSet set;
        while (pos_ < text_.size() && text_[pos_] != ']') {
            switch (text_[pos_]) {
                case 'E': set = set | rels::eq; break;
                case 'T': set = set | rels::tau; break;
                case 'L': set = set | rels::lam; break;
                case 'S': set = set | rels::sig; break;
                default:
                    throw SyntaxError("bad relation letter in bracket set", pos_);
            }
            ++pos_;
        }
        if (pos_ >= text_.size()) throw SyntaxError("unterminated bracket set", start);
        ++pos_; // ']'
        return {Token::BracketSet, "[]", set, start};
    }

    Token lex_rel_letter(bool complemented, size_t start) {
        if (pos_ >= text_.size()) throw SyntaxError("dangling '~'", start);
        RelSet base;
        switch (text_[pos_]) {
            case 'T': base = rels::tau; break;
            case 'L': base = rels::lam; break;
            case 'S': base = rels::sig; break;
            case 'E': base = rels::eq; break;
            default:
                throw SyntaxError("bad relation letter after '~'", pos_);
        }
        ++pos_;
        RelSet set = complemented ? ~base : base;
        if (pos_ < text_.size() && text_[pos_] == '!' &&
            !(pos_ + 1 < text_.size() && text_[pos_ + 1] == '=')) {
            set = set & rels::ne;
            ++pos_;
        }
        return {Token::RelLetter, "", set, start};
    }

    Token lex_word() {
        size_t start = pos_;
        while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
        std::string word = text_.substr(start, pos_ - start);
        if (word.size() == 1 && (word[0] == 'T' || word[0] == 'L' || word[0] == 'S' || word[0] == 'E')) {
            pos_ = start;
            return lex_rel_letter(false, start);
        }
        RelSet named = named_rel(word);
        if (!named.empty() || word == "eq") {
            RelSet set = named;
            // strict-complement marker: ntau!, nlam!, nsig!
            if ((word == "ntau" || word == "nlam" || word == "nsig") && pos_ < text_.size() &&
                text_[pos_] == '!' && !(pos_ + 1 < text_.size() && text_[pos_ + 1] == '=')) {
                set = set & rels::ne;
                ++pos_;
            }
            return {Token::RelLetter, word, set, start};
        }
        return {Token::Ident, word, {}, start};
    }

    const std::string& text_;
    size_t pos_ = 0;
};

class Parser {
  public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    Formula parse() {
        Formula f = parse_or();
        expect(Token::End, "end of input");
        return f;
    }

  private:
    const Token& peek(size_t ahead = 0) const {
        size_t i = pos_ + ahead;
        return i < toks_.size() ? toks_[i] : toks_.back();
    }
    const Token& advance() { return toks_[pos_++]; }
    bool accept(Token::Type t) {
        if (peek().type == t) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(Token::Type t, const std::string& what) {
        if (!accept(t)) throw SyntaxError("expected " + what, peek().pos);
    }

    Formula parse_or() {
        std::vector<Formula> parts{parse_and()};
        while (accept(Token::OrOp)) parts.push_back(parse_and());
        return Formula::disj(std::move(parts));
    }

    Formula parse_and() {
        std::vector<Formula> parts{parse_unary()};
        while (accept(Token::AndOp)) parts.push_back(parse_unary());
        return Formula::conj(std::move(parts));
    }

    Formula parse_unary() {
        const Token& t = peek();
        if (t.type == Token::NotOp) {
            advance();
            Formula inner = parse_unary();
            // Negated atoms stay single atoms with the complement mask.
            if (inner.kind() == Formula::Kind::Atom)
                return Formula::atom(inner.lhs(), ~inner.rel(), inner.rhs());
            return Formula::negate(std::move(inner));
        }
        if (t.type == Token::LParen) {
            advance();
            Formula inner = parse_or();
            expect(Token::RParen, "')'");
            return inner;
        }
        if (t.type == Token::Ident && (t.text == "exists" || t.text == "forall")) {
            bool is_exists = t.text == "exists";
            advance();
            const Token& v = peek();
            if (v.type != Token::Ident) throw SyntaxError("expected variable name", v.pos);
            std::string var = v.text;
            advance();
            expect(Token::LParen, "'(' after quantifier variable");
            Formula body = parse_or();
            expect(Token::RParen, "')'");
            return is_exists ? Formula::exists(std::move(var), std::move(body))
                             : Formula::forall(std::move(var), std::move(body));
        }
        if (t.type == Token::Ident) return parse_chain();
        throw SyntaxError("expected a formula", t.pos);
    }

    bool is_rel_token(const Token& t) const {
        return t.type == Token::RelLetter || t.type == Token::BracketSet ||
               t.type == Token::Eq || t.type == Token::Neq;
    }

    // chain: VAR rel+ VAR+ expands left-to-right, e.g. "x T,S y z" to
    // x T y & x S z.
    Formula parse_chain() {
        const Token& first = advance();
        std::string lhs = first.text;
        std::vector<RelSet> labels;
        while (is_rel_token(peek())) {
            labels.push_back(advance().rel);
            accept(Token::Comma);
        }
        if (labels.empty())
            throw SyntaxError("expected a relation after variable '" + lhs + "'", peek().pos);
        std::vector<std::string> vars;
        while (peek().type == Token::Ident && vars.size() < labels.size()) {
            vars.push_back(advance().text);
        }
        if (vars.size() != labels.size())
            throw SyntaxError("chained atom needs one variable per relation", peek().pos);
        std::vector<Formula> atoms;
        atoms.reserve(labels.size());
        for (size_t i = 0; i < labels.size(); ++i)
            atoms.push_back(Formula::atom(lhs, labels[i], vars[i]));
        return Formula::conj(std::move(atoms));
    }

    std::vector<Token> toks_;
    size_t pos_ = 0;
};

} // namespace

Formula parse_formula(const std::string& text) {
    return Parser(Lexer(text).run()).parse();
}

// ---------------------------------------------------------------- printer

namespace {

std::string rel_token(RelSet r) {
    using namespace rels;
    if (r == eq) return "=";
    if (r == ne) return "!=";
    return r.to_string();
}

void print_into(const Formula& f, std::string& out, int parent_prec) {
    // precedence: Or = 1, And = 2, unary = 3
    switch (f.kind()) {
        case Formula::Kind::Atom:
            out += f.lhs() + " " + rel_token(f.rel()) + " " + f.rhs();
            break;
        case Formula::Kind::Not:
            out += "!(";
            print_into(f.child(), out, 0);
            out += ")";
            break;
        case Formula::Kind::Exists:
        case Formula::Kind::Forall:
            out += (f.kind() == Formula::Kind::Exists ? "exists " : "forall ") + f.var() + " (";
            print_into(f.child(), out, 0);
            out += ")";
            break;
        case Formula::Kind::And: {
            bool need = parent_prec > 2;
            if (need) out += "(";
            for (size_t i = 0; i < f.children().size(); ++i) {
                if (i) out += " & ";
                print_into(f.children()[i], out, 3);
            }
            if (need) out += ")";
            break;
        }
        case Formula::Kind::Or: {
            bool need = parent_prec > 1;
            if (need) out += "(";
            for (size_t i = 0; i < f.children().size(); ++i) {
                if (i) out += " | ";
                print_into(f.children()[i], out, 2);
            }
            if (need) out += ")";
            break;
        }
    }
}

} // namespace

std::string print_formula(const Formula& f) {
    std::string out;
    print_into(f, out, 0);
    return out;
}

} // namespace minkdef
