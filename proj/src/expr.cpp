#include "vpart/expr.hpp"

#include <algorithm>
#include <cctype>

namespace vpart {

ExprPtr VagueExpr::bottom() { return ExprPtr(new VagueExpr(ExprKind::Bottom)); }

ExprPtr VagueExpr::top() { return ExprPtr(new VagueExpr(ExprKind::Top)); }

ExprPtr VagueExpr::atom(std::string name) {
    if (name.empty()) throw std::invalid_argument("atom name must be nonempty");
    auto node = new VagueExpr(ExprKind::Atom);
    node->name_ = std::move(name);
    return ExprPtr(node);
}

ExprPtr VagueExpr::neg(ExprPtr e) {
    if (!e) throw std::invalid_argument("null expression");
    auto node = new VagueExpr(ExprKind::Neg);
    node->left_ = std::move(e);
    return ExprPtr(node);
}

ExprPtr VagueExpr::conj(ExprPtr l, ExprPtr r) {
    if (!l || !r) throw std::invalid_argument("null expression");
    auto node = new VagueExpr(ExprKind::And);
    node->left_ = std::move(l);
    node->right_ = std::move(r);
    return ExprPtr(node);
}

ExprPtr VagueExpr::disj(ExprPtr l, ExprPtr r) {
    if (!l || !r) throw std::invalid_argument("null expression");
    auto node = new VagueExpr(ExprKind::Or);
    node->left_ = std::move(l);
    node->right_ = std::move(r);
    return ExprPtr(node);
}

const std::string& VagueExpr::name() const {
    if (kind_ != ExprKind::Atom) throw std::logic_error("not an atom");
    return name_;
}

const ExprPtr& VagueExpr::child() const {
    if (kind_ != ExprKind::Neg) throw std::logic_error("not a negation");
    return left_;
}

const ExprPtr& VagueExpr::left() const {
    if (kind_ != ExprKind::And && kind_ != ExprKind::Or)
        throw std::logic_error("not a binary node");
    return left_;
}

const ExprPtr& VagueExpr::right() const {
    if (kind_ != ExprKind::And && kind_ != ExprKind::Or)
        throw std::logic_error("not a binary node");
    return right_;
}

bool VagueExpr::equals(const VagueExpr& other) const {
    if (kind_ != other.kind_) return false;
    switch (kind_) {
        case ExprKind::Bottom:
        case ExprKind::Top: return true;
        case ExprKind::Atom: return name_ == other.name_;
        case ExprKind::Neg: return left_->equals(*other.left_);
        case ExprKind::And:
        case ExprKind::Or:
            return left_->equals(*other.left_) && right_->equals(*other.right_);
    }
    return false;
}

bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->equals(*b);
}

ParseError::ParseError(const std::string& msg, std::size_t pos)
    : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}

namespace {

enum class Tok { Bot, Top, Not, Ident, Bang, Amp, Pipe, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        std::size_t start = pos_;
        if (pos_ >= text_.size()) {
            current_ = {Tok::End, "", start};
            return;
        }
        char c = text_[pos_];
        if (c == '!' || c == '&' || c == '|' || c == '(' || c == ')') {
            ++pos_;
            Tok k = c == '!'   ? Tok::Bang
                    : c == '&' ? Tok::Amp
                    : c == '|' ? Tok::Pipe
                    : c == '(' ? Tok::LParen
                               : Tok::RParen;
            current_ = {k, std::string(1, c), start};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                    text_[pos_] == '_'))
                ++pos_;
            std::string word(text_.substr(start, pos_ - start));
            if (word == "bot")
                current_ = {Tok::Bot, word, start};
            else if (word == "top")
                current_ = {Tok::Top, word, start};
            else if (word == "not")
                current_ = {Tok::Not, word, start};
            else
                current_ = {Tok::Ident, word, start};
            return;
        }
        throw ParseError("unexpected character '" + std::string(1, c) + "'", start);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    Token current_{Tok::End, "", 0};
};

class Parser {
public:
    explicit Parser(std::string_view text) : lex_(text) {}

    ExprPtr parse() {
        ExprPtr e = parse_or();
        const Token& t = lex_.peek();
        if (t.kind != Tok::End)
            throw ParseError("expected end of input, found '" + t.text + "'", t.pos);
        return e;
    }

private:
    ExprPtr parse_or() {
        ExprPtr e = parse_and();
        while (lex_.peek().kind == Tok::Pipe) {
            lex_.take();
            e = VagueExpr::disj(std::move(e), parse_and());
        }
        return e;
    }

    ExprPtr parse_and() {
        ExprPtr e = parse_unary();
        while (lex_.peek().kind == Tok::Amp) {
            lex_.take();
            e = VagueExpr::conj(std::move(e), parse_unary());
        }
        return e;
    }

    ExprPtr parse_unary() {
        if (lex_.peek().kind == Tok::Bang || lex_.peek().kind == Tok::Not) {
            lex_.take();
            return VagueExpr::neg(parse_unary());
        }
        return parse_primary();
    }

    ExprPtr parse_primary() {
        Token t = lex_.take();
        switch (t.kind) {
            case Tok::Bot: return VagueExpr::bottom();
            case Tok::Top: return VagueExpr::top();
            case Tok::Ident: return VagueExpr::atom(t.text);
            case Tok::LParen: {
                ExprPtr e = parse_or();
                const Token& close = lex_.peek();
                if (close.kind != Tok::RParen)
                    throw ParseError("expected ')', found '" +
                                         (close.kind == Tok::End ? "end of input"
                                                                 : close.text) +
                                         "'",
                                     close.pos);
                lex_.take();
                return e;
            }
            case Tok::End:
                throw ParseError("expected expression, found end of input", t.pos);
            default:
                throw ParseError("expected expression, found '" + t.text + "'", t.pos);
        }
    }

    Lexer lex_;
};

int precedence(ExprKind k) {
    switch (k) {
        case ExprKind::Or: return 0;
        case ExprKind::And: return 1;
        case ExprKind::Neg: return 2;
        default: return 3;
    }
}

void render(const ExprPtr& e, int min_prec, std::string& out) {
    int prec = precedence(e->kind());
    bool wrap = prec < min_prec;
    if (wrap) out += '(';
    switch (e->kind()) {
        case ExprKind::Bottom: out += "bot"; break;
        case ExprKind::Top: out += "top"; break;
        case ExprKind::Atom: out += e->name(); break;
        case ExprKind::Neg:
            out += '!';
            render(e->child(), precedence(ExprKind::Neg), out);
            break;
        case ExprKind::And:
            render(e->left(), prec, out);
            out += " & ";
            render(e->right(), prec + 1, out);
            break;
        case ExprKind::Or:
            render(e->left(), prec, out);
            out += " | ";
            render(e->right(), prec + 1, out);
            break;
    }
    if (wrap) out += ')';
}

void collect_atoms(const ExprPtr& e, std::vector<std::string>& out) {
    switch (e->kind()) {
        case ExprKind::Atom: out.push_back(e->name()); break;
        case ExprKind::Neg: collect_atoms(e->child(), out); break;
        case ExprKind::And:
        case ExprKind::Or:
            collect_atoms(e->left(), out);
            collect_atoms(e->right(), out);
            break;
        default: break;
    }
}

}  // namespace

ExprPtr parse_expr(std::string_view text) { return Parser(text).parse(); }

std::string format_expr(const ExprPtr& e) {
    if (!e) throw std::invalid_argument("null expression");
    std::string out;
    render(e, 0, out);
    return out;
}

std::vector<std::string> atoms_of(const ExprPtr& e) {
    if (!e) throw std::invalid_argument("null expression");
    std::vector<std::string> out;
    collect_atoms(e, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace vpart
