#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vpart {

enum class ExprKind { Bottom, Top, Atom, Neg, And, Or };

class VagueExpr;
using ExprPtr = std::shared_ptr<const VagueExpr>;

// Immutable formula over named generators. Nodes are shared freely; equality
// is structural.
class VagueExpr {
public:
    static ExprPtr bottom();
    static ExprPtr top();
    static ExprPtr atom(std::string name);  // invalid_argument when empty
    static ExprPtr neg(ExprPtr e);
    static ExprPtr conj(ExprPtr l, ExprPtr r);
    static ExprPtr disj(ExprPtr l, ExprPtr r);

    ExprKind kind() const { return kind_; }
    const std::string& name() const;   // Atom
    const ExprPtr& child() const;      // Neg
    const ExprPtr& left() const;       // And, Or
    const ExprPtr& right() const;      // And, Or

    bool equals(const VagueExpr& other) const;

private:
    explicit VagueExpr(ExprKind k) : kind_(k) {}

    ExprKind kind_;
    std::string name_;
    ExprPtr left_, right_;  // Neg uses left_ only
};

bool expr_equal(const ExprPtr& a, const ExprPtr& b);

struct ParseError : std::runtime_error {
    std::size_t position;  // byte offset into the input
    ParseError(const std::string& msg, std::size_t pos);
};

// Grammar, loosest binding first:
//   or    := and ('|' and)*
//   and   := unary ('&' unary)*
//   unary := ('!' | 'not') unary | primary
//   primary := 'bot' | 'top' | identifier | '(' or ')'
// Identifiers are [A-Za-z_][A-Za-z0-9_]*; whitespace separates tokens.
ExprPtr parse_expr(std::string_view text);

// Canonical rendering with minimal parentheses;
// parse_expr(format_expr(e)) reproduces e structurally.
std::string format_expr(const ExprPtr& e);

std::vector<std::string> atoms_of(const ExprPtr& e);  // sorted, unique

}  // namespace vpart
