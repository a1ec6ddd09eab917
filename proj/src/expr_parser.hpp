// Recursive-descent parser shared by the Word and AutWord grammars.
//
//   expr   := term { ['*'] term }
//   term   := factor { '^' integer }
//   factor := atom | '1' | '(' expr ')' | '[' expr ',' expr ']'
//
// Atoms are grammar specific and supplied by the Ops policy.
#ifndef AJF_SRC_EXPR_PARSER_HPP
#define AJF_SRC_EXPR_PARSER_HPP

#include <cctype>
#include <climits>
#include <string>
#include <string_view>

#include "ajf/errors.hpp"

namespace ajf::detail {

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool at_end() { return peek() == '\0'; }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c, const char* what) {
        if (!accept(c)) fail(std::string("expected ") + what);
    }
    bool accept_keyword(std::string_view kw) {
        skip_ws();
        if (text_.substr(pos_, kw.size()) != kw) return false;
        // Reject identifier continuations such as "rhox".
        std::size_t end = pos_ + kw.size();
        if (end < text_.size() && std::isalpha(static_cast<unsigned char>(text_[end]))) return false;
        pos_ = end;
        return true;
    }
    long integer() {
        skip_ws();
        bool negative = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            negative = text_[pos_] == '-';
            ++pos_;
            skip_ws();
        }
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected integer");
        long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            if (value > (LONG_MAX - 9) / 10) fail("integer too large");
            value = value * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        return negative ? -value : value;
    }
    // Unsigned integer glued to the preceding token, as in "x12".
    long index() {
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected generator index");
        return integer();
    }
    std::size_t position() const noexcept { return pos_; }
    [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

template <class Ops>
class ExprParser {
public:
    using Value = typename Ops::Value;

    ExprParser(std::string_view text, Ops ops) : cur_(text), ops_(std::move(ops)) {}

    Value parse() {
        if (cur_.at_end()) cur_.fail("expected expression");
        Value v = expr();
        if (!cur_.at_end()) cur_.fail("expected '*', '^', factor or end of input");
        return v;
    }

private:
    bool starts_factor() {
        char c = cur_.peek();
        return c == '(' || c == '[' || c == '1' || ops_.starts_atom(c);
    }

    Value expr() {
        Value acc = term();
        for (;;) {
            if (cur_.accept('*')) {
                acc = ops_.mul(acc, term());
            } else if (starts_factor()) {
                acc = ops_.mul(acc, term());
            } else {
                return acc;
            }
        }
    }

    Value term() {
        Value v = factor();
        while (cur_.accept('^')) v = ops_.pow(v, cur_.integer());
        return v;
    }

    Value factor() {
        char c = cur_.peek();
        if (cur_.accept('(')) {
            Value v = expr();
            cur_.expect(')', "')'");
            return v;
        }
        if (cur_.accept('[')) {
            Value a = expr();
            cur_.expect(',', "',' in commutator");
            Value b = expr();
            cur_.expect(']', "']'");
            return ops_.comm(a, b);
        }
        if (c == '1') {
            cur_.accept('1');
            return ops_.identity();
        }
        if (ops_.starts_atom(c)) return ops_.atom(cur_);
        cur_.fail(std::string("expected ") + ops_.atom_description() + ", '1', '(' or '['");
    }

    Cursor cur_;
    Ops ops_;
};

}  // namespace ajf::detail

#endif
