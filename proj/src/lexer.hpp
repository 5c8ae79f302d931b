#pragma once

// Tokenizer shared by the scalar and vector text parsers.

#include <memory>
#include <string>
#include <string_view>

#include "ramond/errors.hpp"

namespace ramond::detail {

enum class Tok { Number, Name, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    std::size_t pos = 0;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) { advance(); }

    const Token& peek() const { return cur_; }
    Token take()
    {
        Token t = cur_;
        advance();
        return t;
    }
    bool accept(Tok k)
    {
        if (cur_.kind != k)
            return false;
        advance();
        return true;
    }
    void expect(Tok k, const char* what)
    {
        if (!accept(k))
            fail(std::string("expected ") + what);
    }
    [[noreturn]] void fail(const std::string& msg) const
    {
        throw ConfigError("parse error at offset " + std::to_string(cur_.pos) + " in '" +
                          std::string(src_) + "': " + msg);
    }

    /// Saves and restores lexer state for one-token lookahead beyond peek().
    struct Mark {
        std::size_t at;
        Token cur;
    };
    Mark mark() const { return {at_, cur_}; }
    void reset(const Mark& m)
    {
        at_ = m.at;
        cur_ = m.cur;
    }

private:
    void advance()
    {
        while (at_ < src_.size() && (src_[at_] == ' ' || src_[at_] == '\t' || src_[at_] == '\n'))
            ++at_;
        cur_ = Token{};
        cur_.pos = at_;
        if (at_ >= src_.size()) {
            cur_.kind = Tok::End;
            return;
        }
        char c = src_[at_];
        auto is_alpha = [](char ch) {
            return (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || ch == '_';
        };
        auto is_digit = [](char ch) { return ch >= '0' && ch <= '9'; };
        if (is_digit(c)) {
            std::size_t start = at_;
            while (at_ < src_.size() && is_digit(src_[at_]))
                ++at_;
            cur_.kind = Tok::Number;
            cur_.text = std::string(src_.substr(start, at_ - start));
            return;
        }
        if (is_alpha(c)) {
            std::size_t start = at_;
            while (at_ < src_.size() && (is_alpha(src_[at_]) || is_digit(src_[at_])))
                ++at_;
            cur_.kind = Tok::Name;
            cur_.text = std::string(src_.substr(start, at_ - start));
            return;
        }
        ++at_;
        cur_.text = std::string(1, c);
        switch (c) {
        case '+': cur_.kind = Tok::Plus; break;
        case '-': cur_.kind = Tok::Minus; break;
        case '*': cur_.kind = Tok::Star; break;
        case '/': cur_.kind = Tok::Slash; break;
        case '^': cur_.kind = Tok::Caret; break;
        case '(': cur_.kind = Tok::LParen; break;
        case ')': cur_.kind = Tok::RParen; break;
        case ',': cur_.kind = Tok::Comma; break;
        default: fail(std::string("unexpected character '") + c + "'");
        }
    }

    std::string_view src_;
    std::size_t at_ = 0;
    Token cur_;
};

/// Parses an optionally signed (and optionally parenthesized) integer literal.
inline long parse_signed_int(Lexer& lx)
{
    if (lx.accept(Tok::LParen)) {
        long v = parse_signed_int(lx);
        lx.expect(Tok::RParen, "')'");
        return v;
    }
    bool neg = false;
    if (lx.accept(Tok::Minus))
        neg = true;
    else
        lx.accept(Tok::Plus);
    if (lx.peek().kind != Tok::Number)
        lx.fail("expected integer");
    long v = std::stol(lx.take().text);
    return neg ? -v : v;
}

} // namespace ramond::detail

namespace ramond {
class SymScalar;
class ParamRing;
namespace detail {
/// Parses a scalar sum expression starting at the lexer's current token.
SymScalar parse_scalar_expr(Lexer& lx, const std::shared_ptr<const ParamRing>& ring);
/// Parses a single power-level scalar atom (number, name, parenthesized sum).
SymScalar parse_scalar_power(Lexer& lx, const std::shared_ptr<const ParamRing>& ring);
} // namespace detail
} // namespace ramond
