// parse.hpp -- recursive-descent parser for the word grammar:
//
//   word    := "1" | term { term }
//   term    := factor [ "^" int ]
//   factor  := letter | "(" word ")" | "[" word "," word "]"
//   letter  := "a".."z" | "a" digits     (the two styles must not mix)
//   int     := ["-"] digit { digit }     (nonzero)
//
// "[x,y]" denotes x y x^-1 y^-1. Whitespace between tokens is ignored.

#ifndef PROVCLOSE_PARSE_HPP
#define PROVCLOSE_PARSE_HPP

#include <cctype>
#include <cstddef>
#include <string>

#include "word.hpp"

namespace provclose {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
    std::size_t position;
};

namespace detail {

class WordParser {
  public:
    WordParser(const std::string& text, int declared_rank)
        : text_(text), declared_rank_(declared_rank) {}

    Word parse() {
        skip_ws();
        if (done()) throw ParseError("empty input", pos_);
        Word w = parse_word();
        skip_ws();
        if (!done()) throw ParseError("unexpected trailing input", pos_);
        if (declared_rank_ > 0) return w.with_rank(declared_rank_);
        return w;
    }

  private:
    // exponent and length caps keep hostile inputs like (ab)^99999999
    // from exhausting memory
    static constexpr long long kMaxExponent = 1000000;
    static constexpr std::size_t kMaxLength = 4000000;

    Word parse_word() {
        skip_ws();
        if (peek() == '1') {
            ++pos_;
            return Word::reduced({});
        }
        Word acc = Word::reduced({});
        bool any = false;
        while (true) {
            skip_ws();
            char c = peek();
            if (c != '(' && c != '[' && !(c >= 'a' && c <= 'z')) break;
            acc = multiply(acc, parse_term());
            if (acc.length() > kMaxLength) throw ParseError("word too long", pos_);
            any = true;
        }
        if (!any) throw ParseError("expected a letter, '(', '[' or '1'", pos_);
        return acc;
    }

    Word parse_term() {
        Word base = parse_factor();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            long long k = parse_int();
            if (base.length() > 0 && static_cast<unsigned long long>(k < 0 ? -k : k) >
                                         kMaxLength / base.length())
                throw ParseError("word too long", pos_);
            return power(base, k);
        }
        return base;
    }

    Word parse_factor() {
        skip_ws();
        char c = peek();
        std::size_t at = pos_;
        if (c == '(') {
            ++pos_;
            Word inner = parse_word();
            skip_ws();
            expect(')');
            return inner;
        }
        if (c == '[') {
            ++pos_;
            Word x = parse_word();
            skip_ws();
            expect(',');
            Word y = parse_word();
            skip_ws();
            expect(']');
            return multiply(multiply(x, y), multiply(invert(x), invert(y)));
        }
        if (c >= 'a' && c <= 'z') {
            ++pos_;
            if (c == 'a' && !done() && std::isdigit(static_cast<unsigned char>(peek()))) {
                long long idx = parse_digits();
                if (idx < 1) throw ParseError("generator index must be >= 1", at);
                note_style(true, at);
                return make_letter(static_cast<int>(idx), at);
            }
            note_style(false, at);
            return make_letter(c - 'a' + 1, at);
        }
        throw ParseError("expected a letter, '(' or '['", pos_);
    }

    Word make_letter(int index, std::size_t at) {
        if (declared_rank_ > 0 && index > declared_rank_)
            throw ParseError("generator index " + std::to_string(index) +
                                 " exceeds declared rank " + std::to_string(declared_rank_),
                             at);
        return Word::reduced({Letter{index, +1}});
    }

    void note_style(bool indexed, std::size_t at) {
        if (style_ == 0)
            style_ = indexed ? 2 : 1;
        else if (style_ != (indexed ? 2 : 1))
            throw ParseError("plain and indexed letter styles cannot mix", at);
    }

    long long parse_int() {
        skip_ws();
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos_;
        }
        if (done() || !std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected an exponent", pos_);
        long long v = parse_digits();
        if (v == 0) throw ParseError("exponent must be nonzero", pos_ - 1);
        if (v > kMaxExponent) throw ParseError("exponent too large", pos_ - 1);
        return neg ? -v : v;
    }

    long long parse_digits() {
        long long v = 0;
        std::size_t start = pos_;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (peek() - '0');
            if (v > 100000000) throw ParseError("number too large", start);
            ++pos_;
        }
        return v;
    }

    void expect(char c) {
        if (done() || peek() != c)
            throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    char peek() const { return done() ? '\0' : text_[pos_]; }
    bool done() const { return pos_ >= text_.size(); }
    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    const std::string& text_;
    int declared_rank_;
    std::size_t pos_ = 0;
    int style_ = 0;  // 0 undecided, 1 plain, 2 indexed
};

}  // namespace detail

/// Parses text into a reduced word. If rank is omitted (0) it is inferred
/// as the largest generator index used.
inline Word parse_word(const std::string& text, int rank = 0) {
    if (rank < 0) throw std::invalid_argument("rank must be >= 0");
    return detail::WordParser(text, rank).parse();
}

}  // namespace provclose

#endif
