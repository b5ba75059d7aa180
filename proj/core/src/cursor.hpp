#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "sextic/codes.hpp"
#include "sextic/surface.hpp"

namespace sextic::detail {

// Byte cursor shared by the recursive-descent parsers.
class Cursor {
public:
    explicit Cursor(std::string_view text, std::size_t base = 0) : text_(text), base_(base) {}

    std::size_t position() const noexcept { return base_ + pos_; }
    bool at_end() const noexcept { return pos_ >= text_.size(); }
    char peek() const noexcept { return at_end() ? '\0' : text_[pos_]; }
    std::string_view rest() const noexcept { return text_.substr(pos_); }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    bool accept_word(std::string_view word) {
        skip_space();
        if (rest().substr(0, word.size()) != word) return false;
        pos_ += word.size();
        return true;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    bool peek_digit() {
        skip_space();
        return std::isdigit(static_cast<unsigned char>(peek())) != 0;
    }

    // Reads an unsigned decimal integer; the caller checks peek_digit() first
    // or accepts the error.
    int integer() {
        skip_space();
        if (peek() == '-') fail("negative integer");
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
        long value = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > 1'000'000) fail("integer out of range");
            ++pos_;
        }
        return static_cast<int>(value);
    }

    void advance(std::size_t n) { pos_ += n; }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at offset " + std::to_string(position()), position());
    }

private:
    std::string_view text_;
    std::size_t base_;
    std::size_t pos_ = 0;
};

// Parses "<" BODY ">" at the cursor.
OvalForest read_forest(Cursor& in);

// Parses one surface token at the cursor (no surrounding whitespace allowed
// inside the token).
CompactSurface read_surface(Cursor& in);

}  // namespace sextic::detail
