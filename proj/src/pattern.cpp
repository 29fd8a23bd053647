#include "locallex/pattern.hpp"

#include <cstdio>

namespace locallex {

Pattern Pattern::literal(char c)
{
    Pattern p;
    p.kind = Kind::chars;
    p.chars.set(static_cast<unsigned char>(c));
    return p;
}

Pattern Pattern::set(const CharSet& chars)
{
    if (chars.none())
        throw PatternError("empty character class");
    Pattern p;
    p.kind = Kind::chars;
    p.chars = chars;
    return p;
}

Pattern Pattern::concat(std::vector<Pattern> parts)
{
    if (parts.empty())
        return epsilon();
    if (parts.size() == 1)
        return std::move(parts.front());
    Pattern p;
    p.kind = Kind::concat;
    p.parts = std::move(parts);
    return p;
}

Pattern Pattern::alt(std::vector<Pattern> parts)
{
    if (parts.size() == 1)
        return std::move(parts.front());
    if (parts.empty())
        throw PatternError("empty alternation");
    Pattern p;
    p.kind = Kind::alt;
    p.parts = std::move(parts);
    return p;
}

namespace {

Pattern unary(Pattern::Kind kind, Pattern inner)
{
    Pattern p;
    p.kind = kind;
    p.parts.push_back(std::move(inner));
    return p;
}

} // namespace

Pattern Pattern::star(Pattern p) { return unary(Kind::star, std::move(p)); }
Pattern Pattern::plus(Pattern p) { return unary(Kind::plus, std::move(p)); }
Pattern Pattern::optional(Pattern p) { return unary(Kind::optional, std::move(p)); }

CharSet Pattern::used_chars() const
{
    CharSet out = chars;
    for (const auto& p : parts)
        out |= p.used_chars();
    return out;
}

bool Pattern::nullable() const
{
    switch (kind) {
    case Kind::empty:
    case Kind::star:
    case Kind::optional:
        return true;
    case Kind::chars:
        return false;
    case Kind::plus:
        return parts.front().nullable();
    case Kind::concat:
        for (const auto& p : parts)
            if (!p.nullable())
                return false;
        return true;
    case Kind::alt:
        for (const auto& p : parts)
            if (p.nullable())
                return true;
        return false;
    }
    return false;
}

namespace {

class PatternParser {
public:
    PatternParser(std::string_view text, const CharSet* alphabet) : text_(text), alphabet_(alphabet) {}

    Pattern parse()
    {
        Pattern p = alternation();
        if (pos_ != text_.size())
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

    CharSet char_class()
    {
        expect('[');
        bool negate = false;
        if (peek() == '^') {
            negate = true;
            ++pos_;
        }
        CharSet set;
        bool first = true;
        while (!at_end() && (peek() != ']' || first)) {
            first = false;
            unsigned char lo = static_cast<unsigned char>(class_char());
            unsigned char hi = lo;
            if (peek() == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] != ']') {
                ++pos_;
                hi = static_cast<unsigned char>(class_char());
                if (hi < lo)
                    fail("reversed range in character class");
            }
            for (unsigned c = lo; c <= hi; ++c)
                set.set(c);
        }
        expect(']');
        if (negate) {
            if (!alphabet_)
                fail("negated class needs an alphabet");
            set = *alphabet_ & ~set;
        } else if (alphabet_) {
            set &= *alphabet_;
        }
        if (set.none())
            fail("empty character class");
        return set;
    }

    bool at_end() const { return pos_ >= text_.size(); }

private:
    Pattern alternation()
    {
        std::vector<Pattern> alts{sequence()};
        while (peek() == '|') {
            ++pos_;
            alts.push_back(sequence());
        }
        return Pattern::alt(std::move(alts));
    }

    Pattern sequence()
    {
        std::vector<Pattern> parts;
        while (!at_end() && peek() != '|' && peek() != ')')
            parts.push_back(repetition());
        return Pattern::concat(std::move(parts));
    }

    Pattern repetition()
    {
        Pattern p = atom();
        for (;;) {
            switch (peek()) {
            case '*': ++pos_; p = Pattern::star(std::move(p)); continue;
            case '+': ++pos_; p = Pattern::plus(std::move(p)); continue;
            case '?': ++pos_; p = Pattern::optional(std::move(p)); continue;
            default: return p;
            }
        }
    }

    Pattern atom()
    {
        char c = peek();
        switch (c) {
        case '(': {
            ++pos_;
            Pattern p = alternation();
            expect(')');
            return p;
        }
        case '[':
            return Pattern::set(char_class());
        case '*':
        case '+':
        case '?':
            fail("nothing to repeat");
        case ']':
            fail("unbalanced ']'");
        case '\\':
            ++pos_;
            if (at_end())
                fail("dangling escape");
            return checked_literal(text_[pos_++]);
        default:
            ++pos_;
            return checked_literal(c);
        }
    }

    Pattern checked_literal(char c)
    {
        if (alphabet_ && !contains(*alphabet_, c))
            fail("character '" + std::string(1, c) + "' is not in the alphabet");
        return Pattern::literal(c);
    }

    char class_char()
    {
        if (at_end())
            fail("unterminated character class");
        char c = text_[pos_++];
        if (c == '\\') {
            if (at_end())
                fail("dangling escape");
            c = text_[pos_++];
        }
        return c;
    }

    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void expect(char c)
    {
        if (peek() != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg) const
    {
        throw PatternError("pattern '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + msg);
    }

    std::string_view text_;
    const CharSet* alphabet_;
    std::size_t pos_ = 0;
};

using Ends = std::vector<bool>;

// Set of end offsets reachable by matching `p` on s starting at any offset in `from`.
Ends step(const Pattern& p, std::string_view s, const Ends& from)
{
    Ends out(from.size(), false);
    switch (p.kind) {
    case Pattern::Kind::empty:
        return from;
    case Pattern::Kind::chars:
        for (std::size_t i = 0; i < s.size(); ++i)
            if (from[i] && contains(p.chars, s[i]))
                out[i + 1] = true;
        return out;
    case Pattern::Kind::concat: {
        Ends cur = from;
        for (const auto& part : p.parts)
            cur = step(part, s, cur);
        return cur;
    }
    case Pattern::Kind::alt:
        for (const auto& part : p.parts) {
            Ends e = step(part, s, from);
            for (std::size_t i = 0; i < e.size(); ++i)
                out[i] = out[i] || e[i];
        }
        return out;
    case Pattern::Kind::optional:
    case Pattern::Kind::star:
    case Pattern::Kind::plus: {
        Ends reach = p.kind == Pattern::Kind::plus ? step(p.parts.front(), s, from) : from;
        if (p.kind == Pattern::Kind::optional) {
            Ends e = step(p.parts.front(), s, from);
            for (std::size_t i = 0; i < e.size(); ++i)
                reach[i] = reach[i] || e[i];
            return reach;
        }
        for (bool changed = true; changed;) {
            changed = false;
            Ends e = step(p.parts.front(), s, reach);
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] && !reach[i]) {
                    reach[i] = true;
                    changed = true;
                }
        }
        if (p.kind == Pattern::Kind::star)
            for (std::size_t i = 0; i < from.size(); ++i)
                reach[i] = reach[i] || from[i];
        return reach;
    }
    }
    return out;
}

} // namespace

Pattern parse_pattern(std::string_view text, const CharSet& alphabet)
{
    return PatternParser(text, &alphabet).parse();
}

CharSet parse_char_class(std::string_view text)
{
    PatternParser p(text, nullptr);
    CharSet set = p.char_class();
    if (!p.at_end())
        throw PatternError("trailing text after character class '" + std::string(text) + "'");
    return set;
}

bool pattern_matches(const Pattern& p, std::string_view s)
{
    Ends from(s.size() + 1, false);
    from[0] = true;
    return step(p, s, from)[s.size()];
}

std::string describe_chars(const CharSet& set)
{
    std::string out;
    for (unsigned c = 0; c < 256; ++c) {
        if (!set.test(c))
            continue;
        if (c >= 0x21 && c < 0x7f) {
            out += static_cast<char>(c);
        } else {
            char buf[8];
            std::snprintf(buf, sizeof buf, "\\x%02x", c);
            out += buf;
        }
    }
    return out;
}

} // namespace locallex
