#ifndef LOCALLEX_PATTERN_HPP
#define LOCALLEX_PATTERN_HPP

#include <bitset>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace locallex {

using CharSet = std::bitset<256>;

inline bool contains(const CharSet& set, char c) noexcept
{
    return set.test(static_cast<unsigned char>(c));
}

class PatternError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Regular expression syntax tree. Classes hold at least one character.
struct Pattern {
    enum class Kind { empty, chars, concat, alt, star, plus, optional };

    Kind kind = Kind::empty;
    CharSet chars;
    std::vector<Pattern> parts;

    static Pattern epsilon() { return {}; }
    static Pattern literal(char c);
    static Pattern set(const CharSet& chars);
    static Pattern concat(std::vector<Pattern> parts);
    static Pattern alt(std::vector<Pattern> parts);
    static Pattern star(Pattern p);
    static Pattern plus(Pattern p);
    static Pattern optional(Pattern p);

    /// Every character mentioned by the pattern.
    CharSet used_chars() const;
    bool nullable() const;
};

/// Parses the concrete syntax: literals, `\x` escapes, `[...]` classes with
/// ranges and leading `^` negation, `|`, `*`, `+`, `?`, `(...)`. Empty text
/// (or an empty alternative) denotes ε. Classes are intersected with
/// `alphabet`; negation is relative to it. Literals outside the alphabet and
/// classes that end up empty are errors.
Pattern parse_pattern(std::string_view text, const CharSet& alphabet);

/// Parses a bracketed class such as `[a-z+*()-]` without an ambient alphabet.
CharSet parse_char_class(std::string_view text);

/// Direct interpretation of the syntax tree; independent of the automaton.
bool pattern_matches(const Pattern& p, std::string_view s);

std::string describe_chars(const CharSet& set);

} // namespace locallex

#endif
