#ifndef IMBALANCE_WORD_HPP
#define IMBALANCE_WORD_HPP

#include <compare>
#include <cstddef>
#include <string>

namespace imbalance {

enum class PrefixRelation {
    Equal,
    FirstPrefixOfSecond,  // v <_pref w, v != w
    SecondPrefixOfFirst,
    Incomparable,
};

// A node of the infinite binary tree: a finite 0/1 string, possibly empty.
// The bits are kept as text, so word length is bounded only by memory and
// no pattern can silently wrap around.
class Word {
public:
    Word() = default;  // the empty word (the root)

    // bits must consist of '0'/'1' only; throws InvalidInput otherwise
    explicit Word(std::string bits);

    static Word root() { return Word(); }

    std::size_t length() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }
    const std::string& bits() const { return bits_; }

    // one-letter extensions (the two sons in the tree)
    Word child(char bit) const;
    // drops the last symbol; throws InternalError on the root
    Word parent() const;
    char last_bit() const;  // throws InternalError on the root

    bool is_prefix_of(const Word& w) const;         // reflexive
    bool is_proper_prefix_of(const Word& w) const;

    // Lexicographic ("telephone book") order: 0-branch before 1-branch,
    // a proper prefix before its extensions. On 0/1 strings this is
    // plain string comparison.
    std::strong_ordering operator<=>(const Word& rhs) const = default;
    bool operator==(const Word& rhs) const = default;

    // bit string, or "ε" for the empty word
    std::string str() const;

private:
    std::string bits_;
};

PrefixRelation prefix_compare(const Word& v, const Word& w);

// Same total order as operator<=>; kept as a named operation.
std::strong_ordering lex_compare(const Word& v, const Word& w);

// Accepts a bit string, "ε", or "" (both of the latter denote the root).
Word parse_word(const std::string& text);

}  // namespace imbalance

#endif
