#ifndef KW_WORD_HPP
#define KW_WORD_HPP

#include <string>
#include <vector>

namespace kw {

// One letter of a group word: generator index (0-based) and sign.
struct Letter {
    int gen;
    int sign; // +1 or -1

    bool operator==(const Letter& o) const { return gen == o.gen && sign == o.sign; }
    Letter inverse() const { return {gen, -sign}; }
};

// A word in the free group on n generators.
struct Word {
    std::vector<Letter> letters;

    Word() = default;
    explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}

    int length() const { return static_cast<int>(letters.size()); }
    bool empty() const { return letters.empty(); }

    Word inverse() const;
    Word concat(const Word& o) const;
    Word power(int m) const;

    // Removes adjacent inverse pairs until none remain.
    Word freely_reduced() const;
    // Freely reduced and additionally reduced across the wraparound.
    Word cyclically_reduced() const;
    bool is_cyclically_reduced() const;

    // Exponent sums per generator.
    std::vector<long long> exponent_vector(int n_generators) const;

    // e.g. "a1 a2^-1 a1"
    std::string str() const;

    bool operator==(const Word& o) const { return letters == o.letters; }
};

// Convenience for tests and spec files: parse "a1 a2^-1" style text.
Word parse_word(const std::string& text);

} // namespace kw

#endif
