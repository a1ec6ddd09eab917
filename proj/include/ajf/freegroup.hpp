#ifndef AJF_FREEGROUP_HPP
#define AJF_FREEGROUP_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ajf {

// A letter x_i^{±1} is stored as the signed index ±i.
using Letter = int;

inline int generator_of(Letter l) { return l < 0 ? -l : l; }
inline int sign_of(Letter l) { return l < 0 ? -1 : 1; }

using AbelianVector = std::vector<std::int64_t>;

/// Freely reduced word in the free group F_n on x_1, ..., x_n.
///
/// Every Word carries its rank and binary operations check it. Reduction is
/// done on construction, so two Words are equal as group elements exactly
/// when their letter sequences agree.
class Word {
public:
    explicit Word(int rank);
    Word(int rank, std::vector<Letter> letters);

    static Word generator(int rank, int i);

    int rank() const noexcept { return rank_; }
    std::span<const Letter> letters() const noexcept { return letters_; }
    std::size_t length() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

private:
    int rank_;
    std::vector<Letter> letters_;
};

Word concat(const Word& a, const Word& b);
Word invert(const Word& a);
// a^{-1} b^{-1} a b
Word commutator(const Word& a, const Word& b);
Word power(const Word& a, long k);
AbelianVector abelianize(const Word& a);

inline Word operator*(const Word& a, const Word& b) { return concat(a, b); }

// "x1 x2^-1 x3"; the empty word prints as "1".
std::string to_string(const Word& w);

// Parses the word grammar: x1..xn, ^k powers, juxtaposition or '*',
// [A,B] commutators, parentheses, '1' for the identity.
Word parse_word(int rank, const std::string& text);

}  // namespace ajf

#endif
