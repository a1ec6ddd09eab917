#include "ajf/freegroup.hpp"

#include <sstream>

#include "ajf/errors.hpp"
#include "expr_parser.hpp"

namespace ajf {

namespace {

void check_rank(int rank) {
    if (rank < 1) throw DomainError("free group rank must be positive, got " + std::to_string(rank));
}

void check_same_rank(const Word& a, const Word& b) {
    if (a.rank() != b.rank())
        throw DomainError("rank mismatch: " + std::to_string(a.rank()) + " vs " + std::to_string(b.rank()));
}

// Pushes l onto a reduced stack, cancelling against the top.
void push_reduced(std::vector<Letter>& out, Letter l) {
    if (!out.empty() && out.back() == -l)
        out.pop_back();
    else
        out.push_back(l);
}

}  // namespace

Word::Word(int rank) : rank_(rank) { check_rank(rank); }

Word::Word(int rank, std::vector<Letter> letters) : rank_(rank) {
    check_rank(rank);
    letters_.reserve(letters.size());
    for (Letter l : letters) {
        if (l == 0 || generator_of(l) > rank)
            throw DomainError("letter " + std::to_string(l) + " out of range for rank " + std::to_string(rank));
        push_reduced(letters_, l);
    }
}

Word Word::generator(int rank, int i) {
    if (i < 1 || i > rank)
        throw DomainError("generator index " + std::to_string(i) + " not in 1.." + std::to_string(rank));
    return Word(rank, {i});
}

Word concat(const Word& a, const Word& b) {
    check_same_rank(a, b);
    std::vector<Letter> out(a.letters().begin(), a.letters().end());
    for (Letter l : b.letters()) push_reduced(out, l);
    return Word(a.rank(), std::move(out));
}

Word invert(const Word& a) {
    std::vector<Letter> out;
    out.reserve(a.length());
    for (auto it = a.letters().rbegin(); it != a.letters().rend(); ++it) out.push_back(-*it);
    return Word(a.rank(), std::move(out));
}

Word commutator(const Word& a, const Word& b) {
    check_same_rank(a, b);
    return invert(a) * invert(b) * a * b;
}

Word power(const Word& a, long k) {
    Word base = k < 0 ? invert(a) : a;
    Word result(a.rank());
    for (long e = k < 0 ? -k : k; e > 0; --e) result = result * base;
    return result;
}

AbelianVector abelianize(const Word& a) {
    AbelianVector v(static_cast<std::size_t>(a.rank()), 0);
    for (Letter l : a.letters()) v[static_cast<std::size_t>(generator_of(l) - 1)] += sign_of(l);
    return v;
}

std::string to_string(const Word& w) {
    if (w.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (Letter l : w.letters()) {
        if (!first) os << ' ';
        first = false;
        os << 'x' << generator_of(l);
        if (l < 0) os << "^-1";
    }
    return os.str();
}

namespace {

struct WordOps {
    using Value = Word;
    int rank;

    Word identity() const { return Word(rank); }
    Word mul(const Word& a, const Word& b) const { return a * b; }
    Word pow(const Word& a, long k) const { return power(a, k); }
    Word comm(const Word& a, const Word& b) const { return commutator(a, b); }
    bool starts_atom(char c) const { return c == 'x'; }
    const char* atom_description() const { return "generator 'x<i>'"; }
    Word atom(detail::Cursor& cur) const {
        cur.accept('x');
        std::size_t at = cur.position();
        long i = cur.index();
        if (i < 1 || i > rank)
            throw ParseError(at, "generator index " + std::to_string(i) + " not in 1.." + std::to_string(rank));
        return Word::generator(rank, static_cast<int>(i));
    }
};

}  // namespace

Word parse_word(int rank, const std::string& text) {
    check_rank(rank);
    return detail::ExprParser<WordOps>(text, WordOps{rank}).parse();
}

}  // namespace ajf
