#include "ajf/lielyndon.hpp"

#include <mutex>
#include <sstream>

#include "ajf/errors.hpp"

namespace ajf {

namespace {

void check_alphabet(int q) {
    if (q < 1 || q > 255) throw DomainError("alphabet size must be in 1..255, got " + std::to_string(q));
}

struct Basis {
    std::vector<LyndonWord> words;
    std::map<LyndonWord, std::size_t> index;
};

// Duval's generation of all Lyndon words of length <= s, in lex order;
// only those of length exactly s are kept.
Basis generate_basis(int q, int s) {
    Basis b;
    std::vector<std::uint8_t> w{1};
    while (!w.empty()) {
        if (static_cast<int>(w.size()) == s) b.words.emplace_back(q, w);
        const std::size_t m = w.size();
        while (static_cast<int>(w.size()) < s) w.push_back(w[w.size() - m]);
        while (!w.empty() && w.back() == q) w.pop_back();
        if (!w.empty()) ++w.back();
    }
    for (std::size_t i = 0; i < b.words.size(); ++i) b.index.emplace(b.words[i], i);
    return b;
}

const Basis& basis_for(int q, int s) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, Basis> cache;
    {
        std::lock_guard lock(mu);
        auto it = cache.find({q, s});
        if (it != cache.end()) return it->second;
    }
    Basis b = generate_basis(q, s);
    std::lock_guard lock(mu);
    return cache.try_emplace({q, s}, std::move(b)).first->second;
}

void add_scaled(Series& acc, const Series& t, const Integer& c) {
    for (const auto& [m, x] : t.terms()) acc.add_term(m, x * c);
}

}  // namespace

bool is_lyndon(std::span<const std::uint8_t> w) {
    const std::size_t n = w.size();
    if (n == 0) return false;
    // Strictly smaller than every proper rotation.
    for (std::size_t r = 1; r < n; ++r) {
        for (std::size_t i = 0; i < n; ++i) {
            auto a = w[i], b = w[(i + r) % n];
            if (a < b) break;
            if (a > b || i + 1 == n) return false;
        }
    }
    return true;
}

LyndonWord::LyndonWord(int alphabet, std::vector<std::uint8_t> letters)
    : alphabet_(alphabet), letters_(std::move(letters)) {
    check_alphabet(alphabet);
    for (auto l : letters_)
        if (l < 1 || l > alphabet) throw DomainError("Lyndon word letter out of alphabet");
    if (!is_lyndon(letters_)) throw DomainError("not a Lyndon word");
}

LyndonWord::LyndonWord(int alphabet, std::initializer_list<int> letters)
    : LyndonWord(alphabet, [&] {
          std::vector<std::uint8_t> v;
          for (int l : letters) {
              if (l < 1 || l > 255) throw DomainError("Lyndon word letter out of range");
              v.push_back(static_cast<std::uint8_t>(l));
          }
          return v;
      }()) {}

const std::vector<LyndonWord>& lyndon_words(int q, int s) {
    check_alphabet(q);
    if (s < 1) throw DomainError("degree must be positive");
    return basis_for(q, s).words;
}

std::size_t basis_index(const LyndonWord& w) {
    const Basis& b = basis_for(w.alphabet(), w.degree());
    return b.index.at(w);
}

Integer witt_rank(int q, int s) {
    if (q < 1) throw DomainError("q must be positive");
    if (s < 1) throw DomainError("s must be positive");
    // d[m] for every m dividing s, smallest first.
    std::map<int, Integer> d;
    for (int m = 1; m <= s; ++m) {
        if (s % m != 0) continue;
        Integer acc = ipow(Integer(q), static_cast<unsigned long>(m));
        for (const auto& [k, dk] : d)
            if (m % k == 0) acc -= k * dk;
        d[m] = acc / m;
    }
    return d[s];
}

std::pair<LyndonWord, LyndonWord> standard_factorization(const LyndonWord& w) {
    const auto letters = w.letters();
    if (letters.size() < 2) throw DomainError("standard factorization needs length >= 2");
    std::size_t best = 1;
    for (std::size_t i = 2; i < letters.size(); ++i) {
        auto cand = letters.subspan(i);
        auto cur = letters.subspan(best);
        if (std::lexicographical_compare(cand.begin(), cand.end(), cur.begin(), cur.end())) best = i;
    }
    std::vector<std::uint8_t> u(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(best));
    std::vector<std::uint8_t> v(letters.begin() + static_cast<std::ptrdiff_t>(best), letters.end());
    return {LyndonWord(w.alphabet(), std::move(u)), LyndonWord(w.alphabet(), std::move(v))};
}

Bracket bracketing(const LyndonWord& w) {
    if (w.degree() == 1) return Bracket{w.letters()[0], nullptr, nullptr};
    auto [u, v] = standard_factorization(w);
    return Bracket{0, std::make_shared<const Bracket>(bracketing(u)), std::make_shared<const Bracket>(bracketing(v))};
}

std::string to_string(const Bracket& b) {
    if (b.is_leaf()) return "x" + std::to_string(b.letter);
    return "[" + to_string(*b.left) + "," + to_string(*b.right) + "]";
}

const Series& expand_bracketing(const LyndonWord& w) {
    static std::mutex mu;
    static std::map<LyndonWord, Series> cache;
    {
        std::lock_guard lock(mu);
        auto it = cache.find(w);
        if (it != cache.end()) return it->second;
    }
    const int q = w.alphabet();
    const int s = w.degree();
    Series out(q, s);
    if (s == 1) {
        out.add_term(w.monomial(), 1);
    } else {
        auto [u, v] = standard_factorization(w);
        Series a = retruncate(expand_bracketing(u), s);
        Series b = retruncate(expand_bracketing(v), s);
        out = a * b - b * a;
    }
    std::lock_guard lock(mu);
    return cache.try_emplace(w, std::move(out)).first->second;
}

LieElement::LieElement(int alphabet, int degree) : alphabet_(alphabet), degree_(degree) {
    check_alphabet(alphabet);
    if (degree < 1) throw DomainError("Lie element degree must be positive");
}

LieElement LieElement::basis(const LyndonWord& w) {
    LieElement e(w.alphabet(), w.degree());
    e.add_term(w, 1);
    return e;
}

LieElement LieElement::generator(int alphabet, int i) {
    if (i < 1 || i > alphabet) throw DomainError("generator index out of range");
    return basis(LyndonWord(alphabet, {i}));
}

Integer LieElement::coefficient(const LyndonWord& w) const {
    auto it = coords_.find(w);
    return it == coords_.end() ? Integer(0) : it->second;
}

void LieElement::add_term(const LyndonWord& w, const Integer& c) {
    if (w.alphabet() != alphabet_ || w.degree() != degree_)
        throw DomainError("Lyndon word does not match Lie element alphabet/degree");
    if (sgn(c) == 0) return;
    auto [it, inserted] = coords_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) coords_.erase(it);
    }
}

LieElement& LieElement::operator+=(const LieElement& other) {
    if (other.alphabet_ != alphabet_ || other.degree_ != degree_)
        throw DomainError("Lie element mismatch in sum");
    for (const auto& [w, c] : other.coords_) add_term(w, c);
    return *this;
}

LieElement& LieElement::operator-=(const LieElement& other) {
    if (other.alphabet_ != alphabet_ || other.degree_ != degree_)
        throw DomainError("Lie element mismatch in difference");
    for (const auto& [w, c] : other.coords_) add_term(w, -c);
    return *this;
}

LieElement operator+(const LieElement& a, const LieElement& b) {
    LieElement r = a;
    r += b;
    return r;
}

LieElement operator-(const LieElement& a, const LieElement& b) {
    LieElement r = a;
    r -= b;
    return r;
}

LieElement operator*(const Integer& c, const LieElement& a) {
    LieElement r(a.alphabet(), a.degree());
    for (const auto& [w, x] : a.coordinates()) r.add_term(w, c * x);
    return r;
}

Series expand_to_tensor(const LieElement& e) {
    Series out(e.alphabet(), e.degree());
    for (const auto& [w, c] : e.coordinates()) add_scaled(out, expand_bracketing(w), c);
    return out;
}

LieElement lie_to_lyndon(const Series& t, int s) {
    if (s < 1) throw DomainError("degree must be positive");
    if (!t.is_homogeneous(s)) throw DomainError("tensor is not homogeneous of degree " + std::to_string(s));
    const int q = t.rank();
    LieElement out(q, s);
    Series residual = retruncate(t, s);
    // The expansion of a Lyndon bracket is its own word plus lexicographically
    // larger words, so the smallest surviving word fixes the next coordinate.
    while (!residual.is_zero()) {
        const auto& [m, c] = *residual.terms().begin();
        if (!is_lyndon(m.letters()))
            throw NotLieElement("not a Lie element: residual term on non-Lyndon word " + to_string(Series::term(q, s, m, c)));
        LyndonWord w(q, std::vector<std::uint8_t>(m.letters().begin(), m.letters().end()));
        Integer coeff = c;
        out.add_term(w, coeff);
        add_scaled(residual, expand_bracketing(w), -coeff);
    }
    return out;
}

LieElement lie_bracket(const LieElement& a, const LieElement& b) {
    if (a.alphabet() != b.alphabet()) throw DomainError("alphabet mismatch in Lie bracket");
    const int d = a.degree() + b.degree();
    Series ta = retruncate(expand_to_tensor(a), d);
    Series tb = retruncate(expand_to_tensor(b), d);
    return lie_to_lyndon(ta * tb - tb * ta, d);
}

std::vector<Integer> dense_coordinates(const LieElement& e) {
    const Basis& b = basis_for(e.alphabet(), e.degree());
    std::vector<Integer> v(b.words.size(), 0);
    for (const auto& [w, c] : e.coordinates()) v[b.index.at(w)] = c;
    return v;
}

std::string to_string(const LieElement& e) {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : e.coordinates()) {
        if (first) {
            if (sgn(c) < 0) os << '-';
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        os << Integer(abs(c)).get_str() << '*' << to_string(bracketing(w));
    }
    return os.str();
}

}  // namespace ajf
