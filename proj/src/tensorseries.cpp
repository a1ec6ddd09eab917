#include "ajf/tensorseries.hpp"

#include <algorithm>
#include <sstream>

#include "ajf/errors.hpp"

namespace ajf {

namespace {

void check_compatible(const Series& a, const Series& b) {
    if (a.rank() != b.rank() || a.truncation() != b.truncation())
        throw DomainError("series mismatch: rank/truncation (" + std::to_string(a.rank()) + "," +
                          std::to_string(a.truncation()) + ") vs (" + std::to_string(b.rank()) + "," +
                          std::to_string(b.truncation()) + ")");
}

}  // namespace

Monomial::Monomial(std::initializer_list<int> letters) {
    letters_.reserve(letters.size());
    for (int l : letters) {
        if (l < 1 || l > 255) throw DomainError("monomial letter out of range: " + std::to_string(l));
        letters_.push_back(static_cast<std::uint8_t>(l));
    }
}

Monomial Monomial::operator*(const Monomial& other) const {
    std::vector<std::uint8_t> out;
    out.reserve(letters_.size() + other.letters_.size());
    out.insert(out.end(), letters_.begin(), letters_.end());
    out.insert(out.end(), other.letters_.begin(), other.letters_.end());
    return Monomial(std::move(out));
}

Series::Series(int rank, int truncation) : rank_(rank), truncation_(truncation) {
    if (rank < 1) throw DomainError("series rank must be positive");
    if (rank > 255) throw DomainError("series rank above 255 is not supported");
    if (truncation < 0) throw DomainError("truncation must be nonnegative");
}

Series Series::one(int rank, int truncation) {
    Series s(rank, truncation);
    s.add_term(Monomial{}, 1);
    return s;
}

Series Series::generator(int rank, int truncation, int i) {
    if (i < 1 || i > rank) throw DomainError("generator index out of range");
    Series s(rank, truncation);
    s.add_term(Monomial{i}, 1);
    return s;
}

Series Series::term(int rank, int truncation, const Monomial& m, const Integer& c) {
    Series s(rank, truncation);
    s.add_term(m, c);
    return s;
}

Integer Series::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
}

void Series::add_term(const Monomial& m, const Integer& c) {
    if (m.degree() > truncation_ || sgn(c) == 0) return;
    for (auto l : m.letters())
        if (l < 1 || l > rank_) throw DomainError("monomial letter exceeds series rank");
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

std::optional<int> Series::lowest_positive_degree() const {
    // Graded order: the first term past the constant has the lowest degree.
    for (const auto& [m, c] : terms_)
        if (m.degree() > 0) return m.degree();
    return std::nullopt;
}

bool Series::is_homogeneous(int d) const {
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return false;
    return true;
}

Series& Series::operator+=(const Series& other) {
    check_compatible(*this, other);
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Series& Series::operator-=(const Series& other) {
    check_compatible(*this, other);
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Series series_add(const Series& a, const Series& b) {
    Series r = a;
    r += b;
    return r;
}

Series series_sub(const Series& a, const Series& b) {
    Series r = a;
    r -= b;
    return r;
}

Series series_mul(const Series& a, const Series& b) {
    check_compatible(a, b);
    Series r(a.rank(), a.truncation());
    const int d = a.truncation();
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            // Terms of b are graded, so everything after this one is too deep.
            if (ma.degree() + mb.degree() > d) break;
            r.add_term(ma * mb, ca * cb);
        }
    }
    return r;
}

Series series_scale(const Series& a, const Integer& c) {
    Series r(a.rank(), a.truncation());
    if (sgn(c) == 0) return r;
    for (const auto& [m, x] : a.terms()) r.add_term(m, x * c);
    return r;
}

Series degree_component(const Series& a, int d) {
    if (d < 0 || d > a.truncation())
        throw DomainError("degree " + std::to_string(d) + " outside 0.." + std::to_string(a.truncation()));
    Series r(a.rank(), a.truncation());
    for (const auto& [m, c] : a.terms())
        if (m.degree() == d) r.add_term(m, c);
    return r;
}

Series retruncate(const Series& a, int truncation) {
    Series r(a.rank(), truncation);
    for (const auto& [m, c] : a.terms()) r.add_term(m, c);
    return r;
}

std::string to_string(const Series& s) {
    if (s.is_zero()) return "0";
    // Highest degree first; within a degree keep lexicographic order.
    std::vector<std::pair<const Monomial*, const Integer*>> order;
    for (const auto& [m, c] : s.terms()) order.emplace_back(&m, &c);
    std::stable_sort(order.begin(), order.end(),
                     [](const auto& x, const auto& y) { return x.first->degree() > y.first->degree(); });
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : order) {
        Integer mag = abs(*c);
        if (first) {
            if (sgn(*c) < 0) os << '-';
        } else {
            os << (sgn(*c) < 0 ? " - " : " + ");
        }
        first = false;
        if (m->degree() == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << '*';
        for (auto l : m->letters()) os << 'X' << static_cast<int>(l);
    }
    return os.str();
}

}  // namespace ajf
