#include "ajf/johnson.hpp"

#include <algorithm>
#include <random>

#include "ajf/errors.hpp"
#include "ajf/magnus.hpp"

namespace ajf {

namespace {

std::string idx(long v) { return std::to_string(v); }

// f(x_i) x_i^{-1}
Word difference(const Endomorphism& f, int i) {
    const Word xi = Word::generator(f.rank(), i);
    return apply(f, xi) * invert(xi);
}

}  // namespace

Derivation::Derivation(int rank, int degree) : rank_(rank), degree_(degree) {
    if (rank < 1) throw DomainError("derivation rank must be positive");
    if (degree < 1) throw DomainError("derivation degree must be positive");
    for (int i = 0; i < rank; ++i) values_.emplace_back(rank, degree + 1);
}

Derivation::Derivation(int rank, int degree, std::vector<LieElement> values)
    : rank_(rank), degree_(degree), values_(std::move(values)) {
    if (rank < 1 || degree < 1) throw DomainError("derivation rank and degree must be positive");
    if (values_.size() != static_cast<std::size_t>(rank)) throw DomainError("derivation needs one value per generator");
    for (const auto& v : values_)
        if (v.alphabet() != rank || v.degree() != degree + 1)
            throw DomainError("derivation value must have alphabet " + idx(rank) + " and degree " + idx(degree + 1));
}

const LieElement& Derivation::value(int i) const {
    if (i < 1 || i > rank_) throw DomainError("generator index out of range");
    return values_[static_cast<std::size_t>(i - 1)];
}

bool Derivation::is_zero() const {
    return std::all_of(values_.begin(), values_.end(), [](const LieElement& e) { return e.is_zero(); });
}

Derivation& Derivation::operator+=(const Derivation& other) {
    if (other.rank_ != rank_ || other.degree_ != degree_) throw DomainError("derivation mismatch in sum");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
    return *this;
}

Derivation operator+(const Derivation& a, const Derivation& b) {
    Derivation r = a;
    r += b;
    return r;
}

Derivation operator-(const Derivation& a, const Derivation& b) {
    if (a.rank() != b.rank() || a.degree() != b.degree()) throw DomainError("derivation mismatch in difference");
    std::vector<LieElement> values;
    for (int i = 1; i <= a.rank(); ++i) values.push_back(a.value(i) - b.value(i));
    return Derivation(a.rank(), a.degree(), std::move(values));
}

std::string to_string(const JohnsonDegree& d) {
    return d.value ? std::to_string(*d.value) : "infinity-capped(" + std::to_string(d.cap) + ")";
}

JohnsonDegree johnson_degree(const Endomorphism& f, int cap) {
    if (cap < 1) throw DomainError("cap must be at least 1");
    if (!is_ia(f)) throw DomainError("not in IA_n: the endomorphism acts nontrivially on H_1");
    std::optional<int> lowest;
    for (int i = 1; i <= f.rank(); ++i) {
        FiltrationDegree fd = filtration_degree(difference(f, i), cap + 1);
        if (fd.value && (!lowest || *fd.value < *lowest)) lowest = fd.value;
    }
    if (!lowest) return JohnsonDegree{std::nullopt, cap};
    return JohnsonDegree{*lowest - 1, cap};
}

Derivation tau(const Endomorphism& f, int s) {
    if (s < 1) throw DomainError("s must be at least 1");
    if (!is_ia(f)) throw DomainError("not in IA_n: the endomorphism acts nontrivially on H_1");
    std::vector<LieElement> values;
    for (int i = 1; i <= f.rank(); ++i) {
        try {
            values.push_back(leading_lie(difference(f, i), s + 1));
        } catch (const NotInFiltration& e) {
            throw NotInFiltration("below filtration depth: f(x" + idx(i) + ")x" + idx(i) + "^-1 " + e.what());
        }
    }
    return Derivation(f.rank(), s, std::move(values));
}

AutWord lambda_word(int n, std::span<const int> rs, int q) {
    if (rs.empty()) throw DomainError("index list must be nonempty");
    if (q < 2 || q > n) throw DomainError("q must satisfy 2 <= q <= n");
    for (int r : rs)
        if (r < 1 || r >= q) throw DomainError("indices must satisfy 1 <= r < q, got r = " + idx(r));
    AutWord acc = AutWord::letter(n, AutLetter::alpha(q, rs[0]));
    for (std::size_t t = 1; t < rs.size(); ++t) acc = commutator(acc, AutWord::letter(n, AutLetter::alpha(q, rs[t])));
    return acc;
}

Word lambda_x(int n, std::span<const int> rs) {
    if (rs.empty()) throw DomainError("index list must be nonempty");
    Word acc = Word::generator(n, rs[0]);
    for (std::size_t t = 1; t < rs.size(); ++t) acc = commutator(acc, Word::generator(n, rs[t]));
    return acc;
}

Prop62Report verify_prop62(int n, int q, std::vector<int> rs) {
    Prop62Report rep;
    rep.n = n;
    rep.q = q;
    rep.rs = rs;
    const AutWord lam = lambda_word(n, rs, q);
    const Word lx = lambda_x(n, rs);
    const Endomorphism f = autword_compile(lam);
    const Word xq = Word::generator(n, q);

    rep.action_ok = true;
    for (int t = 1; t <= n; ++t) {
        const Word expected = t == q ? lx * xq * invert(lx) : Word::generator(n, t);
        if (apply(f, Word::generator(n, t)) != expected) {
            rep.action_ok = false;
            rep.detail += "action differs on x" + idx(t) + "; ";
        }
    }
    const Word value_word = lx * xq * invert(lx) * invert(xq);
    rep.identity_ok = value_word == commutator(invert(lx), invert(xq));
    if (!rep.identity_ok) rep.detail += "commutator identity fails; ";

    if (lx.empty()) {
        rep.degenerate = rep.vacuous = true;
        rep.tau_ok = f == Endomorphism::identity(n);
        if (!rep.tau_ok) rep.detail += "Λ_x trivial but Λ is not the identity; ";
        rep.holds = rep.action_ok && rep.identity_ok && rep.tau_ok;
        if (rep.holds) rep.detail = "degenerate, vacuously true";
        return rep;
    }

    const int m = static_cast<int>(rs.size());
    int s = 0;
    for (int cap = m; s == 0; ++cap) {
        FiltrationDegree fd = filtration_degree(lx, cap);
        if (fd.value) s = *fd.value;
    }
    rep.degree = s;
    rep.degenerate = s != m;

    const JohnsonDegree jd = johnson_degree(f, s);
    if (jd.value != s) rep.detail += "Johnson degree " + to_string(jd) + " differs from " + idx(s) + "; ";
    Derivation got = tau(f, s);
    std::vector<LieElement> want;
    for (int t = 1; t <= n; ++t)
        want.push_back(t == q ? leading_lie(commutator(invert(lx), invert(xq)), s + 1) : LieElement(n, s + 1));
    rep.tau_ok = jd.value == s && got == Derivation(n, s, std::move(want));
    if (!rep.tau_ok) rep.detail += "tau value differs; ";
    rep.holds = rep.action_ok && rep.identity_ok && rep.tau_ok;
    if (rep.holds) rep.detail = rep.degenerate ? "degenerate nesting, checked at degree " + idx(s) : "ok";
    return rep;
}

namespace {

LieElement apply_to_basis(const Derivation& d, const LyndonWord& w, std::map<LyndonWord, LieElement>& memo) {
    if (auto it = memo.find(w); it != memo.end()) return it->second;
    LieElement out(d.rank(), w.degree() + d.degree());
    if (w.degree() == 1) {
        out = d.value(w.letters()[0]);
    } else {
        auto [u, v] = standard_factorization(w);
        out = lie_bracket(apply_to_basis(d, u, memo), LieElement::basis(v)) +
              lie_bracket(LieElement::basis(u), apply_to_basis(d, v, memo));
    }
    memo.emplace(w, out);
    return out;
}

}  // namespace

LieElement derivation_apply(const Derivation& d, const LieElement& e) {
    if (e.alphabet() != d.rank()) throw DomainError("Lie element alphabet does not match derivation rank");
    std::map<LyndonWord, LieElement> memo;
    LieElement out(d.rank(), e.degree() + d.degree());
    for (const auto& [w, c] : e.coordinates()) out += c * apply_to_basis(d, w, memo);
    return out;
}

Derivation derivation_bracket(const Derivation& d, const Derivation& e) {
    if (d.rank() != e.rank()) throw DomainError("rank mismatch in derivation bracket");
    std::vector<LieElement> values;
    for (int i = 1; i <= d.rank(); ++i)
        values.push_back(derivation_apply(e, d.value(i)) - derivation_apply(d, e.value(i)));
    return Derivation(d.rank(), d.degree() + e.degree(), std::move(values));
}

std::vector<Integer> flatten(const Derivation& d) {
    std::vector<Integer> row;
    for (const auto& v : d.values()) {
        auto part = dense_coordinates(v);
        row.insert(row.end(), part.begin(), part.end());
    }
    return row;
}

namespace {

AutWord bracket_word(int n, int m, const LyndonWord& w) {
    if (w.degree() == 1) return AutWord::letter(n, AutLetter::alpha(m, w.letters()[0]));
    auto [u, v] = standard_factorization(w);
    return commutator(bracket_word(n, m, u), bracket_word(n, m, v));
}

}  // namespace

InjectivityReport injectivity_matrix(int n, int k, int s) {
    if (n < 2 || k < 2 || k > n) throw DomainError("injectivity matrix requires 2 <= k <= n");
    if (s < 1) throw DomainError("s must be at least 1");
    InjectivityReport rep;
    rep.n = n;
    rep.k = k;
    rep.s = s;
    const int q = k - 1;
    rep.cols = static_cast<std::size_t>(n) * lyndon_words(n, s + 1).size();
    for (int m = k; m <= n; ++m) {
        for (const LyndonWord& w : lyndon_words(q, s)) {
            std::string label = "m=" + idx(m) + " " + to_string(bracketing(w));
            const Endomorphism f = autword_compile(bracket_word(n, m, w));
            rep.rows.push_back(flatten(tau(f, s)));
            rep.row_labels.push_back(std::move(label));
        }
    }
    rep.rank = exact_rank(rep.rows);
    rep.expected = Integer(n - k + 1) * witt_rank(q, s);
    return rep;
}

std::size_t LieMorphismReport::failures() const {
    return static_cast<std::size_t>(
        std::count_if(samples.begin(), samples.end(), [](const LieMorphismSample& x) { return !x.ok; }));
}

namespace {

class SampleSource {
public:
    explicit SampleSource(std::uint64_t seed) : rng_(seed) {}

    // Uniform-ish draw in [lo, hi]; modulo keeps it reproducible across standard libraries.
    int draw(int lo, int hi) { return lo + static_cast<int>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }

    AutWord letter(int n) {
        int i = draw(2, n);
        int j = draw(1, i - 1);
        AutWord w = AutWord::letter(n, AutLetter::alpha(i, j));
        return draw(0, 1) ? w : inverse(w);
    }

    AutWord product(int n, int max_len) {
        AutWord w(n);
        const int len = draw(1, max_len);
        for (int t = 0; t < len; ++t) w = w * letter(n);
        return w;
    }

    // Word with Johnson degree exactly `degree` (1 or 2).
    AutWord of_degree(int n, int degree) {
        for (int attempt = 0; attempt < 1000; ++attempt) {
            AutWord w = degree == 1 ? product(n, 3) : commutator(product(n, 2), product(n, 2));
            if (degree == 2 && draw(0, 2) == 0) w = w * commutator(letter(n), letter(n));
            if (w.empty()) continue;
            JohnsonDegree jd = johnson_degree(autword_compile(w), degree + 1);
            if (jd.value == degree) return w;
        }
        throw DomainError("could not sample a word of Johnson degree " + idx(degree));
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace

LieMorphismReport verify_lie_morphism(int samples, std::uint64_t seed, int max_rank) {
    if (samples < 0) throw DomainError("sample count must be nonnegative");
    if (max_rank < 3) throw DomainError("max rank must be at least 3");
    LieMorphismReport rep;
    rep.seed = seed;
    SampleSource src(seed);
    for (int t = 0; t < samples; ++t) {
        LieMorphismSample x;
        x.n = src.draw(3, max_rank);
        x.s = src.draw(1, 2);
        x.t = src.draw(1, 2);
        AutWord u = src.of_degree(x.n, x.s);
        AutWord v = src.of_degree(x.n, x.t);
        x.u = to_string(u);
        x.v = to_string(v);
        const Endomorphism fc = autword_compile(commutator(u, v));
        const int total = x.s + x.t;
        JohnsonDegree jd = johnson_degree(fc, total);
        if (jd.at_least() < total) {
            x.detail = "commutator has Johnson degree " + to_string(jd) + " < " + idx(total);
        } else {
            Derivation lhs = tau(fc, total);
            Derivation rhs = derivation_bracket(tau(autword_compile(u), x.s), tau(autword_compile(v), x.t));
            x.ok = lhs == rhs;
            x.detail = x.ok ? (lhs.is_zero() ? "ok (both sides zero)" : "ok") : "tau of commutator differs from bracket";
        }
        rep.samples.push_back(std::move(x));
    }
    return rep;
}

}  // namespace ajf
