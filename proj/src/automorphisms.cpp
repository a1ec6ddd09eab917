#include "ajf/automorphisms.hpp"

#include <sstream>

#include "ajf/errors.hpp"
#include "expr_parser.hpp"

namespace ajf {

namespace {

std::string idx(int v) { return std::to_string(v); }

void check_index(int n, int i, const char* what) {
    if (i < 1 || i > n) throw DomainError(std::string(what) + " index " + idx(i) + " not in 1.." + idx(n));
}

Endomorphism with_image(int n, int i, Word image) {
    std::vector<Word> images;
    for (int r = 1; r <= n; ++r) images.push_back(Word::generator(n, r));
    images[static_cast<std::size_t>(i - 1)] = std::move(image);
    return Endomorphism(std::move(images));
}

Word x(int n, int i) { return Word::generator(n, i); }

}  // namespace

Endomorphism::Endomorphism(std::vector<Word> images) : images_(std::move(images)) {
    if (images_.empty()) throw DomainError("endomorphism needs at least one generator");
    for (const Word& w : images_)
        if (w.rank() != rank()) throw DomainError("generator image has rank " + idx(w.rank()) + ", expected " + idx(rank()));
}

Endomorphism Endomorphism::identity(int rank) {
    if (rank < 1) throw DomainError("rank must be positive");
    std::vector<Word> images;
    for (int r = 1; r <= rank; ++r) images.push_back(Word::generator(rank, r));
    return Endomorphism(std::move(images));
}

const Word& Endomorphism::image(int i) const {
    check_index(rank(), i, "generator");
    return images_[static_cast<std::size_t>(i - 1)];
}

Word apply(const Endomorphism& f, const Word& w) {
    if (f.rank() != w.rank()) throw DomainError("rank mismatch: endomorphism " + idx(f.rank()) + ", word " + idx(w.rank()));
    std::vector<Letter> out;
    for (Letter l : w.letters()) {
        const Word& img = f.images()[static_cast<std::size_t>(generator_of(l) - 1)];
        if (l > 0)
            out.insert(out.end(), img.letters().begin(), img.letters().end());
        else
            for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it) out.push_back(-*it);
    }
    return Word(w.rank(), std::move(out));
}

Endomorphism compose(const Endomorphism& f, const Endomorphism& g) {
    if (f.rank() != g.rank()) throw DomainError("rank mismatch in compose");
    std::vector<Word> images;
    images.reserve(g.images().size());
    for (const Word& w : g.images()) images.push_back(apply(f, w));
    return Endomorphism(std::move(images));
}

std::vector<AbelianVector> abelianization(const Endomorphism& f) {
    std::vector<AbelianVector> rows;
    for (const Word& w : f.images()) rows.push_back(abelianize(w));
    return rows;
}

bool is_ia(const Endomorphism& f) {
    auto rows = abelianization(f);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            if (rows[i][j] != (i == j ? 1 : 0)) return false;
    return true;
}

Endomorphism restrict_to(const Endomorphism& f, int m) {
    if (m < 1 || m > f.rank()) throw DomainError("restriction rank out of range");
    std::vector<Word> images;
    for (int i = 1; i <= m; ++i) {
        std::vector<Letter> letters(f.image(i).letters().begin(), f.image(i).letters().end());
        for (Letter l : letters)
            if (generator_of(l) > m)
                throw DomainError("image of x" + idx(i) + " leaves the subgroup on x1..x" + idx(m));
        images.emplace_back(m, std::move(letters));
    }
    return Endomorphism(std::move(images));
}

Endomorphism alpha(int n, int i, int j) {
    validate(AutLetter::alpha(i, j), n);
    return with_image(n, i, x(n, j) * x(n, i) * invert(x(n, j)));
}

Endomorphism alpha_inverse(int n, int i, int j) {
    validate(AutLetter::alpha(i, j), n);
    return with_image(n, i, invert(x(n, j)) * x(n, i) * x(n, j));
}

Endomorphism bigA(int n, int i, int j, int k) {
    validate(AutLetter::bigA(i, j, k), n);
    return with_image(n, i, commutator(x(n, j), x(n, k)) * x(n, i));
}

Endomorphism bigA_inverse(int n, int i, int j, int k) {
    validate(AutLetter::bigA(i, j, k), n);
    return with_image(n, i, invert(commutator(x(n, j), x(n, k))) * x(n, i));
}

Endomorphism rho(int n, const std::vector<long>& p, const std::vector<long>& q) {
    validate(AutLetter::rho(p, q), n);
    std::vector<Word> images{x(n, 1), x(n, 2)};
    const Word w = commutator(x(n, 1), x(n, 2));
    for (int j = 3; j <= n; ++j) {
        auto t = static_cast<std::size_t>(j - 3);
        images.push_back(power(w, p[t]) * x(n, j) * power(w, q[t]));
    }
    return Endomorphism(std::move(images));
}

void validate(const AutLetter& l, int n) {
    if (n < 1) throw DomainError("rank must be positive");
    switch (l.kind) {
        case AutLetter::Kind::Alpha:
            check_index(n, l.i, "alpha");
            check_index(n, l.j, "alpha");
            if (l.i == l.j) throw DomainError("alpha(i,j) requires i != j, got i = j = " + idx(l.i));
            break;
        case AutLetter::Kind::BigA:
            check_index(n, l.i, "A");
            check_index(n, l.j, "A");
            check_index(n, l.k, "A");
            if (l.i == l.j || l.i == l.k) throw DomainError("A(i,j,k) requires i not in {j,k}");
            if (!(l.j < l.k)) throw DomainError("A(i,j,k) requires j < k");
            break;
        case AutLetter::Kind::Rho:
            if (n < 3) throw DomainError("rho requires n >= 3, got n = " + idx(n));
            if (l.p.size() != static_cast<std::size_t>(n - 2) || l.q.size() != static_cast<std::size_t>(n - 2))
                throw DomainError("rho needs n-2 = " + idx(n - 2) + " exponents in each of p and q");
            break;
    }
}

Endomorphism compile(const AutLetter& l, int n) {
    switch (l.kind) {
        case AutLetter::Kind::Alpha:
            return l.inverse ? alpha_inverse(n, l.i, l.j) : alpha(n, l.i, l.j);
        case AutLetter::Kind::BigA:
            return l.inverse ? bigA_inverse(n, l.i, l.j, l.k) : bigA(n, l.i, l.j, l.k);
        case AutLetter::Kind::Rho: {
            if (!l.inverse) return rho(n, l.p, l.q);
            // w is fixed, so negating both exponent vectors inverts.
            std::vector<long> p, q;
            for (long v : l.p) p.push_back(-v);
            for (long v : l.q) q.push_back(-v);
            return rho(n, p, q);
        }
    }
    throw DomainError("unknown automorphism letter");
}

std::string to_string(const AutLetter& l) {
    std::ostringstream os;
    switch (l.kind) {
        case AutLetter::Kind::Alpha: os << "a(" << l.i << ',' << l.j << ')'; break;
        case AutLetter::Kind::BigA: os << "A(" << l.i << ',' << l.j << ',' << l.k << ')'; break;
        case AutLetter::Kind::Rho: {
            os << "rho(";
            for (std::size_t t = 0; t < l.p.size(); ++t) os << (t ? "," : "") << l.p[t];
            os << ';';
            for (std::size_t t = 0; t < l.q.size(); ++t) os << (t ? "," : "") << l.q[t];
            os << ')';
            break;
        }
    }
    if (l.inverse) os << "^-1";
    return os.str();
}

AutWord::AutWord(int rank) : rank_(rank) {
    if (rank < 1) throw DomainError("rank must be positive");
}

AutWord::AutWord(int rank, std::vector<AutLetter> letters) : AutWord(rank) {
    for (AutLetter& l : letters) {
        validate(l, rank);
        if (!letters_.empty() && letters_.back() == l.inverted())
            letters_.pop_back();
        else
            letters_.push_back(std::move(l));
    }
}

AutWord AutWord::letter(int rank, AutLetter l) { return AutWord(rank, {std::move(l)}); }

AutWord operator*(const AutWord& u, const AutWord& v) {
    if (u.rank() != v.rank()) throw DomainError("rank mismatch in automorphism product");
    std::vector<AutLetter> letters = u.letters();
    letters.insert(letters.end(), v.letters().begin(), v.letters().end());
    return AutWord(u.rank(), std::move(letters));
}

AutWord inverse(const AutWord& u) {
    std::vector<AutLetter> letters;
    for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it) letters.push_back(it->inverted());
    return AutWord(u.rank(), std::move(letters));
}

AutWord power(const AutWord& u, long k) {
    AutWord base = k < 0 ? inverse(u) : u;
    AutWord out(u.rank());
    for (long e = k < 0 ? -k : k; e > 0; --e) out = out * base;
    return out;
}

AutWord commutator(const AutWord& u, const AutWord& v) { return inverse(u) * inverse(v) * u * v; }

Endomorphism autword_compile(const AutWord& aw) {
    Endomorphism f = Endomorphism::identity(aw.rank());
    // Letters act left to right: each new letter is applied after the prefix.
    for (const AutLetter& l : aw.letters()) f = compose(compile(l, aw.rank()), f);
    return f;
}

std::string to_string(const AutWord& aw) {
    if (aw.empty()) return "1";
    std::string out;
    for (const AutLetter& l : aw.letters()) {
        if (!out.empty()) out += '*';
        out += to_string(l);
    }
    return out;
}

namespace {

struct AutOps {
    using Value = AutWord;
    int rank;

    AutWord identity() const { return AutWord(rank); }
    AutWord mul(const AutWord& a, const AutWord& b) const { return a * b; }
    AutWord pow(const AutWord& a, long k) const { return power(a, k); }
    AutWord comm(const AutWord& a, const AutWord& b) const { return commutator(a, b); }
    bool starts_atom(char c) const { return c == 'a' || c == 'A' || c == 'r'; }
    const char* atom_description() const { return "'a(i,j)', 'A(i,j,k)' or 'rho(...)'"; }

    AutWord atom(detail::Cursor& cur) const {
        const std::size_t at = cur.position();
        AutLetter l;
        if (cur.accept_keyword("rho")) {
            cur.expect('(', "'(' after rho");
            std::vector<long> p, q;
            p.push_back(cur.integer());
            while (cur.accept(',')) p.push_back(cur.integer());
            cur.expect(';', "';' separating p and q exponents");
            q.push_back(cur.integer());
            while (cur.accept(',')) q.push_back(cur.integer());
            cur.expect(')', "')'");
            l = AutLetter::rho(std::move(p), std::move(q));
        } else if (cur.accept('a')) {
            cur.expect('(', "'(' after a");
            long i = cur.integer();
            cur.expect(',', "','");
            long j = cur.integer();
            cur.expect(')', "')'");
            l = AutLetter::alpha(static_cast<int>(i), static_cast<int>(j));
        } else if (cur.accept('A')) {
            cur.expect('(', "'(' after A");
            long i = cur.integer();
            cur.expect(',', "','");
            long j = cur.integer();
            cur.expect(',', "','");
            long k = cur.integer();
            cur.expect(')', "')'");
            l = AutLetter::bigA(static_cast<int>(i), static_cast<int>(j), static_cast<int>(k));
        } else {
            cur.fail("expected 'a(i,j)', 'A(i,j,k)' or 'rho(...)'");
        }
        try {
            validate(l, rank);
        } catch (const DomainError& e) {
            throw ParseError(at, e.what());
        }
        return AutWord::letter(rank, std::move(l));
    }
};

void require_upper_alpha(const AutLetter& l) {
    if (l.kind != AutLetter::Kind::Alpha) throw DomainError("expected an alpha letter, got " + to_string(l));
    if (!(l.i > l.j)) throw DomainError("expected an upper-triangular letter a(k,i) with k > i, got " + to_string(l));
}

}  // namespace

AutWord parse_autword(int rank, const std::string& text) {
    if (rank < 1) throw DomainError("rank must be positive");
    return detail::ExprParser<AutOps>(text, AutOps{rank}).parse();
}

AutWord project_pi(const AutWord& aw) {
    const int n = aw.rank();
    if (n < 2) throw DomainError("projection needs n >= 2");
    std::vector<AutLetter> kept;
    for (const AutLetter& l : aw.letters()) {
        require_upper_alpha(l);
        if (l.i != n && l.j != n) kept.push_back(l);
    }
    return AutWord(n - 1, std::move(kept));
}

AutWord section_sigma(const AutWord& aw) {
    for (const AutLetter& l : aw.letters()) require_upper_alpha(l);
    return AutWord(aw.rank() + 1, aw.letters());
}

std::vector<std::vector<AutLetter>> subgroup_factors(const SubgroupSpec& spec) {
    const int n = spec.n, k = spec.k;
    auto factor = [](int m, int j) {
        std::vector<AutLetter> gens;
        for (int r = 1; r <= j; ++r) gens.push_back(AutLetter::alpha(m, r));
        return gens;
    };
    if (spec.kind == SubgroupSpec::Kind::G) {
        if (!(1 <= spec.j && spec.j <= k - 1 && k - 1 <= n - 1))
            throw DomainError("G(n,k,j) requires 1 <= j <= k-1 <= n-1, got G(" + idx(n) + "," + idx(k) + "," +
                              idx(spec.j) + ")");
        return {factor(k, spec.j)};
    }
    if (!(2 <= k && k <= n))
        throw DomainError("H(n,k) requires 2 <= k <= n, got H(" + idx(n) + "," + idx(k) + ")");
    std::vector<std::vector<AutLetter>> factors;
    for (int m = k; m <= n; ++m) factors.push_back(factor(m, k - 1));
    return factors;
}

std::vector<AutLetter> subgroup_generators(const SubgroupSpec& spec) {
    std::vector<AutLetter> all;
    for (auto& f : subgroup_factors(spec)) all.insert(all.end(), f.begin(), f.end());
    return all;
}

std::size_t McCoolReport::failures() const {
    std::size_t total = 0;
    for (const auto& f : families) total += f.failures.size();
    return total;
}

std::size_t McCoolReport::checked() const {
    std::size_t total = 0;
    for (const auto& f : families) total += f.checked;
    return total;
}

McCoolReport verify_mccool(int n) {
    if (n < 3) throw DomainError("McCool relations need n >= 3, got n = " + idx(n));
    auto a = [n](int i, int j) { return AutWord::letter(n, AutLetter::alpha(i, j)); };
    const Endomorphism id = Endomorphism::identity(n);
    auto name = [](std::initializer_list<int> t) {
        std::string s = "(";
        for (int v : t) s += (s.size() > 1 ? "," : "") + std::to_string(v);
        return s + ")";
    };

    McCoolReport report{n, {}};
    report.families = {
        {1, "a(i,j)*a(k,j)*a(i,k) = a(i,k)*a(i,j)*a(k,j), i,j,k distinct", 0, {}},
        {2, "[a(k,j),a(s,t)] = 1, {j,k} and {s,t} disjoint", 0, {}},
        {3, "[a(i,j),a(k,j)] = 1, i,j,k distinct", 0, {}},
        {4, "[a(i,j)*a(k,j),a(i,k)] = 1, i,j,k distinct", 0, {}},
    };
    auto record = [](RelationFamily& fam, bool ok, const std::string& where) {
        ++fam.checked;
        if (!ok) fam.failures.push_back(where);
    };

    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                if (i == j || j == k || i == k) continue;
                const std::string where = "(i,j,k)=" + name({i, j, k});
                record(report.families[0],
                       autword_compile(a(i, j) * a(k, j) * a(i, k)) == autword_compile(a(i, k) * a(i, j) * a(k, j)),
                       where);
                record(report.families[2], autword_compile(commutator(a(i, j), a(k, j))) == id, where);
                record(report.families[3], autword_compile(commutator(a(i, j) * a(k, j), a(i, k))) == id, where);
            }
    for (int k = 1; k <= n; ++k)
        for (int j = 1; j <= n; ++j)
            for (int s = 1; s <= n; ++s)
                for (int t = 1; t <= n; ++t) {
                    if (k == j || s == t) continue;
                    if (j == s || j == t || k == s || k == t) continue;
                    record(report.families[1], autword_compile(commutator(a(k, j), a(s, t))) == id,
                           "(k,j,s,t)=" + name({k, j, s, t}));
                }
    return report;
}

CommutingReport verify_commuting(int n, int k) {
    auto factors = subgroup_factors(SubgroupSpec::H(n, k));
    CommutingReport report{n, k, 0, {}};
    const Endomorphism id = Endomorphism::identity(n);
    for (std::size_t f1 = 0; f1 < factors.size(); ++f1)
        for (std::size_t f2 = f1 + 1; f2 < factors.size(); ++f2)
            for (const AutLetter& x : factors[f1])
                for (const AutLetter& y : factors[f2]) {
                    ++report.checked;
                    if (autword_compile(commutator(AutWord::letter(n, x), AutWord::letter(n, y))) != id)
                        report.failures.push_back("[" + to_string(x) + "," + to_string(y) + "]");
                }
    return report;
}

}  // namespace ajf
