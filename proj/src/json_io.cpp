#include "ajf/json_io.hpp"

#include "ajf/errors.hpp"

namespace ajf::json_io {

json to_json(const LieElement& e) {
    json arr = json::array();
    for (const auto& [w, c] : e.coordinates()) {
        std::vector<int> letters(w.letters().begin(), w.letters().end());
        arr.push_back({{"word", letters}, {"coeff", c.get_str()}});
    }
    return arr;
}

LieElement lie_element_from_json(int alphabet, int degree, const json& j) {
    if (!j.is_array()) throw DomainError("Lie element JSON must be an array");
    LieElement e(alphabet, degree);
    for (const auto& item : j) {
        std::vector<std::uint8_t> letters;
        for (int l : item.at("word").get<std::vector<int>>()) {
            if (l < 1 || l > 255) throw DomainError("letter out of range in Lie element JSON");
            letters.push_back(static_cast<std::uint8_t>(l));
        }
        Integer c;
        if (c.set_str(item.at("coeff").get<std::string>(), 10) != 0) throw DomainError("bad integer in Lie element JSON");
        e.add_term(LyndonWord(alphabet, std::move(letters)), c);
    }
    return e;
}

json to_json(const Derivation& d) {
    json values = json::object();
    for (int i = 1; i <= d.rank(); ++i) values["x" + std::to_string(i)] = to_json(d.value(i));
    return {{"degree", d.degree()}, {"values", values}};
}

Derivation derivation_from_json(int rank, const json& j) {
    const int s = j.at("degree").get<int>();
    std::vector<LieElement> values;
    for (int i = 1; i <= rank; ++i) values.push_back(lie_element_from_json(rank, s + 1, j.at("values").at("x" + std::to_string(i))));
    return Derivation(rank, s, std::move(values));
}

json to_json(const Series& s) {
    json arr = json::array();
    for (const auto& [m, c] : s.terms()) {
        std::vector<int> letters(m.letters().begin(), m.letters().end());
        arr.push_back({{"monomial", letters}, {"coeff", c.get_str()}});
    }
    return arr;
}

json to_json(const InjectivityReport& r) {
    return {{"rows", r.rows.size()}, {"cols", r.cols}, {"rank", r.rank}, {"expected", r.expected.get_ui()}};
}

json to_json(const RankTable& t) {
    json ranks = json::array();
    for (const auto& r : t.ranks) ranks.push_back(r.get_str());
    return {{"n", t.n}, {"k", t.k}, {"s", t.s}, {"ranks", ranks}};
}

}  // namespace ajf::json_io
