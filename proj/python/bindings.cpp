#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ajf/automorphisms.hpp"
#include "ajf/errors.hpp"
#include "ajf/johnson.hpp"
#include "ajf/lielyndon.hpp"
#include "ajf/magnus.hpp"
#include "ajf/ranks.hpp"

namespace py = pybind11;
using namespace ajf;

namespace {

py::int_ to_py(const Integer& v) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

Integer from_py(const py::int_& v) { return Integer(py::str(v).cast<std::string>()); }

py::list to_py(const std::vector<Integer>& v) {
    py::list out;
    for (const auto& x : v) out.append(to_py(x));
    return out;
}

py::tuple word_tuple(std::span<const std::uint8_t> letters) {
    py::tuple t(letters.size());
    for (std::size_t i = 0; i < letters.size(); ++i) t[i] = py::int_(static_cast<int>(letters[i]));
    return t;
}

// {(i1, i2, ...): coefficient}
py::dict to_py(const LieElement& e) {
    py::dict d;
    for (const auto& [w, c] : e.coordinates()) d[word_tuple(w.letters())] = to_py(c);
    return d;
}

py::dict to_py(const Series& s) {
    py::dict d;
    for (const auto& [m, c] : s.terms()) d[word_tuple(m.letters())] = to_py(c);
    return d;
}

Series series_from_py(int q, int trunc, const py::dict& terms) {
    Series s(q, trunc);
    for (auto [k, v] : terms) {
        std::vector<std::uint8_t> letters;
        for (auto l : py::reinterpret_borrow<py::tuple>(k)) letters.push_back(static_cast<std::uint8_t>(l.cast<int>()));
        s.add_term(Monomial(std::move(letters)), from_py(py::reinterpret_borrow<py::int_>(v)));
    }
    return s;
}

py::object optional_int(const std::optional<int>& v) { return v ? py::object(py::int_(*v)) : py::object(py::none()); }

std::vector<py::dict> derivation_to_py(const Derivation& d) {
    std::vector<py::dict> out;
    for (const auto& v : d.values()) out.push_back(to_py(v));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact computations in the Johnson filtration of Aut(F_n)";

    static py::exception<ParseError> parse_error(m, "ParseError", PyExc_ValueError);
    static py::exception<NotInFiltration> not_in_filtration(m, "NotInFiltration", PyExc_ArithmeticError);
    static py::exception<NotLieElement> not_lie(m, "NotLieElement", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ParseError& e) {
            py::set_error(parse_error, e.what());
        } catch (const NotInFiltration& e) {
            py::set_error(not_in_filtration, e.what());
        } catch (const NotLieElement& e) {
            py::set_error(not_lie, e.what());
        }
    });

    m.def("witt_rank", [](int q, int s) { return to_py(witt_rank(q, s)); }, py::arg("q"), py::arg("s"));
    m.def(
        "lyndon_words",
        [](int q, int s) {
            py::list out;
            for (const auto& w : lyndon_words(q, s)) out.append(word_tuple(w.letters()));
            return out;
        },
        py::arg("q"), py::arg("s"));
    m.def(
        "bracketing",
        [](int q, std::vector<int> word) { return to_string(bracketing(LyndonWord(q, std::vector<std::uint8_t>(word.begin(), word.end())))); },
        py::arg("q"), py::arg("word"));
    m.def(
        "expand_lyndon",
        [](int q, std::vector<int> word) {
            return to_py(expand_bracketing(LyndonWord(q, std::vector<std::uint8_t>(word.begin(), word.end()))));
        },
        py::arg("q"), py::arg("word"), "Tensor expansion of the standard bracketing.");
    m.def(
        "lie_to_lyndon", [](int q, int s, const py::dict& terms) { return to_py(lie_to_lyndon(series_from_py(q, s, terms), s)); },
        py::arg("q"), py::arg("s"), py::arg("terms"));

    m.def("reduce_word", [](int n, const std::string& text) { return to_string(parse_word(n, text)); }, py::arg("n"),
          py::arg("word"));
    m.def(
        "magnus_expand", [](int n, const std::string& word, int trunc) { return to_py(magnus_expand(parse_word(n, word), trunc)); },
        py::arg("n"), py::arg("word"), py::arg("trunc"));
    m.def(
        "filtration_degree",
        [](int n, const std::string& word, int trunc) { return optional_int(filtration_degree(parse_word(n, word), trunc).value); },
        py::arg("n"), py::arg("word"), py::arg("trunc"), "None when the word lies deeper than the truncation.");
    m.def(
        "leading_lie", [](int n, const std::string& word, int s) { return to_py(leading_lie(parse_word(n, word), s)); },
        py::arg("n"), py::arg("word"), py::arg("s"));

    m.def(
        "compile_aut",
        [](int n, const std::string& aut) {
            const Endomorphism f = autword_compile(parse_autword(n, aut));
            std::vector<std::string> images;
            for (const auto& w : f.images()) images.push_back(to_string(w));
            return images;
        },
        py::arg("n"), py::arg("aut"), "Images of x1..xn; in u*v the factor u acts first.");
    m.def(
        "johnson_degree",
        [](int n, const std::string& aut, int cap) {
            return optional_int(johnson_degree(autword_compile(parse_autword(n, aut)), cap).value);
        },
        py::arg("n"), py::arg("aut"), py::arg("cap") = 4);
    m.def(
        "tau", [](int n, const std::string& aut, int s) { return derivation_to_py(tau(autword_compile(parse_autword(n, aut)), s)); },
        py::arg("n"), py::arg("aut"), py::arg("s"));

    m.def(
        "verify_mccool",
        [](int n) {
            const McCoolReport r = verify_mccool(n);
            py::dict d;
            d["checked"] = r.checked();
            d["failures"] = r.failures();
            return d;
        },
        py::arg("n"));
    m.def(
        "verify_prop62",
        [](int n, int q, std::vector<int> rs) {
            const Prop62Report r = verify_prop62(n, q, std::move(rs));
            py::dict d;
            d["holds"] = r.holds;
            d["degenerate"] = r.degenerate;
            d["vacuous"] = r.vacuous;
            d["degree"] = r.degree;
            d["detail"] = r.detail;
            return d;
        },
        py::arg("n"), py::arg("q"), py::arg("rs"));
    m.def(
        "injectivity",
        [](int n, int k, int s) {
            const InjectivityReport r = injectivity_matrix(n, k, s);
            py::dict d;
            d["rows"] = r.rows.size();
            d["cols"] = r.cols;
            d["rank"] = r.rank;
            d["expected"] = to_py(r.expected);
            d["ok"] = r.ok();
            return d;
        },
        py::arg("n"), py::arg("k"), py::arg("s"));
    m.def(
        "verify_lie_morphism",
        [](int samples, std::uint64_t seed, int max_rank) { return verify_lie_morphism(samples, seed, max_rank).failures(); },
        py::arg("samples") = 50, py::arg("seed") = 1, py::arg("max_rank") = 4, "Number of failing samples.");

    m.def("gr_rank_psn", [](int n, int s) { return to_py(gr_rank_psn(n, s)); }, py::arg("n"), py::arg("s"));
    m.def("summand_ranks", [](int n, int k, int s) { return to_py(summand_ranks(n, k, s).ranks); }, py::arg("n"),
          py::arg("k"), py::arg("s"));
    m.def("hi_lower_bound", [](int n, int s, int i) { return to_py(hi_lower_bound(n, s, i).value); }, py::arg("n"),
          py::arg("s"), py::arg("i"));
    m.def("ep_coeffs", [](int n, int s_max) { return to_py(ep_coeffs(n, s_max).coeffs); }, py::arg("n"), py::arg("s_max"));
    m.def(
        "growth_check",
        [](int n, int i, int s_min, int s_max) {
            const GrowthReport r = growth_check(n, i, s_min, s_max);
            py::dict d;
            d["bounds"] = to_py(r.bounds);
            d["passes"] = r.passes;
            d["increasing_from"] = r.increasing_from;
            return d;
        },
        py::arg("n"), py::arg("i"), py::arg("s_min"), py::arg("s_max"));
}
