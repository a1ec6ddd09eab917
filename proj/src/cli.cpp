#include "ajf/cli.hpp"

#include <CLI11.hpp>

#include <functional>
#include <iomanip>
#include <sstream>

#include "ajf/automorphisms.hpp"
#include "ajf/errors.hpp"
#include "ajf/johnson.hpp"
#include "ajf/json_io.hpp"
#include "ajf/lielyndon.hpp"
#include "ajf/magnus.hpp"
#include "ajf/ranks.hpp"

namespace ajf::cli {

namespace {

using json_io::json;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct Context {
    std::ostream& out;
    std::string format = "text";

    bool as_json() const { return format == "json"; }
    void emit(const json& j) const { out << j.dump(2) << '\n'; }
};

void add_format(CLI::App* cmd, Context& ctx) {
    cmd->add_option("--format", ctx.format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

std::vector<int> parse_index_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw DomainError("--rs expects comma-separated integers, got '" + text + "'");
        }
        if (used != item.size()) throw DomainError("--rs expects comma-separated integers, got '" + text + "'");
        out.push_back(v);
    }
    if (out.empty()) throw DomainError("--rs must list at least one index");
    return out;
}

std::string join(const std::vector<int>& v) {
    std::string s;
    for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
}

json degree_json(const std::optional<int>& value, const std::string& text) {
    return value ? json(*value) : json(text);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations in the Johnson filtration of Aut(F_n)", "ajf"};
    app.require_subcommand(1);
    Context ctx{out};
    std::function<int()> action;

    int q = 0, s = 0, n = 0, k = 0, i = 0, trunc = 0, cap = 4, smax = 0, smin = 1, samples = 50;
    std::uint64_t seed = 1;
    std::string expr, rs_text;

    auto* witt = app.add_subcommand("witt", "Rank d_s(V_q) of the free Lie algebra");
    witt->add_option("--q", q, "Number of generators")->required()->check(CLI::Range(1, 255));
    witt->add_option("--s", s, "Degree")->required()->check(CLI::PositiveNumber);
    add_format(witt, ctx);
    witt->callback([&] {
        action = [&] {
            Integer d = witt_rank(q, s);
            if (ctx.as_json())
                ctx.emit({{"q", q}, {"s", s}, {"rank", d.get_str()}});
            else
                out << d.get_str() << '\n';
            return kOk;
        };
    });

    auto* lyndon = app.add_subcommand("lyndon", "Lyndon basis of L_s[V_q] with standard bracketings");
    lyndon->add_option("--q", q, "Number of generators")->required()->check(CLI::Range(1, 255));
    lyndon->add_option("--s", s, "Degree")->required()->check(CLI::PositiveNumber);
    add_format(lyndon, ctx);
    lyndon->callback([&] {
        action = [&] {
            const auto& words = lyndon_words(q, s);
            if (ctx.as_json()) {
                json arr = json::array();
                for (const auto& w : words)
                    arr.push_back({{"word", std::vector<int>(w.letters().begin(), w.letters().end())},
                                   {"bracket", to_string(bracketing(w))}});
                ctx.emit({{"q", q}, {"s", s}, {"count", words.size()}, {"words", arr}});
            } else {
                for (const auto& w : words)
                    out << '(' << join(std::vector<int>(w.letters().begin(), w.letters().end())) << ")  "
                        << to_string(bracketing(w)) << '\n';
            }
            return kOk;
        };
    });

    auto* magnus = app.add_subcommand("magnus", "Magnus expansion and lower central series degree of a word");
    magnus->add_option("--n", n, "Rank of the free group")->required()->check(CLI::Range(1, 255));
    magnus->add_option("--word", expr, "Word, e.g. \"[x1,x2]*x3^-1\"")->required();
    magnus->add_option("--trunc", trunc, "Truncation degree")->required()->check(CLI::PositiveNumber);
    add_format(magnus, ctx);
    magnus->callback([&] {
        action = [&] {
            const Word w = parse_word(n, expr);
            const Series m = magnus_expand(w, trunc);
            const FiltrationDegree fd{m.lowest_positive_degree(), trunc};
            std::optional<LieElement> lead;
            if (fd.value) lead = leading_lie(w, *fd.value);
            if (ctx.as_json()) {
                json j{{"n", n},
                       {"word", to_string(w)},
                       {"trunc", trunc},
                       {"series", json_io::to_json(m)},
                       {"filtration_degree", degree_json(fd.value, to_string(fd))}};
                if (lead) j["leading"] = json_io::to_json(*lead);
                ctx.emit(j);
            } else {
                out << "word: " << to_string(w) << '\n';
                out << "magnus: " << to_string(m) << '\n';
                out << "filtration degree: " << to_string(fd) << '\n';
                if (lead) out << "leading Lie term: " << to_string(*lead) << '\n';
            }
            return kOk;
        };
    });

    auto* tau_cmd = app.add_subcommand("tau", "Johnson degree and Johnson homomorphism of an automorphism word");
    tau_cmd->add_option("--n", n, "Rank of the free group")->required()->check(CLI::Range(1, 255));
    tau_cmd->add_option("--aut", expr, "Automorphism word; in u*v, u acts first")->required();
    tau_cmd->add_option("--cap", cap, "Largest Johnson degree examined")->check(CLI::PositiveNumber);
    add_format(tau_cmd, ctx);
    tau_cmd->callback([&] {
        action = [&] {
            const AutWord aw = parse_autword(n, expr);
            const Endomorphism f = autword_compile(aw);
            const JohnsonDegree jd = johnson_degree(f, cap);
            const int deg = jd.at_least();
            const Derivation d = tau(f, deg);
            if (ctx.as_json()) {
                json j = json_io::to_json(d);
                j["johnson_degree"] = degree_json(jd.value, to_string(jd));
                j["aut"] = to_string(aw);
                ctx.emit(j);
            } else {
                out << "aut: " << to_string(aw) << '\n';
                out << "johnson degree: " << to_string(jd) << '\n';
                out << "tau_" << deg << ":\n";
                for (int t = 1; t <= n; ++t) out << "  x" << t << " -> " << to_string(d.value(t)) << '\n';
            }
            return kOk;
        };
    });

    auto* verify = app.add_subcommand("verify", "Mechanical verification suites");
    verify->require_subcommand(1);

    auto* mccool = verify->add_subcommand("mccool", "McCool relation families on compiled endomorphisms");
    mccool->add_option("--n", n, "Rank")->required()->check(CLI::Range(3, 255));
    add_format(mccool, ctx);
    mccool->callback([&] {
        action = [&] {
            const McCoolReport rep = verify_mccool(n);
            const bool ok = rep.failures() == 0;
            if (ctx.as_json()) {
                json fams = json::array();
                for (const auto& f : rep.families)
                    fams.push_back({{"id", f.id}, {"relation", f.description}, {"checked", f.checked}, {"failures", f.failures}});
                ctx.emit({{"n", n}, {"families", fams}, {"failures", rep.failures()}, {"ok", ok}});
            } else {
                out << (ok ? "OK" : "FAIL") << ": " << rep.families.size() << " relation families, " << rep.failures()
                    << " failures\n";
                for (const auto& f : rep.families)
                    for (const auto& where : f.failures) out << "  family " << f.id << " fails at " << where << '\n';
            }
            return ok ? kOk : kVerifyFailed;
        };
    });

    auto* commuting = verify->add_subcommand("commuting", "Generators of distinct factors of H(n,k) commute");
    commuting->add_option("--n", n, "Rank")->required()->check(CLI::Range(2, 255));
    commuting->add_option("--k", k, "Subgroup parameter, 2 <= k <= n")->required();
    add_format(commuting, ctx);
    commuting->callback([&] {
        action = [&] {
            const CommutingReport rep = verify_commuting(n, k);
            const bool ok = rep.failures.empty();
            if (ctx.as_json()) {
                ctx.emit({{"n", n}, {"k", k}, {"checked", rep.checked}, {"failures", rep.failures}, {"ok", ok}});
            } else {
                out << (ok ? "OK" : "FAIL") << ": H(" << n << "," << k << "), " << rep.checked << " pairs checked, "
                    << rep.failures.size() << " failures\n";
                for (const auto& f : rep.failures) out << "  " << f << " != 1\n";
            }
            return ok ? kOk : kVerifyFailed;
        };
    });

    auto* prop62 = verify->add_subcommand("prop62", "Action and Johnson value of a nested commutator of α_{q,r}");
    prop62->add_option("--n", n, "Rank")->required()->check(CLI::Range(2, 255));
    prop62->add_option("--q", q, "Index q")->required();
    prop62->add_option("--rs", rs_text, "Comma-separated indices r_1,...,r_m < q")->required();
    add_format(prop62, ctx);
    prop62->callback([&] {
        action = [&] {
            const Prop62Report rep = verify_prop62(n, q, parse_index_list(rs_text));
            if (ctx.as_json()) {
                ctx.emit({{"n", n},
                          {"q", q},
                          {"rs", rep.rs},
                          {"holds", rep.holds},
                          {"degenerate", rep.degenerate},
                          {"vacuous", rep.vacuous},
                          {"degree", rep.degree},
                          {"detail", rep.detail}});
            } else {
                const char* tag = !rep.holds ? "FAIL" : rep.vacuous ? "VACUOUS" : "OK";
                out << tag << ": n=" << n << " q=" << q << " rs=" << join(rep.rs);
                if (!rep.vacuous) out << " degree " << rep.degree;
                out << " (" << rep.detail << ")\n";
            }
            return rep.holds ? kOk : kVerifyFailed;
        };
    });

    auto* inj = verify->add_subcommand("injectivity", "Exact rank of τ_s on the Lie algebra of H(n,k)");
    inj->add_option("--n", n, "Rank")->required()->check(CLI::Range(2, 255));
    inj->add_option("--k", k, "Subgroup parameter")->required();
    inj->add_option("--s", s, "Degree")->required()->check(CLI::PositiveNumber);
    add_format(inj, ctx);
    inj->callback([&] {
        action = [&] {
            const InjectivityReport rep = injectivity_matrix(n, k, s);
            if (ctx.as_json())
                ctx.emit(json_io::to_json(rep));
            else
                out << (rep.ok() ? "OK" : "FAIL") << ": rows=" << rep.rows.size() << " cols=" << rep.cols
                    << " rank=" << rep.rank << " expected=" << rep.expected.get_str() << '\n';
            return rep.ok() ? kOk : kVerifyFailed;
        };
    });

    auto* liem = verify->add_subcommand("lie-morphism", "τ_{s+t}([u,v]) equals the derivation bracket");
    liem->add_option("--n", n, "Largest rank sampled (3 or more)")->default_val(4)->check(CLI::Range(3, 8));
    liem->add_option("--samples", samples, "Number of random pairs")->default_val(50)->check(CLI::NonNegativeNumber);
    liem->add_option("--seed", seed, "Random seed")->default_val(1);
    add_format(liem, ctx);
    liem->callback([&] {
        action = [&] {
            const LieMorphismReport rep = verify_lie_morphism(samples, seed, n);
            const bool ok = rep.failures() == 0;
            if (ctx.as_json()) {
                json arr = json::array();
                for (const auto& x : rep.samples)
                    arr.push_back({{"n", x.n}, {"s", x.s}, {"t", x.t}, {"u", x.u}, {"v", x.v}, {"ok", x.ok}, {"detail", x.detail}});
                ctx.emit({{"seed", seed}, {"samples", arr}, {"failures", rep.failures()}, {"ok", ok}});
            } else {
                out << (ok ? "OK" : "FAIL") << ": " << rep.samples.size() << " samples, " << rep.failures()
                    << " failures (seed " << seed << ")\n";
                for (const auto& x : rep.samples)
                    if (!x.ok) out << "  n=" << x.n << " u=" << x.u << " v=" << x.v << ": " << x.detail << '\n';
            }
            return ok ? kOk : kVerifyFailed;
        };
    });

    auto* ranks = app.add_subcommand("ranks", "Closed-form rank bookkeeping");
    ranks->require_subcommand(1);

    auto* gr = ranks->add_subcommand("gr", "Rank of Γ^s PΣ_n^+ / Γ^{s+1} PΣ_n^+");
    gr->add_option("--n", n, "Rank")->required();
    gr->add_option("--s", s, "Degree")->required();
    add_format(gr, ctx);
    gr->callback([&] {
        action = [&] {
            Integer r = gr_rank_psn(n, s);
            if (ctx.as_json())
                ctx.emit({{"n", n}, {"s", s}, {"rank", r.get_str()}});
            else
                out << r.get_str() << '\n';
            return kOk;
        };
    });

    auto* summand = ranks->add_subcommand("summand", "Per-degree ranks of the tensor-product summand");
    summand->add_option("--n", n, "Rank")->required();
    summand->add_option("--k", k, "Subgroup parameter")->required();
    summand->add_option("--s", s, "Degree")->required();
    add_format(summand, ctx);
    summand->callback([&] {
        action = [&] {
            const RankTable t = summand_ranks(n, k, s);
            if (ctx.as_json()) {
                ctx.emit(json_io::to_json(t));
            } else {
                out << std::left << std::setw(8) << "degree" << "rank\n";
                for (std::size_t d = 0; d < t.ranks.size(); ++d)
                    out << std::left << std::setw(8) << d << t.ranks[d].get_str() << '\n';
            }
            return kOk;
        };
    });

    auto* bound = ranks->add_subcommand("bound", "Lower bound for the rank of H^i(J_n^s)");
    bound->add_option("--n", n, "Rank")->required();
    bound->add_option("--s", s, "Degree")->required();
    bound->add_option("--i", i, "Cohomological degree, 1 <= i <= n-2")->required();
    add_format(bound, ctx);
    bound->callback([&] {
        action = [&] {
            const LowerBound b = hi_lower_bound(n, s, i);
            if (ctx.as_json())
                ctx.emit({{"n", n},
                          {"s", s},
                          {"i", i},
                          {"bound", b.value.get_str()},
                          {"power_bound", b.power_bound.get_str()},
                          {"best_k", b.best_k},
                          {"best_summand", b.best_summand.get_str()}});
            else
                out << b.value.get_str() << "  (k=" << b.best_k << " summand " << b.best_summand.get_str()
                    << ", power bound " << b.power_bound.get_str() << ")\n";
            return kOk;
        };
    });

    auto* growth = ranks->add_subcommand("growth", "Growth of the H^i lower bound in s");
    growth->add_option("--n", n, "Rank")->required();
    growth->add_option("--i", i, "Cohomological degree")->required();
    growth->add_option("--smin", smin, "First degree")->default_val(1);
    growth->add_option("--smax", smax, "Last degree")->required();
    add_format(growth, ctx);
    growth->callback([&] {
        action = [&] {
            const GrowthReport r = growth_check(n, i, smin, smax);
            if (ctx.as_json()) {
                json bounds = json::array();
                for (const auto& b : r.bounds) bounds.push_back(b.get_str());
                ctx.emit({{"n", n},
                          {"i", i},
                          {"smin", smin},
                          {"smax", smax},
                          {"bounds", bounds},
                          {"monotone", r.monotone},
                          {"increasing_from", r.increasing_from},
                          {"passes", r.passes}});
            } else {
                out << std::left << std::setw(6) << "s" << "bound\n";
                for (std::size_t t = 0; t < r.bounds.size(); ++t)
                    out << std::left << std::setw(6) << (smin + static_cast<int>(t)) << r.bounds[t].get_str() << '\n';
                out << (r.passes ? "OK" : "FAIL") << ": strictly increasing from s=" << r.increasing_from
                    << (r.monotone ? "" : " (not monotone over the whole range)") << '\n';
            }
            return r.passes ? kOk : kVerifyFailed;
        };
    });

    auto* ep = app.add_subcommand("ep", "Euler-Poincare coefficients n*d_{s+1}(V_n) of Der(L[V_n])");
    ep->add_option("--n", n, "Rank")->required();
    ep->add_option("--smax", smax, "Last degree")->required();
    add_format(ep, ctx);
    ep->callback([&] {
        action = [&] {
            const SeriesCoefficients c = ep_coeffs(n, smax);
            if (ctx.as_json()) {
                json coeffs = json::array();
                for (const auto& x : c.coeffs) coeffs.push_back(x.get_str());
                ctx.emit({{"n", n}, {"coeffs", coeffs}});
            } else {
                out << std::left << std::setw(6) << "s" << "coeff\n";
                for (std::size_t t = 0; t < c.coeffs.size(); ++t)
                    out << std::left << std::setw(6) << (t + 1) << c.coeffs[t].get_str() << '\n';
            }
            return kOk;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    if (!action) return kUsage;
    try {
        return action();
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n' << "  " << expr << '\n' << "  " << std::string(e.position(), ' ') << "^\n";
        return kUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const NotInFiltration& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

}  // namespace ajf::cli
