// Command-line front end: exact linear-equation solving in quotient rings
// R/mR (integers or F_p[x]), Zelisko group membership, Smith forms and the
// bundled reference computations. Machine output is selected with --json and
// is byte-deterministic for a fixed request and seed.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "golden.hpp"
#include "quotring/quotring.hpp"

namespace {

using namespace quotring;
using nlohmann::json;

struct Opts {
    std::string ring = "int";
    std::string mod;
    bool emit_json = false;
    std::uint64_t bound = kEnumBound;
    std::uint64_t seed = 0;
    std::string a, b, x, y;
    std::string phi;
    std::string matrix, matrix_a, matrix_b;
    std::string perm;
    std::string row;
    std::string mod_range;
    bool all = false;
    bool generating = false;
};

void emit(const Opts& o, const json& data, const std::vector<std::string>& human,
          const std::vector<std::string>& diagnostics = {}) {
    if (o.emit_json) {
        json envelope{{"status", "ok"}, {"data", data}, {"diagnostics", diagnostics}};
        std::cout << envelope.dump() << "\n";
        return;
    }
    for (const std::string& line : human) std::cout << line << "\n";
    for (const std::string& d : diagnostics) std::cout << "note: " << d << "\n";
}

void emit_error(const Opts& o, const std::string& kind, const std::string& message) {
    if (o.emit_json) {
        json envelope{{"status", "error"},
                      {"data", {{"error", kind}, {"message", message}}},
                      {"diagnostics", json::array()}};
        std::cout << envelope.dump() << "\n";
        return;
    }
    std::cout << "error (" << kind << "): " << message << "\n";
}

// exit code 1: the requested object does not exist mathematically
// exit code 2: ill-formed input or out-of-scope request
template <class F>
int guarded(const Opts& o, F&& f) {
    try {
        return f();
    } catch (const Unsolvable& e) {
        emit_error(o, "Unsolvable", e.what());
        return 1;
    } catch (const NotAMember& e) {
        emit_error(o, "NotAMember", e.what());
        return 1;
    } catch (const SearchExhausted& e) {
        emit_error(o, "SearchExhausted", e.what());
        return 1;
    } catch (const SamplingExhausted& e) {
        emit_error(o, "SamplingExhausted", e.what());
        return 1;
    } catch (const ParseError& e) {
        emit_error(o, "ParseError", e.what());
        return 2;
    } catch (const Error& e) {
        emit_error(o, "InvalidInput", e.what());
        return 2;
    } catch (const std::exception& e) {
        emit_error(o, "InternalError", e.what());
        return 2;
    }
}

template <class F>
int with_ring(const Opts& o, F&& f) {
    return guarded(o, [&]() {
        if (o.ring == "int") return f(IntegerRing{});
        if (o.ring.rfind("fpx:", 0) == 0) {
            std::uint64_t p = 0;
            try {
                std::size_t used = 0;
                p = std::stoull(o.ring.substr(4), &used);
                if (used != o.ring.size() - 4) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw ParseError("bad ring spec, expected fpx:<prime>");
            }
            if (p >= (1ull << 31)) throw ParseError("fpx prime out of range");
            return f(FpPolyRing(static_cast<std::uint32_t>(p)));
        }
        throw ParseError("unknown ring '" + o.ring + "', expected int or fpx:<p>");
    });
}

template <euclidean_domain R>
Modulus<R> need_modulus(const R& ring, const Opts& o) {
    if (o.mod.empty()) throw ParseError("--mod is required for this command");
    return Modulus<R>(ring, parse_elem(ring, o.mod));
}

template <euclidean_domain R>
Residue<R> need_residue(const Modulus<R>& m, const std::string& text,
                        const std::string& flag) {
    if (text.empty()) throw ParseError(flag + " is required for this command");
    return m.reduce(parse_elem(m.ring(), text));
}

template <euclidean_domain R>
json residue_list_json(const R& ring, const std::vector<Residue<R>>& xs) {
    json out = json::array();
    for (const Residue<R>& x : xs) out.push_back(to_text(ring, x.rep()));
    return out;
}

template <euclidean_domain R>
std::string residue_list_text(const R& ring, const std::vector<Residue<R>>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ' ';
        out += to_text(ring, xs[i].rep());
    }
    return out;
}

template <euclidean_domain R>
json matrix_json(const ResidueMatrix<R>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.size(); ++j)
            row.push_back(to_text(m.modulus().ring(), m.rep_at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

template <euclidean_domain R>
json matrix_json(const DomainMatrix<R>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.size(); ++j)
            row.push_back(to_text(m.ring(), m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

template <euclidean_domain R>
ChainSystem<R> need_chain(const Modulus<R>& m, const Opts& o) {
    if (o.phi.empty()) throw ParseError("--phi is required for this command");
    std::vector<typename R::Elem> elems = parse_elem_list(m.ring(), o.phi);
    std::vector<Residue<R>> factors;
    factors.reserve(elems.size());
    for (const auto& e : elems) factors.push_back(m.reduce(e));
    return ChainSystem<R>(std::span<const Residue<R>>(factors), o.bound);
}

template <euclidean_domain R>
ResidueMatrix<R> need_res_matrix(const Modulus<R>& m, const std::string& text,
                                 const std::string& flag) {
    if (text.empty()) throw ParseError(flag + " is required for this command");
    return ResidueMatrix<R>::from_rows(m, parse_matrix_rows(m.ring(), text));
}

template <euclidean_domain R>
DomainMatrix<R> need_dom_matrix(const R& ring, const std::string& text,
                                const std::string& flag) {
    if (text.empty()) throw ParseError(flag + " is required for this command");
    return DomainMatrix<R>::from_rows(ring, parse_matrix_rows(ring, text));
}

template <euclidean_domain R>
std::string equation_line(const R& ring, const Modulus<R>& m, const Residue<R>& a,
                          const Residue<R>& b) {
    return "equation: " + to_text(ring, a.rep()) + " * x = " + to_text(ring, b.rep()) +
           "   (mod " + to_text(ring, m.value()) + ", " + ring.name() + ")";
}

// ---------------------------------------------------------------------------
// command handlers
// ---------------------------------------------------------------------------

template <euclidean_domain R>
int run_solve(const R& ring, const Opts& o) {
    Modulus<R> m = need_modulus(ring, o);
    Residue<R> a = need_residue(m, o.a, "--a");
    Residue<R> b = need_residue(m, o.b, "--b");
    SolutionSet<R> s = solve(a, b);
    json data{{"ring", ring.name()},
              {"modulus", to_text(ring, m.value())},
              {"coeff", to_text(ring, a.rep())},
              {"rhs", to_text(ring, b.rep())},
              {"gen", to_text(ring, s.gen.rep())},
              {"annihilator", to_text(ring, s.ann.rep())},
              {"solution_count", solution_count(s).str()}};
    std::vector<std::string> human{
        equation_line(ring, m, a, b),
        "generating solution: " + to_text(ring, s.gen.rep()),
        "annihilator generator: " + to_text(ring, s.ann.rep()),
        "solution count: " + solution_count(s).str()};
    if (o.all) {
        auto sols = enumerate_solutions(s, o.bound);
        data["solutions"] = residue_list_json(ring, sols);
        human.push_back("solutions: " + residue_list_text(ring, sols));
    }
    if (o.generating) {
        auto gens = generating_solutions(s, o.bound);
        data["generating"] = residue_list_json(ring, gens);
        human.push_back("generating solutions: " + residue_list_text(ring, gens));
    }
    emit(o, data, human);
    return 0;
}

template <euclidean_domain R>
int run_generating(const R& ring, const Opts& o) {
    Modulus<R> m = need_modulus(ring, o);
    Residue<R> a = need_residue(m, o.a, "--a");
    Residue<R> b = need_residue(m, o.b, "--b");
    auto gens = generating_solutions(solve(a, b), o.bound);
    json data{{"ring", ring.name()},
              {"modulus", to_text(ring, m.value())},
              {"generating", residue_list_json(ring, gens)}};
    emit(o, data,
         {equation_line(ring, m, a, b),
          "generating solutions: " + residue_list_text(ring, gens)});
    return 0;
}

template <euclidean_domain R>
int run_min_gen(const R& ring, const Opts& o) {
    Modulus<R> m = need_modulus(ring, o);
    Residue<R> a = need_residue(m, o.a, "--a");
    Residue<R> b = need_residue(m, o.b, "--b");
    Residue<R> x = min_generating(a, b, o.bound);
    json data{{"ring", ring.name()},
              {"modulus", to_text(ring, m.value())},
              {"min_generating", to_text(ring, x.rep())}};
    emit(o, data,
         {equation_line(ring, m, a, b),
          "minimal generating solution: " + to_text(ring, x.rep())});
    return 0;
}

template <euclidean_domain R>
int run_ann(const R& ring, const Opts& o) {
    Modulus<R> m = need_modulus(ring, o);
    Residue<R> a = need_residue(m, o.a, "--a");
    Residue<R> gen = annihilator(a);
    json data{{"ring", ring.name()},
              {"modulus", to_text(ring, m.value())},
              {"value", to_text(ring, a.rep())},
              {"annihilator", to_text(ring, gen.rep())}};
    std::vector<std::string> human{
        "annihilator generator of " + to_text(ring, a.rep()) + " (mod " +
        to_text(ring, m.value()) + "): " + to_text(ring, gen.rep())};
    if (o.all) {
        auto set = enumerate_solutions(solve(a, m.zero()), o.bound);
        data["set"] = residue_list_json(ring, set);
        human.push_back("annihilator set: " + residue_list_text(ring, set));
    }
    emit(o, data, human);
    return 0;
}

template <euclidean_domain R>
int run_assoc(const R& ring, const Opts& o) {
    Modulus<R> m = need_modulus(ring, o);
    Residue<R> x = need_residue(m, o.x, "--x");
    Residue<R> y = need_residue(m, o.y, "--y");
    bool assoc = associates(x, y);
    json data{{"ring", ring.name()},
              {"modulus", to_text(ring, m.value())},
              {"x", to_text(ring, x.rep())},
              {"y", to_text(ring, y.rep())},
              {"associates", assoc}};
    std::vector<std::string> human{std::string("associates: ") +
                                   (assoc ? "true" : "false")};
    if (assoc) {
        auto w = associate_witness(x, y);
        data["witness"] = to_text(ring, w->rep());
        human.push_back("witness unit (y = x * e): e = " + to_text(ring, w->rep()));
    }
    emit(o, data, human);
    return 0;
}

template <euclidean_domain R>
int run_unit_part(const R& ring, const Opts& o) {
    Modulus<R> m = need_modulus(ring, o);
    Residue<R> a = need_residue(m, o.a, "--a");
    typename R::Elem g = gcd_with_modulus(a);
    Residue<R> e = unit_part(a);
    json data{{"ring", ring.name()},
              {"modulus", to_text(ring, m.value())},
              {"value", to_text(ring, a.rep())},
              {"gcd_with_modulus", to_text(ring, g)},
              {"unit", to_text(ring, e.rep())}};
    emit(o, data,
         {to_text(ring, a.rep()) + " = " + to_text(ring, g) + " * " +
          to_text(ring, e.rep()) + "   (mod " + to_text(ring, m.value()) + ")"});
    return 0;
}

template <euclidean_domain R>
int run_chain(const R& ring, const Opts& o) {
    Modulus<R> m = need_modulus(ring, o);
    ChainSystem<R> cs = need_chain(m, o);
    json ratios = json::array();
    std::vector<std::string> human{"factors: " + residue_list_text(ring, cs.factors())};
    for (std::size_t i = 0; i < cs.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < i; ++j) {
            row.push_back(to_text(ring, cs.ratio(i, j).rep()));
            human.push_back("ratio(" + std::to_string(i + 1) + "," +
                            std::to_string(j + 1) +
                            ") = " + to_text(ring, cs.ratio(i, j).rep()));
        }
        ratios.push_back(row);
    }
    json data{{"ring", ring.name()},
              {"modulus", to_text(ring, m.value())},
              {"factors", residue_list_json(ring, cs.factors())},
              {"ratios", ratios}};
    emit(o, data, human);
    return 0;
}

std::vector<std::size_t> parse_perm(const std::string& text, std::size_t n) {
    std::vector<BigInt> raw = parse_elem_list(IntegerRing{}, text);
    if (raw.size() != n) throw ParseError("--perm length differs from chain length");
    std::vector<std::size_t> sigma;
    sigma.reserve(raw.size());
    for (const BigInt& v : raw) {
        if (v < 1 || v > BigInt(n)) throw ParseError("--perm entries must lie in 1..n");
        sigma.push_back(v.convert_to<std::size_t>() - 1);
    }
    return sigma;
}

template <euclidean_domain R>
int run_perm_check(const R& ring, const Opts& o) {
    Modulus<R> m = need_modulus(ring, o);
    ChainSystem<R> cs = need_chain(m, o);
    if (o.perm.empty()) throw ParseError("--perm is required for this command");
    std::vector<std::size_t> sigma = parse_perm(o.perm, cs.size());
    bool holds = verify_perm_identity(cs, std::span<const std::size_t>(sigma));
    json perm = json::array();
    for (std::size_t v : sigma) perm.push_back(v + 1);
    json data{{"ring", ring.name()},
              {"modulus", to_text(ring, m.value())},
              {"perm", perm},
              {"holds", holds}};
    emit(o, data, {std::string("permutation product identity: ") +
                   (holds ? "true" : "false")});
    return 0;
}

template <euclidean_domain R>
int run_zelisko_check(const R& ring, const Opts& o) {
    Modulus<R> m = need_modulus(ring, o);
    ChainSystem<R> cs = need_chain(m, o);
    ResidueMatrix<R> h = need_res_matrix(m, o.matrix, "--matrix");
    bool member = zelisko_member(h, cs);
    json data{{"ring", ring.name()},
              {"modulus", to_text(ring, m.value())},
              {"factors", residue_list_json(ring, cs.factors())},
              {"matrix", matrix_json(h)},
              {"member", member}};
    emit(o, data, {std::string("member: ") + (member ? "true" : "false")});
    return 0;
}

template <euclidean_domain R>
int run_zelisko_witness(const R& ring, const Opts& o) {
    Modulus<R> m = need_modulus(ring, o);
    ChainSystem<R> cs = need_chain(m, o);
    ResidueMatrix<R> h = need_res_matrix(m, o.matrix, "--matrix");
    ResidueMatrix<R> s = zelisko_witness(h, cs);
    json data{{"ring", ring.name()},
              {"modulus", to_text(ring, m.value())},
              {"witness", matrix_json(s)},
              {"verified", true}};
    emit(o, data, {"witness S with H*Phi = Phi*S: " + matrix_to_text(s)});
    return 0;
}

template <euclidean_domain R>
int run_zelisko_sample(const R& ring, const Opts& o) {
    Modulus<R> m = need_modulus(ring, o);
    ChainSystem<R> cs = need_chain(m, o);
    ResidueMatrix<R> h = zelisko_sample(cs, o.seed);
    json data{{"ring", ring.name()},
              {"modulus", to_text(ring, m.value())},
              {"seed", o.seed},
              {"matrix", matrix_json(h)}};
    emit(o, data, {"sampled member: " + matrix_to_text(h)});
    return 0;
}

template <euclidean_domain R>
int run_lemma10(const R& ring, const Opts& o) {
    Modulus<R> m = need_modulus(ring, o);
    ChainSystem<R> cs = need_chain(m, o);
    ResidueMatrix<R> h = need_res_matrix(m, o.matrix, "--matrix");
    bool equal = mirrored_det_equal(cs, h);
    json data{{"ring", ring.name()},
              {"modulus", to_text(ring, m.value())},
              {"equal", equal}};
    emit(o, data, {std::string("mirrored determinants equal: ") +
                   (equal ? "true" : "false")});
    return 0;
}

template <euclidean_domain R>
int run_smith(const R& ring, const Opts& o) {
    DomainMatrix<R> a = need_dom_matrix(ring, o.matrix, "--matrix");
    SmithResult<R> s = smith(a);
    json factors = json::array();
    std::string ftext;
    for (std::size_t i = 0; i < s.factors.size(); ++i) {
        factors.push_back(to_text(ring, s.factors[i]));
        if (i) ftext += ' ';
        ftext += to_text(ring, s.factors[i]);
    }
    json data{{"ring", ring.name()},
              {"left", matrix_json(s.left)},
              {"right", matrix_json(s.right)},
              {"factors", factors}};
    emit(o, data,
         {"invariant factors: " + ftext, "left transform P: " + matrix_to_text(s.left),
          "right transform Q: " + matrix_to_text(s.right)});
    return 0;
}

template <euclidean_domain R>
int run_fact1(const R& ring, const Opts& o) {
    DomainMatrix<R> a = need_dom_matrix(ring, o.matrix_a, "--matrix-a");
    DomainMatrix<R> b = need_dom_matrix(ring, o.matrix_b, "--matrix-b");
    bool assoc = right_associate(a, b);
    json data{{"ring", ring.name()}, {"right_associates", assoc}};
    emit(o, data,
         {std::string("right associates (A = B*U): ") + (assoc ? "true" : "false")});
    return 0;
}

template <euclidean_domain R>
int run_complete_row(const R& ring, const Opts& o) {
    if (o.row.empty()) throw ParseError("--row is required for this command");
    std::vector<typename R::Elem> row = parse_elem_list(ring, o.row);
    DomainMatrix<R> m = complete_row(ring, std::span<const typename R::Elem>(row));
    json data{{"ring", ring.name()},
              {"matrix", matrix_json(m)},
              {"det", to_text(ring, det(m))}};
    emit(o, data, {"completion: " + matrix_to_text(m),
                   "det: " + to_text(ring, det(m))});
    return 0;
}

template <euclidean_domain R>
int run_probe_single(const R& ring, const Opts& o) {
    Modulus<R> m = need_modulus(ring, o);
    Residue<R> a = need_residue(m, o.a, "--a");
    Residue<R> b = need_residue(m, o.b, "--b");
    ProbeReport<R> report = gcd_solution_probe(a, b, kProbePairCap, o.bound);
    json pairs = json::array();
    for (const auto& bad : report.bad_pairs)
        pairs.push_back(json{{"x", to_text(ring, bad.x.rep())},
                             {"y", to_text(ring, bad.y.rep())},
                             {"gcd", to_text(ring, bad.g)}});
    json data{{"ring", ring.name()},
              {"modulus", to_text(ring, m.value())},
              {"gcd_all", to_text(ring, report.gcd_all)},
              {"gcd_all_is_solution", report.gcd_all_is_solution},
              {"bad_pairs", pairs},
              {"truncated", report.truncated},
              {"solution_count", report.solution_count}};
    std::vector<std::string> human{
        equation_line(ring, m, a, b),
        "gcd of all solutions: " + to_text(ring, report.gcd_all) +
            (report.gcd_all_is_solution ? " (a solution)" : " (NOT a solution)")};
    for (const auto& bad : report.bad_pairs)
        human.push_back("pair " + to_text(ring, bad.x.rep()) + "," +
                        to_text(ring, bad.y.rep()) + " has gcd " +
                        to_text(ring, bad.g) + " which is not a solution");
    if (report.truncated) human.push_back("pair list truncated");
    emit(o, data, human);
    return 0;
}

int run_probe_sweep(const Opts& o) {
    IntegerRing z;
    std::size_t dots = o.mod_range.find("..");
    if (dots == std::string::npos)
        throw ParseError("--mod-range expects the form lo..hi");
    long lo = 0, hi = 0;
    try {
        lo = std::stol(o.mod_range.substr(0, dots));
        hi = std::stol(o.mod_range.substr(dots + 2));
    } catch (const std::exception&) {
        throw ParseError("--mod-range expects integer endpoints");
    }
    if (lo < 2 || hi < lo) throw ParseError("--mod-range endpoints out of order");
    json failures = json::array();
    std::vector<std::string> human;
    std::uint64_t checked = 0;
    for (long mv = lo; mv <= hi; ++mv) {
        Modulus<IntegerRing> m(z, BigInt(mv));
        for (long av = 0; av < mv; ++av) {
            Residue<IntegerRing> a = m.reduce(BigInt(av));
            Residue<IntegerRing> alpha = annihilator(a);
            for (long bv = 0; bv < mv; ++bv) {
                Residue<IntegerRing> b = m.reduce(BigInt(bv));
                if (!solvable(a, b)) continue;
                ++checked;
                SolutionSet<IntegerRing> s = solve(a, b);
                // gcd of the full solution coset {gen + alpha*t}
                BigInt g = solution_count(s) > 1 ? gcd(z, s.gen.rep(), alpha.rep())
                                                 : s.gen.rep();
                if (a * m.reduce(g) == b) continue;
                failures.push_back(json{{"mod", std::to_string(mv)},
                                        {"coeff", std::to_string(av)},
                                        {"rhs", std::to_string(bv)},
                                        {"gcd", g.str()}});
                human.push_back("m=" + std::to_string(mv) + " a=" + std::to_string(av) +
                                " b=" + std::to_string(bv) + " gcd=" + g.str() +
                                " is not a solution");
            }
        }
    }
    json data{{"ring", z.name()},
              {"range", o.mod_range},
              {"equations_checked", checked},
              {"failure_count", failures.size()},
              {"failures", failures}};
    human.push_back("checked " + std::to_string(checked) + " solvable equations, " +
                    std::to_string(failures.size()) +
                    " had a solution-set gcd that is not a solution");
    emit(o, data, human);
    return 0;
}

int run_golden(const Opts& o) {
    return guarded(o, [&]() {
        std::vector<quotring_cli::GoldenClaim> claims = quotring_cli::golden_claims();
        bool all_pass = true;
        json list = json::array();
        std::vector<std::string> human;
        for (const auto& c : claims) {
            all_pass = all_pass && c.pass;
            list.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
            human.push_back(std::string(c.pass ? "PASS " : "FAIL ") + c.name + " (" +
                            c.detail + ")");
        }
        human.push_back(all_pass ? "all claims pass" : "some claims FAILED");
        emit(o, json{{"claims", list}, {"all_pass", all_pass}}, human);
        return all_pass ? 0 : 1;
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact linear algebra in quotient rings R/mR"};
    app.require_subcommand(1);

    Opts o;
    int rc = 0;

    auto add_common = [&](CLI::App* cmd, bool with_mod = true) {
        cmd->add_option("--ring", o.ring, "coefficient ring: int or fpx:<prime>");
        if (with_mod) cmd->add_option("--mod", o.mod, "modulus m of R_m");
        cmd->add_flag("--json", o.emit_json, "machine-readable output");
        cmd->add_option("--bound", o.bound, "enumeration cap");
    };

    auto* c_solve = app.add_subcommand("solve", "solve a*x = b in R_m");
    add_common(c_solve);
    c_solve->add_option("--a", o.a, "coefficient")->required();
    c_solve->add_option("--b", o.b, "right side")->required();
    c_solve->add_flag("--all", o.all, "list the full solution set");
    c_solve->add_flag("--generating", o.generating, "list the generating solutions");
    c_solve->callback([&]() { rc = with_ring(o, [&](auto ring) { return run_solve(ring, o); }); });

    auto* c_gen = app.add_subcommand("generating", "generating solutions of a*x = b");
    add_common(c_gen);
    c_gen->add_option("--a", o.a)->required();
    c_gen->add_option("--b", o.b)->required();
    c_gen->callback([&]() { rc = with_ring(o, [&](auto ring) { return run_generating(ring, o); }); });

    auto* c_min = app.add_subcommand("min-gen", "minimal generating solution of a*x = b");
    add_common(c_min);
    c_min->add_option("--a", o.a)->required();
    c_min->add_option("--b", o.b)->required();
    c_min->callback([&]() { rc = with_ring(o, [&](auto ring) { return run_min_gen(ring, o); }); });

    auto* c_ann = app.add_subcommand("ann", "annihilator of a residue");
    add_common(c_ann);
    c_ann->add_option("--a", o.a)->required();
    c_ann->add_flag("--all", o.all, "materialize the annihilator set");
    c_ann->callback([&]() { rc = with_ring(o, [&](auto ring) { return run_ann(ring, o); }); });

    auto* c_assoc = app.add_subcommand("assoc", "associate test with witness unit");
    add_common(c_assoc);
    c_assoc->add_option("--x", o.x)->required();
    c_assoc->add_option("--y", o.y)->required();
    c_assoc->callback([&]() { rc = with_ring(o, [&](auto ring) { return run_assoc(ring, o); }); });

    auto* c_unit = app.add_subcommand("unit-part", "decomposition a = (a,m)*e with e a unit");
    add_common(c_unit);
    c_unit->add_option("--a", o.a)->required();
    c_unit->callback([&]() { rc = with_ring(o, [&](auto ring) { return run_unit_part(ring, o); }); });

    auto* c_chain = app.add_subcommand("chain", "ratio table of a divisibility chain");
    add_common(c_chain);
    c_chain->add_option("--phi", o.phi, "chain entries")->required();
    c_chain->callback([&]() { rc = with_ring(o, [&](auto ring) { return run_chain(ring, o); }); });

    auto* c_perm = app.add_subcommand("perm-check", "permutation product identity on a chain");
    add_common(c_perm);
    c_perm->add_option("--phi", o.phi)->required();
    c_perm->add_option("--perm", o.perm, "permutation images, 1-based")->required();
    c_perm->callback([&]() { rc = with_ring(o, [&](auto ring) { return run_perm_check(ring, o); }); });

    auto* c_zc = app.add_subcommand("zelisko-check", "Zelisko group membership");
    add_common(c_zc);
    c_zc->add_option("--phi", o.phi)->required();
    c_zc->add_option("--matrix", o.matrix)->required();
    c_zc->callback([&]() { rc = with_ring(o, [&](auto ring) { return run_zelisko_check(ring, o); }); });

    auto* c_zw = app.add_subcommand("zelisko-witness", "witness S with H*Phi = Phi*S");
    add_common(c_zw);
    c_zw->add_option("--phi", o.phi)->required();
    c_zw->add_option("--matrix", o.matrix)->required();
    c_zw->callback([&]() { rc = with_ring(o, [&](auto ring) { return run_zelisko_witness(ring, o); }); });

    auto* c_zs = app.add_subcommand("zelisko-sample", "deterministic random group member");
    add_common(c_zs);
    c_zs->add_option("--phi", o.phi)->required();
    c_zs->add_option("--seed", o.seed, "RNG seed")->required();
    c_zs->callback([&]() { rc = with_ring(o, [&](auto ring) { return run_zelisko_sample(ring, o); }); });

    auto* c_l10 = app.add_subcommand("lemma10", "mirrored weighted determinant identity");
    add_common(c_l10);
    c_l10->add_option("--phi", o.phi)->required();
    c_l10->add_option("--matrix", o.matrix)->required();
    c_l10->callback([&]() { rc = with_ring(o, [&](auto ring) { return run_lemma10(ring, o); }); });

    auto* c_smith = app.add_subcommand("smith", "Smith form with transforms");
    add_common(c_smith, false);
    c_smith->add_option("--matrix", o.matrix)->required();
    c_smith->callback([&]() { rc = with_ring(o, [&](auto ring) { return run_smith(ring, o); }); });

    auto* c_f1 = app.add_subcommand("fact1", "right-associate test A = B*U");
    add_common(c_f1, false);
    c_f1->add_option("--matrix-a", o.matrix_a)->required();
    c_f1->add_option("--matrix-b", o.matrix_b)->required();
    c_f1->callback([&]() { rc = with_ring(o, [&](auto ring) { return run_fact1(ring, o); }); });

    auto* c_cr = app.add_subcommand("complete-row", "complete a coprime row to det 1");
    add_common(c_cr, false);
    c_cr->add_option("--row", o.row, "row entries")->required();
    c_cr->callback([&]() { rc = with_ring(o, [&](auto ring) { return run_complete_row(ring, o); }); });

    auto* c_probe = app.add_subcommand("probe", "solution-set gcd probe");
    add_common(c_probe);
    c_probe->add_option("--a", o.a);
    c_probe->add_option("--b", o.b);
    c_probe->add_option("--mod-range", o.mod_range, "sweep integer moduli lo..hi");
    c_probe->callback([&]() {
        if (!o.mod_range.empty()) {
            rc = guarded(o, [&]() {
                if (o.ring != "int")
                    throw ParseError("--mod-range sweeps integer moduli only");
                return run_probe_sweep(o);
            });
        } else {
            rc = with_ring(o, [&](auto ring) { return run_probe_single(ring, o); });
        }
    });

    auto* c_gold = app.add_subcommand("golden", "run the reference computations");
    c_gold->add_flag("--json", o.emit_json, "machine-readable output");
    c_gold->callback([&]() { rc = run_golden(o); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_name() == "CallForHelp" ? 0 : 2;
    }
    return rc;
}
