// Command-line front end: exact meet/join matrix computations, invertibility
// reports, semilattice enumeration, classification, and the singular
// LCM-matrix counterexamples. All numeric output is exact rational text.
//
// Exit codes: 0 success/invertible, 1 singular/found, 2 input error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <latmat/io.hpp>
#include <latmat/latmat.hpp>

using namespace latmat;

namespace {

int default_threads() {
    if (const char* env = std::getenv("LATMAT_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

Json read_json_file(const std::string& path) {
    if (path == "-") {
        Json j;
        std::cin >> j;
        return j;
    }
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    Json j;
    in >> j;
    return j;
}

void emit(const Json& j, bool pretty) {
    if (pretty)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << j.dump() << "\n";
}

std::vector<Int> parse_elements(const std::string& csv) {
    std::vector<Int> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) out.push_back(int_from_string(tok));
    }
    if (out.empty()) throw ParseError("empty element list");
    return out;
}

std::map<std::string, Int> parse_named_params(const std::string& csv) {
    std::map<std::string, Int> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) throw ParseError("parameters are key=value pairs");
        out[tok.substr(0, eq)] = int_from_string(tok.substr(eq + 1));
    }
    return out;
}

struct CheckTable {
    int failures = 0;

    void check(const std::string& name, bool ok, const std::string& detail = "") {
        std::cout << (ok ? "PASS  " : "FAIL  ") << name;
        if (!detail.empty()) std::cout << "  (" << detail << ")";
        std::cout << "\n";
        if (!ok) ++failures;
    }
};

int run_reproduce_paper(int threads) {
    CheckTable t;
    auto t0 = std::chrono::steady_clock::now();

    const std::vector<std::size_t> expected = {1, 1, 2, 5, 15, 53, 222};
    std::vector<Poset> semis;
    for (int n = 1; n <= 7; ++n) {
        semis = enumerate_meet_semilattices(n, 8, threads);
        t.check("meet semilattice classes n=" + std::to_string(n),
                semis.size() == expected[n - 1],
                std::to_string(semis.size()) + " classes");
        if (n == 5)
            t.check("classes with some m_i >= 3, n=5", filter_min_cover(semis, 3).size() == 1);
        if (n == 6)
            t.check("classes with some m_i >= 3, n=6", filter_min_cover(semis, 3).size() == 7);
        if (n == 7)
            t.check("classes with some m_i >= 3, n=7", filter_min_cover(semis, 3).size() == 47);
    }

    bool figures_ok = true;
    std::string bad;
    for (const auto& lab : SemilatticeCatalog::instance().labels())
        if (!verify_figure_mobius(lab)) {
            figures_ok = false;
            bad = lab;
        }
    t.check("class-diagram mobius vectors", figures_ok, figures_ok ? "all labels" : bad);

    CounterexampleReport hong = verify_counterexample(hong_set());
    t.check("Hong 8-element set is singular",
            hong.singular && hong.gcd_closed && hong.det == 0 &&
                hong.class_label == std::optional<std::string>("S_{3,8}") &&
                hong.report->first_failure == std::optional<int>(8),
            "det=" + rat_to_string(hong.det) + ", class=" + *hong.class_label);

    CounterexampleReport hws = verify_counterexample(hws_set());
    t.check("HWS 9-element set is singular", hws.singular && hws.det == 0,
            "det=" + rat_to_string(hws.det));

    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::cout << (t.failures == 0 ? "ALL CHECKS PASSED" : "CHECKS FAILED") << " (" << ms
              << " ms)\n";
    return t.failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"latmat: exact meet/join matrix toolkit on posets and divisor lattices"};
    app.require_subcommand(1);
    app.fallthrough();
    bool pretty = false;
    app.add_flag("--pretty", pretty, "human-readable JSON output");

    // poset validate|show
    auto* poset_cmd = app.add_subcommand("poset", "poset input handling");
    poset_cmd->require_subcommand(1);
    std::string poset_file;
    auto* poset_validate = poset_cmd->add_subcommand("validate", "check a poset JSON file");
    poset_validate->add_option("--in", poset_file, "poset JSON file ('-' for stdin)")->required();
    auto* poset_show = poset_cmd->add_subcommand("show", "print a poset (JSON or DOT)");
    bool as_dot = false;
    poset_show->add_option("--in", poset_file, "poset JSON file ('-' for stdin)")->required();
    poset_show->add_flag("--dot", as_dot, "emit the Hasse diagram as Graphviz DOT");

    // mobius
    auto* mobius_cmd = app.add_subcommand("mobius", "Mobius function of a poset");
    std::string mobius_file;
    mobius_cmd->add_option("--in", mobius_file, "poset JSON file ('-' for stdin)")->required();

    // matrix meet|join
    auto* matrix_cmd = app.add_subcommand("matrix", "meet/join matrix of a valued set");
    matrix_cmd->require_subcommand(1);
    std::string set_file_meet, set_file_join;
    auto* matrix_meet = matrix_cmd->add_subcommand("meet", "meet matrix (S)_f");
    matrix_meet->add_option("--set", set_file_meet, "valued set JSON file")->required();
    auto* matrix_join = matrix_cmd->add_subcommand("join", "join matrix [S]_f");
    matrix_join->add_option("--set", set_file_join, "valued set JSON file")->required();

    // det
    auto* det_cmd = app.add_subcommand("det", "exact determinant");
    std::string det_set_file, det_matrix_file, det_which = "join", det_via = "elimination";
    det_cmd->add_option("--set", det_set_file, "valued set JSON file");
    det_cmd->add_option("--matrix-file", det_matrix_file, "raw matrix JSON file");
    det_cmd->add_option("--matrix", det_which, "meet|join (with --set)")
        ->check(CLI::IsMember({"meet", "join"}));
    det_cmd->add_option("--via", det_via, "elimination|convolution")
        ->check(CLI::IsMember({"elimination", "convolution"}));

    // factorize
    auto* fact_cmd = app.add_subcommand("factorize", "[S]_f = D (S)_{1/f} D");
    std::string fact_file;
    fact_cmd->add_option("--set", fact_file, "valued set JSON file")->required();

    // invertibility
    auto* inv_cmd = app.add_subcommand("invertibility", "inductive invertibility report");
    std::string inv_file;
    inv_cmd->add_option("--set", inv_file, "valued set JSON file")->required();

    // enumerate
    auto* enum_cmd = app.add_subcommand("enumerate", "meet semilattices up to isomorphism");
    int enum_n = 0, enum_min_cover = 0, enum_threads = default_threads();
    bool count_only = false;
    std::string dot_dir;
    enum_cmd->add_option("--n", enum_n, "number of elements")->required();
    enum_cmd->add_option("--min-cover", enum_min_cover, "keep classes with some m_i >= K");
    enum_cmd->add_flag("--count-only", count_only, "print only the class count");
    enum_cmd->add_option("--dot-dir", dot_dir, "write one DOT file per class into DIR");
    enum_cmd->add_option("--threads", enum_threads, "worker threads");

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "match against the named classes");
    std::string classify_poset_file, classify_elements;
    classify_cmd->add_option("--poset", classify_poset_file, "poset JSON file");
    classify_cmd->add_option("--elements", classify_elements,
                             "comma-separated positive integers (divisor order)");

    // counterexample verify|search
    auto* cex_cmd = app.add_subcommand("counterexample", "Bourque-Ligh counterexamples");
    cex_cmd->require_subcommand(1);
    auto* cex_verify = cex_cmd->add_subcommand("verify", "diagnose an integer set with f = N");
    std::string cex_elements;
    cex_verify->add_option("--elements", cex_elements, "comma-separated positive integers")
        ->required();
    auto* cex_search = cex_cmd->add_subcommand("search", "search for singular LCM matrices");
    std::string search_template = "s38";
    long search_atom_bound = 5, search_mult_bound = 60;
    int search_limit = 10, search_pad = 0, search_threads = default_threads();
    cex_search->add_option("--template", search_template, "search template (s38)");
    cex_search->add_option("--atom-bound", search_atom_bound, "atom bound for p < q < r");
    cex_search->add_option("--bound", search_mult_bound, "bound for the scalars u, v, w");
    cex_search->add_option("--limit", search_limit, "stop after this many sets");
    cex_search->add_option("--pad", search_pad, "append chain elements above the top");
    cex_search->add_option("--threads", search_threads, "worker threads");

    // inequality
    auto* ineq_cmd = app.add_subcommand("inequality", "class-membership inequality instances");
    std::string ineq_class, ineq_params, ineq_multipliers, ineq_x1 = "1", ineq_top = "0";
    ineq_cmd->add_option("--class", ineq_class, "gn2n|g36|g37|g471|g472")->required();
    ineq_cmd->add_option("--params", ineq_params, "named parameters, e.g. a=2,b=3,c=2,d=5");
    ineq_cmd->add_option("--multipliers", ineq_multipliers,
                         "comma-separated multipliers (gn2n only)");
    ineq_cmd->add_option("--x1", ineq_x1, "bottom element (default 1)");
    ineq_cmd->add_option("--top", ineq_top, "top element (default: the exact lcm)");

    // catalog dump
    auto* catalog_cmd = app.add_subcommand("catalog", "named class catalog");
    catalog_cmd->require_subcommand(1);
    catalog_cmd->add_subcommand("dump", "print the catalog as JSON");

    // reproduce-paper
    auto* repro_cmd =
        app.add_subcommand("reproduce-paper", "re-derive the headline numbers and fixtures");
    int repro_threads = default_threads();
    repro_cmd->add_option("--threads", repro_threads, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*poset_validate) {
            Poset p = poset_from_json(read_json_file(poset_file));
            emit(poset_to_json(p), pretty);
            return 0;
        }
        if (*poset_show) {
            Poset p = poset_from_json(read_json_file(poset_file));
            if (as_dot)
                std::cout << p.to_dot();
            else
                emit(poset_to_json(p), pretty);
            return 0;
        }
        if (*mobius_cmd) {
            Poset p = poset_from_json(read_json_file(mobius_file));
            IncidenceFunction mu = mobius(p);
            Json values = Json::array();
            for (int i = 0; i < p.n(); ++i)
                for (int j = i; j < p.n(); ++j)
                    if (p.leq(i, j))
                        values.push_back(Json{{"i", i}, {"j", j}, {"value", rat_to_string(mu(i, j))}});
            emit(Json{{"mobius", values}}, pretty);
            return 0;
        }
        if (*matrix_meet) {
            ValuedSet vs = valued_set_from_json(read_json_file(set_file_meet));
            emit(matrix_to_json(meet_matrix(vs)), pretty);
            return 0;
        }
        if (*matrix_join) {
            ValuedSet vs = valued_set_from_json(read_json_file(set_file_join));
            emit(matrix_to_json(join_matrix(vs)), pretty);
            return 0;
        }
        if (*det_cmd) {
            if (det_set_file.empty() == det_matrix_file.empty())
                throw ParseError("det needs exactly one of --set or --matrix-file");
            Rat d;
            if (!det_matrix_file.empty()) {
                d = determinant(matrix_from_json(read_json_file(det_matrix_file)));
            } else {
                ValuedSet vs = valued_set_from_json(read_json_file(det_set_file));
                bool join_side = det_which == "join";
                if (det_via == "elimination") {
                    d = determinant(join_side ? join_matrix(vs) : meet_matrix(vs));
                } else if (join_side) {
                    // det [S]_f = (prod f(x_i))^2 det (S)_{1/f}
                    SemimultResult sm = vs.semimultiplicative_on_s();
                    if (!sm)
                        throw NotSemimultiplicativeError(
                            "convolution route for the join matrix needs semimultiplicativity");
                    d = det_meet_via_convolution(vs, Valuation::reciprocal(vs.valuation())).product;
                    for (int i = 0; i < vs.size(); ++i) d *= vs.f_at(i) * vs.f_at(i);
                } else {
                    d = det_meet_via_convolution(vs, vs.valuation()).product;
                }
            }
            std::cout << rat_to_string(d) << "\n";
            return 0;
        }
        if (*fact_cmd) {
            ValuedSet vs = valued_set_from_json(read_json_file(fact_file));
            JoinFactorization f = factorize_join(vs);
            Json delta = Json::array();
            for (const Rat& v : f.delta) delta.push_back(rat_to_string(v));
            emit(Json{{"delta", delta}, {"core", matrix_to_json(f.core)}}, pretty);
            return 0;
        }
        if (*inv_cmd) {
            ValuedSet vs = valued_set_from_json(read_json_file(inv_file));
            InvertibilityReport rep = invertibility_report(vs);
            emit(report_to_json(rep), pretty);
            return rep.verdict == Verdict::Invertible ? 0 : 1;
        }
        if (*enum_cmd) {
            auto semis = enumerate_meet_semilattices(enum_n, 8, enum_threads);
            if (enum_min_cover > 0) semis = filter_min_cover(semis, enum_min_cover);
            if (count_only) {
                std::cout << semis.size() << "\n";
                return 0;
            }
            if (!dot_dir.empty()) {
                for (std::size_t k = 0; k < semis.size(); ++k) {
                    std::string path = dot_dir + "/class_" + std::to_string(enum_n) + "_" +
                                       std::to_string(k) + ".dot";
                    std::ofstream out(path);
                    if (!out) throw ParseError("cannot write '" + path + "'");
                    out << semis[k].to_dot();
                }
            }
            Json arr = Json::array();
            for (const Poset& p : semis) {
                Json e = poset_to_json(p);
                e["key"] = canonicalize(p).hex();
                auto label = classify(p);
                e["class"] = label ? Json(*label) : Json(nullptr);
                arr.push_back(std::move(e));
            }
            emit(Json{{"n", enum_n}, {"count", arr.size()}, {"classes", arr}}, pretty);
            return 0;
        }
        if (*classify_cmd) {
            if (classify_poset_file.empty() == classify_elements.empty())
                throw ParseError("classify needs exactly one of --poset or --elements");
            Poset p = classify_poset_file.empty()
                          ? divisor_subposet(parse_elements(classify_elements))
                          : poset_from_json(read_json_file(classify_poset_file));
            auto label = classify(p);
            emit(Json{{"class", label ? Json(*label) : Json(nullptr)}}, pretty);
            return 0;
        }
        if (*cex_verify) {
            CounterexampleReport rep = verify_counterexample(parse_elements(cex_elements));
            emit(counterexample_report_to_json(rep), pretty);
            return rep.singular ? 1 : 0;
        }
        if (*cex_search) {
            if (search_template != "s38")
                throw ParamError("unknown search template '" + search_template + "'");
            SearchTemplate tmpl;
            tmpl.atom_bound = search_atom_bound;
            tmpl.mult_bound = search_mult_bound;
            tmpl.pad = search_pad;
            auto found = search_singular(tmpl, search_limit, search_threads);
            Json arr = Json::array();
            for (const auto& s : found) {
                Json set = Json::array();
                for (const Int& v : s) set.push_back(int_to_string(v));
                arr.push_back(std::move(set));
            }
            emit(Json{{"template", search_template}, {"count", arr.size()}, {"sets", arr}},
                 pretty);
            return found.empty() ? 0 : 1;
        }
        if (*ineq_cmd) {
            InequalityParams params;
            if (!ineq_params.empty()) params.named = parse_named_params(ineq_params);
            if (!ineq_multipliers.empty()) params.multipliers = parse_elements(ineq_multipliers);
            params.x1 = int_from_string(ineq_x1);
            params.top = int_from_string(ineq_top);
            InequalityInstance inst =
                class_inequality_instance(inequality_class_from_string(ineq_class), params);
            Json elems = Json::array();
            for (const Int& v : inst.elements) elems.push_back(int_to_string(v));
            emit(Json{{"value", rat_to_string(inst.value)},
                      {"positive", inst.value > 0},
                      {"elements", elems}},
                 pretty);
            return 0;
        }
        if (*catalog_cmd) {
            std::cout << catalog_to_json().dump(1) << "\n";
            return 0;
        }
        if (*repro_cmd) return run_reproduce_paper(repro_threads);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
