// cyctrace: exact cyclic/simplicial calculus, Witt vectors, and the
// characteristic trace, behind one binary with JSON artifacts.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

#include <cyctrace/suite.hpp>

namespace {

using namespace cyctrace;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSchema = 3;

std::string out_path(const std::string& p) {
    const char* dir = std::getenv("CYCTRACE_OUT_DIR");
    if (!dir || p.empty() || p.front() == '/') return p;
    return std::string(dir) + "/" + p;
}

/// "builtin:circle:7" or a JSON file path.
simp::SimplicialSet load_complex(const std::string& spec) {
    if (spec.rfind("builtin:", 0) == 0) {
        std::string rest = spec.substr(8);
        int N = 3;
        auto colon = rest.find(':');
        if (colon != std::string::npos) {
            N = std::stoi(rest.substr(colon + 1));
            rest = rest.substr(0, colon);
        }
        return simp::make_builtin(rest, N);
    }
    return io::complex_from_json(io::load_json(spec));
}

bar::Monoid load_monoid(const std::string& spec) {
    if (spec.rfind("builtin:", 0) == 0) return io::builtin_monoid(spec.substr(8));
    if (spec.find('.') == std::string::npos && spec.find('/') == std::string::npos)
        return io::builtin_monoid(spec);
    return io::monoid_from_json(io::load_json(spec));
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        auto comma = s.find(',', pos);
        if (comma == std::string::npos) comma = s.size();
        out.push_back(std::stoi(s.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return out;
}

int print_validation(const ValidationReport& rep, const std::string& what) {
    if (rep.ok()) {
        std::cout << what << ": valid, no violations\n";
        return kExitOk;
    }
    std::cout << what << ": " << rep.violations.size() << " violation(s)\n";
    for (std::size_t i = 0; i < rep.violations.size() && i < 20; ++i)
        std::cout << "  " << rep.violations[i].str() << "\n";
    bool schema = false;
    for (const auto& v : rep.violations) schema = schema || v.identity.rfind("schema", 0) == 0;
    return schema ? kExitSchema : kExitCheckFailure;
}

int cmd_builtin(const std::string& name, int trunc, const std::string& emit) {
    auto X = simp::make_builtin(name, trunc);
    json j = io::complex_to_json(X);
    if (emit.empty())
        std::cout << j.dump(2) << "\n";
    else
        io::save_json(out_path(emit), j);
    return kExitOk;
}

int cmd_subdivide(const std::string& input, int r, const std::string& emit,
                  const std::string& emit_fixed) {
    auto X = load_complex(input);
    auto S = subdiv::edgewise_subdivide(X, r);
    auto rep = subdiv::validate_subdivided(S);
    int code = print_validation(rep, "sd_" + std::to_string(r));
    std::cout << "result truncation " << S.result.trunc << ", counts:";
    for (auto c : S.result.counts) std::cout << " " << c;
    std::cout << "\n";
    if (!emit.empty()) io::save_json(out_path(emit), io::complex_to_json(S.result));
    if (!emit_fixed.empty()) {
        auto F = subdiv::fixed_subcomplex(S);
        if (!F.closure.ok()) return print_validation(F.closure, "fixed subcomplex closure");
        io::save_json(out_path(emit_fixed), io::complex_to_json(F.complex));
    }
    return code;
}

int cmd_coherence(const std::string& primes) {
    auto list = parse_int_list(primes);
    std::set<int> U(list.begin(), list.end());
    auto rep = cube::verify_cube_face_relations(U);
    for (const auto& e : rep.entries)
        std::cout << (e.lower_ok && e.upper_ok ? "PASS" : "FAIL") << " U=" << cube::set_str(e.U)
                  << " V=" << cube::set_str(e.V) << " lower=" << (e.lower_ok ? "ok" : "FAIL")
                  << " upper=" << (e.upper_ok ? "ok" : "FAIL") << "\n";
    auto h = cube::expand_h(U);
    std::cout << "h^" << cube::set_str(U) << " = ";
    for (std::size_t i = 0; i < h.terms.size(); ++i)
        std::cout << (i ? " + " : "") << cube::term_str(h.terms[i], U);
    std::cout << "\n";
    return rep.all_pass() ? kExitOk : kExitCheckFailure;
}

int cmd_barcy(const std::string& monoid, int degree, const std::string& check,
              const std::string& emit) {
    auto M = load_monoid(monoid);
    auto C = bar::monoid_category(M);
    auto laws = cat::validate_category(C);
    if (!laws.ok()) return print_validation(laws, "monoid");
    auto B = bar::cyclic_bar(C, degree);
    std::cout << "cyclic bar of " << M.size() << "-element monoid, truncation " << degree
              << ", counts:";
    for (auto c : B.X.counts) std::cout << " " << c;
    std::cout << "\n";
    if (!emit.empty()) io::save_json(out_path(emit), io::complex_to_json(B.X));
    int code = kExitOk;
    if (check == "validate" || check == "all") code = print_validation(simp::validate(B.X), "cyclic bar");
    if (check == "frobenius" || check == "all") {
        bool ok = true;
        for (int k = 0; k <= degree; ++k)
            for (const auto& t : B.tuples[k])
                for (int r = 1; r <= 3; ++r)
                    for (int s = 1; s <= 3; ++s)
                        ok = ok && bar::bar_frobenius(C, bar::bar_frobenius(C, t, s), r) ==
                                       bar::bar_frobenius(C, t, r * s);
        std::cout << "Fbar_r Fbar_s = Fbar_rs (r,s <= 3, degrees <= " << degree << "): "
                  << (ok ? "pass" : "FAIL") << "\n";
        if (!ok) code = kExitCheckFailure;
    }
    return code;
}

int cmd_homology(const std::string& input, int through) {
    auto X = load_complex(input);
    if (through < 0) through = X.trunc - 1;
    if (through > X.trunc - 1)
        throw std::invalid_argument("homology valid through degree truncation-1 = " +
                                    std::to_string(X.trunc - 1));
    auto chains = hom::normalized_chains(X);
    json out;
    out["kind"] = "homology";
    for (int k = 0; k <= through; ++k) {
        auto H = hom::homology(X, k, &chains);
        json t = json::array();
        for (const auto& d : H.torsion) t.push_back(d.str());
        out["degrees"][std::to_string(k)] = {{"betti", H.betti}, {"torsion", t}};
    }
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int cmd_indexcat(int bound, const std::string& check) {
    suite::Bounds b;
    b.index_bound = bound;
    b.groth_bound = std::min(bound, 12);
    CheckResult res;
    if (check == "relations" || check == "factorization")
        res = suite::check_index_relations(0, b);
    else if (check == "theta")
        res = suite::check_theta(0, b);
    else if (check == "grothendieck")
        res = suite::check_grothendieck(0, b);
    else
        throw std::invalid_argument("unknown indexcat check: " + check);
    for (const auto& n : res.notes) std::cout << n << "\n";
    return res.pass ? kExitOk : kExitCheckFailure;
}

int cmd_witt(const std::string& op, const std::string& ring_tag, int trunc,
             const std::string& coords, const std::string& coords2, int r, int to) {
    return io::with_ring(ring_tag, [&](auto ring) -> int {
        using R = decltype(ring);
        auto S = witt::divisor_trunc(trunc);
        auto parse_vec = [&](const std::string& cs) {
            witt::WittVec<R> x{S, {}};
            std::size_t pos = 0;
            std::string s = cs;
            while (pos < s.size()) {
                auto comma = s.find(',', pos);
                if (comma == std::string::npos) comma = s.size();
                x.a.push_back(ring.parse(s.substr(pos, comma - pos)));
                pos = comma + 1;
            }
            if (static_cast<int>(x.a.size()) != S.size())
                throw std::invalid_argument("expected " + std::to_string(S.size()) +
                                            " coordinates for " + S.str());
            return x;
        };
        auto x = parse_vec(coords);
        auto emit = [&](const witt::WittVec<R>& v) {
            std::cout << io::witt_to_json(ring, v).dump(2) << "\n";
        };
        if (op == "add" || op == "mul") {
            auto y = parse_vec(coords2);
            emit(op == "add" ? witt::witt_add(ring, x, y) : witt::witt_mul(ring, x, y));
        } else if (op == "neg") {
            emit(witt::witt_neg(ring, x));
        } else if (op == "frob") {
            emit(witt::frobenius_witt(ring, x, r));
        } else if (op == "restrict") {
            emit(witt::restrict_witt(ring, x, witt::divisor_trunc(to)));
        } else if (op == "ghost") {
            json w = json::array();
            for (const auto& g : witt::ghost(ring, x)) w.push_back(ring.str(g));
            std::cout << json{{"kind", "ghost"}, {"S", S.elems}, {"values", w}}.dump(2) << "\n";
        } else {
            throw std::invalid_argument("unknown witt op: " + op);
        }
        return kExitOk;
    });
}

int cmd_trace(const std::string& matrix, const std::string& ring_tag, int trunc,
              bool allow_noninv) {
    json jm;
    try {
        jm = json::parse(matrix);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("matrix: ") + e.what());
    }
    return io::with_ring(ring_tag, [&](auto ring) -> int {
        using R = decltype(ring);
        auto rows = jm.get<std::vector<std::vector<long long>>>();
        const int n = static_cast<int>(rows.size());
        tr::Mat<R> A(ring, n);
        for (int i = 0; i < n; ++i) {
            if (static_cast<int>(rows[i].size()) != n) throw SchemaError("matrix is not square");
            for (int j = 0; j < n; ++j) A.at(i, j) = ring.from_int(rows[i][j]);
        }
        auto S = witt::divisor_trunc(trunc);
        auto f = tr::char_series(ring, A, S.max());
        std::cout << "det(1-t*alpha) = " << series::series_str(ring, f) << "\n";
        std::vector<int> dropped;
        auto x = tr::trc0(ring, A, S, allow_noninv, &dropped);
        if (!dropped.empty()) {
            std::cout << "note: factors at exponents outside " << S.str()
                      << " were quotiented away:";
            for (int e : dropped) std::cout << " " << e;
            std::cout << "\n";
        }
        std::cout << io::witt_to_json(ring, x).dump(2) << "\n";
        json w = json::array();
        for (const auto& g : witt::ghost(ring, x)) w.push_back(ring.str(g));
        std::cout << "ghost (power traces): " << w.dump() << "\n";
        return kExitOk;
    });
}

int cmd_suite(const std::string& config, std::string checks, std::uint64_t seed, int jobs,
              const std::string& out) {
    suite::Bounds bounds;
    std::vector<std::string> names;
    if (!config.empty()) {
        json cfg = io::load_json(config);
        if (io::kind_of(cfg) != "suite-config") throw SchemaError("expected kind \"suite-config\"");
        if (cfg.contains("checks")) names = cfg["checks"].get<std::vector<std::string>>();
        seed = cfg.value("seed", seed);
        if (cfg.contains("bounds")) {
            const auto& b = cfg["bounds"];
            bounds.index_bound = b.value("index_bound", bounds.index_bound);
            bounds.groth_bound = b.value("groth_bound", bounds.groth_bound);
            bounds.witt_trials = b.value("witt_trials", bounds.witt_trials);
            bounds.diagram_trials = b.value("diagram_trials", bounds.diagram_trials);
            bounds.trace_trials = b.value("trace_trials", bounds.trace_trials);
            bounds.bar_degree = b.value("bar_degree", bounds.bar_degree);
        }
    }
    if (!checks.empty()) {
        names.clear();
        for (std::size_t pos = 0; pos < checks.size();) {
            auto comma = checks.find(',', pos);
            if (comma == std::string::npos) comma = checks.size();
            names.push_back(checks.substr(pos, comma - pos));
            pos = comma + 1;
        }
    }
    if (names.empty() && config.empty()) names = suite::all_check_names();
    auto rep = suite::run_suite(names, seed, bounds, jobs);
    std::cout << suite::report_text(rep);
    if (!out.empty()) io::save_json(out_path(out), io::report_to_json(rep));
    return rep.all_pass() ? kExitOk : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cyclic bar constructions, edgewise subdivision, Witt vectors, and the characteristic trace"};
    app.require_subcommand(1);

    std::string name = "circle", emit, emit_fixed, input, primes = "2,3,5";
    std::string monoid = "z3", check = "all", ring_tag = "z:0", coords, coords2, matrix, config,
                checks, out, path, op;
    int trunc = 3, r = 2, degree = 4, through = -1, bound = 24, to = 1, jobs = 1;
    bool allow_noninv = false;
    std::uint64_t seed = 1;

    auto* c_builtin = app.add_subcommand("builtin", "export a builtin complex");
    c_builtin->add_option("name", name, "circle | sphere2 | point")->required();
    c_builtin->add_option("--trunc", trunc, "truncation degree");
    c_builtin->add_option("--emit", emit, "output file");

    auto* c_sub = app.add_subcommand("subdivide", "r-fold edgewise subdivision");
    c_sub->add_option("--input", input, "complex file or builtin:NAME[:N]")->required();
    c_sub->add_option("--r", r, "subdivision parameter")->required();
    c_sub->add_option("--emit", emit, "write the subdivided complex");
    c_sub->add_option("--fixed", emit_fixed, "write the C_r-fixed subcomplex");

    auto* c_coh = app.add_subcommand("coherence", "cube face relations of the coherence homotopies");
    c_coh->add_option("--primes", primes, "comma-separated primes, at most 6");

    auto* c_bar = app.add_subcommand("barcy", "cyclic bar construction of a monoid");
    c_bar->add_option("--monoid", monoid, "monoid file or builtin (z2, z3, z4, s3, idem2)")->required();
    c_bar->add_option("--degree", degree, "truncation degree");
    c_bar->add_option("--check", check, "validate | frobenius | all | none");
    c_bar->add_option("--emit", emit, "write the complex");

    auto* c_hom = app.add_subcommand("homology", "integral homology of a truncated complex");
    c_hom->add_option("--input", input, "complex file or builtin:NAME[:N]")->required();
    c_hom->add_option("--through", through, "top degree (default truncation-1)");

    auto* c_idx = app.add_subcommand("indexcat", "index-category checks");
    c_idx->add_option("--bound", bound, "object bound");
    c_idx->add_option("--check", check, "relations | factorization | grothendieck | theta")->required();

    auto* c_witt = app.add_subcommand("witt", "truncated big Witt vector arithmetic");
    c_witt->add_option("op", op, "add | mul | neg | frob | restrict | ghost")->required();
    c_witt->add_option("--ring", ring_tag, "z:0 | z:m | q");
    c_witt->add_option("--trunc", trunc, "n for the truncation set <n>")->required();
    c_witt->add_option("--coords", coords, "comma-separated coordinates")->required();
    c_witt->add_option("--coords2", coords2, "second operand for add/mul");
    c_witt->add_option("--r", r, "parameter for frob");
    c_witt->add_option("--to", to, "target n for restrict");

    auto* c_tr = app.add_subcommand("trace", "characteristic trace det(1-t*alpha)");
    c_tr->add_option("--matrix", matrix, "square matrix as JSON rows")->required();
    c_tr->add_option("--ring", ring_tag, "z:0 | z:m | q");
    c_tr->add_option("--trunc", trunc, "n for the truncation set <n>");
    c_tr->add_flag("--allow-noninvertible", allow_noninv, "skip the automorphism check");

    auto* c_suite = app.add_subcommand("suite", "run named verification suites");
    c_suite->add_option("--config", config, "suite-config JSON file");
    c_suite->add_option("--checks", checks, "comma-separated check names (default: all)");
    c_suite->add_option("--seed", seed, "master seed");
    c_suite->add_option("--jobs", jobs, "concurrent checks")->check(CLI::PositiveNumber);
    c_suite->add_option("--out", out, "write the report JSON");

    auto* c_insp = app.add_subcommand("inspect", "summarize any artifact file");
    c_insp->add_option("path", path, "JSON artifact")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*c_builtin) return cmd_builtin(name, trunc, emit);
        if (*c_sub) return cmd_subdivide(input, r, emit, emit_fixed);
        if (*c_coh) return cmd_coherence(primes);
        if (*c_bar) return cmd_barcy(monoid, degree, check, emit);
        if (*c_hom) return cmd_homology(input, through);
        if (*c_idx) return cmd_indexcat(bound, check);
        if (*c_witt) return cmd_witt(op, ring_tag, trunc, coords, coords2, r, to);
        if (*c_tr) return cmd_trace(matrix, ring_tag, trunc, allow_noninv);
        if (*c_suite) return cmd_suite(config, checks, seed, jobs, out);
        if (*c_insp) {
            std::cout << io::inspect(io::load_json(path));
            return kExitOk;
        }
    } catch (const SpanError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailure;
    } catch (const SchemaError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return kExitSchema;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailure;
    }
    return kExitUsage;
}
