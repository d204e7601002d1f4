// hyperalg: command-line surface for the hypermatrix algebra library.
// Subcommands map one-to-one onto library operations; hypermatrix results
// are emitted as HMX text, structured records as JSON lines, counts as
// plain decimal integers. Identical argv and config produce byte-identical
// stdout.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperalg/hyperalg.hpp"
#include "hyperalg_version.hpp"

using json = nlohmann::json;
using namespace hyperalg;

namespace {

struct RunConfig {
    std::string backend = "auto";  // exact | modp | auto (by problem size)
    std::uint64_t prime = kDefaultPrime;
    Convention convention = Convention::Literal;
    InflationSemantics semantics = InflationSemantics::Walks;
    Formulation formulation = Formulation::Second;
    std::uint64_t seed = 0;
    std::string out_path;  // empty = stdout

    json to_json(const std::string& resolved_backend) const {
        json j;
        j["backend"] = resolved_backend;
        if (resolved_backend == "modp") j["prime"] = prime;
        j["convention"] = convention_name(convention);
        j["semantics"] = semantics_name(semantics);
        j["formulation"] = formulation_name(formulation);
        j["seed"] = seed;
        return j;
    }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(cfg.out_path, std::ios::binary);
        if (!out) throw Error("cannot write '" + cfg.out_path + "'");
        out << text;
    }
}

AnyHypermatrix load_hmx(const std::string& path) { return parse_hmx(slurp(path)); }

Hypermatrix<Rational> require_exact(AnyHypermatrix a, const std::string& what) {
    if (auto* h = std::get_if<Hypermatrix<Rational>>(&a)) return std::move(*h);
    throw Error(what + " requires an exact-backend hypermatrix");
}

/// Applies fn to the variant's alternative; all operands must share one backend.
template <class Fn>
void with_backend(std::vector<AnyHypermatrix> ops, Fn&& fn) {
    if (std::holds_alternative<Hypermatrix<Rational>>(ops[0])) {
        std::vector<Hypermatrix<Rational>> v;
        for (auto& o : ops) {
            if (!std::holds_alternative<Hypermatrix<Rational>>(o))
                throw Error("operands mix exact and modp backends");
            v.push_back(std::move(std::get<Hypermatrix<Rational>>(o)));
        }
        fn(std::move(v));
    } else {
        std::vector<Hypermatrix<Fp>> v;
        for (auto& o : ops) {
            if (!std::holds_alternative<Hypermatrix<Fp>>(o))
                throw Error("operands mix exact and modp backends");
            v.push_back(std::move(std::get<Hypermatrix<Fp>>(o)));
        }
        fn(std::move(v));
    }
}

Graph load_graph_file(const std::string& path, const std::string& format, bool undirected,
                      std::size_t min_vertices) {
    GraphFormat fmt;
    if (format == "graph6" || (format == "auto" && path.size() > 3 && path.ends_with(".g6")))
        fmt = GraphFormat::Graph6;
    else
        fmt = GraphFormat::EdgeList;
    std::vector<std::string> warnings;
    Graph g = load_graph(slurp(path), fmt, undirected, &warnings, min_vertices);
    for (const auto& w : warnings) std::cerr << "warning: " << path << ": " << w << "\n";
    return g;
}

/// Backend resolution: explicit flag wins; `auto` picks exact for n^3 <= 64.
std::string resolve_backend(const RunConfig& cfg, std::size_t side) {
    if (cfg.backend != "auto") return cfg.backend;
    return side * side * side <= 64 ? "exact" : "modp";
}

InvariantReport run_invariant(const RunConfig& cfg, const Graph& g, const std::string& id,
                              const std::string& backend) {
    if (backend == "modp")
        return hypergraph_invariant<Fp>(g, id, cfg.semantics, cfg.formulation, cfg.convention,
                                        Fp::from_residue(1, cfg.prime));
    return hypergraph_invariant<Rational>(g, id, cfg.semantics, cfg.formulation, cfg.convention);
}

json report_to_json(const RunConfig& cfg, const InvariantReport& rep) {
    json j;
    j["config"] = cfg.to_json(rep.backend.starts_with("modp") ? "modp" : "exact");
    j["graph"] = rep.graph_id;
    j["r"] = rep.r;
    j["dependent_term"] = rep.dependent_term;
    j["alphas"] = rep.alphas;
    return j;
}

template <class S>
Hypermatrix<S> random_hypermatrix(std::size_t side, std::mt19937_64& rng, bool binary,
                                  const S& one) {
    Hypermatrix<S> a({side, side, side}, one - one);
    std::uniform_int_distribution<int> dist(binary ? 0 : -9, binary ? 1 : 9);
    for (auto& e : a.entries()) {
        const int v = dist(rng);
        e = one - one;
        for (int i = 0; i < std::abs(v); ++i) {
            if (v > 0)
                e += one;
            else
                e -= one;
        }
    }
    return a;
}

void add_common_flags(CLI::App* cmd, RunConfig& cfg, std::map<std::string, std::string>& raw) {
    cmd->add_option("--backend", raw["backend"], "Scalar backend: exact, modp or auto")
        ->check(CLI::IsMember({"exact", "modp", "auto"}));
    cmd->add_option("--prime", cfg.prime, "Prime modulus for the modp backend");
    cmd->add_option("--convention", raw["convention"], "Background contraction convention")
        ->check(CLI::IsMember({"literal", "reversed"}));
    cmd->add_option("--semantics", raw["semantics"], "Inflation semantics")
        ->check(CLI::IsMember({"walks", "paths"}));
    cmd->add_option("--formulation", raw["formulation"], "Power formulation")
        ->check(CLI::IsMember({"first", "second"}));
    cmd->add_option("--seed", cfg.seed, "Seed for generation helpers");
    cmd->add_option("--out", cfg.out_path, "Write primary output to a file instead of stdout");
}

void finish_config(RunConfig& cfg, const std::map<std::string, std::string>& raw) {
    auto get = [&](const char* k) {
        auto it = raw.find(k);
        return it == raw.end() ? std::string() : it->second;
    };
    if (!get("backend").empty()) cfg.backend = get("backend");
    if (get("convention") == "reversed") cfg.convention = Convention::Reversed;
    if (get("semantics") == "paths") cfg.semantics = InflationSemantics::Paths;
    if (get("formulation") == "first") cfg.formulation = Formulation::First;
    Fp::set_default_modulus(cfg.prime);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hyperalg: exact hypermatrix algebra, hypergraph counting and graph invariants"};
    app.set_version_flag("--version", std::string("hyperalg ") + kHyperalgVersion + " (fixtures " +
                                          kFixtureSetHash + ")");
    app.require_subcommand(1);

    RunConfig cfg;
    if (const char* env = std::getenv("HYPERALG_PRIME")) cfg.prime = std::strtoull(env, nullptr, 10);
    std::map<std::string, std::string> raw;

    // --- fuss-catalan ---
    std::size_t fc_degree = 0;
    auto* fc = app.add_subcommand("fuss-catalan", "Count distinct powers of an odd degree");
    fc->add_option("degree", fc_degree, "Odd degree")->required();

    // --- product ---
    std::string prod_background = "delta";
    std::vector<std::string> prod_operands;
    auto* prod = app.add_subcommand("product", "Bhattacharya-Mesner product of HMX operands");
    prod->add_option("--background", prod_background, "Background HMX file, or 'delta'");
    prod->add_option("operands", prod_operands, "Operand HMX files")->required()->expected(-2);
    add_common_flags(prod, cfg, raw);

    // --- power ---
    std::string power_file;
    std::size_t power_index = 1, power_degree = 1, power_pos = 0;
    auto* power = app.add_subcommand("power", "Emit one hypermatrix power as HMX");
    power->add_option("hypermatrix", power_file)->required();
    power->add_option("--index", power_index, "Second formulation: sequence index k");
    power->add_option("--degree", power_degree, "First formulation: odd degree");
    power->add_option("--pos", power_pos, "First formulation: canonical position within the degree");
    add_common_flags(power, cfg, raw);

    // --- span ---
    std::string span_file;
    std::size_t span_count = 0, span_max_degree = 0;
    auto* span = app.add_subcommand("span", "Span dimension of the canonical power terms");
    span->add_option("hypermatrix", span_file)->required();
    span->add_option("--count", span_count, "Second formulation: number of terms (default n^3)");
    span->add_option("--max-degree", span_max_degree,
                     "First formulation: top degree (default: until count exceeds n^3+1)");
    add_common_flags(span, cfg, raw);

    // --- ch ---
    std::string ch_file;
    auto* ch = app.add_subcommand("ch", "Cayley-Hamilton coefficients of the first dependence");
    ch->add_option("hypermatrix", ch_file)->required();
    add_common_flags(ch, cfg, raw);

    // --- tetra ---
    std::string tetra_file, tetra_glued, tetra_at;
    std::size_t tetra_k = 0;
    auto* tetra = app.add_subcommand("tetra", "Tetrahedral complex counts of a binary hypermatrix");
    tetra->add_option("hypermatrix", tetra_file)->required();
    tetra->add_option("--glued", tetra_glued, "Two-tetrahedron gluing variant")
        ->check(CLI::IsMember({"first", "second", "third"}));
    tetra->add_option("--at", tetra_at, "Entry r,g,b for --glued / --k counts");
    tetra->add_option("--k", tetra_k, "k-tetrahedral complex count at --at");
    add_common_flags(tetra, cfg, raw);

    // --- inflate ---
    std::string inflate_file, inflate_format = "auto";
    bool inflate_undirected = false;
    std::size_t inflate_vertices = 0;
    auto* infl = app.add_subcommand("inflate", "Path adjacency hypermatrix inflation of a graph");
    infl->add_option("graph", inflate_file)->required();
    infl->add_option("--format", inflate_format)->check(CLI::IsMember({"auto", "edgelist", "graph6"}));
    infl->add_flag("--undirected", inflate_undirected, "Symmetrize edge-list input");
    infl->add_option("--vertices", inflate_vertices, "Force at least this many vertices");
    add_common_flags(infl, cfg, raw);

    // --- invariant ---
    std::string inv_file, inv_format = "auto";
    bool inv_undirected = false;
    std::size_t inv_vertices = 0;
    auto* inv = app.add_subcommand("invariant", "Permutation-invariant report for a graph");
    inv->add_option("graph", inv_file)->required();
    inv->add_option("--format", inv_format)->check(CLI::IsMember({"auto", "edgelist", "graph6"}));
    inv->add_flag("--undirected", inv_undirected);
    inv->add_option("--vertices", inv_vertices);
    add_common_flags(inv, cfg, raw);

    // --- distinguish ---
    std::string dist_file1, dist_file2, dist_format = "auto";
    bool dist_undirected = false;
    std::size_t dist_vertices = 0;
    auto* dist = app.add_subcommand("distinguish", "Compare two graphs by the inflation invariant");
    dist->add_option("graph1", dist_file1)->required();
    dist->add_option("graph2", dist_file2)->required();
    dist->add_option("--format", dist_format)->check(CLI::IsMember({"auto", "edgelist", "graph6"}));
    dist->add_flag("--undirected", dist_undirected);
    dist->add_option("--vertices", dist_vertices);
    add_common_flags(dist, cfg, raw);

    // --- bench ---
    std::string bench_workload;
    std::size_t bench_size = 3, bench_reps = 3;
    std::string bench_fixtures = "fixtures";
    auto* bench = app.add_subcommand("bench", "Timing of production kernels vs reference loops");
    bench->add_option("workload", bench_workload)->required()->check(CLI::IsMember({"product", "span"}));
    bench->add_option("--size", bench_size, "Cubic side length (1-4 for span)");
    bench->add_option("--reps", bench_reps, "Repetitions");
    bench->add_option("--fixtures", bench_fixtures, "Fixture directory for span workloads");
    add_common_flags(bench, cfg, raw);

    // --- gen (hidden test/bench helper) ---
    std::string gen_kind;
    std::size_t gen_side = 2, gen_n = 4;
    bool gen_binary = false;
    double gen_density = 0.5;
    auto* gen = app.add_subcommand("gen", "Seeded random hypermatrix / graph generator");
    gen->group("");  // hidden from help
    gen->add_option("kind", gen_kind)->required()->check(CLI::IsMember({"hypermatrix", "graph"}));
    gen->add_option("--side", gen_side);
    gen->add_option("--n", gen_n);
    gen->add_flag("--binary", gen_binary);
    gen->add_option("--density", gen_density);
    add_common_flags(gen, cfg, raw);

    CLI11_PARSE(app, argc, argv);
    finish_config(cfg, raw);

    try {
        if (*fc) {
            const Int by_recurrence = fuss_catalan_count(fc_degree);
            if (by_recurrence != fuss_catalan_closed_form(fc_degree))
                throw Error("recurrence and closed form disagree");  // unreachable
            emit(cfg, by_recurrence.str() + "\n");
        } else if (*prod) {
            std::vector<AnyHypermatrix> ops;
            for (const auto& p : prod_operands) ops.push_back(load_hmx(p));
            with_backend(std::move(ops), [&](auto v) {
                using S = typename decltype(v)::value_type::value_type;
                if (prod_background == "delta") {
                    emit(cfg, serialize_hmx(bm_product(v)));
                } else {
                    auto bg = load_hmx(prod_background);
                    using HmS = Hypermatrix<S>;
                    if (!std::holds_alternative<HmS>(bg))
                        throw Error("background backend differs from operand backend");
                    emit(cfg, serialize_hmx(general_bm_product(v, std::get<HmS>(bg), cfg.convention)));
                }
            });
        } else if (*power) {
            with_backend({load_hmx(power_file)}, [&](auto v) {
                auto& a = v[0];
                if (cfg.formulation == Formulation::Second) {
                    auto seq = power_sequence_second(a, power_index + 1, cfg.convention);
                    emit(cfg, serialize_hmx(seq.back()));
                } else {
                    auto trees = enumerate_trees(power_degree);
                    if (power_pos >= trees.size())
                        throw Error("position exceeds the number of degree-" +
                                    std::to_string(power_degree) + " parenthesizations");
                    emit(cfg, serialize_hmx(evaluate_tree(trees[power_pos], a)));
                }
            });
        } else if (*span) {
            with_backend({load_hmx(span_file)}, [&](auto v) {
                auto& a = v[0];
                if (a.order() != 3 || !a.cubic()) throw Error("span requires a cubic order-3 input");
                const std::size_t n3 = a.side() * a.side() * a.side();
                using S = typename std::decay_t<decltype(a)>::value_type;
                std::vector<Hypermatrix<S>> terms;
                if (cfg.formulation == Formulation::Second) {
                    terms = power_sequence_second(a, span_count ? span_count : n3, cfg.convention);
                } else {
                    std::map<std::string, Hypermatrix<S>> memo;
                    for (std::size_t d = 1; span_max_degree ? d <= span_max_degree
                                                           : terms.size() < n3 + 2;
                         d += 2)
                        for (const auto& tree : enumerate_trees(d))
                            terms.push_back(evaluate_tree(tree, a, &memo));
                }
                json j;
                j["config"] = cfg.to_json(std::is_same_v<S, Fp> ? "modp" : "exact");
                j["terms"] = terms.size();
                j["dim"] = span_dimension(terms);
                emit(cfg, j.dump() + "\n");
            });
        } else if (*ch) {
            with_backend({load_hmx(ch_file)}, [&](auto v) {
                using S = typename std::decay_t<decltype(v[0])>::value_type;
                auto cv = ch_coefficients(v[0], cfg.formulation, cfg.convention);
                json j;
                j["config"] = cfg.to_json(std::is_same_v<S, Fp> ? "modp" : "exact");
                j["formulation"] = formulation_name(cv.formulation);
                j["convention"] = convention_name(cv.convention);
                j["backend"] = std::is_same_v<S, Fp> ? "modp" : "exact";
                j["r"] = cv.r;
                std::vector<std::string> alphas;
                for (const auto& x : cv.alphas) alphas.push_back(scalar_to_text(x));
                j["alphas"] = alphas;
                emit(cfg, j.dump() + "\n");
            });
        } else if (*tetra) {
            with_backend({load_hmx(tetra_file)}, [&](auto v) {
                auto& a = v[0];
                Int count;
                if (!tetra_glued.empty() || tetra_k > 0) {
                    if (tetra_at.empty()) throw Error("--glued/--k require --at r,g,b");
                    std::size_t r, g, b;
                    char c1, c2;
                    std::istringstream at(tetra_at);
                    if (!(at >> r >> c1 >> g >> c2 >> b) || c1 != ',' || c2 != ',')
                        throw Error("--at expects r,g,b");
                    if (tetra_k > 0) {
                        count = count_k_complexes(a, tetra_k, r, g, b, cfg.convention);
                    } else {
                        GluingVariant variant = tetra_glued == "first"    ? GluingVariant::FirstSlot
                                                : tetra_glued == "second" ? GluingVariant::SecondSlot
                                                                          : GluingVariant::ThirdSlot;
                        count = count_glued(a, variant, r, g, b);
                    }
                } else {
                    count = count_tetrahedra(a);
                }
                emit(cfg, count.str() + "\n");
            });
        } else if (*infl) {
            Graph g = load_graph_file(inflate_file, inflate_format, inflate_undirected,
                                      inflate_vertices);
            if (resolve_backend(cfg, g.vertex_count()) == "modp")
                emit(cfg, serialize_hmx(inflate<Fp>(g, cfg.semantics, Fp::from_residue(1, cfg.prime))));
            else
                emit(cfg, serialize_hmx(inflate<Rational>(g, cfg.semantics)));
        } else if (*inv) {
            Graph g = load_graph_file(inv_file, inv_format, inv_undirected, inv_vertices);
            auto rep = run_invariant(cfg, g, inv_file, resolve_backend(cfg, g.vertex_count()));
            emit(cfg, report_to_json(cfg, rep).dump() + "\n");
        } else if (*dist) {
            Graph g1 = load_graph_file(dist_file1, dist_format, dist_undirected, dist_vertices);
            Graph g2 = load_graph_file(dist_file2, dist_format, dist_undirected, dist_vertices);
            std::ostringstream out;
            if (!cospectral(g1, g2)) {
                out << verdict_name(Verdict::NotCospectral) << "\n";
            } else {
                const std::string backend =
                    resolve_backend(cfg, std::max(g1.vertex_count(), g2.vertex_count()));
                auto r1 = run_invariant(cfg, g1, dist_file1, backend);
                auto r2 = run_invariant(cfg, g2, dist_file2, backend);
                out << verdict_name(r1.same_invariant(r2) ? Verdict::SameInvariant
                                                          : Verdict::DifferentInvariant)
                    << "\n"
                    << report_to_json(cfg, r1).dump() << "\n"
                    << report_to_json(cfg, r2).dump() << "\n";
            }
            emit(cfg, out.str());
        } else if (*bench) {
            if (bench_reps == 0) throw Error("repetitions must be positive");
            json j;
            j["config"] = cfg.to_json("exact");
            j["workload"] = bench_workload;
            std::vector<double> kernel_ms, reference_ms;
            auto time_ms = [](auto&& f) {
                const auto t0 = std::chrono::steady_clock::now();
                f();
                return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                                 t0)
                    .count();
            };
            if (bench_workload == "product") {
                std::mt19937_64 rng(cfg.seed);
                auto a = random_hypermatrix<Rational>(bench_size, rng, false, Rational(1));
                std::vector<Hypermatrix<Rational>> ops{a, a, a};
                Hypermatrix<Rational> fast = a, slow = a;
                for (std::size_t i = 0; i < bench_reps; ++i) {
                    kernel_ms.push_back(time_ms([&] { fast = bm_product(ops); }));
                    reference_ms.push_back(time_ms([&] { slow = naive_bm_product(ops); }));
                }
                if (fast != slow) throw Error("kernel and reference product disagree");
                j["size"] = bench_size;
            } else {
                auto a = require_exact(
                    load_hmx(bench_fixtures + "/span_second_" + std::to_string(bench_size) + ".hmx"),
                    "bench span");
                const std::size_t n3 = a.side() * a.side() * a.side();
                std::size_t dim = 0;
                for (std::size_t i = 0; i < bench_reps; ++i)
                    kernel_ms.push_back(time_ms([&] {
                        dim = span_dimension(power_sequence_second(a, n3, cfg.convention));
                    }));
                j["size"] = a.side();
                j["dim"] = dim;
            }
            auto stats = [](std::vector<double> v) {
                std::sort(v.begin(), v.end());
                json s;
                s["min_ms"] = v.front();
                s["median_ms"] = v[v.size() / 2];
                return s;
            };
            j["kernel"] = stats(kernel_ms);
            if (!reference_ms.empty()) j["reference"] = stats(reference_ms);
            j["reps"] = bench_reps;
            emit(cfg, j.dump() + "\n");
        } else if (*gen) {
            std::mt19937_64 rng(cfg.seed);
            if (gen_kind == "hypermatrix") {
                if (cfg.backend == "modp")
                    emit(cfg, serialize_hmx(random_hypermatrix<Fp>(
                                  gen_side, rng, gen_binary, Fp::from_residue(1, cfg.prime))));
                else
                    emit(cfg, serialize_hmx(random_hypermatrix<Rational>(gen_side, rng, gen_binary,
                                                                         Rational(1))));
            } else {
                std::ostringstream out;
                std::uniform_real_distribution<double> coin(0.0, 1.0);
                for (std::size_t u = 0; u < gen_n; ++u)
                    for (std::size_t v = 0; v < gen_n; ++v)
                        if (u != v && coin(rng) < gen_density) out << u << ' ' << v << '\n';
                emit(cfg, out.str());
            }
        }
    } catch (const std::exception& e) {
        json err;
        err["error"] = e.what();
        std::cerr << err.dump() << "\n";
        return 1;
    }
    return 0;
}
