// Command-line front end for min-ordering recognition and the model
// conversions built on it. Every subcommand prints one JSON object on stdout;
// exit codes encode the decision so pipelines need no parsing:
//   0 yes/success, 1 no/none, 2 input error, 3 internal guard.

#include <iostream>
#include <random>
#include <string>

#include "CLI11.hpp"
#include "minorder/biarc.hpp"
#include "minorder/digraph.hpp"
#include "minorder/homomorphism.hpp"
#include "minorder/interval_models.hpp"
#include "minorder/io.hpp"
#include "minorder/matrix.hpp"
#include "minorder/obstructions.hpp"
#include "minorder/ordering.hpp"
#include "minorder/rays.hpp"

using namespace minorder;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

bool g_pretty = false;

int emit(const Json& payload, int code) {
    std::cout << (g_pretty ? payload.dump(2) : payload.dump()) << "\n";
    return code;
}

int emit_ok(Json payload) {
    payload["status"] = "ok";
    return emit(payload, kExitYes);
}

int emit_no(Json payload) {
    payload["status"] = "no";
    return emit(payload, kExitNo);
}

// Inline value, or the contents of a file when prefixed with '@'.
std::string arg_or_file(const std::string& value) {
    if (!value.empty() && value.front() == '@') {
        return read_file(value.substr(1));
    }
    return value;
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        throw InputError(std::string("bad JSON: ") + e.what());
    }
}

Digraph load_graph(const std::string& path) { return parse_graph_text(read_file(path)); }

// Emitted certificates are re-verified here, independently of the
// constructions' own internal guards.
Json certified_recognition(const Digraph& h, const VertexOrdering& ord, const std::string& emit_kind) {
    Json out;
    if (!is_min_ordering(h, ord)) {
        throw InternalError("recognition produced an ordering that fails verification");
    }
    if (emit_kind == "ordering" || emit_kind == "all" || emit_kind == "model" ||
        emit_kind == "biarc") {
        out["min_ordering"] = ordering_to_json(ord);
    }
    if (emit_kind == "model" || emit_kind == "all") {
        SignedIntervalModel model = signed_from_min_ordering(h, ord);
        if (realize_signed(model) != h) {
            throw InternalError("signed model certificate fails re-validation");
        }
        out["signed_model"] = signed_model_to_json(model);
    }
    if (emit_kind == "biarc" || emit_kind == "all") {
        BiArcModel model = biarc_from_min_ordering(h, ord);
        if (realize_biarc(model) != h) {
            throw InternalError("bi-arc certificate fails re-validation");
        }
        out["biarc_model"] = biarc_model_to_json(model);
    }
    return out;
}

int cmd_recognize(const std::string& input, const std::string& emit_kind) {
    Digraph h = load_graph(input);
    auto ord = find_min_ordering(h);
    if (!ord.has_value()) {
        return emit_no(Json{{"signed_interval", false}});
    }
    Json out = certified_recognition(h, *ord, emit_kind);
    out["signed_interval"] = true;
    return emit_ok(std::move(out));
}

int cmd_check_ordering(const std::string& input, const std::string& ordering_arg) {
    Digraph h = load_graph(input);
    VertexOrdering ord = ordering_from_json(parse_json(arg_or_file(ordering_arg)));
    auto violation = verify_min_ordering(h, ord);
    auto counterexample = verify_via_extrema(h, ord);
    if (violation.has_value() != counterexample.has_value()) {
        throw InternalError("definition and extrema verifiers disagree");
    }
    if (!violation.has_value()) {
        return emit_ok(Json{{"valid", true}});
    }
    Json out{{"valid", false}, {"violation", violation_to_json(*violation)}};
    out["extrema_counterexample"] =
        Json::array({counterexample->first, counterexample->second});
    return emit_no(std::move(out));
}

int cmd_realize(const std::string& type, const std::string& model_path, bool standard_cott) {
    Json j = parse_json(read_file(model_path));
    if (type == "signed") {
        return emit_ok(Json{{"graph", digraph_to_json(realize_signed(signed_model_from_json(j)))}});
    }
    if (type == "cott") {
        Digraph g = realize_cott(cott_model_from_json(j));
        if (standard_cott) {
            // the standard definition applies to distinct pairs only
            std::vector<std::pair<int, int>> arcs;
            for (auto [u, v] : g.arcs()) {
                if (u != v) arcs.emplace_back(u, v);
            }
            g = Digraph(g.n(), arcs);
        }
        return emit_ok(Json{{"graph", digraph_to_json(g)}});
    }
    if (type == "tt") {
        return emit_ok(
            Json{{"graph", digraph_to_json(realize_threshold_tolerance(tt_model_from_json(j)))}});
    }
    if (type == "biarc") {
        return emit_ok(Json{{"graph", digraph_to_json(realize_biarc(biarc_model_from_json(j)))}});
    }
    if (type == "rays") {
        RayModel m = ray_model_from_json(j);
        BipartiteDigraph bip = realize_rays(m);
        return emit_ok(Json{{"graph", digraph_to_json(bip.to_digraph())},
                            {"parts", Json{{"A", bip.part_a()}, {"B", bip.part_b()}}}});
    }
    throw InputError("unknown model type: " + type);
}

// Graph-sourced conversions route through a min ordering; the other sources
// are direct coordinate translations.
int cmd_convert(const std::string& from, const std::string& to, const std::string& input,
                const std::string& ordering_arg) {
    if (from == "cott") {
        CoTTModel m = cott_model_from_json(parse_json(read_file(input)));
        if (to == "signed") {
            SignedIntervalModel s = cott_to_signed(m);
            if (realize_signed(s) != realize_cott(m)) {
                throw InternalError("co-TT to signed conversion changed the realization");
            }
            return emit_ok(Json{{"signed_model", signed_model_to_json(s)}});
        }
        if (to == "tt") {
            return emit_ok(Json{{"tt_model", tt_model_to_json(cott_to_threshold_tolerance(m))}});
        }
        throw InputError("co-TT models convert to: signed, tt");
    }
    if (from == "signed") {
        SignedIntervalModel m = signed_model_from_json(parse_json(read_file(input)));
        if (to == "ordering") {
            return emit_ok(Json{{"min_ordering", ordering_to_json(min_ordering_from_signed(m))}});
        }
        throw InputError("signed models convert to: ordering");
    }
    if (from == "biarc") {
        BiArcModel m = biarc_model_from_json(parse_json(read_file(input)));
        if (to == "ordering") {
            return emit_ok(Json{{"min_ordering", ordering_to_json(ordering_generated(m))}});
        }
        throw InputError("bi-arc models convert to: ordering");
    }
    if (from == "rays") {
        RayModel m = ray_model_from_json(parse_json(read_file(input)));
        if (to == "ordering") {
            return emit_ok(Json{{"min_ordering", ordering_to_json(min_ordering_from_rays(m))}});
        }
        throw InputError("ray models convert to: ordering");
    }
    if (from != "graph") {
        throw InputError("unknown conversion source: " + from);
    }

    Digraph h = load_graph(input);
    if (to == "standard-cott-lift") {
        return emit_ok(Json{{"graph", digraph_to_json(standard_cott_lift(h))}});
    }
    if (to == "rays") {
        // orient the underlying bipartite graph from A to B first; the min
        // ordering lives on the oriented digraph
        BipartiteDigraph bip = as_bipartite_digraph(h);
        std::optional<VertexOrdering> ord;
        if (!ordering_arg.empty()) {
            ord = ordering_from_json(parse_json(arg_or_file(ordering_arg)));
        } else {
            ord = find_min_ordering(bip.to_digraph());
            if (!ord.has_value()) {
                return emit_no(Json{{"signed_interval", false}});
            }
        }
        SignedIntervalModel model = signed_from_min_ordering(bip.to_digraph(), *ord);
        RayModel rays = rays_from_signed(bip, model);
        return emit_ok(Json{{"ray_model", ray_model_to_json(rays)},
                            {"parts", Json{{"A", bip.part_a()}, {"B", bip.part_b()}}}});
    }
    std::optional<VertexOrdering> ord;
    if (!ordering_arg.empty()) {
        ord = ordering_from_json(parse_json(arg_or_file(ordering_arg)));
    } else {
        ord = find_min_ordering(h);
        if (!ord.has_value()) {
            return emit_no(Json{{"signed_interval", false}});
        }
    }
    if (to == "ordering") {
        if (!is_min_ordering(h, *ord)) {
            throw InputError("supplied ordering is not a min ordering");
        }
        return emit_ok(Json{{"min_ordering", ordering_to_json(*ord)}});
    }
    if (to == "signed") {
        return emit_ok(
            Json{{"signed_model", signed_model_to_json(signed_from_min_ordering(h, *ord))}});
    }
    if (to == "cott") {
        return emit_ok(Json{{"cott_model", cott_model_to_json(cott_from_min_ordering(h, *ord))}});
    }
    if (to == "interval") {
        return emit_ok(Json{
            {"interval_model", signed_model_to_json(interval_model_from_min_ordering(h, *ord))}});
    }
    if (to == "biarc") {
        return emit_ok(Json{{"biarc_model", biarc_model_to_json(biarc_from_min_ordering(h, *ord))}});
    }
    throw InputError("graphs convert to: ordering, signed, cott, interval, biarc, rays, "
                     "standard-cott-lift");
}

// With --witness all the payload mirrors the interval characterization
// (interval flag plus every obstruction found); the single-witness modes just
// report whether that kind of witness exists.
int cmd_obstruct(const std::string& input, const std::string& witness) {
    Digraph h = load_graph(input);
    Json out;
    if (witness == "cycle") {
        auto cycle = find_induced_cycle(h, {4, 5});
        if (!cycle.has_value()) return emit_no(Json{{"found", false}});
        return emit_ok(Json{{"found", true}, {"cycle", *cycle}});
    }
    if (witness == "at") {
        auto triple = find_asteroidal_triple(h);
        if (!triple.has_value()) return emit_no(Json{{"found", false}});
        if (!validate_asteroidal_triple(h, *triple)) {
            throw InternalError("asteroidal triple fails re-validation");
        }
        return emit_ok(Json{{"found", true}, {"asteroidal_triple", asteroidal_triple_to_json(*triple)}});
    }
    if (witness == "invertible") {
        auto pair = find_invertible_pair(h);
        if (!pair.has_value()) return emit_no(Json{{"found", false}});
        if (!validate_invertible_pair(h, *pair)) {
            throw InternalError("invertible pair fails re-validation");
        }
        return emit_ok(Json{{"found", true}, {"invertible_pair", invertible_pair_to_json(*pair)}});
    }
    LekkerkerkerBolandResult lb = lekkerkerker_boland(h);
    if (lb.cycle.has_value()) out["cycle"] = *lb.cycle;
    if (lb.triple.has_value()) {
        if (!validate_asteroidal_triple(h, *lb.triple)) {
            throw InternalError("asteroidal triple fails re-validation");
        }
        out["asteroidal_triple"] = asteroidal_triple_to_json(*lb.triple);
    }
    if (auto pair = find_invertible_pair(h)) {
        if (!validate_invertible_pair(h, *pair)) {
            throw InternalError("invertible pair fails re-validation");
        }
        out["invertible_pair"] = invertible_pair_to_json(*pair);
    }
    out["interval"] = lb.interval;
    return lb.interval ? emit_no(std::move(out)) : emit_ok(std::move(out));
}

int cmd_hom(const std::string& template_path, const std::string& input_path,
            const std::string& lists_arg, bool brute) {
    Digraph h = load_graph(template_path);
    Digraph g = load_graph(input_path);
    ListAssignment lists = lists_arg.empty()
                               ? ListAssignment::full(g.n(), h.n())
                               : lists_from_json(parse_json(arg_or_file(lists_arg)), g.n(), h.n());
    std::optional<std::vector<int>> f;
    std::string method;
    if (brute) {
        method = "brute-force";
        f = brute_force_hom(g, h, lists);
    } else {
        auto ord = find_min_ordering(h);
        if (!ord.has_value()) {
            throw InputError("template has no min ordering; rerun with --brute");
        }
        method = "arc-consistency";
        f = solve_list_hom(g, h, *ord, lists);
    }
    if (!f.has_value()) {
        return emit_no(Json{{"method", method}});
    }
    if (!is_list_homomorphism(g, h, *f, lists)) {
        throw InternalError("homomorphism fails re-validation");
    }
    return emit_ok(Json{{"map", *f}, {"method", method}});
}

Pattern parse_pattern(const std::string& name) {
    if (name == "K") return Pattern::K;
    if (name == "L") return Pattern::L;
    if (name == "Gamma") return Pattern::Gamma;
    if (name == "ID") return Pattern::Identity;
    throw InputError("pattern must be one of K, L, Gamma, ID");
}

int cmd_matrix_find(const std::string& input, const std::string& pattern) {
    BinaryMatrix m = parse_matrix_text(read_file(input));
    auto loc = find_pattern(m, parse_pattern(pattern));
    if (!loc.has_value()) return emit_no({});
    return emit_ok(Json{{"at", Json{{"i1", loc->i1}, {"i2", loc->i2}, {"j1", loc->j1},
                                    {"j2", loc->j2}}}});
}

int cmd_matrix_klfree(const std::string& input) {
    BinaryMatrix m = parse_matrix_text(read_file(input));
    return is_kl_free(m) ? emit_ok(Json{{"kl_free", true}}) : emit_no(Json{{"kl_free", false}});
}

int cmd_matrix_min_orderable(const std::string& input) {
    BinaryMatrix m = parse_matrix_text(read_file(input));
    auto perm = min_orderable(m);
    if (!perm.has_value()) return emit_no({});
    return emit_ok(Json{{"permutation", *perm}});
}

int cmd_matrix_independent(const std::string& input) {
    BinaryMatrix m = parse_matrix_text(read_file(input));
    auto perms = independent_kl_free(m);
    if (!perms.has_value()) return emit_no({});
    return emit_ok(Json{{"rows", perms->first}, {"cols", perms->second}});
}

int cmd_matrix_augment(const std::string& input) {
    BinaryMatrix m = parse_matrix_text(read_file(input));
    return emit_ok(Json{{"matrix", augment(m).to_strings()}});
}

int cmd_matrix_transform(const std::string& input, const std::string& op) {
    BinaryMatrix m = parse_matrix_text(read_file(input));
    MatrixTransform t;
    if (op == "rotate180") {
        t = MatrixTransform::rotate180;
    } else if (op == "transpose") {
        t = MatrixTransform::transpose;
    } else if (op == "reverse-rows") {
        t = MatrixTransform::reverse_rows;
    } else if (op == "reverse-cols") {
        t = MatrixTransform::reverse_cols;
    } else {
        throw InputError("op must be one of rotate180, transpose, reverse-rows, reverse-cols");
    }
    return emit_ok(Json{{"matrix", transform(m, t).to_strings()}});
}

int cmd_matrix_gamma_free(const std::string& input, const std::string& mode) {
    BinaryMatrix m = parse_matrix_text(read_file(input));
    if (mode == "simultaneous") {
        auto perm = gamma_free_simultaneous(m);
        if (!perm.has_value()) return emit_no({});
        return emit_ok(Json{{"permutation", *perm}});
    }
    if (mode == "independent") {
        auto perms = gamma_free_independent(m);
        if (!perms.has_value()) return emit_no({});
        return emit_ok(Json{{"rows", perms->first}, {"cols", perms->second}});
    }
    throw InputError("mode must be simultaneous or independent");
}

// One instance of the equivalence suite. Returns an error description or "".
std::string sweep_instance(const Digraph& h, bool crosscheck_none) {
    auto ord = find_min_ordering(h);
    if (!ord.has_value()) {
        if (crosscheck_none) {
            // no ordering may pass either verifier
            std::vector<int> order(h.n());
            std::iota(order.begin(), order.end(), 0);
            do {
                VertexOrdering candidate = VertexOrdering::of_vertices(order);
                if (is_min_ordering(h, candidate)) {
                    return "search missed a min ordering";
                }
                if (!verify_via_extrema(h, candidate).has_value()) {
                    return "extrema verifier accepted an ordering on an unorderable digraph";
                }
            } while (std::next_permutation(order.begin(), order.end()));
        }
        return "";
    }
    if (verify_via_extrema(h, *ord).has_value()) {
        return "verifiers disagree on the found ordering";
    }
    SignedIntervalModel model = signed_from_min_ordering(h, *ord);
    if (realize_signed(model) != h) return "signed round trip mismatch";
    if (!(min_ordering_from_signed(model) == *ord)) return "x-order extraction mismatch";
    BiArcModel biarc = biarc_from_min_ordering(h, *ord);
    if (realize_biarc(biarc) != h) return "bi-arc round trip mismatch";
    if (!(ordering_generated(biarc) == *ord)) return "bi-arc generated ordering mismatch";
    if (h.is_symmetric()) {
        CoTTModel cott = cott_from_min_ordering(h, *ord);
        if (realize_cott(cott) != h) return "co-TT round trip mismatch";
        if (realize_signed(cott_to_signed(cott)) != h) return "co-TT to signed mismatch";
    }
    return "";
}

int cmd_sweep(int exhaustive_n, int random_count, int random_max_n, uint64_t seed) {
    if (exhaustive_n > kMaxEnumerationN) {
        throw InputError("exhaustive sweep is capped at n = " + std::to_string(kMaxEnumerationN));
    }
    if (random_max_n > 7) {
        throw InputError("randomized sweep is capped at n = 7");
    }
    Json failures = Json::array();
    uint64_t instances = 0, with_ordering = 0;
    for (int n = 1; n <= exhaustive_n; ++n) {
        for_each_digraph(n, [&](const Digraph& h) {
            ++instances;
            if (find_min_ordering(h).has_value()) ++with_ordering;
            std::string error = sweep_instance(h, true);
            if (!error.empty()) {
                failures.push_back(Json{{"n", n}, {"graph", digraph_to_json(h)}, {"error", error}});
            }
        });
    }
    std::mt19937_64 rng(seed);
    for (int i = 0; i < random_count; ++i) {
        int n = 1 + static_cast<int>(rng() % static_cast<uint64_t>(random_max_n));
        std::vector<std::pair<int, int>> arcs;
        for (int u = 0; u < n; ++u) {
            for (int v = 0; v < n; ++v) {
                if (rng() & 1u) arcs.emplace_back(u, v);
            }
        }
        Digraph h(n, arcs);
        ++instances;
        if (find_min_ordering(h).has_value()) ++with_ordering;
        std::string error = sweep_instance(h, n <= 5);
        if (!error.empty()) {
            failures.push_back(Json{{"n", n}, {"graph", digraph_to_json(h)}, {"error", error}});
        }
    }
    Json out{{"instances", instances}, {"with_min_ordering", with_ordering}};
    if (failures.empty()) {
        return emit_ok(std::move(out));
    }
    out["failures"] = failures;
    return emit_no(std::move(out));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"signed-interval digraph recognition and model conversion"};
    app.require_subcommand(1);
    app.add_flag("--pretty", g_pretty, "indent JSON output");

    std::string input, emit_kind = "all", ordering_arg, model_type, from, to, witness = "all";
    std::string template_path, lists_arg, pattern = "K", transform_op = "rotate180";
    std::string gamma_mode = "simultaneous";
    bool standard_cott = false, brute = false;
    int sweep_n = 3, sweep_random = 0, sweep_max_n = 6;
    uint64_t sweep_seed = 1;

    CLI::App* recognize = app.add_subcommand(
        "recognize", "decide min-ordering existence; emit certified certificates");
    recognize->add_option("--input", input, "graph file")->required();
    recognize->add_option("--emit", emit_kind, "ordering|model|biarc|all")
        ->check(CLI::IsMember({"ordering", "model", "biarc", "all"}));

    CLI::App* check = app.add_subcommand("check-ordering", "verify a candidate min ordering");
    check->add_option("--input", input, "graph file")->required();
    check->add_option("--ordering", ordering_arg, "JSON array, or @file")->required();

    CLI::App* realize = app.add_subcommand("realize", "realize a model file as a digraph");
    realize->add_option("--type", model_type, "signed|cott|tt|biarc|rays")->required();
    realize->add_option("--model", input, "model file (JSON)")->required();
    realize->add_flag("--standard-cott", standard_cott, "drop loops (standard co-TT reading)");

    CLI::App* convert = app.add_subcommand("convert", "convert between representations");
    convert->add_option("--from", from, "graph|signed|cott|biarc|rays")->required();
    convert->add_option("--to", to,
                        "ordering|signed|cott|interval|biarc|rays|tt|standard-cott-lift")
        ->required();
    convert->add_option("--input", input, "source file")->required();
    convert->add_option("--ordering", ordering_arg, "optional min ordering (JSON array or @file)");

    CLI::App* obstruct = app.add_subcommand("obstruct", "find interval obstructions");
    obstruct->add_option("--input", input, "graph file (reflexive, symmetric)")->required();
    obstruct->add_option("--witness", witness, "cycle|at|invertible|all")
        ->check(CLI::IsMember({"cycle", "at", "invertible", "all"}));

    CLI::App* hom = app.add_subcommand("hom", "list homomorphism to a template");
    hom->add_option("--template", template_path, "template graph file")->required();
    hom->add_option("--input", input, "input graph file")->required();
    hom->add_option("--lists", lists_arg, "lists JSON, or @file");
    hom->add_flag("--brute", brute, "use the exhaustive oracle instead of arc consistency");

    CLI::App* matrix = app.add_subcommand("matrix", "0,1-matrix pattern operations");
    matrix->require_subcommand(1);
    CLI::App* mfind = matrix->add_subcommand("find", "locate a 2x2 pattern");
    mfind->add_option("--input", input, "matrix file")->required();
    mfind->add_option("--pattern", pattern, "K|L|Gamma|ID")->required();
    CLI::App* mkl = matrix->add_subcommand("kl-free", "test K,L-freeness");
    mkl->add_option("--input", input, "matrix file")->required();
    CLI::App* mmin = matrix->add_subcommand("min-orderable", "simultaneous permutation search");
    mmin->add_option("--input", input, "matrix file")->required();
    CLI::App* mind = matrix->add_subcommand("independent", "independent row/column permutations");
    mind->add_option("--input", input, "matrix file")->required();
    CLI::App* maug = matrix->add_subcommand("augment", "build the square augmentation");
    maug->add_option("--input", input, "matrix file")->required();
    CLI::App* mtrans = matrix->add_subcommand("transform", "entrywise reindexing");
    mtrans->add_option("--input", input, "matrix file")->required();
    mtrans->add_option("--op", transform_op, "rotate180|transpose|reverse-rows|reverse-cols")
        ->required();
    CLI::App* mgamma = matrix->add_subcommand("gamma-free", "Gamma-freeness permutation search");
    mgamma->add_option("--input", input, "matrix file")->required();
    mgamma->add_option("--mode", gamma_mode, "simultaneous|independent");

    CLI::App* sweep = app.add_subcommand("sweep", "equivalence sweep over many digraphs");
    sweep->add_option("--n", sweep_n, "exhaustive bound (all digraphs up to this n, max 4)");
    sweep->add_option("--random", sweep_random, "number of random digraphs to add");
    sweep->add_option("--max-n", sweep_max_n, "largest random size (max 7)");
    sweep->add_option("--seed", sweep_seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        if (recognize->parsed()) return cmd_recognize(input, emit_kind);
        if (check->parsed()) return cmd_check_ordering(input, ordering_arg);
        if (realize->parsed()) return cmd_realize(model_type, input, standard_cott);
        if (convert->parsed()) return cmd_convert(from, to, input, ordering_arg);
        if (obstruct->parsed()) return cmd_obstruct(input, witness);
        if (hom->parsed()) return cmd_hom(template_path, input, lists_arg, brute);
        if (matrix->parsed()) {
            if (mfind->parsed()) return cmd_matrix_find(input, pattern);
            if (mkl->parsed()) return cmd_matrix_klfree(input);
            if (mmin->parsed()) return cmd_matrix_min_orderable(input);
            if (mind->parsed()) return cmd_matrix_independent(input);
            if (maug->parsed()) return cmd_matrix_augment(input);
            if (mtrans->parsed()) return cmd_matrix_transform(input, transform_op);
            if (mgamma->parsed()) return cmd_matrix_gamma_free(input, gamma_mode);
        }
        if (sweep->parsed()) return cmd_sweep(sweep_n, sweep_random, sweep_max_n, sweep_seed);
        throw InputError("no subcommand given");
    } catch (const InternalError& e) {
        emit(Json{{"status", "internal_error"}, {"message", e.what()}}, kExitInternal);
        return kExitInternal;
    } catch (const InputError& e) {
        emit(Json{{"status", "input_error"}, {"message", e.what()}}, kExitInput);
        return kExitInput;
    } catch (const std::exception& e) {
        emit(Json{{"status", "internal_error"}, {"message", e.what()}}, kExitInternal);
        return kExitInternal;
    }
}
