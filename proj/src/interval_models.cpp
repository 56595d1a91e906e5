#include "minorder/interval_models.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace minorder {

namespace {

void check_model_sizes(const SignedIntervalModel& m) {
    if (m.y.size() != m.x.size() || m.z.size() != m.x.size()) {
        throw InputError("signed-interval model has mismatched coordinate lists");
    }
}

void check_model_sizes(const CoTTModel& m) {
    if (m.y.size() != m.x.size()) {
        throw InputError("co-TT model has mismatched coordinate lists");
    }
}

VertexOrdering require_min_ordering(const Digraph& h, const VertexOrdering& ord) {
    if (auto violation = verify_min_ordering(h, ord)) {
        throw InvalidOrderingError("ordering is not a min ordering", *violation);
    }
    return ord;
}

}  // namespace

Digraph realize_signed(const SignedIntervalModel& model) {
    check_model_sizes(model);
    const int n = model.n();
    std::vector<std::pair<int, int>> arcs;
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (model.x[u] <= model.z[v] && model.x[v] <= model.y[u]) {
                arcs.emplace_back(u, v);
            }
        }
    }
    return Digraph(n, arcs);
}

SignedIntervalModel signed_from_min_ordering(const Digraph& h, const VertexOrdering& ord) {
    require_min_ordering(h, ord);
    const NeighborExtrema ext = extrema(h, ord);
    const int n = h.n();
    SignedIntervalModel model;
    model.x.reserve(n);
    model.y.reserve(n);
    model.z.reserve(n);
    for (int v = 0; v < n; ++v) {
        model.x.emplace_back(ord.position(v));
        model.y.emplace_back(ext.out_pos[v]);
        model.z.emplace_back(ext.in_pos[v]);
    }
    if (realize_signed(model) != h) {
        throw InternalError("signed-interval construction does not realize its digraph");
    }
    return model;
}

VertexOrdering min_ordering_from_signed(const SignedIntervalModel& model) {
    check_model_sizes(model);
    std::vector<int> order(model.n());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int u, int v) { return model.x[u] < model.x[v]; });
    VertexOrdering ord = VertexOrdering::of_vertices(order);
    if (!is_min_ordering(realize_signed(model), ord)) {
        throw InternalError("x-sorted order fails min ordering verification");
    }
    return ord;
}

TypeDecomposition vertex_types(const SignedIntervalModel& model) {
    check_model_sizes(model);
    const int n = model.n();
    TypeDecomposition out;
    out.types.reserve(n);
    for (int v = 0; v < n; ++v) {
        VertexType t{model.x[v] <= model.y[v] ? IntervalSign::positive : IntervalSign::negative,
                     model.x[v] <= model.z[v] ? IntervalSign::positive : IntervalSign::negative};
        out.types.push_back(t);
        if (t.source == IntervalSign::positive) {
            (t.sink == IntervalSign::positive ? out.plus_plus : out.plus_minus).push_back(v);
        } else {
            (t.sink == IntervalSign::positive ? out.minus_plus : out.minus_minus).push_back(v);
        }
    }

    const Digraph realized = realize_signed(model);
    out.minus_minus_independent = true;
    for (int u : out.minus_minus) {
        for (int v : out.minus_minus) {
            if (u != v && realized.has_arc(u, v)) out.minus_minus_independent = false;
        }
    }
    const Digraph induced = induced_subgraph(realized, out.plus_plus);
    out.plus_plus_reflexive = induced.is_reflexive();
    SignedIntervalModel restricted;
    for (int v : out.plus_plus) {
        restricted.x.push_back(model.x[v]);
        restricted.y.push_back(model.y[v]);
        restricted.z.push_back(model.z[v]);
    }
    out.plus_plus_model_realizes = realize_signed(restricted) == induced;
    return out;
}

Digraph realize_cott(const CoTTModel& model) {
    check_model_sizes(model);
    const int n = model.n();
    std::vector<std::pair<int, int>> arcs;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (model.x[a] <= model.y[b] && model.x[b] <= model.y[a]) {
                arcs.emplace_back(a, b);
            }
        }
    }
    return Digraph(n, arcs);
}

SignedIntervalModel cott_to_signed(const CoTTModel& model) {
    check_model_sizes(model);
    return SignedIntervalModel{model.x, model.y, model.y};
}

CoTTModel cott_from_min_ordering(const Digraph& h, const VertexOrdering& ord) {
    if (!h.is_symmetric()) {
        throw InputError("co-TT construction requires a symmetric digraph");
    }
    require_min_ordering(h, ord);
    const NeighborExtrema ext = extrema(h, ord);
    const int n = h.n();
    CoTTModel model;
    model.x.reserve(n);
    model.y.reserve(n);
    for (int v = 0; v < n; ++v) {
        model.x.emplace_back(ord.position(v));
        model.y.emplace_back(ext.out_pos[v]);  // symmetric, so O(v) = I(v)
    }
    if (realize_cott(model) != h) {
        throw InternalError("co-TT construction does not realize its graph");
    }
    return model;
}

SignedIntervalModel interval_model_from_min_ordering(const Digraph& h, const VertexOrdering& ord) {
    if (!h.is_reflexive()) {
        throw InputError("interval model construction requires a reflexive graph");
    }
    if (!h.is_symmetric()) {
        throw InputError("interval model construction requires a symmetric graph");
    }
    SignedIntervalModel model = cott_to_signed(cott_from_min_ordering(h, ord));
    if (!is_interval_model(model)) {
        throw InternalError("reflexive symmetric construction produced a non-interval model");
    }
    return model;
}

bool is_adjusted_interval_model(const SignedIntervalModel& model) {
    check_model_sizes(model);
    for (int v = 0; v < model.n(); ++v) {
        if (model.x[v] > model.y[v] || model.x[v] > model.z[v]) return false;
    }
    return true;
}

bool is_interval_model(const SignedIntervalModel& model) {
    return is_adjusted_interval_model(model) && is_cott_shape(model);
}

bool is_cott_shape(const SignedIntervalModel& model) {
    check_model_sizes(model);
    for (int v = 0; v < model.n(); ++v) {
        if (model.y[v] != model.z[v]) return false;
    }
    return true;
}

ThresholdToleranceModel cott_to_threshold_tolerance(const CoTTModel& model) {
    check_model_sizes(model);
    ThresholdToleranceModel out;
    out.weight = model.x;
    out.tolerance.reserve(model.n());
    for (int v = 0; v < model.n(); ++v) {
        out.tolerance.push_back(model.x[v] + model.y[v]);
    }
    return out;
}

Digraph realize_threshold_tolerance(const ThresholdToleranceModel& model) {
    if (model.tolerance.size() != model.weight.size()) {
        throw InputError("threshold tolerance model has mismatched coordinate lists");
    }
    const int n = model.n();
    std::vector<std::pair<int, int>> arcs;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            Rat sum = model.weight[a] + model.weight[b];
            if (sum > model.tolerance[a] || sum > model.tolerance[b]) {
                arcs.emplace_back(a, b);
            }
        }
    }
    return Digraph(n, arcs);
}

Digraph standard_cott_lift(const Digraph& g) {
    if (!g.is_irreflexive() || !g.is_symmetric()) {
        throw InputError("standard co-TT lift expects an irreflexive symmetric graph");
    }
    const int n = g.n();
    auto simplicial = [&](int v) {
        for (int u = 0; u < n; ++u) {
            if (u == v || !g.has_arc(v, u)) continue;
            for (int w = u + 1; w < n; ++w) {
                if (w == v || !g.has_arc(v, w)) continue;
                if (!g.has_arc(u, w)) return false;
            }
        }
        return true;
    };
    auto true_twin_of = [&](int v) {
        // identical closed neighborhoods
        for (int u = 0; u < n; ++u) {
            if (u == v) continue;
            bool twin = g.has_arc(u, v);
            for (int w = 0; twin && w < n; ++w) {
                bool in_v = w == v || g.has_arc(v, w);
                bool in_u = w == u || g.has_arc(u, w);
                if (in_v != in_u) twin = false;
            }
            if (twin) return true;
        }
        return false;
    };
    std::vector<std::pair<int, int>> arcs = g.arcs();
    for (int v = 0; v < n; ++v) {
        if (!(simplicial(v) && !true_twin_of(v))) {
            arcs.emplace_back(v, v);
        }
    }
    return Digraph(n, arcs);
}

}  // namespace minorder
