#include "minorder/io.hpp"

#include <fstream>
#include <sstream>

namespace minorder {

namespace {

// Lines with comments stripped and whitespace trimmed; blanks dropped.
std::vector<std::string> content_lines(std::string_view text) {
    std::vector<std::string> out;
    std::string line;
    std::istringstream stream{std::string(text)};
    while (std::getline(stream, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
            line.pop_back();
        }
        size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        out.push_back(line.substr(start));
    }
    return out;
}

std::vector<long long> parse_integers(const std::string& line, size_t expected) {
    std::istringstream stream(line);
    std::vector<long long> values;
    long long value;
    while (stream >> value) values.push_back(value);
    std::string trailing;
    if (!stream.eof() || (stream >> trailing)) {
        if (!trailing.empty()) throw InputError("unexpected token in line: " + line);
    }
    if (values.size() != expected) {
        throw InputError("expected " + std::to_string(expected) + " integers in line: " + line);
    }
    return values;
}

Json rationals_to_json(const std::vector<Rat>& values) {
    Json out = Json::array();
    for (const Rat& v : values) out.push_back(format_rational(v));
    return out;
}

std::vector<Rat> rationals_from_json(const Json& j, const char* what) {
    if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
    std::vector<Rat> out;
    for (const Json& item : j) {
        if (item.is_string()) {
            out.push_back(parse_rational(item.get<std::string>()));
        } else if (item.is_number_integer()) {
            out.push_back(Rat(item.get<long long>()));
        } else {
            throw InputError(std::string(what) + " entries must be rational strings");
        }
    }
    return out;
}

Rat rational_from_json(const Json& j, const char* what) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rat(j.get<long long>());
    throw InputError(std::string(what) + " must be a rational string");
}

int checked_n(const Json& j) {
    if (!j.contains("n") || !j["n"].is_number_integer()) {
        throw InputError("model JSON needs an integer \"n\"");
    }
    return j["n"].get<int>();
}

void check_length(const std::vector<Rat>& values, int n, const char* what) {
    if (static_cast<int>(values.size()) != n) {
        throw InputError(std::string(what) + " must list exactly n coordinates");
    }
}

}  // namespace

Digraph parse_graph_text(std::string_view text) {
    std::vector<std::string> lines = content_lines(text);
    if (lines.empty()) throw InputError("graph file is empty");
    long long n = parse_integers(lines[0], 1)[0];
    if (n < 0) throw InputError("vertex count must be non-negative");
    std::vector<std::pair<int, int>> arcs;
    for (size_t i = 1; i < lines.size(); ++i) {
        auto pair = parse_integers(lines[i], 2);
        arcs.emplace_back(static_cast<int>(pair[0]), static_cast<int>(pair[1]));
    }
    return Digraph(static_cast<int>(n), arcs);
}

std::string format_graph_text(const Digraph& h) {
    std::string out = std::to_string(h.n()) + "\n";
    for (auto [u, v] : h.arcs()) {
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    }
    return out;
}

BinaryMatrix parse_matrix_text(std::string_view text) {
    std::vector<std::string> lines = content_lines(text);
    if (lines.empty()) throw InputError("matrix file is empty");
    return BinaryMatrix::from_strings(lines);
}

std::string format_matrix_text(const BinaryMatrix& m) {
    std::string out;
    for (const std::string& row : m.to_strings()) {
        out += row + "\n";
    }
    return out;
}

Json ordering_to_json(const VertexOrdering& ord) { return Json(ord.order()); }

VertexOrdering ordering_from_json(const Json& j) {
    if (!j.is_array()) throw InputError("ordering must be a JSON array of vertex indices");
    std::vector<int> order;
    for (const Json& item : j) {
        if (!item.is_number_integer()) throw InputError("ordering entries must be integers");
        order.push_back(item.get<int>());
    }
    return VertexOrdering::of_vertices(std::move(order));
}

Json digraph_to_json(const Digraph& h) {
    Json arcs = Json::array();
    for (auto [u, v] : h.arcs()) arcs.push_back(Json::array({u, v}));
    return Json{{"n", h.n()}, {"arcs", arcs}};
}

Json signed_model_to_json(const SignedIntervalModel& m) {
    return Json{{"n", m.n()},
                {"x", rationals_to_json(m.x)},
                {"y", rationals_to_json(m.y)},
                {"z", rationals_to_json(m.z)}};
}

SignedIntervalModel signed_model_from_json(const Json& j) {
    int n = checked_n(j);
    SignedIntervalModel m{rationals_from_json(j.value("x", Json::array()), "x"),
                          rationals_from_json(j.value("y", Json::array()), "y"),
                          rationals_from_json(j.value("z", Json::array()), "z")};
    check_length(m.x, n, "x");
    check_length(m.y, n, "y");
    check_length(m.z, n, "z");
    return m;
}

Json cott_model_to_json(const CoTTModel& m) {
    return Json{{"n", m.n()}, {"x", rationals_to_json(m.x)}, {"y", rationals_to_json(m.y)}};
}

CoTTModel cott_model_from_json(const Json& j) {
    int n = checked_n(j);
    if (j.contains("z")) throw InputError("co-TT model JSON must omit \"z\"");
    CoTTModel m{rationals_from_json(j.value("x", Json::array()), "x"),
                rationals_from_json(j.value("y", Json::array()), "y")};
    check_length(m.x, n, "x");
    check_length(m.y, n, "y");
    return m;
}

Json tt_model_to_json(const ThresholdToleranceModel& m) {
    return Json{{"n", m.n()},
                {"w", rationals_to_json(m.weight)},
                {"t", rationals_to_json(m.tolerance)}};
}

ThresholdToleranceModel tt_model_from_json(const Json& j) {
    int n = checked_n(j);
    ThresholdToleranceModel m{rationals_from_json(j.value("w", Json::array()), "w"),
                              rationals_from_json(j.value("t", Json::array()), "t")};
    check_length(m.weight, n, "w");
    check_length(m.tolerance, n, "t");
    return m;
}

Json biarc_model_to_json(const BiArcModel& m) {
    Json out = Json::array();
    for (int v = 0; v < m.n(); ++v) {
        out.push_back(Json{
            {"I", Json::array({format_rational(m.i_arcs[v].ccw), format_rational(m.i_arcs[v].cw)})},
            {"J", Json::array({format_rational(m.j_arcs[v].ccw), format_rational(m.j_arcs[v].cw)})}});
    }
    return out;
}

BiArcModel biarc_model_from_json(const Json& j) {
    if (!j.is_array()) throw InputError("bi-arc model must be a JSON array of vertex entries");
    BiArcModel m;
    for (const Json& entry : j) {
        if (!entry.contains("I") || !entry.contains("J") || entry["I"].size() != 2 ||
            entry["J"].size() != 2) {
            throw InputError("bi-arc vertex entries need \"I\" and \"J\" as [ccw, cw]");
        }
        m.i_arcs.push_back({rational_from_json(entry["I"][0], "I ccw"),
                            rational_from_json(entry["I"][1], "I cw")});
        m.j_arcs.push_back({rational_from_json(entry["J"][0], "J ccw"),
                            rational_from_json(entry["J"][1], "J cw")});
    }
    return m;
}

Json ray_model_to_json(const RayModel& m) {
    Json a = Json::array(), b = Json::array();
    for (size_t i = 0; i < m.part_a.size(); ++i) {
        a.push_back(Json{{"P", Json::array({format_rational(m.u[i]), format_rational(m.v[i])})}});
    }
    for (size_t jdx = 0; jdx < m.part_b.size(); ++jdx) {
        b.push_back(
            Json{{"Q", Json::array({format_rational(m.r[jdx]), format_rational(m.s[jdx])})}});
    }
    return Json{{"A", a}, {"B", b}};
}

RayModel ray_model_from_json(const Json& j) {
    if (!j.contains("A") || !j.contains("B") || !j["A"].is_array() || !j["B"].is_array()) {
        throw InputError("ray model needs \"A\" and \"B\" arrays");
    }
    RayModel m;
    int next = 0;
    for (const Json& entry : j["A"]) {
        if (!entry.contains("P") || entry["P"].size() != 2) {
            throw InputError("A entries need \"P\": [x, y]");
        }
        m.part_a.push_back(next++);
        m.u.push_back(rational_from_json(entry["P"][0], "P x"));
        m.v.push_back(rational_from_json(entry["P"][1], "P y"));
    }
    for (const Json& entry : j["B"]) {
        if (!entry.contains("Q") || entry["Q"].size() != 2) {
            throw InputError("B entries need \"Q\": [x, y]");
        }
        m.part_b.push_back(next++);
        m.r.push_back(rational_from_json(entry["Q"][0], "Q x"));
        m.s.push_back(rational_from_json(entry["Q"][1], "Q y"));
    }
    return m;
}

ListAssignment lists_from_json(const Json& j, int n_g, int n_h) {
    if (!j.is_object()) throw InputError("lists must be a JSON object");
    ListAssignment lists = ListAssignment::full(n_g, n_h);
    for (const auto& [key, value] : j.items()) {
        int u;
        try {
            u = std::stoi(key);
        } catch (...) {
            throw InputError("list keys must be vertex indices, got \"" + key + "\"");
        }
        if (u < 0 || u >= n_g) throw InputError("list key out of range: " + key);
        if (!value.is_array()) throw InputError("list values must be arrays");
        std::fill(lists.allowed[u].begin(), lists.allowed[u].end(), false);
        for (const Json& item : value) {
            if (!item.is_number_integer()) throw InputError("list entries must be integers");
            int a = item.get<int>();
            if (a < 0 || a >= n_h) throw InputError("list entry out of range for V(H)");
            lists.allowed[u][a] = true;
        }
    }
    return lists;
}

Json lists_to_json(const ListAssignment& lists) {
    Json out = Json::object();
    for (int u = 0; u < lists.n_g(); ++u) {
        Json row = Json::array();
        for (size_t a = 0; a < lists.allowed[u].size(); ++a) {
            if (lists.allowed[u][a]) row.push_back(static_cast<int>(a));
        }
        out[std::to_string(u)] = row;
    }
    return out;
}

Json violation_to_json(const MinOrderViolation& v) {
    return Json{{"a", v.a}, {"b", v.b}, {"a_prime", v.a_prime}, {"b_prime", v.b_prime}};
}

Json asteroidal_triple_to_json(const AsteroidalTriple& t) {
    return Json{{"x", t.x},           {"y", t.y},           {"z", t.z},
                {"path_xy", t.path_xy}, {"path_xz", t.path_xz}, {"path_yz", t.path_yz}};
}

Json invertible_pair_to_json(const InvertiblePairWitness& w) {
    return Json{{"u", w.u}, {"v", w.v}, {"P", w.walk_p}, {"Q", w.walk_q}, {"R", w.walk_r},
                {"S", w.walk_s}};
}

std::string read_file(const std::string& path) {
    std::ifstream stream(path, std::ios::binary);
    if (!stream) throw InputError("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << stream.rdbuf();
    return buffer.str();
}

}  // namespace minorder
