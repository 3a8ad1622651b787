#include "perdecomp/lattice.hpp"

#include <algorithm>

#include "perdecomp/cyclotomic.hpp"
#include "perdecomp/errors.hpp"
#include "report_json.hpp"

namespace perdecomp {

namespace {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

bool is_power_of_two(std::int64_t k) { return k > 0 && (k & (k - 1)) == 0; }

const char* kind_name(SubspaceKind k) {
    switch (k) {
        case SubspaceKind::periodic: return "P";
        case SubspaceKind::antiperiodic: return "AP";
        case SubspaceKind::cyclotomic: return "C";
    }
    return "?";
}

}  // namespace

bool Diagram::has_node(std::string_view name) const {
    return std::any_of(nodes.begin(), nodes.end(), [&](const auto& n) { return n.name == name; });
}

bool Diagram::has_edge(std::string_view from, std::string_view to) const {
    return std::any_of(edges.begin(), edges.end(), [&](const auto& e) {
        return e.from.name == from && e.to.name == to;
    });
}

Diagram build_diagram(std::int64_t p) {
    if (p < 1) throw InvalidParameter("diagram period must be a positive integer");
    Diagram d;
    d.p = p;
    const auto divs = divisors(p);

    for (std::int64_t k : divs) d.nodes.push_back(periodic_label(k));
    for (std::int64_t k : divs) {
        if (p % (2 * k) == 0) d.nodes.push_back(antiperiodic_label(k));
    }
    for (std::int64_t k : divs) {
        if (k != 1 && !is_power_of_two(k)) d.nodes.push_back(cyclotomic_label(k, p));
    }

    for (std::int64_t a : divs) {
        for (std::int64_t b : divs) {
            if (b % a == 0 && is_prime(b / a)) {
                d.edges.push_back({periodic_label(a), periodic_label(b)});
            }
        }
    }
    for (std::int64_t a : divs) {
        if (p % (2 * a) != 0) continue;
        d.edges.push_back({antiperiodic_label(a), periodic_label(2 * a)});
        for (std::int64_t b : divs) {
            if (p % (2 * b) == 0 && b % a == 0 && (b / a) % 2 == 1 && is_prime(b / a)) {
                d.edges.push_back({antiperiodic_label(a), antiperiodic_label(b)});
            }
        }
    }
    for (std::int64_t k : divs) {
        if (k == 1 || is_power_of_two(k)) continue;
        d.edges.push_back({cyclotomic_label(k, p),
                           k % 2 == 1 ? periodic_label(k) : antiperiodic_label(k / 2)});
    }

    std::sort(d.nodes.begin(), d.nodes.end());
    std::sort(d.edges.begin(), d.edges.end());
    return d;
}

std::string to_dot(const Diagram& d) {
    std::string out = "digraph P_" + std::to_string(d.p) + " {\n";
    out += "  rankdir=BT;\n";
    for (const auto& n : d.nodes) out += "  \"" + n.name + "\";\n";
    for (const auto& e : d.edges) {
        out += "  \"" + e.from.name + "\" -> \"" + e.to.name + "\";\n";
    }
    out += "}\n";
    return out;
}

std::string to_json(const Diagram& d) {
    detail::JsonValue nodes = detail::JsonValue::array();
    for (const auto& n : d.nodes) {
        detail::JsonValue node = detail::JsonValue::object();
        node["kind"] = kind_name(n.kind);
        node["param"] = n.param;
        node["label"] = n.name;
        nodes.push_back(std::move(node));
    }
    detail::JsonValue edges = detail::JsonValue::array();
    for (const auto& e : d.edges) edges.push_back({e.from.name, e.to.name});
    detail::JsonValue root = detail::JsonValue::object();
    root["p"] = d.p;
    root["nodes"] = std::move(nodes);
    root["edges"] = std::move(edges);
    return detail::dump_json(root) + "\n";
}

}  // namespace perdecomp
