#include "chorded/families.hpp"

#include <charconv>
#include <map>
#include <stdexcept>

namespace chorded {

Graph star(int m) {
    if (m < 0) throw std::invalid_argument("star: negative size");
    Graph g(m + 1);
    for (int v = 1; v <= m; ++v) g.add_edge(0, v);
    return g;
}

Graph path(int n) {
    if (n < 1) throw std::invalid_argument("path: need at least one vertex");
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need at least three vertices");
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph complete_bipartite(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("complete_bipartite: negative part");
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

Graph complete_multipartite(const std::vector<int>& parts) {
    int n = 0;
    for (int p : parts) {
        if (p <= 0) throw std::invalid_argument("complete_multipartite: nonpositive part");
        n += p;
    }
    Graph g(n);
    int astart = 0;
    for (size_t i = 0; i < parts.size(); ++i) {
        int bstart = astart + parts[i];
        for (size_t j = i + 1; j < parts.size(); ++j) {
            for (int u = 0; u < parts[i]; ++u)
                for (int v = 0; v < parts[j]; ++v) g.add_edge(astart + u, bstart + v);
            bstart += parts[j];
        }
        astart += parts[i];
    }
    return g;
}

Graph book_star(int t, int s) {
    if (t < 0 || s < 0) throw std::invalid_argument("book_star: negative parameter");
    Graph g(1 + 2 * t + s);
    for (int v = 1; v < g.order(); ++v) g.add_edge(0, v);
    for (int i = 0; i < t; ++i) g.add_edge(1 + 2 * i, 2 + 2 * i);
    return g;
}

Graph clique_join(int k, int t) {
    if (k < 0 || t < 0) throw std::invalid_argument("clique_join: negative parameter");
    return join(complete(k), Graph(t));
}

Graph clique_join_from_size(int k, long long m) {
    if (k < 1) throw std::invalid_argument("clique_join_from_size: k must be positive");
    long long num = 2 * m - static_cast<long long>(k) * (k - 1);
    if (num <= 0 || num % (2 * k) != 0)
        throw std::invalid_argument(
            "clique_join_from_size: m/k-(k-1)/2 is not a positive integer");
    return clique_join(k, static_cast<int>(num / (2 * k)));
}

Graph gnks(int n, int k, int s) {
    if (!(k > 2 * s && s > 0 && n >= k))
        throw std::invalid_argument("gnks: requires k > 2s > 0 and n >= k");
    // K_s first, then K_{k-2s}, then the isolated side.
    return join(complete(s), disjoint_union(complete(k - 2 * s), Graph(n - k + s)));
}

Graph theorem12_extremal(int m) {
    if (m < 4 || m > 8) throw std::invalid_argument("theorem12_extremal: m must be 4..8");
    int t = m / 3;
    return book_star(t, m - 3 * t);
}

Graph sk4() {
    return build_graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}, {3, 4}});
}

Graph k1_join_p4() { return join(complete(1), path(4)); }

Graph fixture(std::string_view name) {
    static const std::map<std::string, std::vector<std::pair<int, int>>, std::less<>> data = {
        // 0 = hub; 1,2 = the triangle pair on it; remaining vertices in fixed order.
        {"H1", {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {4, 5}, {0, 5}, {0, 6}, {4, 6}}},
        {"H2", {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {4, 5}, {0, 5}, {3, 6}, {5, 6}}},
        {"H3", {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {4, 5}, {0, 5}}},
        {"F1", {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {4, 5}, {5, 6}, {0, 6}}},
        {"F2", {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {4, 5}, {5, 6}, {0, 6}, {0, 7}}},
        {"F3", {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {0, 7}}},
    };
    auto it = data.find(name);
    if (it == data.end())
        throw std::invalid_argument("fixture: unknown name " + std::string(name));
    int n = 0;
    for (auto [u, v] : it->second) n = std::max({n, u + 1, v + 1});
    return build_graph(n, it->second);
}

FamilySpec parse_family_spec(std::string_view text) {
    FamilySpec spec;
    auto colon = text.find(':');
    spec.name = std::string(text.substr(0, colon));
    if (spec.name.empty()) throw std::invalid_argument("family spec: empty name");
    if (colon == std::string_view::npos) return spec;
    std::string_view rest = text.substr(colon + 1);
    if (spec.name == "fixture") {
        spec.text_param = std::string(rest);
        return spec;
    }
    while (!rest.empty()) {
        auto comma = rest.find(',');
        std::string_view tok = rest.substr(0, comma);
        long long value = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || p != tok.data() + tok.size())
            throw std::invalid_argument("family spec: bad integer parameter '" +
                                        std::string(tok) + "'");
        spec.params.push_back(value);
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
    return spec;
}

Graph family(const FamilySpec& spec) {
    auto want = [&](size_t k) {
        if (spec.params.size() != k)
            throw std::invalid_argument("family " + spec.name + ": expected " +
                                        std::to_string(k) + " parameter(s)");
    };
    auto p = [&](size_t i) { return static_cast<int>(spec.params[i]); };
    if (spec.name == "star") return want(1), star(p(0));
    if (spec.name == "path") return want(1), path(p(0));
    if (spec.name == "cycle") return want(1), cycle(p(0));
    if (spec.name == "complete") return want(1), complete(p(0));
    if (spec.name == "complete_bipartite") return want(2), complete_bipartite(p(0), p(1));
    if (spec.name == "complete_multipartite") {
        std::vector<int> parts;
        for (long long q : spec.params) parts.push_back(static_cast<int>(q));
        return complete_multipartite(parts);
    }
    if (spec.name == "book_star") return want(2), book_star(p(0), p(1));
    if (spec.name == "clique_join") return want(2), clique_join(p(0), p(1));
    if (spec.name == "gnks") return want(3), gnks(p(0), p(1), p(2));
    if (spec.name == "theorem12_extremal") return want(1), theorem12_extremal(p(0));
    if (spec.name == "sk4") return want(0), sk4();
    if (spec.name == "k1_join_p4") return want(0), k1_join_p4();
    if (spec.name == "fixture") return fixture(spec.text_param);
    throw std::invalid_argument("family: unknown name " + spec.name);
}

}  // namespace chorded
