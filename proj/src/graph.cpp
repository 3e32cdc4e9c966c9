#include "strength/graph.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>

#include "strength/error.hpp"

namespace strength {

namespace {

constexpr int graph6_offset = 63;
constexpr std::size_t graph6_max_order = 62;
constexpr std::string_view graph6_header = ">>graph6<<";

std::string_view trim(std::string_view s) {
    const auto ws = " \t\r\n";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

// Splits on '\n', keeping 1-based line numbers.
template <typename F>
void for_each_line(std::string_view text, F&& fn) {
    std::size_t lineno = 0;
    while (!text.empty()) {
        ++lineno;
        auto nl = text.find('\n');
        auto line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (!fn(trim(line), lineno)) return;
    }
}

std::vector<std::string_view> tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        auto j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::size_t parse_count(std::string_view tok, std::size_t lineno) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError("expected a non-negative integer, got '" + std::string(tok) + "'", lineno);
    return value;
}

bool is_graph6_char(char c) {
    return c >= graph6_offset && c <= 126;
}

} // namespace

Graph::Graph(std::size_t order) : adj_(order, VertexSet(order)) {}

Graph::Graph(std::size_t order, std::span<const Edge> edges) : Graph(order) {
    for (const auto& e : edges) {
        if (e.u >= order || e.v >= order)
            throw ValidationError("edge endpoint out of range for order " + std::to_string(order));
        if (e.u == e.v) throw ValidationError("loop at vertex " + std::to_string(e.u + 1));
        if (!adj_[e.u].test(e.v)) {
            adj_[e.u].set(e.v);
            adj_[e.v].set(e.u);
            ++edge_count_;
        }
    }
}

Graph Graph::from_adjacency(std::vector<VertexSet> rows) {
    const std::size_t n = rows.size();
    std::size_t degree_sum = 0;
    for (Vertex u = 0; u < n; ++u) {
        if (rows[u].universe() != n) throw ValidationError("adjacency row has wrong universe");
        if (rows[u].test(u)) throw ValidationError("loop at vertex " + std::to_string(u + 1));
        for (Vertex v : rows[u])
            if (!rows[v].test(u)) throw ValidationError("adjacency is not symmetric");
        degree_sum += rows[u].count();
    }
    Graph g;
    g.adj_ = std::move(rows);
    g.edge_count_ = degree_sum / 2;
    return g;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v = adj_[u].next_from(u + 1); v < order(); v = adj_[u].next_from(v + 1))
            out.push_back({u, v});
    return out;
}

std::vector<Vertex> MultipartiteParts::members(std::size_t part) const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < assignment.size(); ++v)
        if (assignment[v] == part) out.push_back(v);
    return out;
}

void KneserParams::validate() const {
    if (n < 1 || k < 1 || k > n)
        throw ValidationError("Kneser parameters need 1 <= k <= n, got n=" + std::to_string(n) +
                              " k=" + std::to_string(k));
}

Graph parse_edge_list(std::string_view text) {
    bool have_header = false;
    std::size_t order = 0;
    std::vector<Edge> edges;
    for_each_line(text, [&](std::string_view line, std::size_t lineno) {
        if (line.empty() || line.front() == '#') return true;
        auto tok = tokens(line);
        if (!have_header) {
            if (tok.size() != 2 || tok[0] != "n")
                throw ParseError("expected header 'n <count>'", lineno);
            order = parse_count(tok[1], lineno);
            have_header = true;
            return true;
        }
        if (tok.size() != 2) throw ParseError("expected 'u v'", lineno);
        auto u = parse_count(tok[0], lineno);
        auto v = parse_count(tok[1], lineno);
        if (u < 1 || u > order || v < 1 || v > order)
            throw ValidationError("line " + std::to_string(lineno) + ": endpoint outside [1," +
                                  std::to_string(order) + "]");
        if (u == v)
            throw ValidationError("line " + std::to_string(lineno) + ": loop at vertex " +
                                  std::to_string(u));
        edges.push_back({u - 1, v - 1});
        return true;
    });
    if (!have_header) throw ParseError("missing header 'n <count>'");
    return Graph(order, edges);
}

std::string to_edge_list(const Graph& g) {
    std::string out = "n " + std::to_string(g.order()) + "\n";
    for (auto [u, v] : g.edges()) out += std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
    return out;
}

Graph parse_graph6(std::string_view text) {
    auto s = trim(text);
    if (s.starts_with(graph6_header)) s = trim(s.substr(graph6_header.size()));
    if (s.empty()) throw ParseError("empty graph6 string");
    if (s.front() == '~') throw ParseError("graph6 orders above 62 are not supported");
    if (!is_graph6_char(s.front())) throw ParseError("invalid graph6 character in order byte");

    const std::size_t n = static_cast<std::size_t>(s.front() - graph6_offset);
    const std::size_t bits = n * (n - (n ? 1 : 0)) / 2;
    const std::size_t expected = (bits + 5) / 6;
    auto body = s.substr(1);
    if (body.size() < expected) throw ParseError("truncated graph6 string");
    if (body.size() > expected) throw ParseError("trailing characters after graph6 string");

    std::vector<Edge> edges;
    std::size_t bit = 0;
    for (Vertex v = 1; v < n; ++v) {
        for (Vertex u = 0; u < v; ++u, ++bit) {
            char c = body[bit / 6];
            if (!is_graph6_char(c)) throw ParseError("invalid graph6 character");
            if (((c - graph6_offset) >> (5 - bit % 6)) & 1) edges.push_back({u, v});
        }
    }
    for (char c : body)
        if (!is_graph6_char(c)) throw ParseError("invalid graph6 character");
    return Graph(n, edges);
}

std::string to_graph6(const Graph& g) {
    const std::size_t n = g.order();
    if (n > graph6_max_order) throw ValidationError("graph6 output supports orders up to 62");
    std::string out(1, static_cast<char>(graph6_offset + n));
    int acc = 0;
    int filled = 0;
    for (Vertex v = 1; v < n; ++v) {
        for (Vertex u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(graph6_offset + acc));
                acc = filled = 0;
            }
        }
    }
    if (filled) out.push_back(static_cast<char>(graph6_offset + (acc << (6 - filled))));
    return out;
}

bool looks_like_graph6(std::string_view text) {
    std::string_view first;
    for_each_line(text, [&](std::string_view line, std::size_t) {
        if (line.empty()) return true;
        first = line;
        return false;
    });
    if (first.starts_with(graph6_header)) return true;
    if (first.empty() || first.front() == '#' || first.starts_with("n ")) return false;
    return std::all_of(first.begin(), first.end(), is_graph6_char);
}

Graph parse_graph(std::string_view text) {
    return looks_like_graph6(text) ? parse_graph6(text) : parse_edge_list(text);
}

Graph complement(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<VertexSet> rows;
    rows.reserve(n);
    for (Vertex v = 0; v < n; ++v) {
        auto row = ~g.neighbors(v);
        row.reset(v);
        rows.push_back(std::move(row));
    }
    return Graph::from_adjacency(std::move(rows));
}

Graph make_empty(std::size_t order) {
    return Graph(order);
}

Graph make_complete(std::size_t order) {
    return complement(Graph(order));
}

Graph make_path(std::size_t order) {
    std::vector<Edge> edges;
    for (Vertex v = 1; v < order; ++v) edges.push_back({v - 1, v});
    return Graph(order, edges);
}

Graph make_cycle(std::size_t order) {
    if (order < 3) throw ValidationError("a cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (Vertex v = 0; v < order; ++v) edges.push_back({v, (v + 1) % order});
    return Graph(order, edges);
}

CompleteMultipartite gen_complete_multipartite(std::span<const std::size_t> sizes) {
    if (sizes.empty()) throw ValidationError("complete multipartite graph needs at least one part");
    if (std::find(sizes.begin(), sizes.end(), 0) != sizes.end())
        throw ValidationError("part sizes must be positive");

    // Rank input parts by descending size, stable so equal sizes keep input order.
    std::vector<std::size_t> rank(sizes.size());
    std::iota(rank.begin(), rank.end(), 0);
    std::stable_sort(rank.begin(), rank.end(),
                     [&](std::size_t a, std::size_t b) { return sizes[a] > sizes[b]; });
    std::vector<std::size_t> sorted_index(sizes.size());
    for (std::size_t r = 0; r < rank.size(); ++r) sorted_index[rank[r]] = r;

    MultipartiteParts parts;
    for (auto i : rank) parts.sizes.push_back(sizes[i]);
    std::vector<std::size_t> input_part;
    for (std::size_t i = 0; i < sizes.size(); ++i)
        for (std::size_t j = 0; j < sizes[i]; ++j) {
            input_part.push_back(i);
            parts.assignment.push_back(sorted_index[i]);
        }

    const std::size_t n = input_part.size();
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (input_part[u] != input_part[v]) edges.push_back({u, v});
    return {Graph(n, edges), std::move(parts)};
}

std::size_t binomial(std::size_t n, std::size_t k) noexcept {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        // r * (n - k + i) / i stays integral at every step.
        std::size_t num = n - k + i;
        if (r > std::numeric_limits<std::size_t>::max() / num)
            return std::numeric_limits<std::size_t>::max();
        r = r * num / i;
    }
    return r;
}

std::vector<std::vector<std::size_t>> kneser_subsets(const KneserParams& p) {
    p.validate();
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur(p.k);
    std::iota(cur.begin(), cur.end(), 1);
    while (true) {
        out.push_back(cur);
        // Advance to the next k-subset in lexicographic order.
        std::size_t i = p.k;
        while (i > 0 && cur[i - 1] == p.n - p.k + i) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t j = i; j < p.k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

Graph gen_kneser(const KneserParams& p, std::size_t vertex_cap) {
    p.validate();
    const auto count = binomial(p.n, p.k);
    if (count > vertex_cap)
        throw ResourceError("KG(" + std::to_string(p.n) + "," + std::to_string(p.k) + ") has " +
                            std::to_string(count) + " vertices, above the cap of " +
                            std::to_string(vertex_cap));
    auto subsets = kneser_subsets(p);
    std::vector<VertexSet> masks;
    masks.reserve(subsets.size());
    for (const auto& s : subsets) {
        VertexSet m(p.n);
        for (auto e : s) m.set(e - 1);
        masks.push_back(std::move(m));
    }
    std::vector<Edge> edges;
    for (Vertex u = 0; u < masks.size(); ++u)
        for (Vertex v = u + 1; v < masks.size(); ++v)
            if (!masks[u].intersects(masks[v])) edges.push_back({u, v});
    return Graph(masks.size(), edges);
}

std::size_t min_degree(const Graph& g) {
    if (g.order() == 0) throw ValidationError("minimum degree of the order-0 graph is undefined");
    std::size_t d = g.degree(0);
    for (Vertex v = 1; v < g.order(); ++v) d = std::min(d, g.degree(v));
    return d;
}

std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> out;
    VertexSet unseen = g.vertices();
    while (!unseen.empty()) {
        VertexSet comp(g.order());
        VertexSet frontier(g.order());
        frontier.set(unseen.first());
        while (!frontier.empty()) {
            comp |= frontier;
            VertexSet next(g.order());
            for (Vertex v : frontier) next |= g.neighbors(v);
            frontier = next - comp;
        }
        unseen -= comp;
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g) {
    return components(g).size() <= 1;
}

} // namespace strength
