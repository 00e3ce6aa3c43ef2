#include "stratifold/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <numeric>
#include <sstream>

#include "stratifold/reduction.hpp"

namespace stratifold {

bool natural_less(std::string_view a, std::string_view b)
{
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        bool da = std::isdigit(static_cast<unsigned char>(a[i])), db = std::isdigit(static_cast<unsigned char>(b[j]));
        if (da && db) {
            std::size_t i2 = i, j2 = j;
            while (i2 < a.size() && std::isdigit(static_cast<unsigned char>(a[i2])))
                ++i2;
            while (j2 < b.size() && std::isdigit(static_cast<unsigned char>(b[j2])))
                ++j2;
            auto x = a.substr(i, i2 - i), y = b.substr(j, j2 - j);
            while (x.size() > 1 && x.front() == '0')
                x.remove_prefix(1);
            while (y.size() > 1 && y.front() == '0')
                y.remove_prefix(1);
            if (x.size() != y.size())
                return x.size() < y.size();
            if (x != y)
                return x < y;
            i = i2;
            j = j2;
            continue;
        }
        if (a[i] != b[j])
            return a[i] < b[j];
        ++i;
        ++j;
    }
    if ((a.size() - i) != (b.size() - j))
        return a.size() - i < b.size() - j;
    return a < b;
}

namespace {

[[noreturn]] void fail(ErrorCode code, int line, const std::string& msg)
{
    throw StratifoldError(code, "line " + std::to_string(line) + ": " + msg);
}

bool valid_id(std::string_view id)
{
    return !id.empty() && std::all_of(id.begin(), id.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

std::optional<int> to_int(std::string_view s)
{
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        return std::nullopt;
    return v;
}

/// Value of a key=value token, or nullopt when the key does not match.
std::optional<std::string_view> keyed(std::string_view token, std::string_view key)
{
    if (token.size() <= key.size() || token.substr(0, key.size()) != key || token[key.size()] != '=')
        return std::nullopt;
    return token.substr(key.size() + 1);
}

}  // namespace

LabelledGraph parse(std::string_view text)
{
    LabelledGraph g;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::istringstream ls(raw);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;)
            tok.push_back(t);
        if (tok.empty() || tok[0].front() == '#')
            continue;
        const std::string& kind = tok[0];
        if (kind == "white") {
            if (tok.size() < 2 || tok.size() > 3)
                fail(ErrorCode::SyntaxError, line, "expected 'white <id> genus=<int>'");
            if (!valid_id(tok[1]))
                fail(ErrorCode::SyntaxError, line, "bad id '" + tok[1] + "'");
            int genus = 0;
            if (tok.size() == 3) {
                auto v = keyed(tok[2], "genus");
                auto n = v ? to_int(*v) : std::nullopt;
                if (!n)
                    fail(ErrorCode::SyntaxError, line, "expected genus=<int>, got '" + tok[2] + "'");
                genus = *n;
            }
            if (g.find(Colour::White, tok[1]))
                fail(ErrorCode::DuplicateId, line, "duplicate white id '" + tok[1] + "'");
            g.add_white(tok[1], genus);
        } else if (kind == "black") {
            if (tok.size() != 2)
                fail(ErrorCode::SyntaxError, line, "expected 'black <id>'");
            if (!valid_id(tok[1]))
                fail(ErrorCode::SyntaxError, line, "bad id '" + tok[1] + "'");
            if (g.find(Colour::Black, tok[1]))
                fail(ErrorCode::DuplicateId, line, "duplicate black id '" + tok[1] + "'");
            g.add_black(tok[1]);
        } else if (kind == "edge") {
            if (tok.size() < 4 || tok.size() > 5)
                fail(ErrorCode::SyntaxError, line, "expected 'edge <white> <black> label=<n> [sign=<+1|-1>]'");
            auto w = g.find(Colour::White, tok[1]);
            auto b = g.find(Colour::Black, tok[2]);
            if (!w)
                fail(g.find(Colour::Black, tok[1]) ? ErrorCode::NonBipartite : ErrorCode::UnknownVertex, line,
                     "'" + tok[1] + "' is not a declared white vertex");
            if (!b)
                fail(g.find(Colour::White, tok[2]) ? ErrorCode::NonBipartite : ErrorCode::UnknownVertex, line,
                     "'" + tok[2] + "' is not a declared black vertex");
            auto lv = keyed(tok[3], "label");
            if (!lv)
                fail(ErrorCode::SyntaxError, line, "expected label=<int>, got '" + tok[3] + "'");
            auto label = to_int(*lv);
            if (!label || *label < 1)
                fail(ErrorCode::BadLabel, line, "label must be an integer >= 1, got '" + std::string(*lv) + "'");
            int sign = 1;
            if (tok.size() == 5) {
                auto sv = keyed(tok[4], "sign");
                if (!sv)
                    fail(ErrorCode::SyntaxError, line, "expected sign=<+1|-1>, got '" + tok[4] + "'");
                auto s = to_int(*sv);
                if (!s || (*s != 1 && *s != -1))
                    fail(ErrorCode::InvalidSign, line, "sign must be +1 or -1, got '" + std::string(*sv) + "'");
                sign = *s;
            }
            g.add_edge(w->index, b->index, *label, sign);
        } else {
            fail(ErrorCode::SyntaxError, line, "unknown directive '" + kind + "'");
        }
    }
    return g;
}

namespace {

std::string body(const LabelledGraph& g)
{
    std::vector<int> ws(g.num_whites()), bs(g.num_blacks()), es(g.num_edges());
    std::iota(ws.begin(), ws.end(), 0);
    std::iota(bs.begin(), bs.end(), 0);
    std::iota(es.begin(), es.end(), 0);
    std::sort(ws.begin(), ws.end(), [&](int a, int b) { return natural_less(g.whites()[a].id, g.whites()[b].id); });
    std::sort(bs.begin(), bs.end(), [&](int a, int b) { return natural_less(g.blacks()[a].id, g.blacks()[b].id); });
    std::stable_sort(es.begin(), es.end(), [&](int a, int b) {
        const Edge &x = g.edge(a), &y = g.edge(b);
        const auto &xw = g.whites()[x.white].id, &yw = g.whites()[y.white].id;
        if (xw != yw)
            return natural_less(xw, yw);
        const auto &xb = g.blacks()[x.black].id, &yb = g.blacks()[y.black].id;
        if (xb != yb)
            return natural_less(xb, yb);
        if (x.label != y.label)
            return x.label < y.label;
        return x.sign > y.sign;
    });
    std::ostringstream os;
    for (int w : ws)
        os << "white " << g.whites()[w].id << " genus=" << g.whites()[w].genus << '\n';
    for (int b : bs)
        os << "black " << g.blacks()[b].id << '\n';
    for (int e : es) {
        const Edge& x = g.edge(e);
        os << "edge " << g.whites()[x.white].id << ' ' << g.blacks()[x.black].id << " label=" << x.label;
        if (x.sign < 0)
            os << " sign=-1";
        os << '\n';
    }
    return os.str();
}

}  // namespace

std::string serialize(const LabelledGraph& g)
{
    return "# stratifold-graph v1\n" + body(g);
}

namespace {

class Canonicalizer
{
  public:
    explicit Canonicalizer(const LabelledGraph& g) : g_(g), blocked_(g.num_edges(), false) {}

    void block(int e) { blocked_[e] = true; }

    std::string code(Vertex v, int from)
    {
        std::vector<std::string> children;
        for (int e : g_.incident(v)) {
            if (e == from || blocked_[e])
                continue;
            children.push_back(std::to_string(g_.edge(e).label) + ":" + code(g_.other_end(e, v), e));
        }
        std::sort(children.begin(), children.end());
        std::string out = v.colour == Colour::White ? "W" + std::to_string(g_.whites()[v.index].genus) : "B";
        out += '(';
        for (std::size_t i = 0; i < children.size(); ++i)
            out += (i ? "," : "") + children[i];
        out += ')';
        return out;
    }

    Vertex add_vertex(Vertex v)
    {
        Vertex n = v.colour == Colour::White
                       ? white(out.add_white("w" + std::to_string(out.num_whites() + 1), g_.whites()[v.index].genus))
                       : black(out.add_black("b" + std::to_string(out.num_blacks() + 1)));
        map_[g_.flat(v)] = n;
        return n;
    }

    void add_edge(int e, int sign = +1)
    {
        const Edge& x = g_.edge(e);
        out.add_edge(map_.at(g_.flat(g_.white_end(e))).index, map_.at(g_.flat(g_.black_end(e))).index, x.label, sign);
    }

    /// Depth-first relabelling of the subtree below v (v already added).
    void emit_subtree(Vertex v, int from)
    {
        std::vector<std::pair<std::string, int>> children;
        for (int e : g_.incident(v)) {
            if (e == from || blocked_[e])
                continue;
            children.emplace_back(std::to_string(g_.edge(e).label) + ":" + code(g_.other_end(e, v), e), e);
        }
        std::sort(children.begin(), children.end());
        for (auto& [c, e] : children) {
            Vertex child = g_.other_end(e, v);
            add_vertex(child);
            add_edge(e);
            emit_subtree(child, e);
        }
    }

    LabelledGraph out;

  private:
    const LabelledGraph& g_;
    std::vector<bool> blocked_;
    std::map<int, Vertex> map_;
};

std::vector<Vertex> tree_centres(const LabelledGraph& g)
{
    const int n = g.num_vertices();
    std::vector<int> deg(n);
    std::vector<Vertex> layer;
    for (int f = 0; f < n; ++f) {
        deg[f] = g.degree(g.from_flat(f));
        if (deg[f] <= 1)
            layer.push_back(g.from_flat(f));
    }
    int remaining = n;
    while (remaining > 2) {
        std::vector<Vertex> next;
        remaining -= static_cast<int>(layer.size());
        for (Vertex v : layer)
            for (int e : g.incident(v)) {
                Vertex u = g.other_end(e, v);
                if (--deg[g.flat(u)] == 1)
                    next.push_back(u);
            }
        layer = std::move(next);
    }
    return layer;
}

}  // namespace

LabelledGraph canonical_form(const LabelledGraph& input)
{
    if (input.num_vertices() == 0 || count_components(input) != 1 || betti1(input) > 1)
        throw StratifoldError(ErrorCode::PreconditionFailed, "canonical form needs a connected graph with betti1 <= 1");
    LabelledGraph g = normalize_signs(input);
    Canonicalizer c(g);

    if (betti1(g) == 0) {
        auto centres = tree_centres(g);
        Vertex root = centres.front();
        std::string best = c.code(root, -1);
        for (std::size_t i = 1; i < centres.size(); ++i) {
            std::string s = c.code(centres[i], -1);
            if (s < best) {
                best = s;
                root = centres[i];
            }
        }
        c.add_vertex(root);
        c.emit_subtree(root, -1);
        return std::move(c.out);
    }

    Cycle cyc = cycle_of(g);
    const int len = static_cast<int>(cyc.edges.size());
    int kappa = 1;
    for (int e : cyc.edges) {
        kappa *= g.edge(e).sign;
        c.block(e);
    }
    std::vector<std::string> hang(len);
    for (int i = 0; i < len; ++i)
        hang[i] = c.code(cyc.vertices[i], -1);

    // Rotation r and direction d: position j visits vertex r + d j and leaves by
    // edge r + j (forward) or r - j - 1 (backward).
    auto mod = [len](int x) { return ((x % len) + len) % len; };
    auto sequence = [&](int r, int d) {
        std::vector<std::string> seq;
        for (int j = 0; j < len; ++j) {
            int v = mod(r + d * j);
            int e = d > 0 ? mod(r + j) : mod(r - j - 1);
            seq.push_back(hang[v] + "|" + std::to_string(g.edge(cyc.edges[e]).label));
        }
        return seq;
    };
    int best_r = 0, best_d = 1;
    auto best = sequence(0, 1);
    for (int r = 0; r < len; ++r)
        for (int d : {1, -1}) {
            auto s = sequence(r, d);
            if (s < best) {
                best = std::move(s);
                best_r = r;
                best_d = d;
            }
        }
    std::vector<Vertex> order;
    for (int j = 0; j < len; ++j) {
        order.push_back(cyc.vertices[mod(best_r + best_d * j)]);
        c.add_vertex(order.back());
    }
    for (int j = 0; j < len; ++j) {
        int e = best_d > 0 ? mod(best_r + j) : mod(best_r - j - 1);
        c.add_edge(cyc.edges[e], j == 0 ? kappa : +1);
    }
    for (Vertex v : order)
        c.emit_subtree(v, -1);
    return std::move(c.out);
}

std::string canonical_key(const LabelledGraph& g)
{
    return body(canonical_form(g));
}

std::string export_dot(const LabelledGraph& g)
{
    std::ostringstream os;
    os << "graph stratifold {\n";
    for (const auto& w : g.whites()) {
        os << "  \"w:" << w.id << "\" [shape=circle, label=\"" << w.id;
        if (w.genus != 0)
            os << "\\ng=" << w.genus;
        os << "\"];\n";
    }
    for (const auto& b : g.blacks())
        os << "  \"b:" << b.id << "\" [shape=point, width=0.15, style=filled, fillcolor=black, xlabel=\"" << b.id
           << "\"];\n";
    for (const auto& e : g.edges()) {
        os << "  \"w:" << g.whites()[e.white].id << "\" -- \"b:" << g.blacks()[e.black].id << "\" [label=\""
           << e.label;
        if (e.sign < 0)
            os << ", -";
        os << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace stratifold
