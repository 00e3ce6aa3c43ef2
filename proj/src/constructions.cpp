#include "stratifold/constructions.hpp"

#include <numeric>
#include <sstream>

namespace stratifold {

int EchinusParams::sum_p() const
{
    return std::accumulate(triples.begin(), triples.end(), 0, [](int a, const EchinusTriple& t) { return a + t.p; });
}

int EchinusParams::sum_q() const
{
    return std::accumulate(triples.begin(), triples.end(), 0, [](int a, const EchinusTriple& t) { return a + t.q; });
}

std::string to_string(const EchinusParams& params)
{
    std::ostringstream os;
    os << "E(";
    for (int i = 0; i < params.n(); ++i) {
        const auto& t = params.triples[i];
        os << (i ? "; " : "") << t.p << ',' << t.q << ',' << t.r;
    }
    os << (params.epsilon < 0 ? "; eps=-1)" : ")");
    return os.str();
}

std::string to_string(const AGraphParams& params)
{
    std::ostringstream os;
    os << "A(";
    for (int i = 0; i < params.n(); ++i) {
        os << (i ? "; " : "") << params.p[i] << ',' << params.q[i];
        if (i + 1 < params.n())
            os << ',' << params.arms[i];
    }
    os << ')';
    return os.str();
}

void require_valid(const EchinusParams& params)
{
    if (params.triples.empty())
        throw StratifoldError(ErrorCode::PreconditionFailed, "echinus needs at least one branch vertex");
    if (params.epsilon != 1 && params.epsilon != -1)
        throw StratifoldError(ErrorCode::InvalidSign, "echinus epsilon must be +1 or -1");
    for (const auto& t : params.triples)
        if (t.p < 0 || t.q < 0 || t.r < 0)
            throw StratifoldError(ErrorCode::PreconditionFailed, "echinus parameters must be non-negative");
}

void require_valid(const AGraphParams& params)
{
    if (params.p.empty() || params.q.size() != params.p.size() || params.arms.size() + 1 != params.p.size())
        throw StratifoldError(ErrorCode::PreconditionFailed, "A-graph needs n segments and n-1 arms");
    for (int i = 0; i < params.n(); ++i)
        if (params.p[i] < 0 || params.q[i] < 0)
            throw StratifoldError(ErrorCode::PreconditionFailed, "A-graph segment parameters must be non-negative");
    for (int r : params.arms)
        if (r <= 0)
            throw StratifoldError(ErrorCode::PreconditionFailed, "A-graph arms must have r > 0");
}

std::vector<int> lpq_labels(int p, int q)
{
    std::vector<int> out;
    for (int i = 0; i < p; ++i) {
        out.push_back(1);
        out.push_back(2);
    }
    for (int i = 0; i < q; ++i) {
        out.push_back(2);
        out.push_back(1);
    }
    return out;
}

namespace {

class Builder
{
  public:
    int white() { return g.add_white("w" + std::to_string(++whites_)); }
    int black() { return g.add_black("c" + std::to_string(++blacks_)); }

    /// Lays a string of labels starting at white `from`; returns the last
    /// vertex (a white after an even number of labels).
    Vertex string(int from, const std::vector<int>& labels)
    {
        Vertex at = stratifold::white(from);
        for (int label : labels) {
            if (at.colour == Colour::White) {
                int b = black();
                g.add_edge(at.index, b, label);
                at = stratifold::black(b);
            } else {
                int w = white();
                g.add_edge(w, at.index, label);
                at = stratifold::white(w);
            }
        }
        return at;
    }

    LabelledGraph g;

  private:
    int whites_ = 0;
    int blacks_ = 0;
};

}  // namespace

LabelledGraph make_linear(const std::vector<int>& labels)
{
    Builder b;
    b.string(b.white(), labels);
    return std::move(b.g);
}

LabelledGraph make_lpq(int p, int q)
{
    if (p < 0 || q < 0)
        throw StratifoldError(ErrorCode::PreconditionFailed, "L(p,q) needs p, q >= 0");
    return make_linear(lpq_labels(p, q));
}

LabelledGraph make_pure_cycle(const std::vector<int>& m, const std::vector<int>& n, int epsilon)
{
    if (m.empty() || m.size() != n.size())
        throw StratifoldError(ErrorCode::PreconditionFailed, "pure cycle needs equal, non-empty m and n");
    Builder b;
    const int k = static_cast<int>(m.size());
    std::vector<int> w(k), c(k);
    for (int i = 0; i < k; ++i)
        w[i] = b.white();
    for (int i = 0; i < k; ++i)
        c[i] = b.black();
    for (int i = 0; i < k; ++i) {
        b.g.add_edge(w[i], c[i], m[i]);
        b.g.add_edge(w[(i + 1) % k], c[i], n[i], i + 1 == k ? epsilon : +1);
    }
    return std::move(b.g);
}

LabelledGraph make_echinus(const EchinusParams& params)
{
    require_valid(params);
    Builder b;
    const int n = params.n();
    std::vector<int> branch(n);
    for (int i = 0; i < n; ++i)
        branch[i] = b.g.add_black("b" + std::to_string(i + 1));
    for (int i = 0; i < n; ++i) {
        const auto& t = params.triples[i];
        int start = b.white();
        b.g.add_edge(start, branch[i], 1);
        Vertex end = b.string(start, lpq_labels(t.p, t.q));
        int sign = (i + 1 == n && params.epsilon < 0) ? -1 : +1;
        b.g.add_edge(end.index, branch[(i + 1) % n], 1, sign);
    }
    for (int i = 0; i < n; ++i) {
        int root = b.white();
        b.g.add_edge(root, branch[i], 1);
        b.string(root, lpq_labels(params.triples[i].r, 0));
    }
    return std::move(b.g);
}

LabelledGraph make_a_graph(const AGraphParams& params)
{
    require_valid(params);
    Builder b;
    const int n = params.n();
    std::vector<int> branch(n - 1);
    for (int i = 0; i + 1 < n; ++i)
        branch[i] = b.g.add_black("b" + std::to_string(i + 1));
    int start = b.white();
    for (int i = 0; i < n; ++i) {
        if (i > 0) {
            start = b.white();
            b.g.add_edge(start, branch[i - 1], 1);
        }
        Vertex end = b.string(start, lpq_labels(params.p[i], params.q[i]));
        if (i + 1 < n)
            b.g.add_edge(end.index, branch[i], 1);
    }
    for (int i = 0; i + 1 < n; ++i) {
        int root = b.white();
        b.g.add_edge(root, branch[i], 1);
        b.string(root, lpq_labels(params.arms[i], 0));
    }
    return std::move(b.g);
}

}  // namespace stratifold
