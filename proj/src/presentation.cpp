#include "stratifold/presentation.hpp"

#include <sstream>

namespace stratifold {

std::vector<int> boundary_signs(const LabelledGraph& g, const std::vector<bool>& tree)
{
    std::vector<int> s(g.num_edges());
    for (int e = 0; e < g.num_edges(); ++e) {
        s[e] = g.edge(e).sign;
        if (!tree[e]) {
            auto cycle = fundamental_cycle(g, tree, e);
            if ((cycle.size() / 2) % 2 == 1)
                s[e] = -s[e];
        }
    }
    return s;
}

GroupPresentation pi1_presentation(const LabelledGraph& g)
{
    return pi1_presentation(g, spanning_tree(g));
}

GroupPresentation pi1_presentation(const LabelledGraph& g, const std::vector<bool>& tree)
{
    for (const auto& w : g.whites())
        if (w.genus != 0)
            throw StratifoldError(ErrorCode::NonzeroGenus,
                                  "presentation requires genus 0 whites; '" + w.id + "' has genus " +
                                      std::to_string(w.genus));
    GroupPresentation p;
    for (const auto& b : g.blacks())
        p.generators.push_back("b" + b.id);
    std::vector<int> t_of(g.num_edges(), -1);
    for (int e = 0; e < g.num_edges(); ++e)
        if (!tree[e]) {
            t_of[e] = static_cast<int>(p.generators.size());
            p.generators.push_back("t" + g.edge(e).id);
        }
    auto s = boundary_signs(g, tree);
    for (int w = 0; w < g.num_whites(); ++w) {
        const auto& inc = g.incident(white(w));
        if (inc.empty())
            continue;
        Word word;
        for (int e : inc) {
            Letter b{g.edge(e).black, s[e] * g.edge(e).label};
            if (t_of[e] < 0) {
                word.push_back(b);
            } else {
                word.push_back({t_of[e], 1});
                word.push_back(b);
                word.push_back({t_of[e], -1});
            }
        }
        p.relators.push_back(std::move(word));
    }
    return p;
}

H1Matrix h1_matrix(const LabelledGraph& g)
{
    return h1_matrix(g, spanning_tree(g));
}

H1Matrix h1_matrix(const LabelledGraph& g, const std::vector<bool>& tree)
{
    H1Matrix out;
    for (const auto& b : g.blacks())
        out.columns.push_back("b" + b.id);
    std::vector<int> first_surface_col(g.num_whites(), -1);
    for (int w = 0; w < g.num_whites(); ++w) {
        int genus = g.whites()[w].genus;
        int count = genus > 0 ? 2 * genus : -genus;
        if (count > 0)
            first_surface_col[w] = static_cast<int>(out.columns.size());
        for (int i = 0; i < count; ++i)
            out.columns.push_back((genus > 0 ? (i % 2 ? "y" : "x") : "a") + g.whites()[w].id + "_" +
                                  std::to_string(genus > 0 ? i / 2 + 1 : i + 1));
    }
    out.matrix = IntMatrix::Zero(g.num_whites(), static_cast<Eigen::Index>(out.columns.size()));
    auto s = boundary_signs(g, tree);
    for (int w = 0; w < g.num_whites(); ++w) {
        for (int e : g.incident(white(w)))
            out.matrix(w, g.edge(e).black) += BigInt(s[e] * g.edge(e).label);
        int genus = g.whites()[w].genus;
        for (int i = 0; genus < 0 && i < -genus; ++i)
            out.matrix(w, first_surface_col[w] + i) = 2;
    }
    for (int e = 0; e < g.num_edges(); ++e)
        if (!tree[e])
            ++out.free_rank_extra;
    return out;
}

IntMatrix abelianization_matrix(const GroupPresentation& p)
{
    IntMatrix m = IntMatrix::Zero(static_cast<Eigen::Index>(p.relators.size()),
                                  static_cast<Eigen::Index>(p.generators.size()));
    for (std::size_t r = 0; r < p.relators.size(); ++r)
        for (const Letter& l : p.relators[r])
            m(static_cast<Eigen::Index>(r), l.generator) += BigInt(l.exponent);
    return m;
}

std::string to_string(const GroupPresentation& p)
{
    std::ostringstream os;
    os << "generators:";
    for (const auto& g : p.generators)
        os << ' ' << g;
    os << '\n';
    for (const auto& word : p.relators) {
        for (std::size_t i = 0; i < word.size(); ++i) {
            if (i)
                os << ' ';
            os << p.generators[word[i].generator];
            if (word[i].exponent != 1)
                os << '^' << word[i].exponent;
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace stratifold
