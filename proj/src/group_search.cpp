#include "stratifold/group_search.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

namespace stratifold {

namespace {

// Letters: +(g+1) for a generator, -(g+1) for its inverse.
using Letters = std::vector<int>;

Letters expand(const Word& w)
{
    Letters out;
    for (const Letter& l : w)
        for (int i = 0; i < std::abs(l.exponent); ++i)
            out.push_back(l.exponent > 0 ? l.generator + 1 : -(l.generator + 1));
    return out;
}

Word compress(const Letters& letters)
{
    Word out;
    for (int x : letters) {
        int g = std::abs(x) - 1;
        int e = x > 0 ? 1 : -1;
        if (!out.empty() && out.back().generator == g)
            out.back().exponent += e;
        else
            out.push_back({g, e});
    }
    return out;
}

Letters inverse(const Letters& w)
{
    Letters out(w.rbegin(), w.rend());
    for (int& x : out)
        x = -x;
    return out;
}

void free_reduce(Letters& w)
{
    Letters out;
    for (int x : w) {
        if (!out.empty() && out.back() == -x)
            out.pop_back();
        else
            out.push_back(x);
    }
    w = std::move(out);
}

void cyclic_reduce(Letters& w)
{
    free_reduce(w);
    std::size_t i = 0, j = w.size();
    while (j - i >= 2 && w[i] == -w[j - 1]) {
        ++i;
        --j;
    }
    w = Letters(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(j));
}

struct Relators
{
    int generators = 0;
    std::vector<Letters> words;
};

/// Uses relators x^k to bring every run of x in the other relators to an
/// exponent in (-k/2, k/2]. Returns whether anything changed.
bool reduce_powers(Relators& r)
{
    std::vector<int> order(r.generators + 1, 0);
    for (const auto& w : r.words) {
        if (w.empty() || std::any_of(w.begin(), w.end(), [&](int x) { return x != w[0]; }))
            continue;
        int& k = order[std::abs(w[0])];
        k = std::gcd(k, static_cast<int>(w.size()));
    }
    bool changed = false;
    for (auto& w : r.words) {
        bool pure = !w.empty() && std::all_of(w.begin(), w.end(), [&](int x) { return x == w[0]; });
        if (pure && w[0] < 0)
            w = inverse(w);
        if (pure && static_cast<int>(w.size()) == order[std::abs(w[0])])
            continue;
        Letters out;
        for (std::size_t i = 0; i < w.size();) {
            int g = std::abs(w[i]);
            std::size_t j = i;
            int e = 0;
            while (j < w.size() && std::abs(w[j]) == g)
                e += w[j++] > 0 ? 1 : -1;
            int k = order[g];
            int reduced = e;
            if (k > 0) {
                reduced = ((e % k) + k) % k;
                if (2 * reduced > k)
                    reduced -= k;
            }
            changed = changed || reduced != e;
            for (int n = 0; n < std::abs(reduced); ++n)
                out.push_back(reduced > 0 ? g : -g);
            i = j;
        }
        w = std::move(out);
    }
    // Keep x^k itself; it may have been combined from several relators.
    if (changed)
        for (int g = 1; g <= r.generators; ++g)
            if (order[g] > 0)
                r.words.push_back(Letters(order[g], g));
    return changed;
}

void tidy(Relators& r)
{
    do {
        for (auto& w : r.words)
            cyclic_reduce(w);
    } while (reduce_powers(r));
    std::set<Letters> seen;
    std::vector<Letters> out;
    for (auto& w : r.words) {
        cyclic_reduce(w);
        if (w.empty() || !seen.insert(w).second)
            continue;
        out.push_back(std::move(w));
    }
    r.words = std::move(out);
}

constexpr std::size_t kMaxTotalLength = 200000;

/// Eliminates one generator; false when no relator has a generator occurring once.
bool eliminate_one(Relators& r)
{
    int best_rel = -1, best_gen = -1;
    for (int i = 0; i < static_cast<int>(r.words.size()); ++i) {
        const auto& w = r.words[i];
        if (best_rel >= 0 && w.size() >= r.words[best_rel].size())
            continue;
        std::vector<int> count(r.generators + 1, 0);
        for (int x : w)
            ++count[std::abs(x)];
        for (int x : w)
            if (count[std::abs(x)] == 1) {
                best_rel = i;
                best_gen = std::abs(x);
                break;
            }
    }
    if (best_rel < 0)
        return false;

    // Rotate so the generator is last: w = u x^e, hence x = u^-1 (e = 1) or u (e = -1).
    Letters w = r.words[best_rel];
    auto pos = std::find_if(w.begin(), w.end(), [&](int x) { return std::abs(x) == best_gen; });
    std::rotate(w.begin(), pos + 1, w.end());
    int e = w.back() > 0 ? 1 : -1;
    w.pop_back();
    Letters value = e == 1 ? inverse(w) : w;
    Letters value_inv = inverse(value);

    std::vector<Letters> out;
    std::size_t total = 0;
    for (int i = 0; i < static_cast<int>(r.words.size()); ++i) {
        if (i == best_rel)
            continue;
        Letters rewritten;
        for (int x : r.words[i]) {
            if (x == best_gen)
                rewritten.insert(rewritten.end(), value.begin(), value.end());
            else if (x == -best_gen)
                rewritten.insert(rewritten.end(), value_inv.begin(), value_inv.end());
            else
                rewritten.push_back(x);
        }
        total += rewritten.size();
        out.push_back(std::move(rewritten));
    }
    if (total > kMaxTotalLength)
        return false;
    // Renumber generators above the eliminated one.
    for (auto& word : out)
        for (int& x : word)
            if (std::abs(x) > best_gen)
                x += x > 0 ? -1 : 1;
    r.words = std::move(out);
    --r.generators;
    tidy(r);
    return true;
}

}  // namespace

GroupPresentation tietze_simplify(const GroupPresentation& p, std::size_t max_steps, std::size_t* steps_used)
{
    Relators r;
    r.generators = static_cast<int>(p.generators.size());
    for (const auto& w : p.relators)
        r.words.push_back(expand(w));
    tidy(r);
    std::size_t steps = 0;
    while (steps < max_steps && eliminate_one(r))
        ++steps;
    if (steps_used)
        *steps_used = steps;

    GroupPresentation out;
    for (int g = 0; g < r.generators; ++g)
        out.generators.push_back("x" + std::to_string(g + 1));
    for (const auto& w : r.words)
        out.relators.push_back(compress(w));
    return out;
}

namespace {

class CosetTable
{
  public:
    CosetTable(int generators, std::size_t max_cosets)
        : columns_(2 * generators), max_cosets_(max_cosets)
    {
        add_coset();
    }

    static int column(int letter) { return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1; }

    bool overflowed() const { return overflow_; }
    std::size_t size() const { return parent_.size(); }
    bool live(int c) const { return parent_[c] == c; }
    int& at(int c, int col) { return table_[static_cast<std::size_t>(c) * columns_ + col]; }

    std::size_t live_count() const
    {
        std::size_t n = 0;
        for (std::size_t c = 0; c < parent_.size(); ++c)
            if (parent_[c] == static_cast<int>(c))
                ++n;
        return n;
    }

    int define(int c, int col)
    {
        int n = add_coset();
        if (n < 0)
            return -1;
        at(c, col) = n;
        at(n, col ^ 1) = c;
        return n;
    }

    /// Scans the relator from coset c, defining cosets as needed.
    void scan_and_fill(int c, const Letters& w)
    {
        if (w.empty())
            return;
        int f = c, b = c;
        int i = 0, j = static_cast<int>(w.size()) - 1;
        for (;;) {
            while (i <= j && at(f, column(w[i])) >= 0)
                f = at(f, column(w[i++]));
            if (i > j) {
                if (f != b)
                    coincidence(f, b);
                return;
            }
            while (j >= i && at(b, column(-w[j])) >= 0)
                b = at(b, column(-w[j--]));
            if (j < i) {
                coincidence(f, b);
                return;
            }
            if (i == j) {
                at(f, column(w[i])) = b;
                at(b, column(-w[i])) = f;
                return;
            }
            if (define(f, column(w[i])) < 0)
                return;
        }
    }

    void fill_row(int c)
    {
        for (int col = 0; col < columns_ && live(c); ++col)
            if (at(c, col) < 0 && define(c, col) < 0)
                return;
    }

  private:
    int add_coset()
    {
        if (parent_.size() >= max_cosets_) {
            overflow_ = true;
            return -1;
        }
        int n = static_cast<int>(parent_.size());
        parent_.push_back(n);
        table_.resize(table_.size() + columns_, -1);
        return n;
    }

    int rep(int c)
    {
        int r = c;
        while (parent_[r] != r)
            r = parent_[r];
        while (parent_[c] != r) {
            int next = parent_[c];
            parent_[c] = r;
            c = next;
        }
        return r;
    }

    void merge(int a, int b, std::vector<int>& queue)
    {
        a = rep(a);
        b = rep(b);
        if (a == b)
            return;
        if (a > b)
            std::swap(a, b);
        parent_[b] = a;
        queue.push_back(b);
    }

    void coincidence(int a, int b)
    {
        std::vector<int> queue;
        merge(a, b, queue);
        for (std::size_t k = 0; k < queue.size(); ++k) {
            int e = queue[k];
            for (int col = 0; col < columns_; ++col) {
                int f = at(e, col);
                if (f < 0)
                    continue;
                at(f, col ^ 1) = -1;
                int e1 = rep(e), f1 = rep(f);
                if (at(e1, col) >= 0)
                    merge(f1, at(e1, col), queue);
                else if (at(f1, col ^ 1) >= 0)
                    merge(e1, at(f1, col ^ 1), queue);
                else {
                    at(e1, col) = f1;
                    at(f1, col ^ 1) = e1;
                }
            }
        }
    }

    int columns_;
    std::size_t max_cosets_;
    bool overflow_ = false;
    std::vector<int> parent_;
    std::vector<int> table_;
};

}  // namespace

std::optional<std::size_t> coset_enumerate(const GroupPresentation& p, std::size_t max_cosets,
                                           const std::vector<Word>& subgroup)
{
    const int gens = static_cast<int>(p.generators.size());
    if (gens == 0)
        return 1;
    std::vector<Letters> relators;
    for (const auto& w : p.relators) {
        Letters l = expand(w);
        cyclic_reduce(l);
        if (!l.empty())
            relators.push_back(std::move(l));
    }
    CosetTable table(gens, max_cosets);
    for (const auto& h : subgroup) {
        Letters l = expand(h);
        free_reduce(l);
        table.scan_and_fill(0, l);
        if (table.overflowed())
            return std::nullopt;
    }
    for (int c = 0; c < static_cast<int>(table.size()); ++c) {
        for (const auto& r : relators) {
            if (!table.live(c))
                break;
            table.scan_and_fill(c, r);
            if (table.overflowed())
                return std::nullopt;
        }
        if (table.live(c))
            table.fill_row(c);
        if (table.overflowed())
            return std::nullopt;
    }
    return table.live_count();
}

bool has_nonabelian_finite_quotient(const GroupPresentation& p, const SearchLimits& limits)
{
    const std::size_t cosets = std::min<std::size_t>(limits.max_cosets, 20000);
    for (int g = 0; g < static_cast<int>(p.generators.size()); ++g)
        for (int k = 2; k <= 6; ++k) {
            GroupPresentation q = p;
            q.relators.push_back({{g, k}});
            auto order = coset_enumerate(q, cosets);
            if (!order)
                continue;
            auto ab = abelian_group(abelianization_matrix(q));
            if (ab.free_rank > 0)
                continue;
            BigInt ab_order = 1;
            for (const auto& d : ab.torsion)
                ab_order *= d;
            if (ab_order != BigInt(*order))
                return true;
        }
    return false;
}

bool presents_infinite_cyclic(const GroupPresentation& p, const SearchLimits& limits)
{
    auto simple = tietze_simplify(p, limits.max_tietze_steps);
    if (simple.generators.size() == 1 && simple.relators.empty())
        return true;
    auto ab = abelian_group(abelianization_matrix(simple));
    if (ab.free_rank != 1 || !ab.torsion.empty())
        return false;
    // A cyclic group with abelianization Z is Z itself.
    for (int g = 0; g < static_cast<int>(simple.generators.size()); ++g) {
        auto index = coset_enumerate(simple, limits.max_cosets, {{{g, 1}}});
        if (index && *index == 1)
            return true;
    }
    return false;
}

TrivialityResult decide_trivial(const GroupPresentation& p, const SearchLimits& limits)
{
    std::size_t steps = 0;
    GroupPresentation simple = tietze_simplify(p, limits.max_tietze_steps, &steps);
    const std::string after = std::to_string(steps) + " Tietze eliminations left " +
                              std::to_string(simple.generators.size()) + " generators, " +
                              std::to_string(simple.relators.size()) + " relators";
    if (simple.generators.empty())
        return {Triviality::Trivial, after};
    if (simple.relators.size() < simple.generators.size())
        return {Triviality::Nontrivial, after + " (more generators than relators: infinite abelianization)"};
    auto ab = abelian_group(abelianization_matrix(simple));
    if (!ab.is_trivial())
        return {Triviality::Nontrivial, after + "; abelianization " + to_string(ab)};
    auto order = coset_enumerate(simple, limits.max_cosets);
    if (!order)
        return {Triviality::Unknown, after + "; coset enumeration exceeded " + std::to_string(limits.max_cosets) +
                                         " cosets"};
    if (*order == 1)
        return {Triviality::Trivial, after + "; coset enumeration closed with 1 coset"};
    return {Triviality::Nontrivial, after + "; group order " + std::to_string(*order)};
}

}  // namespace stratifold
