#ifndef STRATIFOLD_PARAMS_HPP
#define STRATIFOLD_PARAMS_HPP

#include <string>
#include <vector>

namespace stratifold {

/// One (p, q, r) triple of an echinus graph: the cycle segment after the
/// branch vertex is L(p, q) and the arm at the branch vertex is L(r, 0).
struct EchinusTriple
{
    int p = 0;
    int q = 0;
    int r = 0;

    friend bool operator==(const EchinusTriple&, const EchinusTriple&) = default;
};

struct EchinusParams
{
    std::vector<EchinusTriple> triples;  // n = triples.size() >= 1
    int epsilon = +1;                    // product of the cycle signs

    int n() const { return static_cast<int>(triples.size()); }
    int sum_p() const;
    int sum_q() const;

    friend bool operator==(const EchinusParams&, const EchinusParams&) = default;
};

/// A(p1,q1,r1; ...; p_{n-1},q_{n-1},r_{n-1}; p_n,q_n): a path of n segments
/// L(p_i, q_i) joined at n-1 black branch vertices, the i-th of which carries
/// an arm L(r_i, 0) with r_i > 0. `arms` has n-1 entries.
struct AGraphParams
{
    std::vector<int> p;
    std::vector<int> q;
    std::vector<int> arms;

    int n() const { return static_cast<int>(p.size()); }
};

std::string to_string(const EchinusParams& params);
std::string to_string(const AGraphParams& params);

void require_valid(const EchinusParams& params);
void require_valid(const AGraphParams& params);

}  // namespace stratifold

#endif
