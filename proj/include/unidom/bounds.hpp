#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace unidom {

using Rational = boost::rational<std::int64_t>;

/// "p/q", or "p" when the value is integral.
std::string to_string(const Rational& r);

class BoundDomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr std::int64_t ceil_half(std::int64_t x) { return (x + 1) / 2; }
inline constexpr std::int64_t floor_half(std::int64_t x) { return x / 2; }

/// Cap on |C|, the vertices hung off x_1 before the R vertices start:
/// 2*ceil(g/2) - floor(g/2) + 1.
std::int64_t c_capacity(std::int64_t gamma);

/// Number of R vertices in the extremal bipartite construction,
/// max(0, n - 3g - c_capacity(g)). This is the order-consistent count; see
/// phi_as_printed for the variant that drops the sign on floor(g/2) + 1.
std::int64_t phi(std::int64_t n, std::int64_t gamma);
/// max(0, n - 3g - 2*ceil(g/2) - floor(g/2) + 1). Agrees with phi for g <= 3.
std::int64_t phi_as_printed(std::int64_t n, std::int64_t gamma);

/// Maximum size of a bipartite graph without isolated vertices, of order n,
/// with domination number gamma and a unique minimum dominating set
/// (conjectured; proved for gamma = 2 and n = 3*gamma). Evaluated term by term
/// as base + min-term + sum over i = 1..phi. Requires gamma >= 2, n >= 3*gamma.
std::int64_t bipartite_bound(std::int64_t n, std::int64_t gamma);
/// Same expression with phi_as_printed as the summation limit.
std::int64_t bipartite_bound_as_printed(std::int64_t n, std::int64_t gamma);
/// Closed form of bipartite_bound: the sum of ceil(i/2) for i <= p is
/// ceil(p/2) * (floor(p/2) + 1).
std::int64_t bipartite_bound_closed_form(std::int64_t n, std::int64_t gamma);

/// n(n-2)/4 for even n, (n-1)^2/4 for odd n. Requires n >= 6.
std::int64_t bipartite_bound_gamma2(std::int64_t n);
/// 2g + 2*ceil(g/2)*floor(g/2). Requires gamma >= 2.
std::int64_t n3g_bound(std::int64_t gamma);
/// C(n-g, 2) - g(g-2). Requires gamma >= 2, n >= 3*gamma.
std::int64_t fischermann_bound(std::int64_t n, std::int64_t gamma);
/// (n-g)(n-g+2)/2, exact. Requires gamma >= 2 and n >= gamma.
Rational vizing_bound(std::int64_t n, std::int64_t gamma);
/// gamma = 1: the star K_{1,n-1}. Requires n >= 3.
std::int64_t star_bound(std::int64_t n);

/// Count of positive integers below n with the opposite parity. Requires n >= 1.
std::int64_t tau(std::int64_t n);
/// ceil(2n/3). Requires n >= 3.
std::int64_t min_forest_edges(std::int64_t n);

/// Upper bounds on the size of a gamma = 2 bipartite UMD graph, one per
/// placement of the two dominators x, y.
struct Gamma2CaseBounds {
    /// x, y in the same part: 2(n-2) - 4.
    std::int64_t m1 = 0;
    /// x, y adjacent, as the parity-split display with denominator 12.
    Rational m2;
    /// x, y non-adjacent in different parts: n - 2 + ceil((n-3)/2)*floor((n-3)/2).
    std::int64_t m3 = 0;
    /// n - 1 + ceil((n-2)/2)*floor((n-2)/2) - 2(n-2)/3, before simplification.
    Rational m2_unsimplified;
    /// As m2_unsimplified with the ceiling on 2(n-2)/3 kept.
    std::int64_t m2_with_ceiling = 0;
};

/// Requires n >= 6.
Gamma2CaseBounds gamma2_case_bounds(std::int64_t n);

}  // namespace unidom
