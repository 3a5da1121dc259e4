#include "unidom/bounds.hpp"

#include <algorithm>

namespace unidom {

namespace {

void require_hypothesis(std::int64_t n, std::int64_t gamma, const char* what) {
    if (gamma < 2 || n < 3 * gamma) {
        throw BoundDomainError(std::string(what) + ": needs gamma >= 2 and n >= 3*gamma (got n=" +
                               std::to_string(n) + ", gamma=" + std::to_string(gamma) + ")");
    }
}

std::int64_t sum_ceil_half(std::int64_t p) { return ceil_half(p) * (floor_half(p) + 1); }

std::int64_t bipartite_bound_with_limit(std::int64_t n, std::int64_t gamma, std::int64_t limit) {
    const std::int64_t up = ceil_half(gamma);
    const std::int64_t down = floor_half(gamma);
    const std::int64_t per_vertex = 2 * up + 1;
    std::int64_t total = 2 * gamma + 2 * up * down;
    total += std::min(n - 3 * gamma, c_capacity(gamma)) * per_vertex;
    for (std::int64_t i = 1; i <= limit; ++i) total += per_vertex + ceil_half(i);
    return total;
}

}  // namespace

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::int64_t c_capacity(std::int64_t gamma) {
    return 2 * ceil_half(gamma) - floor_half(gamma) + 1;
}

std::int64_t phi(std::int64_t n, std::int64_t gamma) {
    return std::max<std::int64_t>(0, n - 3 * gamma - c_capacity(gamma));
}

std::int64_t phi_as_printed(std::int64_t n, std::int64_t gamma) {
    return std::max<std::int64_t>(0, n - 3 * gamma - 2 * ceil_half(gamma) - floor_half(gamma) + 1);
}

std::int64_t bipartite_bound(std::int64_t n, std::int64_t gamma) {
    require_hypothesis(n, gamma, "bipartite_bound");
    return bipartite_bound_with_limit(n, gamma, phi(n, gamma));
}

std::int64_t bipartite_bound_as_printed(std::int64_t n, std::int64_t gamma) {
    require_hypothesis(n, gamma, "bipartite_bound_as_printed");
    return bipartite_bound_with_limit(n, gamma, phi_as_printed(n, gamma));
}

std::int64_t bipartite_bound_closed_form(std::int64_t n, std::int64_t gamma) {
    require_hypothesis(n, gamma, "bipartite_bound_closed_form");
    const std::int64_t up = ceil_half(gamma);
    const std::int64_t p = phi(n, gamma);
    return 2 * gamma + 2 * up * floor_half(gamma) +
           std::min(n - 3 * gamma, c_capacity(gamma)) * (2 * up + 1) + p * (2 * up + 1) +
           sum_ceil_half(p);
}

std::int64_t bipartite_bound_gamma2(std::int64_t n) {
    if (n < 6) throw BoundDomainError("bipartite_bound_gamma2: needs n >= 6");
    return n % 2 == 0 ? n * (n - 2) / 4 : (n - 1) * (n - 1) / 4;
}

std::int64_t n3g_bound(std::int64_t gamma) {
    if (gamma < 2) throw BoundDomainError("n3g_bound: needs gamma >= 2");
    return 2 * gamma + 2 * ceil_half(gamma) * floor_half(gamma);
}

std::int64_t fischermann_bound(std::int64_t n, std::int64_t gamma) {
    require_hypothesis(n, gamma, "fischermann_bound");
    const std::int64_t k = n - gamma;
    return k * (k - 1) / 2 - gamma * (gamma - 2);
}

Rational vizing_bound(std::int64_t n, std::int64_t gamma) {
    if (gamma < 2 || n < gamma) throw BoundDomainError("vizing_bound: needs gamma >= 2, n >= gamma");
    return Rational((n - gamma) * (n - gamma + 2), 2);
}

std::int64_t star_bound(std::int64_t n) {
    if (n < 3) throw BoundDomainError("star_bound: needs n >= 3");
    return n - 1;
}

std::int64_t tau(std::int64_t n) {
    if (n < 1) throw BoundDomainError("tau: needs n >= 1");
    // n/2 when n is even, floor(n/2) when odd; integer division covers both.
    return n / 2;
}

std::int64_t min_forest_edges(std::int64_t n) {
    if (n < 3) throw BoundDomainError("min_forest_edges: needs n >= 3");
    return (2 * n + 2) / 3;
}

Gamma2CaseBounds gamma2_case_bounds(std::int64_t n) {
    if (n < 6) throw BoundDomainError("gamma2_case_bounds: needs n >= 6");
    Gamma2CaseBounds b;
    b.m1 = 2 * (n - 2) - 4;
    b.m2 = n % 2 == 0 ? Rational(3 * n * n - 6 * n - (2 * n - 8), 12)
                      : Rational(3 * n * n - 6 * n + 3 - (2 * n - 2), 12);
    const std::int64_t balanced = ceil_half(n - 2) * floor_half(n - 2);
    b.m2_unsimplified = Rational(n - 1 + balanced) - Rational(2 * (n - 2), 3);
    b.m2_with_ceiling = n - 1 + balanced - (2 * (n - 2) + 2) / 3;
    b.m3 = n - 2 + ceil_half(n - 3) * floor_half(n - 3);
    return b;
}

}  // namespace unidom
