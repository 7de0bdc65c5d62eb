#pragma once

#include <numeric>
#include <vector>

#include "alexinv/cyclo_product.hpp"
#include "alexinv/resolution.hpp"

namespace alexinv {

/// prod_k (1 - t^{m_k})^{chi(E_k°)}.
inline FormalCycloProduct acampo_zeta(const ResolutionTree &t) {
    FormalCycloProduct z(1);
    for (const auto &n : t.nodes) z.multiply_factor({n.multiplicity()}, n.euler_open());
    return z;
}

/// Delta with zeta = (t - 1) / Delta, canonical up to units.
inline LaurentPolynomial local_alexander_from_zeta(const FormalCycloProduct &zeta) {
    if (zeta.var_count() != 1) fail(ErrorKind::Validation, "zeta function must be univariate");
    return normalize_unit((FormalCycloProduct::factor({1}) * zeta.inverse()).expand());
}

/// Local Alexander polynomial of a resolved germ. A smooth branch (empty
/// tree, one component) is unknotted and has Delta = 1.
inline LaurentPolynomial local_alexander(const ResolutionTree &t) {
    if (t.empty() && t.r == 1) return LaurentPolynomial::constant(1, 1);
    return local_alexander_from_zeta(acampo_zeta(t));
}

/// (t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1)).
inline LaurentPolynomial torus_knot_alexander(long p, long q) {
    if (p < 1 || q < 1) fail(ErrorKind::Validation, "torus knot parameters must be positive");
    if (std::gcd(p, q) != 1) fail(ErrorKind::NotCoprime, "torus knot parameters must be coprime");
    FormalCycloProduct f = FormalCycloProduct::factor({p * q}) * FormalCycloProduct::factor({1});
    f = f * FormalCycloProduct::factor({p}, -1) * FormalCycloProduct::factor({q}, -1);
    return normalize_unit(f.expand());
}

/// prod_k (1 - t^{a_k})^{-chi(E_k°)} in r variables.
inline FormalCycloProduct multivariable_link_alexander(const ResolutionTree &t) {
    if (t.r < 2) fail(ErrorKind::Validation, "multivariable Alexander polynomial needs at least two components");
    FormalCycloProduct f(t.r);
    for (const auto &n : t.nodes) f.multiply_factor(Exponent(n.a.begin(), n.a.end()), -n.euler_open());
    return f;
}

/// Exponents a_{zeta,i} from the Hodge numbers of one eigenvalue.
inline std::vector<long> fitting_exponents_from_hodge(long h00, long h10, long h01) {
    if (h00 < 0 || h10 < 0 || h01 < 0) fail(ErrorKind::BadHodgeData, "Hodge numbers must be nonnegative");
    std::vector<long> out;
    const long len = h00 + h10 + h01;
    for (long i = 1; i <= len; ++i) {
        if (i <= h00)
            out.push_back(h10 + h01 + 2 * h00 - 2 * (i - 1));
        else
            out.push_back(h10 + h01 - (i - 1 - h00));
    }
    return out;
}

} // namespace alexinv
