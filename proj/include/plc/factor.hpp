#ifndef PLC_FACTOR_HPP
#define PLC_FACTOR_HPP

#include <vector>

#include "plc/upoly.hpp"

namespace plc {

struct UFactor {
    UPoly poly; // monic
    int mult = 1;
};

/// Squarefree decomposition f = lc * prod g_i^{m_i} (handles p-th powers in characteristic p).
std::vector<UFactor> squarefree_factorization(const UPoly& f);

/// Complete factorization into monic irreducibles over the polynomial's own field.
/// Finite fields: Cantor-Zassenhaus. Q: Zassenhaus (Hensel lifting). Number fields: Trager's norm method.
std::vector<UFactor> factor(const UPoly& f);

/// Distinct monic irreducible factors, sorted by degree (deterministic order).
std::vector<UPoly> irreducible_factors(const UPoly& f);

/// Roots lying in the polynomial's field, without multiplicity.
std::vector<Elem> roots_in_field(const UPoly& f);

bool is_irreducible(const UPoly& f);

struct RootExtension {
    Field field; // extension containing the root (the original field when a root already exists)
    Elem root;
};

/// Returns a field in which `poly` has a root, together with that root. If the polynomial already
/// has a root in its field the field is returned unchanged. Otherwise the root of a smallest-degree
/// irreducible factor is adjoined; the new field records the embedding of the old one.
RootExtension extend_with_root(const UPoly& poly);

/// Adjoins a root of the monic irreducible polynomial `h` (degree >= 1).
RootExtension adjoin_root(const UPoly& h);

/// Factorization of a squarefree primitive integer polynomial (ascending coefficients).
std::vector<std::vector<mpz_class>> factor_integer_squarefree(const std::vector<mpz_class>& f);

} // namespace plc

#endif
