#pragma once

#include "hh/pwl.hpp"
#include "hh/rational.hpp"

namespace hh {

struct RamificationFiltration;

// Deterministic trial-division primality check.
bool is_prime(const Int& p);

// Parameters of L = Q_p(zeta_{p^n}) over K = Q_p, with the intermediate
// field F = Q_p(zeta_p). The relative extension L/F is wild and requires
// n >= 2.
struct CyclotomicParams {
  Int p;
  int n = 1;

  // Throws DomainError unless p is prime and n >= 1.
  void validate() const;
};

// Lower-numbering break table of Gal(L/K): order (p-1)p^{n-1} at u = 0 and
// p^{n-1-k} on [p^k, p^{k+1}). Consecutive entries with equal order are
// merged, which handles the p = 2 collapse where p - 1 = 1.
RamificationFiltration cyclotomic_filtration(const CyclotomicParams& params);

// phi_{L/K}, derived from the filtration. Vertices at (p^k - 1, k) for
// k = 1..n-1.
PwlFunction phi_cyclotomic_over_K(const CyclotomicParams& params);

// phi_{L/F} built directly from its case formulas: slope 1/p^k on
// (p^k - 1, p^{k+1} - 1] for 0 <= k < n-1, final slope 1/p^{n-1},
// vertices (p^k - 1, k(p-1)). Requires n >= 2.
PwlFunction phi_cyclotomic_over_F_closed_form(const CyclotomicParams& params);

// phi_{L/F} via the tower route psi_{F/K} o phi_{L/K}, an independent code
// path from the closed form. Requires n >= 2.
PwlFunction phi_cyclotomic_over_F_derived(const CyclotomicParams& params);

}  // namespace hh
