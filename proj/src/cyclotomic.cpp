#include "hh/cyclotomic.hpp"

#include "hh/errors.hpp"
#include "hh/ramification.hpp"

namespace hh {

bool is_prime(const Int& p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0) return false;
  for (Int d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

void CyclotomicParams::validate() const {
  if (!is_prime(p)) throw DomainError("p must be prime");
  if (n < 1) throw DomainError("n must be at least 1");
}

namespace {

Int pow_int(const Int& base, int exp) {
  return boost::multiprecision::pow(base, static_cast<unsigned>(exp));
}

void require_wild(const CyclotomicParams& params) {
  params.validate();
  if (params.n < 2) {
    throw DomainError("relative cyclotomic extension L/F requires n >= 2");
  }
}

}  // namespace

RamificationFiltration cyclotomic_filtration(const CyclotomicParams& params) {
  params.validate();
  RamificationFiltration filt;
  filt.jumps.push_back({Int(0), (params.p - 1) * pow_int(params.p, params.n - 1)});
  for (int k = 0; k < params.n; ++k) {
    const Int order = pow_int(params.p, params.n - 1 - k);
    if (order == filt.jumps.back().order) continue;  // p = 2 collapse
    filt.jumps.push_back({pow_int(params.p, k), order});
  }
  return filt;
}

PwlFunction phi_cyclotomic_over_K(const CyclotomicParams& params) {
  return phi_from_filtration(cyclotomic_filtration(params));
}

PwlFunction phi_cyclotomic_over_F_closed_form(const CyclotomicParams& params) {
  require_wild(params);
  std::vector<PwlFunction::Segment> segs;
  for (int k = 0; k + 1 < params.n; ++k) {
    const Int pk = pow_int(params.p, k);
    segs.push_back({Rat(pk * (params.p - 1)), Rat(1) / Rat(pk)});
  }
  segs.push_back({std::nullopt, Rat(1) / Rat(pow_int(params.p, params.n - 1))});
  return PwlFunction::from_segments(Rat(0), segs);
}

PwlFunction phi_cyclotomic_over_F_derived(const CyclotomicParams& params) {
  require_wild(params);
  // psi_{F/K} scales by p - 1 since F/K is tame of degree p - 1.
  const PwlFunction psi_fk =
      PwlFunction::linear(Rat(1) / Rat(params.p - 1)).inverse();
  return compose(psi_fk, phi_cyclotomic_over_K(params));
}

}  // namespace hh
