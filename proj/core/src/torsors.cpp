#include "tropjac/torsors.hpp"

#include <algorithm>

#include "tropjac/errors.hpp"
#include "tropjac/tropical_jacobian.hpp"

namespace tropjac {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void validate(const GroupAtom& atom) {
  std::visit(overloaded{
                 [](const MuN& a) {
                   if (a.n < 1) throw InputError("mu_n needs n >= 1");
                 },
                 [](const ZmodN& a) {
                   if (a.m < 1) throw InputError("Z/m needs m >= 1");
                 },
                 [](const AlphaP& a) {
                   if (!is_prime(a.p)) throw InputError("alpha_p needs p prime, got " + std::to_string(a.p));
                 },
                 [](const LocalLocal& a) {
                   if (!is_prime(a.p)) throw InputError("local-local part needs p prime, got " + std::to_string(a.p));
                   if (a.alpha_power && *a.alpha_power != a.hom_dim)
                     throw InputError("local-local part alpha_p^" + std::to_string(*a.alpha_power) +
                                      " has Hom(alpha_p, I) of dimension " + std::to_string(*a.alpha_power) +
                                      ", but homDim is " + std::to_string(a.hom_dim));
                 },
             },
             atom);
}

std::string power(const std::string& base, std::uint64_t e) { return e == 1 ? base : base + "^" + std::to_string(e); }

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::string atom_to_string(const GroupAtom& a) {
  return std::visit(overloaded{
                        [](const MuN& x) { return "mu_" + std::to_string(x.n); },
                        [](const ZmodN& x) { return "Z/" + std::to_string(x.m); },
                        [](const AlphaP& x) { return "alpha_" + std::to_string(x.p); },
                        [](const LocalLocal& x) {
                          std::string s = "I(p=" + std::to_string(x.p) + ", homDim=" + std::to_string(x.hom_dim);
                          if (x.alpha_power) s += ", alphaPower=" + std::to_string(*x.alpha_power);
                          return s + ")";
                        },
                    },
                    a);
}

GroupDescriptor::GroupDescriptor(std::vector<GroupAtom> atoms) : atoms_(std::move(atoms)) {
  for (const auto& a : atoms_) validate(a);
  std::sort(atoms_.begin(), atoms_.end());
}

std::string GroupDescriptor::to_string() const {
  if (atoms_.empty()) return "0";
  std::string out;
  for (const auto& a : atoms_) {
    if (!out.empty()) out += " x ";
    out += atom_to_string(a);
  }
  return out;
}

BaseDescriptor::BaseDescriptor(std::uint64_t residue_char, std::uint64_t log_rank)
    : residue_char(residue_char), log_rank(log_rank) {
  if (residue_char != 0 && !is_prime(residue_char))
    throw InputError("residue characteristic must be 0 or prime, got " + std::to_string(residue_char));
}

GroupDescriptor cartier_dual(const GroupDescriptor& g) {
  std::vector<GroupAtom> dual;
  for (const auto& a : g.atoms()) {
    dual.push_back(std::visit(overloaded{
                                  [](const MuN& x) -> GroupAtom { return ZmodN{x.n}; },
                                  [](const ZmodN& x) -> GroupAtom { return MuN{x.m}; },
                                  [](const AlphaP& x) -> GroupAtom { return x; },
                                  [](const LocalLocal& x) -> GroupAtom { return x; },
                              },
                              a));
  }
  return GroupDescriptor(std::move(dual));
}

FgAbelianGroup discrete_invariant(const GroupDescriptor& g, const MetricGraph& graph) {
  const GroupDescriptor dual = cartier_dual(g);
  std::vector<std::uint64_t> orders;
  for (const auto& a : dual.atoms())
    if (const auto* z = std::get_if<ZmodN>(&a)) orders.push_back(z->m);
  FgAbelianGroup out;
  if (orders.empty()) return out;
  const FgAbelianGroup jac = trojac(graph).group;
  for (std::uint64_t m : orders) out = direct_sum(out, torsion_part(jac, Integer(static_cast<unsigned long>(m))));
  return out;
}

std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::GuaranteedUnique: return "GuaranteedUnique";
    case VerdictKind::GuaranteedEquivFppf: return "GuaranteedEquivFppf";
    case VerdictKind::NotGuaranteed: return "NotGuaranteed";
    case VerdictKind::Unknown: return "Unknown";
  }
  return "Unknown";
}

ExtensionVerdict extendability(const GroupDescriptor& g, const BaseDescriptor& base) {
  const std::uint64_t p = base.residue_char;
  std::optional<ExtensionWitness> not_guaranteed;
  std::optional<ExtensionWitness> unknown;
  bool fppf_only = false;
  for (const auto& a : g.atoms()) {
    const std::string name = atom_to_string(a);
    std::visit(overloaded{
                   // Dual Z/n is constant, hence etale.
                   [](const MuN&) {},
                   [&](const ZmodN& z) {
                     // Dual mu_m is etale iff p does not divide m; otherwise mu_m has a
                     // connected part with no map to the discrete part of the target.
                     if (p != 0 && z.m % p == 0 && !not_guaranteed)
                       not_guaranteed = ExtensionWitness{name, "connected-to-discrete"};
                   },
                   [&](const AlphaP& x) {
                     if (x.p == p)
                       fppf_only = true;
                     else if (!unknown)
                       unknown =
                           ExtensionWitness{name, "alpha_p over a base of residue characteristic " + std::to_string(p)};
                   },
                   [&](const LocalLocal&) {
                     if (!not_guaranteed) not_guaranteed = ExtensionWitness{name, "connected-dual"};
                   },
               },
               a);
  }
  if (not_guaranteed) return {VerdictKind::NotGuaranteed, not_guaranteed};
  if (unknown) return {VerdictKind::Unknown, unknown};
  if (fppf_only) return {VerdictKind::GuaranteedEquivFppf, std::nullopt};
  return {VerdictKind::GuaranteedUnique, std::nullopt};
}

std::uint64_t weil_pairing_split(std::uint64_t n, std::pair<std::int64_t, std::int64_t> a,
                                 std::pair<std::int64_t, std::int64_t> b) {
  if (n < 1) throw InputError("Weil pairing needs n >= 1");
  Integer value = Integer(static_cast<long>(a.first)) * Integer(static_cast<long>(b.second)) -
                  Integer(static_cast<long>(b.first)) * Integer(static_cast<long>(a.second));
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), static_cast<unsigned long>(n));
  return r.get_ui();
}

GroupDescriptor bt1_decompose(const Bt1Descriptor& b) {
  std::vector<GroupAtom> atoms;
  for (std::uint64_t i = 0; i < b.p_rank; ++i) {
    atoms.push_back(MuN{b.local_local.p});
    atoms.push_back(ZmodN{b.local_local.p});
  }
  atoms.push_back(b.local_local);
  return GroupDescriptor(std::move(atoms));
}

std::string UnipotentDescriptor::to_string() const {
  const std::string alpha = "alpha_" + std::to_string(p);
  std::vector<std::string> parts;
  if (alpha_p_copies) parts.push_back(power(alpha, alpha_p_copies));
  if (ga_copies) parts.push_back(power("G_a", ga_copies));
  if (opaque_hom_copies) parts.push_back(power("Hom(" + alpha + ", I)", opaque_hom_copies));
  if (parts.empty()) return "0";
  std::string out;
  for (const auto& s : parts) out += (out.empty() ? "" : " x ") + s;
  return out;
}

UnipotentDescriptor alpha_p_torsor_group(std::uint64_t h1, const Bt1Descriptor& b) {
  validate(b.local_local);
  UnipotentDescriptor out;
  out.p = b.local_local.p;
  out.alpha_p_copies = h1 + b.p_rank;
  // Hom(alpha_p, alpha_p) = G_a, one copy per alpha_p factor of I.
  if (b.local_local.alpha_power)
    out.ga_copies = *b.local_local.alpha_power;
  else
    out.opaque_hom_copies = b.local_local.hom_dim;
  return out;
}

}  // namespace tropjac
