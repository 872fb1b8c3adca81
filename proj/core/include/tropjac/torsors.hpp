#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tropjac/abgroup.hpp"
#include "tropjac/metric_graph.hpp"

namespace tropjac {

struct MuN {
  std::uint64_t n;
  friend auto operator<=>(const MuN&, const MuN&) = default;
};

struct ZmodN {
  std::uint64_t m;
  friend auto operator<=>(const ZmodN&, const ZmodN&) = default;
};

struct AlphaP {
  std::uint64_t p;
  friend auto operator<=>(const AlphaP&, const AlphaP&) = default;
};

/// Local-local part of a BT1: connected with connected dual. When it is known to be
/// alpha_p^d, alpha_power is d and must equal hom_dim.
struct LocalLocal {
  std::uint64_t p;
  std::uint64_t hom_dim;
  std::optional<std::uint64_t> alpha_power;
  friend auto operator<=>(const LocalLocal&, const LocalLocal&) = default;
};

using GroupAtom = std::variant<MuN, ZmodN, AlphaP, LocalLocal>;

std::string atom_to_string(const GroupAtom& a);

/// A finite flat commutative group as a multiset of atoms; kept sorted so that
/// equality is multiset equality.
class GroupDescriptor {
 public:
  GroupDescriptor() = default;
  explicit GroupDescriptor(std::vector<GroupAtom> atoms);

  const std::vector<GroupAtom>& atoms() const { return atoms_; }
  std::string to_string() const;

  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;

 private:
  std::vector<GroupAtom> atoms_;
};

struct BaseDescriptor {
  std::uint64_t residue_char = 0;  // 0 or a prime
  std::uint64_t log_rank = 0;

  BaseDescriptor() = default;
  BaseDescriptor(std::uint64_t residue_char, std::uint64_t log_rank);
};

struct Bt1Descriptor {
  std::uint64_t p_rank = 0;
  LocalLocal local_local;
};

bool is_prime(std::uint64_t n);

/// mu_n <-> Z/n, alpha_p and local-local parts fixed.
GroupDescriptor cartier_dual(const GroupDescriptor& g);

/// The part of Hom(G^D, TroJac) visible on the discrete quotient: each Z/m factor of
/// G^D gives TroJac[m]; connected factors of G^D contribute nothing.
FgAbelianGroup discrete_invariant(const GroupDescriptor& g, const MetricGraph& graph);

enum class VerdictKind { GuaranteedUnique, GuaranteedEquivFppf, NotGuaranteed, Unknown };

std::string to_string(VerdictKind k);

struct ExtensionWitness {
  std::string factor;
  std::string obstruction;
};

struct ExtensionVerdict {
  VerdictKind kind;
  std::optional<ExtensionWitness> witness;
};

/// Which extension statement applies to G-torsors from the generic fibre.
ExtensionVerdict extendability(const GroupDescriptor& g, const BaseDescriptor& base);

/// Additive split-model pairing on (Z/n)^2: a1*b2 - b1*a2 mod n, first coordinate the
/// mu_n exponent, second the tropical class.
std::uint64_t weil_pairing_split(std::uint64_t n, std::pair<std::int64_t, std::int64_t> a,
                                 std::pair<std::int64_t, std::int64_t> b);

/// (mu_p x Z/p)^r x I.
GroupDescriptor bt1_decompose(const Bt1Descriptor& b);

/// alpha_p^a x G_a^g x (opaque Hom(alpha_p, I))^o.
struct UnipotentDescriptor {
  std::uint64_t p = 0;
  std::uint64_t alpha_p_copies = 0;
  std::uint64_t ga_copies = 0;
  std::uint64_t opaque_hom_copies = 0;

  std::string to_string() const;
  friend bool operator==(const UnipotentDescriptor&, const UnipotentDescriptor&) = default;
};

/// Structure of the alpha_p-torsor group over a curve with first Betti number h1
/// whose Jacobian p-torsion is described by b.
UnipotentDescriptor alpha_p_torsor_group(std::uint64_t h1, const Bt1Descriptor& b);

/// Reported in place of the abelian-variety layer, which is not computed.
inline constexpr const char* kPic0Layer = "Pic0-layer: Hom(G^D, Pic0) - not computed";

}  // namespace tropjac
