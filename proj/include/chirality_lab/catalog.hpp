#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chirality_lab/budgets.hpp"
#include "chirality_lab/cayley_table.hpp"
#include "chirality_lab/finite_field.hpp"
#include "chirality_lab/hypermap.hpp"

namespace chirality_lab {

/// A family tag plus its parameters, e.g. `metacyclic` with n=7,m=3,r=2,s=0.
struct FamilySpec {
  std::string family;
  std::map<std::string, std::string> params;

  /// `family` and `"k=v,k=v"`.
  static FamilySpec parse(std::string_view family, std::string_view params);
  /// `"family:k=v,k=v"` (or a bare family name).
  static FamilySpec parse(std::string_view compact);

  std::int64_t integer(const std::string& key) const;
  std::int64_t integer(const std::string& key, std::int64_t fallback) const;
  bool has(const std::string& key) const { return params.count(key) != 0; }

  /// `family:k=v,...` with keys in the family's canonical order.
  std::string label() const;
};

struct Construction {
  FamilySpec spec;
  Hypermap hypermap;
  std::vector<std::string> notes;
  /// False when |Mon|^2 is beyond the pair budget and only the order is
  /// reported (large SL3 instances).
  bool chirality_in_budget = true;
};

// Hypermap families. All results are orientably regular, built on the
// canonical table of the generating pair.

/// <a, b | a^n = 1, b^m = a^s, b a b^-1 = a^r> on the normal forms a^i b^j,
/// R = a and L = b. Requires r s = s and r^m = 1 mod n.
Hypermap metacyclic(std::int64_t n, std::int64_t m, std::int64_t r, std::int64_t s);
TablePtr metacyclic_group(std::int64_t n, std::int64_t m, std::int64_t r, std::int64_t s);

/// AGL1(q) on R = (t -> c t), L = (t -> t + 1), c the first generator of F_q*.
Hypermap agl1(std::uint64_t q);
TablePtr agl1_group(std::uint64_t q);

/// <t -> t^2, t -> u t + (1 - u) v> inside AGammaL1(2^e), u the first
/// generator of F_q*; `v` defaults to u.
Hypermap agamma_l1(std::uint64_t q, std::optional<GaloisField::Code> v = std::nullopt);

/// A_n on (1 2 ... n), (1 2 4) for odd n and (1 2 ... n-1), (1 n)(2 3) for
/// even n. Requires n >= 5.
Hypermap alternating_map(std::int64_t n, std::uint64_t group_budget = std::uint64_t{1} << 22);

/// Z_p with R = (t -> t + i), L = (t -> t + j).
Hypermap cyclic_hypermap(std::int64_t p, std::int64_t i, std::int64_t j);

// Group substrates for scans.

TablePtr cyclic_group(std::int64_t n);
/// D_n of order 2n on a rotation and a reflection.
TablePtr dihedral_group(std::int64_t n);
TablePtr symmetric_group(std::int64_t n);
TablePtr alternating_group(std::int64_t n, std::uint64_t group_budget = std::uint64_t{1} << 22);
/// PSL2(q) on the projective line. Uses z -> z + 1 and z -> -1/z when they
/// generate; otherwise the first z -> -1/(z + b) (b in code order) that does.
TablePtr psl2_group(std::uint64_t q);

struct Sl3Construction {
  Hypermap hypermap;
  std::vector<std::string> notes;
  std::uint64_t attempts = 0;  // y candidates tried
};

/// SL3(q) with x = diag(zeta, zeta^2, zeta^-3) when those are distinct, a
/// diagonal fallback otherwise, and y from a seeded LCG walk over matrices
/// until <x, y> = SL3(q).
Sl3Construction sl3_hypermap(std::uint64_t q, std::uint64_t seed, std::uint64_t group_budget = std::uint64_t{1} << 22);

std::uint64_t sl3_order(std::uint64_t q);

/// Dispatch on `spec.family`: metacyclic, agl1, agammal1, alt, cyclic, sl3,
/// dihedral (the metacyclic D_n), trivial.
Construction build_hypermap(const FamilySpec& spec, const Budgets& budgets = {});

/// Groups for scanning: cyclic, dihedral, symmetric, alternating, psl2,
/// agl1, sl3, or any hypermap family (its monodromy group).
TablePtr build_group(const FamilySpec& spec, const Budgets& budgets = {});

/// The 1-dart hypermap of type (1, 1, 1).
Hypermap trivial_hypermap();

}  // namespace chirality_lab
