#pragma once

// Group homology H_0, H_1, H_2 with coefficients in finite-dimensional
// F_p[G]-modules, computed from the bar complex.
//
// Chains in degree n are M (x) F_p[G^n]. The basis vector for module index i
// and tuple (g_1, ..., g_n) sits at position tuple_index * dim + i, where
// tuple_index enumerates tuples lexicographically with g_1 most significant.
// The normalized complex drops every tuple containing the identity and
// enumerates g_k over the non-identity elements 1..|G|-1; the unnormalized
// complex enumerates all elements.
//
// Modules are left modules given by action matrices. The boundary uses the
// right action m.g = g^{-1} m:
//
//   d(m [g_1|...|g_n]) = m.g_1 [g_2|...|g_n]
//                        + sum_{i=1}^{n-1} (-1)^i m [...|g_i g_{i+1}|...]
//                        + (-1)^n m [g_1|...|g_{n-1}]

#include "equideform/fpalgebra.hpp"
#include "equideform/groups.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace equideform {

class ModuleMorphism;

struct HomologyLimits {
  /// Largest chain space (dimension) a boundary may map from. Degree n
  /// homology needs the degree n+1 chains.
  std::size_t max_cells = std::size_t(1) << 20;
  /// Largest integral boundary matrix (rows * cols) handed to Smith normal form.
  std::size_t max_integral_entries = std::size_t(1) << 17;
};

class GModule {
public:
  /// One action matrix per group element. Validates the homomorphism law.
  GModule(FiniteGroup group, std::uint32_t p, std::vector<PrimeFieldMatrix> action);

  const FiniteGroup &group() const noexcept { return group_; }
  std::uint32_t prime() const noexcept { return p_; }
  std::size_t dim() const noexcept { return dim_; }
  const PrimeFieldMatrix &action(Element g) const noexcept { return action_[g]; }

private:
  struct Trusted {};
  GModule(Trusted, FiniteGroup group, std::uint32_t p, std::size_t dim,
          std::vector<PrimeFieldMatrix> action);

  friend GModule trivial_module(const FiniteGroup &, std::uint32_t);
  friend GModule permutation_module(const Subgroup &, std::uint32_t);
  friend GModule direct_sum(std::span<const GModule>);
  friend class ModuleMorphism;
  friend GModule kernel_module(const ModuleMorphism &);

  FiniteGroup group_;
  std::uint32_t p_;
  std::size_t dim_;
  std::vector<PrimeFieldMatrix> action_;
};

class ModuleMorphism {
public:
  /// matrix is target.dim() x source.dim(). Throws NotEquivariant unless
  /// matrix * action_source(g) == action_target(g) * matrix for every g.
  ModuleMorphism(GModule source, GModule target, PrimeFieldMatrix matrix);

  const GModule &source() const noexcept { return source_; }
  const GModule &target() const noexcept { return target_; }
  const PrimeFieldMatrix &matrix() const noexcept { return matrix_; }

private:
  GModule source_;
  GModule target_;
  PrimeFieldMatrix matrix_;
};

GModule trivial_module(const FiniteGroup &g, std::uint32_t p);
/// F_p[G/H] on left cosets. Coset xH is represented by its least element and
/// basis vectors are ordered by representative.
GModule permutation_module(const Subgroup &h, std::uint32_t p);
GModule regular_module(const FiniteGroup &g, std::uint32_t p);
GModule direct_sum(std::span<const GModule> parts);
/// Kernel of a morphism with the restricted action. The basis is the
/// nullspace basis of the morphism matrix.
GModule kernel_module(const ModuleMorphism &f);

ModuleMorphism identity_morphism(const GModule &m);
ModuleMorphism zero_morphism(const GModule &source, const GModule &target);

/// The summation map from the sum of F_p[G/G_i] onto the trivial module:
/// every coset basis vector goes to 1. Throws EmptySubgroupList.
ModuleMorphism build_phi_morphism(const FiniteGroup &g, std::uint32_t p,
                                  std::span<const Subgroup> subgroups);

struct ModuleSpec {
  enum class Kind { Trivial, Permutation, DirectSum, Kernel };

  Kind kind = Kind::Trivial;
  std::optional<Subgroup> subgroup;
  std::vector<ModuleSpec> parts;
  std::optional<ModuleMorphism> morphism;

  static ModuleSpec trivial();
  static ModuleSpec permutation(Subgroup h);
  static ModuleSpec sum(std::vector<ModuleSpec> parts);
  static ModuleSpec kernel(ModuleMorphism f);
};

GModule build_module(const FiniteGroup &g, std::uint32_t p, const ModuleSpec &spec);

enum class BarNormalization { Normalized, Unnormalized };

/// Column generator for the bar complex of one module.
class BarComplex {
public:
  BarComplex(const GModule &m, BarNormalization kind = BarNormalization::Normalized);

  const GModule &module() const noexcept { return module_; }
  BarNormalization normalization() const noexcept { return kind_; }
  std::size_t chain_dim(std::size_t n) const noexcept;

  /// Writes column `col` of the degree-n boundary into out, which must have
  /// length chain_dim(n - 1). out is overwritten.
  void boundary_column(std::size_t n, std::size_t col, std::span<std::uint32_t> out) const;
  PrimeFieldMatrix boundary(std::size_t n) const;

private:
  GModule module_;
  BarNormalization kind_;
  std::size_t letters_;   // tuple alphabet size
  Element first_letter_;  // element encoded by digit 0
  std::vector<PrimeFieldMatrix> right_action_;
};

/// Degree-n boundary matrix, 1 <= n <= 3. Throws SizeCapExceeded.
PrimeFieldMatrix bar_boundary(const GModule &m, std::size_t n,
                              const HomologyLimits &limits = {},
                              BarNormalization kind = BarNormalization::Normalized);

/// dim H_n(G, M) for 0 <= n <= 2.
std::size_t homology_dim(const GModule &m, std::size_t n, const HomologyLimits &limits = {},
                         BarNormalization kind = BarNormalization::Normalized);

/// dim M / span{g v - v}.
std::size_t coinvariants_dim(const GModule &m);

struct InducedMapRank {
  std::size_t rank = 0;
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
};

/// Rank of H_n(f): H_n(G, source) -> H_n(G, target). Homology classes of the
/// source are represented by the first cycles, in basis order, independent
/// modulo boundaries; their images are counted modulo target boundaries.
InducedMapRank induced_homology_map_rank(const ModuleMorphism &f, std::size_t n,
                                         const HomologyLimits &limits = {});

/// Rank of the map out of a direct sum given componentwise, all components
/// sharing one target. H_n of a direct sum is the sum of the H_n, so this
/// equals the rank for the assembled morphism.
InducedMapRank induced_homology_map_rank(std::span<const ModuleMorphism> components,
                                         std::size_t n, const HomologyLimits &limits = {});

/// dim (H_2(G, Z) (x) F_p): the number of nonzero invariant factors of the
/// integral normalized degree-3 boundary divisible by p. The torsion of the
/// cokernel of that boundary is exactly the torsion of H_2(G, Z), which is
/// all of it for finite G.
std::size_t integral_h2_p_rank(const FiniteGroup &g, std::uint32_t p,
                               const HomologyLimits &limits = {});

} // namespace equideform
