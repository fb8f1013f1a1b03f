#pragma once

// Finite groups stored extensionally as multiplication tables.
//
// Element 0 is always the identity. Constructors emit a canonical ordering:
// residues for cyclic groups, lexicographic order over coordinate tuples for
// products (first factor most significant).

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace equideform {

inline constexpr std::size_t kDefaultMaxOrder = 64;

using Element = std::size_t;
using CayleyTable = std::vector<std::vector<Element>>;

class FiniteGroup {
public:
  /// Validates identity, closure, inverses and associativity. Throws
  /// InvalidTable or SizeCapExceeded.
  static FiniteGroup from_table(const CayleyTable &table,
                                std::size_t max_order = kDefaultMaxOrder);

  std::size_t order() const noexcept { return data_->order; }
  Element identity() const noexcept { return 0; }
  Element multiply(Element a, Element b) const noexcept {
    return data_->table[a * data_->order + b];
  }
  Element inverse(Element a) const noexcept { return data_->inverse[a]; }
  std::size_t element_order(Element a) const noexcept;
  bool is_abelian() const noexcept;
  CayleyTable table() const;

  friend bool operator==(const FiniteGroup &a, const FiniteGroup &b) noexcept {
    return a.data_ == b.data_ || a.data_->table == b.data_->table;
  }

private:
  struct Data {
    std::size_t order;
    std::vector<Element> table;
    std::vector<Element> inverse;
  };
  explicit FiniteGroup(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  std::shared_ptr<const Data> data_;
};

class Subgroup {
public:
  /// Checks that members form a subgroup of parent. Throws NotSubgroup or
  /// IndexOutOfRange.
  Subgroup(FiniteGroup parent, std::vector<Element> members);

  const FiniteGroup &parent() const noexcept { return parent_; }
  std::span<const Element> members() const noexcept { return members_; }
  std::size_t order() const noexcept { return members_.size(); }
  std::size_t index() const noexcept { return parent_.order() / order(); }
  bool contains(Element x) const noexcept;

  /// The subgroup as a group in its own right; member i becomes element i.
  FiniteGroup as_group() const;

  friend bool operator==(const Subgroup &a, const Subgroup &b) noexcept {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }

private:
  FiniteGroup parent_;
  std::vector<Element> members_;
};

/// Description of a group to construct.
struct GroupSpec {
  enum class Kind { Cyclic, ElementaryAbelian, Product, Table };

  Kind kind = Kind::Cyclic;
  std::size_t n = 1;        // cyclic order, or the prime of an elementary abelian group
  std::size_t rank = 0;     // elementary abelian rank
  std::vector<GroupSpec> factors;
  CayleyTable table;

  static GroupSpec cyclic(std::size_t n);
  static GroupSpec elementary_abelian(std::size_t p, std::size_t rank);
  static GroupSpec product(std::vector<GroupSpec> factors);
  static GroupSpec explicit_table(CayleyTable table);

  /// Order implied by the description, without building anything.
  std::uint64_t implied_order() const;
};

FiniteGroup build_group(const GroupSpec &spec,
                        std::size_t max_order = kDefaultMaxOrder);

Subgroup subgroup_generated(const FiniteGroup &g, std::span<const Element> gens);
Subgroup whole_group(const FiniteGroup &g);
Subgroup trivial_subgroup(const FiniteGroup &g);

Subgroup commutator_subgroup(const FiniteGroup &g);
bool is_normal(const Subgroup &h);

/// Every subgroup of g, ordered by (order, members).
std::vector<Subgroup> all_subgroups(const FiniteGroup &g);

/// dim over F_p of (G/[G,G]) tensor F_p, via the Smith normal form of a
/// relation matrix of the abelian quotient.
std::size_t abelianization_p_rank(const FiniteGroup &g, std::uint32_t p);

bool is_p_power(std::uint64_t n, std::uint64_t p) noexcept;
/// log_p(n) for an exact power of p; nullopt otherwise.
std::optional<std::size_t> log_p(std::uint64_t n, std::uint64_t p) noexcept;

/// Abelian with every non-identity element of order p.
bool is_elementary_abelian(const Subgroup &h, std::uint32_t p);

} // namespace equideform
