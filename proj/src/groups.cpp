#include "equideform/groups.hpp"

#include "equideform/error.hpp"
#include "equideform/fpalgebra.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace equideform {

namespace {

void check_cap(std::uint64_t order, std::size_t max_order) {
  if (order > max_order)
    throw Error(ErrorKind::SizeCapExceeded,
                "group order " + std::to_string(order) + " exceeds cap " +
                    std::to_string(max_order));
}

CayleyTable cyclic_table(std::size_t n) {
  CayleyTable t(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return t;
}

// Direct product with lexicographic element order, first factor most
// significant.
CayleyTable product_table(const std::vector<FiniteGroup> &factors) {
  std::size_t n = 1;
  for (const auto &f : factors) n *= f.order();
  CayleyTable t(n, std::vector<Element>(n));
  std::vector<Element> xa(factors.size()), xb(factors.size());
  auto decode = [&](Element e, std::vector<Element> &x) {
    for (std::size_t i = factors.size(); i-- > 0;) {
      x[i] = e % factors[i].order();
      e /= factors[i].order();
    }
  };
  for (Element a = 0; a < n; ++a) {
    decode(a, xa);
    for (Element b = 0; b < n; ++b) {
      decode(b, xb);
      Element c = 0;
      for (std::size_t i = 0; i < factors.size(); ++i)
        c = c * factors[i].order() + factors[i].multiply(xa[i], xb[i]);
      t[a][b] = c;
    }
  }
  return t;
}

} // namespace

// ---------------------------------------------------------------------------
// FiniteGroup

FiniteGroup FiniteGroup::from_table(const CayleyTable &table, std::size_t max_order) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorKind::InvalidTable, "empty table");
  check_cap(n, max_order);
  Data d{n, std::vector<Element>(n * n), std::vector<Element>(n, n)};
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n)
      throw Error(ErrorKind::InvalidTable, "row " + std::to_string(a) + " has wrong length");
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a][b] >= n)
        throw Error(ErrorKind::InvalidTable, "entry out of range at (" + std::to_string(a) +
                                                 "," + std::to_string(b) + ")");
      d.table[a * n + b] = table[a][b];
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    if (d.table[a] != a || d.table[a * n] != a)
      throw Error(ErrorKind::InvalidTable, "element 0 is not the identity");
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      if (d.table[a * n + b] == 0) {
        d.inverse[a] = b;
        break;
      }
    const Element b = d.inverse[a];
    if (b == n || d.table[b * n + a] != 0)
      throw Error(ErrorKind::InvalidTable, "element " + std::to_string(a) + " has no inverse");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Element ab = d.table[a * n + b];
      for (std::size_t c = 0; c < n; ++c)
        if (d.table[ab * n + c] != d.table[a * n + d.table[b * n + c]])
          throw Error(ErrorKind::InvalidTable,
                      "associativity fails at (" + std::to_string(a) + "," + std::to_string(b) +
                          "," + std::to_string(c) + ")");
    }
  return FiniteGroup(std::make_shared<const Data>(std::move(d)));
}

std::size_t FiniteGroup::element_order(Element a) const noexcept {
  std::size_t k = 1;
  for (Element x = a; x != 0; x = multiply(x, a)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const noexcept {
  for (Element a = 0; a < order(); ++a)
    for (Element b = a + 1; b < order(); ++b)
      if (multiply(a, b) != multiply(b, a)) return false;
  return true;
}

CayleyTable FiniteGroup::table() const {
  const std::size_t n = order();
  CayleyTable t(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = multiply(a, b);
  return t;
}

// ---------------------------------------------------------------------------
// Subgroup

Subgroup::Subgroup(FiniteGroup parent, std::vector<Element> members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (auto m : members_)
    if (m >= parent_.order())
      throw Error(ErrorKind::IndexOutOfRange, "element " + std::to_string(m) + " out of range");
  if (members_.empty() || members_.front() != 0)
    throw Error(ErrorKind::NotSubgroup, "subset does not contain the identity");
  for (auto a : members_) {
    if (!contains(parent_.inverse(a)))
      throw Error(ErrorKind::NotSubgroup, "subset not closed under inverses");
    for (auto b : members_)
      if (!contains(parent_.multiply(a, b)))
        throw Error(ErrorKind::NotSubgroup, "subset not closed under products");
  }
}

bool Subgroup::contains(Element x) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), x);
}

FiniteGroup Subgroup::as_group() const {
  const std::size_t n = members_.size();
  CayleyTable t(n, std::vector<Element>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Element prod = parent_.multiply(members_[i], members_[j]);
      t[i][j] = static_cast<Element>(
          std::lower_bound(members_.begin(), members_.end(), prod) - members_.begin());
    }
  return FiniteGroup::from_table(t, n);
}

// ---------------------------------------------------------------------------
// GroupSpec

GroupSpec GroupSpec::cyclic(std::size_t n) {
  GroupSpec s;
  s.kind = Kind::Cyclic;
  s.n = n;
  return s;
}

GroupSpec GroupSpec::elementary_abelian(std::size_t p, std::size_t rank) {
  GroupSpec s;
  s.kind = Kind::ElementaryAbelian;
  s.n = p;
  s.rank = rank;
  return s;
}

GroupSpec GroupSpec::product(std::vector<GroupSpec> factors) {
  GroupSpec s;
  s.kind = Kind::Product;
  s.factors = std::move(factors);
  return s;
}

GroupSpec GroupSpec::explicit_table(CayleyTable table) {
  GroupSpec s;
  s.kind = Kind::Table;
  s.table = std::move(table);
  return s;
}

std::uint64_t GroupSpec::implied_order() const {
  constexpr std::uint64_t kSaturated = std::uint64_t(1) << 62;
  auto mul = [](std::uint64_t a, std::uint64_t b) {
    return (a != 0 && b > kSaturated / a) ? kSaturated : a * b;
  };
  switch (kind) {
  case Kind::Cyclic:
    return n;
  case Kind::ElementaryAbelian: {
    std::uint64_t o = 1;
    for (std::size_t i = 0; i < rank; ++i) o = mul(o, n);
    return o;
  }
  case Kind::Product: {
    std::uint64_t o = 1;
    for (const auto &f : factors) o = mul(o, f.implied_order());
    return o;
  }
  case Kind::Table:
    return table.size();
  }
  return 0;
}

FiniteGroup build_group(const GroupSpec &spec, std::size_t max_order) {
  check_cap(spec.implied_order(), max_order);
  switch (spec.kind) {
  case GroupSpec::Kind::Cyclic:
    if (spec.n == 0) throw Error(ErrorKind::InvalidArgument, "cyclic group of order 0");
    return FiniteGroup::from_table(cyclic_table(spec.n), max_order);
  case GroupSpec::Kind::ElementaryAbelian: {
    require_prime(spec.n);
    std::vector<FiniteGroup> f(spec.rank, build_group(GroupSpec::cyclic(spec.n), max_order));
    if (f.empty()) return build_group(GroupSpec::cyclic(1), max_order);
    return FiniteGroup::from_table(product_table(f), max_order);
  }
  case GroupSpec::Kind::Product: {
    std::vector<FiniteGroup> f;
    for (const auto &s : spec.factors) f.push_back(build_group(s, max_order));
    if (f.empty()) return build_group(GroupSpec::cyclic(1), max_order);
    return FiniteGroup::from_table(product_table(f), max_order);
  }
  case GroupSpec::Kind::Table:
    return FiniteGroup::from_table(spec.table, max_order);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown group kind");
}

// ---------------------------------------------------------------------------
// Subgroup machinery

Subgroup subgroup_generated(const FiniteGroup &g, std::span<const Element> gens) {
  for (auto x : gens)
    if (x >= g.order())
      throw Error(ErrorKind::IndexOutOfRange,
                  "generator " + std::to_string(x) + " out of range for group of order " +
                      std::to_string(g.order()));
  std::vector<bool> in(g.order(), false);
  std::vector<Element> members{0};
  in[0] = true;
  // Closure under right multiplication by generators suffices in a finite group.
  for (std::size_t i = 0; i < members.size(); ++i)
    for (auto x : gens) {
      const Element y = g.multiply(members[i], x);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
      }
    }
  return Subgroup(g, std::move(members));
}

Subgroup whole_group(const FiniteGroup &g) {
  std::vector<Element> all(g.order());
  for (Element i = 0; i < g.order(); ++i) all[i] = i;
  return Subgroup(g, std::move(all));
}

Subgroup trivial_subgroup(const FiniteGroup &g) { return Subgroup(g, {0}); }

Subgroup commutator_subgroup(const FiniteGroup &g) {
  std::set<Element> commutators;
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b)
      commutators.insert(
          g.multiply(g.multiply(a, b), g.multiply(g.inverse(a), g.inverse(b))));
  const std::vector<Element> gens(commutators.begin(), commutators.end());
  return subgroup_generated(g, gens);
}

bool is_normal(const Subgroup &h) {
  const auto &g = h.parent();
  for (Element x = 0; x < g.order(); ++x)
    for (auto m : h.members())
      if (!h.contains(g.multiply(g.multiply(x, m), g.inverse(x)))) return false;
  return true;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup &g) {
  std::set<std::vector<Element>> seen;
  std::vector<std::vector<Element>> frontier{{0}};
  seen.insert({0});
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    for (Element x = 0; x < g.order(); ++x) {
      if (std::binary_search(frontier[i].begin(), frontier[i].end(), x)) continue;
      std::vector<Element> gens = frontier[i];
      gens.push_back(x);
      auto h = subgroup_generated(g, gens);
      std::vector<Element> m(h.members().begin(), h.members().end());
      if (seen.insert(m).second) frontier.push_back(std::move(m));
    }
  }
  std::vector<std::vector<Element>> sorted(seen.begin(), seen.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto &a, const auto &b) { return a.size() < b.size(); });
  std::vector<Subgroup> out;
  for (auto &m : sorted) out.emplace_back(g, std::move(m));
  return out;
}

std::size_t abelianization_p_rank(const FiniteGroup &g, std::uint32_t p) {
  require_prime(p);
  const auto comm = commutator_subgroup(g);
  // Cosets of the (normal) commutator subgroup, labelled by least element.
  std::vector<std::size_t> coset_of(g.order(), g.order());
  std::vector<Element> reps;
  for (Element x = 0; x < g.order(); ++x) {
    if (coset_of[x] != g.order()) continue;
    for (auto c : comm.members()) coset_of[g.multiply(x, c)] = reps.size();
    reps.push_back(x);
  }
  const std::size_t m = reps.size();
  if (m == 1) return 0;
  // Generators: the non-identity cosets. Relations: x_a + x_b - x_ab = 0,
  // with x_identity = 0. The presented group is the abelian quotient itself.
  std::vector<std::int64_t> rel;
  std::size_t rows = 0;
  for (std::size_t a = 1; a < m; ++a)
    for (std::size_t b = a; b < m; ++b) {
      std::vector<std::int64_t> row(m - 1, 0);
      row[a - 1] += 1;
      row[b - 1] += 1;
      const std::size_t ab = coset_of[g.multiply(reps[a], reps[b])];
      if (ab != 0) row[ab - 1] -= 1;
      rel.insert(rel.end(), row.begin(), row.end());
      ++rows;
    }
  const auto factors = smith_normal_form(IntegerMatrix(rows, m - 1, std::move(rel)));
  std::size_t count = 0;
  for (const auto &d : factors)
    if (d % p == 0) ++count;
  return count;
}

bool is_p_power(std::uint64_t n, std::uint64_t p) noexcept { return log_p(n, p).has_value(); }

std::optional<std::size_t> log_p(std::uint64_t n, std::uint64_t p) noexcept {
  if (n == 0 || p < 2) return std::nullopt;
  std::size_t k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  if (n != 1) return std::nullopt;
  return k;
}

bool is_elementary_abelian(const Subgroup &h, std::uint32_t p) {
  const auto &g = h.parent();
  for (auto a : h.members()) {
    if (a != 0 && g.element_order(a) != p) return false;
    for (auto b : h.members())
      if (g.multiply(a, b) != g.multiply(b, a)) return false;
  }
  return true;
}

} // namespace equideform
