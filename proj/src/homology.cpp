#include "equideform/homology.hpp"

#include "equideform/error.hpp"

#include <algorithm>
#include <string>

namespace equideform {

namespace {

void require_same_group(const FiniteGroup &a, const FiniteGroup &b, const char *what) {
  if (!(a == b)) throw Error(ErrorKind::InvalidArgument, std::string(what) + " over different groups");
}

void check_cells(std::size_t cells, const HomologyLimits &limits, const char *what) {
  if (cells > limits.max_cells)
    throw Error(ErrorKind::SizeCapExceeded,
                std::string(what) + " needs " + std::to_string(cells) +
                    " chain cells, cap is " + std::to_string(limits.max_cells));
}

// Rank of the degree-n boundary, stopping once `bound` is reached. The
// columns land in `basis` when one is supplied.
std::size_t boundary_rank(const BarComplex &bc, std::size_t n, std::size_t bound,
                          EchelonBasis &basis) {
  std::vector<std::uint32_t> column(bc.chain_dim(n - 1));
  const std::size_t cols = bc.chain_dim(n);
  for (std::size_t c = 0; c < cols && basis.rank() < bound; ++c) {
    bc.boundary_column(n, c, column);
    basis.insert(column);
  }
  return basis.rank();
}

std::size_t boundary_rank(const BarComplex &bc, std::size_t n, std::size_t bound) {
  EchelonBasis basis(bc.chain_dim(n - 1), bc.module().prime());
  return boundary_rank(bc, n, bound, basis);
}

std::vector<std::uint32_t> apply_chain_map(const ModuleMorphism &f,
                                           std::span<const std::uint32_t> chain) {
  const std::size_t ds = f.source().dim(), dt = f.target().dim();
  const std::uint32_t p = f.source().prime();
  const std::size_t blocks = ds == 0 ? 0 : chain.size() / ds;
  std::vector<std::uint32_t> out(blocks * dt, 0);
  const auto &m = f.matrix();
  for (std::size_t t = 0; t < blocks; ++t)
    for (std::size_t j = 0; j < dt; ++j) {
      std::uint64_t s = 0;
      for (std::size_t i = 0; i < ds; ++i) s += std::uint64_t(m(j, i)) * chain[t * ds + i] % p;
      out[t * dt + j] = static_cast<std::uint32_t>(s % p);
    }
  return out;
}

} // namespace

// ---------------------------------------------------------------------------
// Modules

GModule::GModule(FiniteGroup group, std::uint32_t p, std::vector<PrimeFieldMatrix> action)
    : group_(std::move(group)), p_(p), dim_(0), action_(std::move(action)) {
  require_prime(p);
  const std::size_t n = group_.order();
  if (action_.size() != n)
    throw Error(ErrorKind::InvalidArgument, "need one action matrix per group element");
  dim_ = action_[0].rows();
  for (const auto &a : action_)
    if (a.rows() != dim_ || a.cols() != dim_ || a.prime() != p)
      throw Error(ErrorKind::InvalidArgument, "action matrices must be square of equal size over F_p");
  if (!(action_[0] == PrimeFieldMatrix::identity(dim_, p)))
    throw Error(ErrorKind::InvalidArgument, "identity does not act as the identity matrix");
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (!(action_[group_.multiply(a, b)] == action_[a] * action_[b]))
        throw Error(ErrorKind::InvalidArgument,
                    "action is not a homomorphism at (" + std::to_string(a) + "," +
                        std::to_string(b) + ")");
}

GModule::GModule(Trusted, FiniteGroup group, std::uint32_t p, std::size_t dim,
                 std::vector<PrimeFieldMatrix> action)
    : group_(std::move(group)), p_(p), dim_(dim), action_(std::move(action)) {}

ModuleMorphism::ModuleMorphism(GModule source, GModule target, PrimeFieldMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  require_same_group(source_.group(), target_.group(), "morphism between modules");
  if (source_.prime() != target_.prime() || matrix_.prime() != source_.prime())
    throw Error(ErrorKind::InvalidArgument, "morphism mixes characteristics");
  if (matrix_.rows() != target_.dim() || matrix_.cols() != source_.dim())
    throw Error(ErrorKind::InvalidArgument, "morphism matrix has the wrong shape");
  for (Element g = 0; g < source_.group().order(); ++g)
    if (!(matrix_ * source_.action(g) == target_.action(g) * matrix_))
      throw Error(ErrorKind::NotEquivariant,
                  "morphism does not commute with element " + std::to_string(g));
}

GModule trivial_module(const FiniteGroup &g, std::uint32_t p) {
  require_prime(p);
  return GModule(GModule::Trusted{}, g, p, 1,
                 std::vector<PrimeFieldMatrix>(g.order(), PrimeFieldMatrix::identity(1, p)));
}

GModule permutation_module(const Subgroup &h, std::uint32_t p) {
  require_prime(p);
  const auto &g = h.parent();
  const std::size_t n = g.order();
  std::vector<std::size_t> coset(n, n);
  std::vector<Element> reps;
  for (Element x = 0; x < n; ++x) {
    if (coset[x] != n) continue;
    for (auto m : h.members()) coset[g.multiply(x, m)] = reps.size();
    reps.push_back(x);
  }
  const std::size_t dim = reps.size();
  std::vector<PrimeFieldMatrix> action;
  action.reserve(n);
  for (Element a = 0; a < n; ++a) {
    std::vector<std::uint32_t> e(dim * dim, 0);
    for (std::size_t j = 0; j < dim; ++j) e[coset[g.multiply(a, reps[j])] * dim + j] = 1;
    action.emplace_back(dim, dim, p, std::move(e));
  }
  return GModule(GModule::Trusted{}, g, p, dim, std::move(action));
}

GModule regular_module(const FiniteGroup &g, std::uint32_t p) {
  return permutation_module(trivial_subgroup(g), p);
}

GModule direct_sum(std::span<const GModule> parts) {
  if (parts.empty()) throw Error(ErrorKind::InvalidArgument, "direct sum of no modules");
  const auto &g = parts.front().group();
  const std::uint32_t p = parts.front().prime();
  std::size_t dim = 0;
  for (const auto &m : parts) {
    require_same_group(g, m.group(), "direct sum");
    if (m.prime() != p) throw Error(ErrorKind::InvalidArgument, "direct sum mixes characteristics");
    dim += m.dim();
  }
  std::vector<PrimeFieldMatrix> action;
  for (Element a = 0; a < g.order(); ++a) {
    std::vector<std::uint32_t> e(dim * dim, 0);
    std::size_t offset = 0;
    for (const auto &m : parts) {
      const auto &blk = m.action(a);
      for (std::size_t r = 0; r < m.dim(); ++r)
        for (std::size_t c = 0; c < m.dim(); ++c) e[(offset + r) * dim + offset + c] = blk(r, c);
      offset += m.dim();
    }
    action.emplace_back(dim, dim, p, std::move(e));
  }
  return GModule(GModule::Trusted{}, g, p, dim, std::move(action));
}

GModule kernel_module(const ModuleMorphism &f) {
  const auto &src = f.source();
  const auto ns = nullspace_mod_p(f.matrix());
  const std::size_t k = ns.basis.size();
  std::vector<PrimeFieldMatrix> action;
  for (Element a = 0; a < src.group().order(); ++a) {
    std::vector<std::uint32_t> e(k * k, 0);
    for (std::size_t j = 0; j < k; ++j) {
      const auto w = src.action(a).apply(ns.basis[j]);
      for (std::size_t i = 0; i < k; ++i) e[i * k + j] = w[ns.free_columns[i]];
    }
    action.emplace_back(k, k, src.prime(), std::move(e));
  }
  return GModule(GModule::Trusted{}, src.group(), src.prime(), k, std::move(action));
}

ModuleMorphism identity_morphism(const GModule &m) {
  return ModuleMorphism(m, m, PrimeFieldMatrix::identity(m.dim(), m.prime()));
}

ModuleMorphism zero_morphism(const GModule &source, const GModule &target) {
  return ModuleMorphism(source, target,
                        PrimeFieldMatrix::zero(target.dim(), source.dim(), source.prime()));
}

ModuleMorphism build_phi_morphism(const FiniteGroup &g, std::uint32_t p,
                                  std::span<const Subgroup> subgroups) {
  if (subgroups.empty())
    throw Error(ErrorKind::EmptySubgroupList, "the summation map needs at least one subgroup");
  std::vector<GModule> parts;
  for (const auto &h : subgroups) {
    if (!(h.parent() == g)) throw Error(ErrorKind::NotSubgroup, "subgroup of a different group");
    parts.push_back(permutation_module(h, p));
  }
  auto source = direct_sum(parts);
  const std::size_t dim = source.dim();
  return ModuleMorphism(std::move(source), trivial_module(g, p),
                        PrimeFieldMatrix(1, dim, p, std::vector<std::uint32_t>(dim, 1)));
}

ModuleSpec ModuleSpec::trivial() { return {}; }

ModuleSpec ModuleSpec::permutation(Subgroup h) {
  ModuleSpec s;
  s.kind = Kind::Permutation;
  s.subgroup = std::move(h);
  return s;
}

ModuleSpec ModuleSpec::sum(std::vector<ModuleSpec> parts) {
  ModuleSpec s;
  s.kind = Kind::DirectSum;
  s.parts = std::move(parts);
  return s;
}

ModuleSpec ModuleSpec::kernel(ModuleMorphism f) {
  ModuleSpec s;
  s.kind = Kind::Kernel;
  s.morphism = std::move(f);
  return s;
}

GModule build_module(const FiniteGroup &g, std::uint32_t p, const ModuleSpec &spec) {
  switch (spec.kind) {
  case ModuleSpec::Kind::Trivial:
    return trivial_module(g, p);
  case ModuleSpec::Kind::Permutation:
    if (!spec.subgroup || !(spec.subgroup->parent() == g))
      throw Error(ErrorKind::NotSubgroup, "permutation module needs a subgroup of the group");
    return permutation_module(*spec.subgroup, p);
  case ModuleSpec::Kind::DirectSum: {
    std::vector<GModule> parts;
    for (const auto &s : spec.parts) parts.push_back(build_module(g, p, s));
    return direct_sum(parts);
  }
  case ModuleSpec::Kind::Kernel:
    if (!spec.morphism) throw Error(ErrorKind::InvalidArgument, "kernel module needs a morphism");
    require_same_group(g, spec.morphism->source().group(), "kernel module");
    if (spec.morphism->source().prime() != p)
      throw Error(ErrorKind::InvalidArgument, "kernel morphism has a different characteristic");
    return kernel_module(*spec.morphism);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown module kind");
}

// ---------------------------------------------------------------------------
// Bar complex

BarComplex::BarComplex(const GModule &m, BarNormalization kind)
    : module_(m), kind_(kind) {
  const auto &g = m.group();
  letters_ = kind == BarNormalization::Normalized ? g.order() - 1 : g.order();
  first_letter_ = kind == BarNormalization::Normalized ? 1 : 0;
  right_action_.reserve(g.order());
  for (Element a = 0; a < g.order(); ++a) right_action_.push_back(m.action(g.inverse(a)));
}

std::size_t BarComplex::chain_dim(std::size_t n) const noexcept {
  std::size_t d = module_.dim();
  for (std::size_t i = 0; i < n; ++i) d *= letters_;
  return d;
}

void BarComplex::boundary_column(std::size_t n, std::size_t col,
                                 std::span<std::uint32_t> out) const {
  const std::size_t dim = module_.dim();
  const std::uint32_t p = module_.prime();
  const auto &g = module_.group();
  std::fill(out.begin(), out.end(), 0);

  std::size_t t = col / dim;
  const std::size_t i = col % dim;
  std::vector<Element> tuple(n);
  for (std::size_t k = n; k-- > 0;) {
    tuple[k] = t % letters_ + first_letter_;
    t /= letters_;
  }
  auto encode = [&](auto begin, auto end) {
    std::size_t idx = 0;
    for (auto it = begin; it != end; ++it) idx = idx * letters_ + (*it - first_letter_);
    return idx;
  };
  auto add = [&](std::size_t pos, std::uint32_t v) { out[pos] = (out[pos] + v) % p; };
  auto add_signed = [&](std::size_t pos, bool negative) { add(pos, negative ? p - 1 : 1); };

  // m.g_1 [g_2|...|g_n]
  {
    const std::size_t idx = encode(tuple.begin() + 1, tuple.end());
    const auto &a = right_action_[tuple[0]];
    for (std::size_t j = 0; j < dim; ++j)
      if (const auto v = a(j, i)) add(idx * dim + j, v);
  }
  // (-1)^k m [...|g_k g_{k+1}|...]
  std::vector<Element> face(n - 1);
  for (std::size_t k = 1; k < n; ++k) {
    const Element prod = g.multiply(tuple[k - 1], tuple[k]);
    if (kind_ == BarNormalization::Normalized && prod == 0) continue;
    std::copy(tuple.begin(), tuple.begin() + (k - 1), face.begin());
    face[k - 1] = prod;
    std::copy(tuple.begin() + (k + 1), tuple.end(), face.begin() + k);
    add_signed(encode(face.begin(), face.end()) * dim + i, k % 2 == 1);
  }
  // (-1)^n m [g_1|...|g_{n-1}]
  add_signed(encode(tuple.begin(), tuple.end() - 1) * dim + i, n % 2 == 1);
}

PrimeFieldMatrix BarComplex::boundary(std::size_t n) const {
  const std::size_t rows = chain_dim(n - 1), cols = chain_dim(n);
  std::vector<std::uint32_t> e(rows * cols, 0), column(rows);
  for (std::size_t c = 0; c < cols; ++c) {
    boundary_column(n, c, column);
    for (std::size_t r = 0; r < rows; ++r) e[r * cols + c] = column[r];
  }
  return {rows, cols, module_.prime(), std::move(e)};
}

PrimeFieldMatrix bar_boundary(const GModule &m, std::size_t n, const HomologyLimits &limits,
                              BarNormalization kind) {
  if (n < 1 || n > 3) throw Error(ErrorKind::InvalidArgument, "boundary degree must be 1..3");
  BarComplex bc(m, kind);
  check_cells(bc.chain_dim(n), limits, "boundary");
  return bc.boundary(n);
}

std::size_t homology_dim(const GModule &m, std::size_t n, const HomologyLimits &limits,
                         BarNormalization kind) {
  if (n > 2) throw Error(ErrorKind::InvalidArgument, "homology degree must be 0..2");
  BarComplex bc(m, kind);
  check_cells(bc.chain_dim(n + 1), limits, "homology");
  const std::size_t incoming = n == 0 ? 0 : boundary_rank(bc, n, bc.chain_dim(n - 1));
  const std::size_t cycles = bc.chain_dim(n) - incoming;
  // Boundaries lie inside the cycles, so reaching `cycles` ends the scan.
  return cycles - boundary_rank(bc, n + 1, cycles);
}

std::size_t coinvariants_dim(const GModule &m) {
  EchelonBasis span(m.dim(), m.prime());
  std::vector<std::uint32_t> v(m.dim());
  for (Element g = 1; g < m.group().order() && span.rank() < m.dim(); ++g) {
    const auto &a = m.action(g);
    for (std::size_t c = 0; c < m.dim(); ++c) {
      for (std::size_t r = 0; r < m.dim(); ++r)
        v[r] = (a(r, c) + (r == c ? m.prime() - 1 : 0)) % m.prime();
      span.insert(v);
    }
  }
  return m.dim() - span.rank();
}

InducedMapRank induced_homology_map_rank(const ModuleMorphism &f, std::size_t n,
                                         const HomologyLimits &limits) {
  return induced_homology_map_rank(std::span<const ModuleMorphism>(&f, 1), n, limits);
}

InducedMapRank induced_homology_map_rank(std::span<const ModuleMorphism> components,
                                         std::size_t n, const HomologyLimits &limits) {
  if (n > 2) throw Error(ErrorKind::InvalidArgument, "homology degree must be 0..2");
  if (components.empty()) throw Error(ErrorKind::InvalidArgument, "no morphism components");
  const GModule &target = components.front().target();
  for (const auto &f : components) {
    require_same_group(target.group(), f.target().group(), "induced map");
    if (f.target().dim() != target.dim() || !(f.target().action(0) == target.action(0)))
      throw Error(ErrorKind::InvalidArgument, "components must share a target module");
  }

  BarComplex tb(target);
  check_cells(tb.chain_dim(n + 1), limits, "induced map");
  const std::size_t target_cycles =
      tb.chain_dim(n) - (n == 0 ? 0 : boundary_rank(tb, n, tb.chain_dim(n - 1)));
  EchelonBasis target_span(tb.chain_dim(n), target.prime());
  boundary_rank(tb, n + 1, target_cycles, target_span);

  InducedMapRank result;
  result.target_dim = target_cycles - target_span.rank();
  for (const auto &f : components) {
    BarComplex sb(f.source());
    check_cells(sb.chain_dim(n + 1), limits, "induced map");
    std::vector<std::vector<std::uint32_t>> cycles;
    if (n == 0) {
      for (std::size_t i = 0; i < sb.chain_dim(0); ++i) {
        std::vector<std::uint32_t> e(sb.chain_dim(0), 0);
        e[i] = 1;
        cycles.push_back(std::move(e));
      }
    } else {
      cycles = nullspace_mod_p(sb.boundary(n)).basis;
    }
    EchelonBasis source_span(sb.chain_dim(n), f.source().prime());
    boundary_rank(sb, n + 1, cycles.size(), source_span);
    for (const auto &z : cycles) {
      if (source_span.rank() == source_span.dimension()) break;
      if (!source_span.insert(z)) continue;
      ++result.source_dim;
      if (target_span.insert(apply_chain_map(f, z))) ++result.rank;
    }
  }
  return result;
}

std::size_t integral_h2_p_rank(const FiniteGroup &g, std::uint32_t p,
                               const HomologyLimits &limits) {
  require_prime(p);
  const std::size_t letters = g.order() - 1;
  const std::size_t rows = letters * letters, cols = rows * letters;
  if (rows == 0) return 0;
  if (rows * cols > limits.max_integral_entries)
    throw Error(ErrorKind::SizeCapExceeded,
                "integral boundary of size " + std::to_string(rows) + "x" + std::to_string(cols) +
                    " exceeds cap " + std::to_string(limits.max_integral_entries));
  // Normalized degree-3 boundary with trivial integer coefficients.
  std::vector<std::int64_t> e(rows * cols, 0);
  auto pair_index = [&](Element a, Element b) { return (a - 1) * letters + (b - 1); };
  for (Element a = 1; a <= letters; ++a)
    for (Element b = 1; b <= letters; ++b)
      for (Element c = 1; c <= letters; ++c) {
        const std::size_t col = ((a - 1) * letters + (b - 1)) * letters + (c - 1);
        e[pair_index(b, c) * cols + col] += 1;
        if (const Element ab = g.multiply(a, b); ab != 0) e[pair_index(ab, c) * cols + col] -= 1;
        if (const Element bc = g.multiply(b, c); bc != 0) e[pair_index(a, bc) * cols + col] += 1;
        e[pair_index(a, b) * cols + col] -= 1;
      }
  const auto factors = smith_normal_form(IntegerMatrix(rows, cols, std::move(e)));
  std::size_t count = 0;
  for (const auto &d : factors)
    if (!d.is_zero() && d % p == 0) ++count;
  return count;
}

} // namespace equideform
