#include "equideform/covers.hpp"

#include "equideform/error.hpp"
#include "equideform/fpalgebra.hpp"

#include <optional>

namespace equideform {

namespace {

std::string at_point(std::size_t k) { return "branch point " + std::to_string(k + 1); }

// Invariants of the individual branch points, without the genus condition.
std::vector<Violation> structural_violations(const RamifiedCover &c) {
  std::vector<Violation> out;
  auto add = [&](std::string code, std::string message) {
    out.push_back({std::move(code), std::move(message)});
  };
  const bool prime_ok = is_prime(c.p) && c.p <= kMaxPrime;
  if (!prime_ok) add("characteristic-not-prime", "characteristic " + std::to_string(c.p) + " is not prime");

  for (std::size_t k = 0; k < c.branch_points.size(); ++k) {
    const auto &b = c.branch_points[k];
    const auto &f = b.filtration;
    if (f.empty()) {
      add("empty-filtration", at_point(k) + ": filtration is empty");
      continue;
    }
    for (auto e : f)
      if (e < 2) {
        add("filtration-entry-below-2", at_point(k) + ": filtration entries must be >= 2");
        break;
      }
    for (std::size_t i = 1; i < f.size(); ++i)
      if (f[i] > f[i - 1]) {
        add("filtration-not-non-increasing", at_point(k) + ": filtration not non-increasing");
        break;
      }
    if (!(b.decomposition.parent() == c.group)) {
      add("decomposition-foreign-group", at_point(k) + ": decomposition group is not a subgroup of G");
      continue;
    }
    if (f[0] != b.decomposition.order())
      add("e0-mismatch", at_point(k) + ": e0 = " + std::to_string(f[0]) + " != |G(b)| = " +
                             std::to_string(b.decomposition.order()));
    if (!prime_ok) continue;
    for (std::size_t i = 1; i < f.size(); ++i) {
      if (!is_p_power(f[i], c.p)) {
        add("wild-order-not-p-power", at_point(k) + ": e" + std::to_string(i) + " = " +
                                          std::to_string(f[i]) + " is not a power of p");
        break;
      }
      if (f[0] % f[i] != 0) {
        add("wild-order-not-dividing-e0", at_point(k) + ": e" + std::to_string(i) + " does not divide e0");
        break;
      }
    }
    // G_0 / G_1 is cyclic of order prime to p.
    const std::uint64_t tame_part = f.size() >= 2 && f[1] != 0 && f[0] % f[1] == 0 ? f[0] / f[1] : f[0];
    if (tame_part % c.p == 0)
      add("tame-part-divisible-by-p",
          at_point(k) + (f.size() == 1 ? ": tame ramification of order divisible by p"
                                       : ": e0 / e1 is divisible by p"));
  }
  return out;
}

void require_structurally_valid(const RamifiedCover &c) {
  const auto v = structural_violations(c);
  if (!v.empty()) throw Error(ErrorKind::InvalidCover, v.front().code + ": " + v.front().message);
}

struct GenusResult {
  std::int64_t twice_minus_two; // 2 g_X - 2
  std::optional<Violation> violation;
};

GenusResult riemann_hurwitz(const RamifiedCover &c) {
  const auto n = static_cast<std::int64_t>(c.group.order());
  const auto gy = static_cast<std::int64_t>(c.quotient_genus);
  const auto deg_r = static_cast<std::int64_t>(ramification_divisor_degree(c, IndexStart::FromE0));
  const std::int64_t value = n * (2 * gy - 2) + deg_r;
  GenusResult r{value, std::nullopt};
  if (value % 2 != 0)
    r.violation = Violation{"genus-non-integral", "2 g_X - 2 = " + std::to_string(value) + " is odd"};
  else if (value / 2 + 1 < 2)
    r.violation = Violation{"genus-too-small", "g_X = " + std::to_string(value / 2 + 1) + " < 2"};
  return r;
}

} // namespace

const char *index_start_name(IndexStart s) noexcept {
  return s == IndexStart::FromE0 ? "from_e0" : "from_e1";
}

std::vector<Violation> validate_cover(const RamifiedCover &c) {
  auto out = structural_violations(c);
  if (out.empty())
    if (auto g = riemann_hurwitz(c); g.violation) out.push_back(*g.violation);
  return out;
}

void require_valid(const RamifiedCover &c) {
  const auto v = validate_cover(c);
  if (!v.empty()) throw Error(ErrorKind::InvalidCover, v.front().code + ": " + v.front().message);
}

std::uint64_t ramification_divisor_degree(const RamifiedCover &c, IndexStart start) {
  require_structurally_valid(c);
  std::uint64_t deg = 0;
  for (const auto &b : c.branch_points) {
    std::uint64_t local = 0;
    for (std::size_t i = start == IndexStart::FromE0 ? 0 : 1; i < b.filtration.size(); ++i)
      local += b.filtration[i] - 1;
    deg += c.group.order() / b.filtration[0] * local;
  }
  return deg;
}

std::uint64_t genus_via_riemann_hurwitz(const RamifiedCover &c) {
  require_structurally_valid(c);
  const auto g = riemann_hurwitz(c);
  if (g.violation)
    throw Error(ErrorKind::InvalidCover, g.violation->code + ": " + g.violation->message);
  return static_cast<std::uint64_t>(g.twice_minus_two / 2 + 1);
}

OrdinarityDiagnosis ordinarity_check(const RamifiedCover &c) {
  require_valid(c);
  OrdinarityDiagnosis d;
  auto fail = [&](std::string why) {
    d.compatible = false;
    d.reasons.push_back(std::move(why));
  };
  if (!is_p_power(c.group.order(), c.p))
    fail("|G| = " + std::to_string(c.group.order()) + " is not a power of p = " + std::to_string(c.p));
  for (std::size_t k = 0; k < c.branch_points.size(); ++k) {
    const auto &b = c.branch_points[k];
    if (b.filtration.size() > 2) fail(at_point(k) + ": e2 != 0 (filtration longer than two terms)");
    if (!is_elementary_abelian(b.decomposition, c.p))
      fail(at_point(k) + ": decomposition group is not elementary abelian of exponent p");
  }
  return d;
}

CanonicalPlusA ell_K_plus_A(const RamifiedCover &c) {
  if (c.branch_points.empty())
    throw Error(ErrorKind::NoBranchPoints, "l(K + A) needs at least one branch point");
  require_valid(c);
  CanonicalPlusA out{0, {}, 0};
  for (const auto &b : c.branch_points) {
    out.coefficients.push_back(b.is_wild() ? 2 : 1);
    if (b.is_wild()) ++out.wild_points;
  }
  const auto r = static_cast<std::int64_t>(c.branch_points.size());
  out.dimension = static_cast<std::int64_t>(c.quotient_genus) - 1 + r +
                  static_cast<std::int64_t>(out.wild_points);
  return out;
}

} // namespace equideform
