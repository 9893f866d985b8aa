#include "triq/omega.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace triq {
namespace {

struct SignedPerm {
  std::array<int, 3> idx;  // copy j differentiates index idx[j-1]
  int sign;
};

constexpr std::array<SignedPerm, 6> kPerms = {{
    {{1, 2, 3}, +1},
    {{2, 3, 1}, +1},
    {{3, 1, 2}, +1},
    {{1, 3, 2}, -1},
    {{2, 1, 3}, -1},
    {{3, 2, 1}, -1},
}};

// Per-copy memoised derivative chains keyed by the multi-index (a Monomial
// over that copy's variables).  Derivatives commute, so peeling the highest
// variable first shares prefixes across the multi-index lattice.
class DerivTable {
 public:
  explicit DerivTable(const SparsePoly& factor) {
    memo_.emplace(Monomial{}, factor);
  }

  const SparsePoly& get(const Monomial& midx) {
    auto it = memo_.find(midx);
    if (it != memo_.end()) return it->second;
    VarId last(Group::X, 1, 1);
    midx.for_each([&](VarId v, int) { last = v; });
    const SparsePoly& parent = get(midx.minus_one(last));
    return memo_.emplace(midx, poly_diff(parent, last)).first->second;
  }

 private:
  std::unordered_map<Monomial, SparsePoly, MonomialHash> memo_;
};

void check_factor_copies(std::span<const SparsePoly> factors) {
  for (std::size_t c = 0; c < factors.size(); ++c)
    for (const auto& [m, coef] : factors[c].terms())
      m.for_each([&](VarId v, int) {
        if (v.copy != c + 1)
          throw std::invalid_argument("factor " + std::to_string(c + 1) +
                                      " involves copy " + std::to_string(v.copy));
      });
}

}  // namespace

SparsePoly omega_apply(const SparsePoly& p, Group g, int power) {
  if (power < 1) throw std::invalid_argument("omega_apply power must be >= 1");
  SparsePoly cur = p;
  for (int k = 0; k < power; ++k) {
    SparsePoly next;
    for (const auto& perm : kPerms) {
      SparsePoly q = cur;
      for (int copy = 1; copy <= kCopyCount && !q.is_zero(); ++copy)
        q = poly_diff(q, VarId(g, copy, perm.idx[copy - 1]));
      if (perm.sign > 0)
        next += q;
      else
        next -= q;
    }
    cur = std::move(next);
  }
  return cur;
}

SparsePoly omega_trace_product(std::span<const SparsePoly> factors,
                               std::span<const OmegaOp> ops) {
  check_factor_copies(factors);

  std::vector<Group> slots;
  for (const auto& op : ops) {
    if (op.power < 1) throw std::invalid_argument("Omega power must be >= 1");
    slots.insert(slots.end(), static_cast<std::size_t>(op.power), op.group);
  }

  if (slots.empty()) {
    SparsePoly prod = SparsePoly::constant(1.0);
    for (const auto& f : factors) prod = poly_mul(prod, f.traced());
    return prod;
  }
  if (factors.size() != kCopyCount)
    throw std::invalid_argument("Omega operators need exactly 3 per-copy factors");

  std::vector<DerivTable> tables;
  tables.reserve(factors.size());
  for (const auto& f : factors) tables.emplace_back(f);

  SparsePoly total;
  Complex scalar_total = 0.0;
  std::vector<int> choice(slots.size(), 0);
  for (;;) {
    int sign = 1;
    std::array<Monomial, kCopyCount> midx{};
    for (std::size_t s = 0; s < slots.size(); ++s) {
      const SignedPerm& perm = kPerms[static_cast<std::size_t>(choice[s])];
      sign *= perm.sign;
      for (int copy = 1; copy <= kCopyCount; ++copy) {
        const VarId v(slots[s], copy, perm.idx[copy - 1]);
        midx[copy - 1].set_exponent(v, midx[copy - 1].exponent(v) + 1);
      }
    }

    std::array<const SparsePoly*, kCopyCount> residues{};
    bool dead = false;
    bool all_const = true;
    for (int c = 0; c < kCopyCount && !dead; ++c) {
      residues[c] = &tables[static_cast<std::size_t>(c)].get(midx[c]);
      dead = residues[c]->is_zero();
      all_const = all_const && residues[c]->is_constant();
    }
    if (!dead) {
      if (all_const) {
        Complex prod = residues[0]->constant_value() *
                       residues[1]->constant_value() *
                       residues[2]->constant_value();
        scalar_total += (sign > 0) ? prod : -prod;
      } else {
        SparsePoly prod = residues[0]->traced();
        prod = poly_mul(prod, residues[1]->traced());
        prod = poly_mul(prod, residues[2]->traced());
        if (sign > 0)
          total += prod;
        else
          total -= prod;
      }
    }

    std::size_t s = 0;
    while (s < slots.size() && ++choice[s] == 6) choice[s++] = 0;
    if (s == slots.size()) break;
  }

  if (scalar_total != Complex{}) total += SparsePoly::constant(scalar_total);
  return total;
}

Complex factorized_omega_trace(std::span<const SparsePoly> factors,
                               std::span<const OmegaOp> ops) {
  // Each Omega_g^p differentiates every copy p times in group g, so a scalar
  // result needs deg_g(factor_c) <= total power in g for every factor; any
  // surplus derivative order annihilates termwise.
  std::array<int, kGroupCount> power{};
  for (const auto& op : ops) power[static_cast<std::size_t>(op.group)] += op.power;
  for (int g = 0; g < kGroupCount; ++g)
    for (const auto& f : factors)
      if (f.max_degree_in(static_cast<Group>(g)) > power[static_cast<std::size_t>(g)])
        throw std::invalid_argument(
            std::string("non-scalar residue: leftover degree in group ") +
            group_name(static_cast<Group>(g)));

  return omega_trace_product(factors, ops).constant_value();
}

}  // namespace triq
