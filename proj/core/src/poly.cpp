#include "triq/poly.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace triq {

const char* group_name(Group g) {
  switch (g) {
    case Group::X: return "x";
    case Group::Y: return "y";
    case Group::Z: return "z";
    case Group::Xi: return "xi";
    case Group::Eta: return "eta";
    case Group::Zeta: return "zeta";
  }
  return "?";
}

VarId::VarId(Group g, int copy_, int index_)
    : group(g), copy(static_cast<std::uint8_t>(copy_)),
      index(static_cast<std::uint8_t>(index_)) {
  if (copy_ < 1 || copy_ > kCopyCount)
    throw std::invalid_argument("VarId copy out of range: " + std::to_string(copy_));
  if (index_ < 1 || index_ > kIndexCount)
    throw std::invalid_argument("VarId index out of range: " + std::to_string(index_));
}

VarId VarId::from_code(int code) {
  return VarId(static_cast<Group>(code / 9), (code % 9) / 3 + 1, code % 3 + 1);
}

std::string VarId::name() const {
  std::string s = group_name(group);
  s += std::to_string(int(index));
  s += "^(";
  s += std::to_string(int(copy));
  s += ")";
  return s;
}

void Monomial::set_exponent(VarId v, int e) {
  if (e < 0 || e > 15) throw std::overflow_error("Monomial exponent out of 0..15");
  const int c = v.code();
  const int shift = (c & 15) * 4;
  words_[c >> 4] = (words_[c >> 4] & ~(0xFULL << shift)) |
                   (static_cast<std::uint64_t>(e) << shift);
}

Monomial Monomial::plus(const Monomial& o) const {
  constexpr std::uint64_t kHigh = 0x8888888888888888ULL;
  Monomial r;
  for (int w = 0; w < 4; ++w) {
    if (((words_[w] | o.words_[w]) & kHigh) != 0) {
      // slow path: an exponent >= 8 is present somewhere; add nibble-wise
      for (int nib = 0; nib < 16; ++nib) {
        const int a = static_cast<int>((words_[w] >> (nib * 4)) & 0xF);
        const int b = static_cast<int>((o.words_[w] >> (nib * 4)) & 0xF);
        if (a + b > 15)
          throw std::overflow_error("Monomial exponent overflow in product");
        r.words_[w] |= static_cast<std::uint64_t>(a + b) << (nib * 4);
      }
    } else {
      r.words_[w] = words_[w] + o.words_[w];
    }
  }
  return r;
}

Monomial Monomial::minus_one(VarId v) const {
  const int c = v.code();
  const int shift = (c & 15) * 4;
  if (((words_[c >> 4] >> shift) & 0xFULL) == 0)
    throw std::logic_error("Monomial::minus_one on zero exponent");
  Monomial r = *this;
  r.words_[c >> 4] -= (1ULL << shift);
  return r;
}

int Monomial::total_degree() const {
  int d = 0;
  for (std::uint64_t w : words_)
    while (w) {
      d += static_cast<int>(w & 0xF);
      w >>= 4;
    }
  return d;
}

int Monomial::degree_in(Group g, int copy) const {
  int d = 0;
  for (int i = 1; i <= kIndexCount; ++i) d += exponent(VarId(g, copy, i));
  return d;
}

int Monomial::degree_in(Group g) const {
  int d = 0;
  for (int c = 1; c <= kCopyCount; ++c) d += degree_in(g, c);
  return d;
}

bool Monomial::is_unit() const {
  return words_[0] == 0 && words_[1] == 0 && words_[2] == 0 && words_[3] == 0;
}

std::string Monomial::str() const {
  std::string s;
  for (int code = 0; code < kVarCount; ++code) {
    const VarId v = VarId::from_code(code);
    const int e = exponent(v);
    if (!e) continue;
    if (!s.empty()) s += ' ';
    s += v.name();
    if (e > 1) {
      s += '^';
      s += std::to_string(e);
    }
  }
  return s;
}

SparsePoly SparsePoly::constant(Complex c) {
  SparsePoly p;
  p.add_term(Monomial{}, c);
  return p;
}

SparsePoly SparsePoly::variable(VarId v) {
  Monomial m;
  m.set_exponent(v, 1);
  SparsePoly p;
  p.add_term(m, Complex(1.0));
  return p;
}

void SparsePoly::add_term(const Monomial& m, Complex c) {
  if (c == Complex{}) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == Complex{}) terms_.erase(it);
  }
}

Complex SparsePoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Complex{} : it->second;
}

bool SparsePoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

Complex SparsePoly::constant_value() const {
  if (terms_.empty()) return Complex{};
  if (!is_constant())
    throw std::logic_error("constant_value on polynomial of positive degree");
  return terms_.begin()->second;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SparsePoly SparsePoly::scaled(Complex c) const {
  SparsePoly r;
  if (c == Complex{}) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
  return r;
}

int SparsePoly::max_degree_in(Group g, int copy) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree_in(g, copy));
  return d;
}

int SparsePoly::max_degree_in(Group g) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree_in(g));
  return d;
}

SparsePoly SparsePoly::traced() const { return with_copy(1); }

SparsePoly SparsePoly::with_copy(int copy) const {
  SparsePoly r;
  for (const auto& [m, c] : terms_) {
    Monomial out;
    m.for_each([&](VarId v, int e) {
      const VarId t(v.group, copy, v.index);
      const int merged = out.exponent(t) + e;
      if (merged > 15)
        throw std::overflow_error("exponent overflow while identifying copies");
      out.set_exponent(t, merged);
    });
    r.add_term(out, c);
  }
  return r;
}

SparsePoly SparsePoly::renamed_groups(
    std::span<const std::pair<Group, Group>> map) const {
  SparsePoly r;
  for (const auto& [m, c] : terms_) {
    Monomial out;
    m.for_each([&](VarId v, int e) {
      Group g = v.group;
      for (const auto& [from, to] : map)
        if (from == v.group) {
          g = to;
          break;
        }
      const VarId t(g, v.copy, v.index);
      const int merged = out.exponent(t) + e;
      if (merged > 15)
        throw std::overflow_error("exponent overflow while renaming groups");
      out.set_exponent(t, merged);
    });
    r.add_term(out, c);
  }
  return r;
}

void SparsePoly::prune(double eps) {
  for (auto it = terms_.begin(); it != terms_.end();)
    it = std::abs(it->second) <= eps ? terms_.erase(it) : std::next(it);
}

std::string SparsePoly::dump() const {
  std::vector<const TermMap::value_type*> rows;
  rows.reserve(terms_.size());
  for (const auto& t : terms_) rows.push_back(&t);
  std::sort(rows.begin(), rows.end(),
            [](auto* a, auto* b) { return a->first < b->first; });
  std::ostringstream os;
  for (auto* t : rows) {
    os << t->second.real();
    if (t->second.imag() != 0.0) os << (t->second.imag() < 0 ? "" : "+") << t->second.imag() << "i";
    if (!t->first.is_unit()) os << "  " << t->first.str();
    os << '\n';
  }
  return os.str();
}

SparsePoly poly_mul(const SparsePoly& p, const SparsePoly& q) {
  SparsePoly r;
  for (const auto& [mp, cp] : p.terms())
    for (const auto& [mq, cq] : q.terms()) r.add_term(mp.plus(mq), cp * cq);
  return r;
}

SparsePoly poly_diff(const SparsePoly& p, VarId v) {
  SparsePoly r;
  for (const auto& [m, c] : p.terms()) {
    const int e = m.exponent(v);
    if (e) r.add_term(m.minus_one(v), c * static_cast<double>(e));
  }
  return r;
}

}  // namespace triq
