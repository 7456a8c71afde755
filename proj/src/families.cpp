#include "padic/families.hpp"

#include <string>

#include "padic/errors.hpp"

namespace padic {

IndexSet::IndexSet(int family_size, int member_bit, Ground ground)
    : k_(family_size), bit_(member_bit), ground_(ground) {
  if (family_size < 1 || family_size > kMaxFamilySize) {
    throw DomainError("family size must lie in [1, 20], got " + std::to_string(family_size));
  }
  if (member_bit < 0 || member_bit >= family_size) {
    throw DomainError("member bit " + std::to_string(member_bit) + " outside a family of size " +
                      std::to_string(family_size));
  }
}

bool IndexSet::contains(std::uint64_t m) const noexcept {
  if (m == 0 && ground_ == Ground::Naturals) return false;
  return ((m & (period() - 1)) >> bit_) & 1U;
}

std::uint64_t IndexSet::next_after(std::uint64_t n) const noexcept {
  std::uint64_t m = n + 1;
  while (!contains(m)) ++m;  // at most 2^(k-1) steps
  return m;
}

std::vector<IndexSet> generate_family(int k, Ground ground) {
  if (k < 1 || k > kMaxFamilySize) {
    throw DomainError("family size must lie in [1, 20], got " + std::to_string(k));
  }
  std::vector<IndexSet> out;
  out.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) out.emplace_back(k, i, ground);
  return out;
}

CellEnumerator::CellEnumerator(int family_size, std::uint64_t residue, Ground ground)
    : k_(family_size), residue_(residue), ground_(ground) {
  if (family_size < 1 || family_size > kMaxFamilySize) {
    throw DomainError("family size must lie in [1, 20], got " + std::to_string(family_size));
  }
  if (residue >= period()) throw DomainError("cell residue out of range");
}

bool CellEnumerator::contains(std::uint64_t m) const noexcept {
  if (m == 0 && ground_ == Ground::Naturals) return false;
  return (m & (period() - 1)) == residue_;
}

std::uint64_t CellEnumerator::first() const noexcept {
  return (residue_ == 0 && ground_ == Ground::Naturals) ? period() : residue_;
}

std::uint64_t CellEnumerator::next_after(std::uint64_t n) const noexcept {
  if (n < first()) return first();
  std::uint64_t base = n & ~(period() - 1);
  std::uint64_t m = base + residue_;
  return m > n ? m : m + period();
}

std::uint64_t CellEnumerator::next() {
  current_ = started_ ? next_after(current_) : first();
  started_ = true;
  return current_;
}

CellEnumerator cell(const std::vector<IndexSet>& family, const std::vector<bool>& signature) {
  if (family.empty()) throw DomainError("empty family");
  if (signature.size() != family.size()) {
    throw DomainError("signature has " + std::to_string(signature.size()) + " entries for a family of " +
                      std::to_string(family.size()));
  }
  const int k = family.front().family_size();
  const Ground ground = family.front().ground();
  std::uint64_t residue = 0;
  std::vector<bool> seen(static_cast<std::size_t>(k), false);
  for (std::size_t i = 0; i < family.size(); ++i) {
    const IndexSet& s = family[i];
    if (s.family_size() != k || s.ground() != ground || seen[static_cast<std::size_t>(s.member_bit())]) {
      throw DomainError("sets do not form one family");
    }
    seen[static_cast<std::size_t>(s.member_bit())] = true;
    if (signature[i]) residue |= std::uint64_t{1} << s.member_bit();
  }
  if (family.size() != static_cast<std::size_t>(k)) throw DomainError("incomplete family");
  return CellEnumerator(k, residue, ground);
}

}  // namespace padic
