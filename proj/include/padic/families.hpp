#pragma once

#include <cstdint>
#include <vector>

namespace padic {

enum class Ground { Naturals, NaturalsWithZero };

/// One member of the periodic independent family of size k:
/// m belongs iff bit `member_bit` of (m mod 2^k) is 1.
class IndexSet {
 public:
  IndexSet(int family_size, int member_bit, Ground ground = Ground::Naturals);

  int family_size() const noexcept { return k_; }
  int member_bit() const noexcept { return bit_; }
  Ground ground() const noexcept { return ground_; }
  std::uint64_t period() const noexcept { return std::uint64_t{1} << k_; }

  bool contains(std::uint64_t m) const noexcept;

  /// Smallest member strictly greater than n.
  std::uint64_t next_after(std::uint64_t n) const noexcept;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  int k_;
  int bit_;
  Ground ground_;
};

inline constexpr int kMaxFamilySize = 20;

/// The k sets N_1, ..., N_k. Throws DomainError unless 1 <= k <= 20.
std::vector<IndexSet> generate_family(int k, Ground ground = Ground::Naturals);

/// Increasing enumeration of one Boolean cell N_1^e1 ∩ ... ∩ N_k^ek, where
/// N^1 = N and N^0 is the complement in the ground set. The cell is the
/// residue class sum e_i 2^i mod 2^k, so it never runs out.
class CellEnumerator {
 public:
  CellEnumerator(int family_size, std::uint64_t residue, Ground ground);

  std::uint64_t residue() const noexcept { return residue_; }
  std::uint64_t period() const noexcept { return std::uint64_t{1} << k_; }

  bool contains(std::uint64_t m) const noexcept;
  /// Smallest member.
  std::uint64_t first() const noexcept;
  /// Smallest member strictly greater than n.
  std::uint64_t next_after(std::uint64_t n) const noexcept;

  /// Successive members, starting from first().
  std::uint64_t next();
  void reset() noexcept { started_ = false; }

 private:
  int k_;
  std::uint64_t residue_;
  Ground ground_;
  bool started_ = false;
  std::uint64_t current_ = 0;
};

/// Throws DomainError when the signature length differs from the family size
/// or the sets do not come from one family.
CellEnumerator cell(const std::vector<IndexSet>& family, const std::vector<bool>& signature);

}  // namespace padic
