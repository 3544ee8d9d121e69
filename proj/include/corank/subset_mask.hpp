#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace corank {

// Subset of a ground set of fixed width n, one bit per element id.
// Bits at positions >= n are always zero.
class SubsetMask {
 public:
  SubsetMask() = default;
  explicit SubsetMask(int width);
  static SubsetMask from_bits(std::uint64_t bits, int width);
  static SubsetMask from_indices(int width, std::initializer_list<int> ids);
  static SubsetMask from_indices(int width, const std::vector<int>& ids);
  static SubsetMask full(int width);

  int width() const { return width_; }
  int count() const;
  bool empty() const { return count() == 0; }
  bool test(int id) const;
  void set(int id, bool value = true);
  std::vector<int> indices() const;

  // Requires width() <= 64.
  std::uint64_t to_bits() const;

  bool is_subset_of(const SubsetMask& other) const;
  SubsetMask operator&(const SubsetMask& o) const;
  SubsetMask operator|(const SubsetMask& o) const;
  SubsetMask operator^(const SubsetMask& o) const;
  SubsetMask complement() const;
  SubsetMask minus(const SubsetMask& o) const;

  bool operator==(const SubsetMask& o) const = default;
  bool operator<(const SubsetMask& o) const;  // by count, then value

  std::string to_string() const;  // "{0,2,5}"

 private:
  void check_same_width(const SubsetMask& o) const;
  int width_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace corank
