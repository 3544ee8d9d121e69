#include "corank/subset_mask.hpp"

#include <bit>
#include <stdexcept>

namespace corank {

namespace {
int word_count(int width) { return (width + 63) / 64; }
}  // namespace

SubsetMask::SubsetMask(int width) : width_(width), words_(word_count(width), 0) {
  if (width < 0) throw std::invalid_argument("negative subset width");
}

SubsetMask SubsetMask::from_bits(std::uint64_t bits, int width) {
  if (width > 64) throw std::invalid_argument("from_bits requires width <= 64");
  SubsetMask m(width);
  if (width > 0) {
    const std::uint64_t live = width == 64 ? ~0ull : ((1ull << width) - 1);
    if (bits & ~live) throw std::invalid_argument("bits outside ground set");
    m.words_[0] = bits;
  } else if (bits != 0) {
    throw std::invalid_argument("bits outside ground set");
  }
  return m;
}

SubsetMask SubsetMask::from_indices(int width, std::initializer_list<int> ids) {
  return from_indices(width, std::vector<int>(ids));
}

SubsetMask SubsetMask::from_indices(int width, const std::vector<int>& ids) {
  SubsetMask m(width);
  for (int id : ids) m.set(id);
  return m;
}

SubsetMask SubsetMask::full(int width) {
  SubsetMask m(width);
  for (int i = 0; i < width; ++i) m.set(i);
  return m;
}

int SubsetMask::count() const {
  int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

bool SubsetMask::test(int id) const {
  if (id < 0 || id >= width_) throw std::out_of_range("element id out of range");
  return (words_[id / 64] >> (id % 64)) & 1;
}

void SubsetMask::set(int id, bool value) {
  if (id < 0 || id >= width_) throw std::out_of_range("element id out of range");
  if (value)
    words_[id / 64] |= (1ull << (id % 64));
  else
    words_[id / 64] &= ~(1ull << (id % 64));
}

std::vector<int> SubsetMask::indices() const {
  std::vector<int> out;
  out.reserve(count());
  for (int i = 0; i < width_; ++i)
    if (test(i)) out.push_back(i);
  return out;
}

std::uint64_t SubsetMask::to_bits() const {
  if (width_ > 64) throw std::logic_error("to_bits requires width <= 64");
  return words_.empty() ? 0 : words_[0];
}

void SubsetMask::check_same_width(const SubsetMask& o) const {
  if (width_ != o.width_) throw std::invalid_argument("subset width mismatch");
}

bool SubsetMask::is_subset_of(const SubsetMask& o) const {
  check_same_width(o);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~o.words_[i]) return false;
  return true;
}

SubsetMask SubsetMask::operator&(const SubsetMask& o) const {
  check_same_width(o);
  SubsetMask r(width_);
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
  return r;
}

SubsetMask SubsetMask::operator|(const SubsetMask& o) const {
  check_same_width(o);
  SubsetMask r(width_);
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] | o.words_[i];
  return r;
}

SubsetMask SubsetMask::operator^(const SubsetMask& o) const {
  check_same_width(o);
  SubsetMask r(width_);
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] ^ o.words_[i];
  return r;
}

SubsetMask SubsetMask::complement() const { return *this ^ full(width_); }

SubsetMask SubsetMask::minus(const SubsetMask& o) const {
  check_same_width(o);
  SubsetMask r(width_);
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & ~o.words_[i];
  return r;
}

bool SubsetMask::operator<(const SubsetMask& o) const {
  check_same_width(o);
  const int ca = count(), cb = o.count();
  if (ca != cb) return ca < cb;
  for (std::size_t i = words_.size(); i-- > 0;)
    if (words_[i] != o.words_[i]) return words_[i] < o.words_[i];
  return false;
}

std::string SubsetMask::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int i : indices()) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

}  // namespace corank
