#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace filtforge {

/// Set of point ids drawn from a universe {0, ..., universe-1}, stored as a
/// packed bitset. Two subsets are comparable only over the same universe.
class Subset {
 public:
  Subset() = default;

  static Subset none(std::size_t universe);
  static Subset all(std::size_t universe);
  static Subset of(std::size_t universe, std::span<const std::uint32_t> ids);

  std::size_t universe() const noexcept { return universe_; }
  std::size_t count() const noexcept;
  bool empty() const noexcept;
  bool full() const noexcept { return count() == universe_; }

  bool contains(std::size_t p) const;
  void insert(std::size_t p);
  void erase(std::size_t p);

  bool is_subset_of(const Subset& other) const;
  Subset complement() const;
  Subset operator&(const Subset& other) const;
  Subset operator|(const Subset& other) const;
  /// Set difference: points of *this not in `other`.
  Subset operator-(const Subset& other) const;
  Subset& operator&=(const Subset& other);
  Subset& operator|=(const Subset& other);

  bool operator==(const Subset& other) const = default;

  std::vector<std::uint32_t> ids() const;

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int bit = std::countr_zero(bits);
        fn(static_cast<std::uint32_t>(w * 64 + static_cast<std::size_t>(bit)));
        bits &= bits - 1;
      }
    }
  }

 private:
  explicit Subset(std::size_t universe);
  void check_same_universe(const Subset& other) const;
  void trim();

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace filtforge
