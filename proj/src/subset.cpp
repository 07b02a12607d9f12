#include "filtforge/subset.hpp"

#include <string>

#include "filtforge/error.hpp"

namespace filtforge {

namespace {
constexpr std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }
}  // namespace

Subset::Subset(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

Subset Subset::none(std::size_t universe) { return Subset(universe); }

Subset Subset::all(std::size_t universe) {
  Subset s(universe);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  s.trim();
  return s;
}

Subset Subset::of(std::size_t universe, std::span<const std::uint32_t> ids) {
  Subset s(universe);
  for (auto id : ids) s.insert(id);
  return s;
}

void Subset::trim() {
  const std::size_t tail = universe_ % 64;
  if (tail != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << tail) - 1;
}

std::size_t Subset::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool Subset::empty() const noexcept {
  for (auto w : words_)
    if (w != 0) return false;
  return true;
}

bool Subset::contains(std::size_t p) const {
  if (p >= universe_)
    throw StructuralError("point " + std::to_string(p) + " out of range (" +
                          std::to_string(universe_) + " points)");
  return (words_[p / 64] >> (p % 64)) & 1u;
}

void Subset::insert(std::size_t p) {
  if (p >= universe_)
    throw StructuralError("point " + std::to_string(p) + " out of range (" +
                          std::to_string(universe_) + " points)");
  words_[p / 64] |= std::uint64_t{1} << (p % 64);
}

void Subset::erase(std::size_t p) {
  if (p >= universe_)
    throw StructuralError("point " + std::to_string(p) + " out of range (" +
                          std::to_string(universe_) + " points)");
  words_[p / 64] &= ~(std::uint64_t{1} << (p % 64));
}

void Subset::check_same_universe(const Subset& other) const {
  if (universe_ != other.universe_)
    throw StructuralError("subsets over different universes (" + std::to_string(universe_) +
                          " vs " + std::to_string(other.universe_) + ")");
}

bool Subset::is_subset_of(const Subset& other) const {
  check_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w)
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  return true;
}

Subset Subset::complement() const {
  Subset s(universe_);
  for (std::size_t w = 0; w < words_.size(); ++w) s.words_[w] = ~words_[w];
  s.trim();
  return s;
}

Subset Subset::operator&(const Subset& other) const {
  Subset s = *this;
  s &= other;
  return s;
}

Subset Subset::operator|(const Subset& other) const {
  Subset s = *this;
  s |= other;
  return s;
}

Subset Subset::operator-(const Subset& other) const {
  check_same_universe(other);
  Subset s = *this;
  for (std::size_t w = 0; w < words_.size(); ++w) s.words_[w] &= ~other.words_[w];
  return s;
}

Subset& Subset::operator&=(const Subset& other) {
  check_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

Subset& Subset::operator|=(const Subset& other) {
  check_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

std::vector<std::uint32_t> Subset::ids() const {
  std::vector<std::uint32_t> out;
  out.reserve(count());
  for_each([&](std::uint32_t p) { out.push_back(p); });
  return out;
}

}  // namespace filtforge
