#ifndef BOXLAB_CORE_BITSET_HPP
#define BOXLAB_CORE_BITSET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace boxlab {

// Fixed-size runtime bitset used for adjacency rows and pair bookkeeping.
class dyn_bitset {
public:
  using word = std::uint64_t;
  static constexpr std::size_t word_bits = 64;

  dyn_bitset() = default;
  explicit dyn_bitset(std::size_t size, bool value = false)
      : size_(size), words_((size + word_bits - 1) / word_bits, value ? ~word{0} : word{0}) {
    trim();
  }

  std::size_t size() const noexcept { return size_; }

  bool test(std::size_t i) const noexcept { return (words_[i / word_bits] >> (i % word_bits)) & 1U; }
  void set(std::size_t i) noexcept { words_[i / word_bits] |= word{1} << (i % word_bits); }
  void reset(std::size_t i) noexcept { words_[i / word_bits] &= ~(word{1} << (i % word_bits)); }
  void assign(std::size_t i, bool value) noexcept {
    if (value)
      set(i);
    else
      reset(i);
  }

  void clear() noexcept {
    for (auto& w : words_) w = 0;
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool any() const noexcept {
    for (auto w : words_)
      if (w != 0) return true;
    return false;
  }
  bool none() const noexcept { return !any(); }

  // Index of the first set bit at or after `from`, or size() if none.
  std::size_t find_next(std::size_t from) const noexcept {
    if (from >= size_) return size_;
    std::size_t wi = from / word_bits;
    word w = words_[wi] & (~word{0} << (from % word_bits));
    while (true) {
      if (w != 0) return wi * word_bits + static_cast<std::size_t>(std::countr_zero(w));
      if (++wi == words_.size()) return size_;
      w = words_[wi];
    }
  }
  std::size_t find_first() const noexcept { return find_next(0); }

  dyn_bitset& operator|=(const dyn_bitset& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  dyn_bitset& operator&=(const dyn_bitset& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  // this &= ~o
  dyn_bitset& subtract(const dyn_bitset& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  void flip() noexcept {
    for (auto& w : words_) w = ~w;
    trim();
  }

  // popcount(this & ~o)
  std::size_t count_minus(const dyn_bitset& o) const noexcept {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & ~o.words_[i]));
    return c;
  }
  bool intersects(const dyn_bitset& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & o.words_[i]) != 0) return true;
    return false;
  }

  bool operator==(const dyn_bitset&) const = default;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      word w = words_[wi];
      while (w != 0) {
        f(wi * word_bits + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  const std::vector<word>& words() const noexcept { return words_; }

private:
  void trim() noexcept {
    if (size_ % word_bits != 0 && !words_.empty()) words_.back() &= (word{1} << (size_ % word_bits)) - 1;
  }

  std::size_t size_ = 0;
  std::vector<word> words_;
};

} // namespace boxlab

#endif // BOXLAB_CORE_BITSET_HPP
