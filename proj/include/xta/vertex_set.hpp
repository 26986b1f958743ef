#pragma once

#include <array>
#include <bit>
#include <cassert>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace xta {

// Bit vector over the vertex range 0..universe-1. Universes up to 128 vertices
// live in two inline words; larger ones spill to the heap with the same semantics.
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr int kWordBits = 64;
  static constexpr int kInlineWords = 2;

  VertexSet() = default;
  explicit VertexSet(int universe);
  VertexSet(int universe, std::initializer_list<int> members);
  VertexSet(int universe, std::span<const int> members);

  VertexSet(const VertexSet& other);
  VertexSet(VertexSet&& other) noexcept;
  VertexSet& operator=(const VertexSet& other);
  VertexSet& operator=(VertexSet&& other) noexcept;
  ~VertexSet() = default;

  static VertexSet full(int universe);

  int universe() const noexcept { return universe_; }
  int word_count() const noexcept { return words_; }
  std::span<const Word> words() const noexcept { return {data(), static_cast<std::size_t>(words_)}; }

  bool test(int v) const noexcept {
    assert(v >= 0 && v < universe_);
    return (data()[v / kWordBits] >> (v % kWordBits)) & 1U;
  }
  void set(int v) noexcept {
    assert(v >= 0 && v < universe_);
    data()[v / kWordBits] |= Word{1} << (v % kWordBits);
  }
  void reset(int v) noexcept {
    assert(v >= 0 && v < universe_);
    data()[v / kWordBits] &= ~(Word{1} << (v % kWordBits));
  }
  void clear() noexcept;

  int count() const noexcept;
  bool empty() const noexcept;

  /// Smallest member, or -1 when empty.
  int first() const noexcept { return next(0); }
  /// Smallest member >= from, or -1.
  int next(int from) const noexcept;

  template <typename F>
  void for_each(F&& fn) const {
    const Word* w = data();
    for (int i = 0; i < words_; ++i) {
      Word bits = w[i];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        fn(i * kWordBits + b);
        bits &= bits - 1;
      }
    }
  }

  std::vector<int> to_vector() const;

  VertexSet& operator&=(const VertexSet& rhs) noexcept;
  VertexSet& operator|=(const VertexSet& rhs) noexcept;
  /// Set difference.
  VertexSet& operator-=(const VertexSet& rhs) noexcept;

  friend VertexSet operator&(VertexSet lhs, const VertexSet& rhs) noexcept { return lhs &= rhs; }
  friend VertexSet operator|(VertexSet lhs, const VertexSet& rhs) noexcept { return lhs |= rhs; }
  friend VertexSet operator-(VertexSet lhs, const VertexSet& rhs) noexcept { return lhs -= rhs; }

  bool intersects(const VertexSet& rhs) const noexcept;
  bool is_subset_of(const VertexSet& rhs) const noexcept;
  /// |this ∩ rhs| without materializing the intersection.
  int count_common(const VertexSet& rhs) const noexcept;

  friend bool operator==(const VertexSet& a, const VertexSet& b) noexcept;
  /// Orders by universe, then by word contents. Only meant for sorting/deduplication.
  friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) noexcept;

 private:
  Word* data() noexcept { return words_ <= kInlineWords ? inline_.data() : heap_.data(); }
  const Word* data() const noexcept { return words_ <= kInlineWords ? inline_.data() : heap_.data(); }

  int universe_ = 0;
  int words_ = 0;
  std::array<Word, kInlineWords> inline_{};
  std::vector<Word> heap_;
};

}  // namespace xta
