#include "xta/vertex_set.hpp"

#include <algorithm>

#include "xta/errors.hpp"

namespace xta {

VertexSet::VertexSet(int universe) : universe_(universe) {
  require(universe >= 0, "vertex set universe must be non-negative");
  words_ = (universe + kWordBits - 1) / kWordBits;
  if (words_ > kInlineWords) heap_.assign(static_cast<std::size_t>(words_), 0);
}

VertexSet::VertexSet(int universe, std::initializer_list<int> members)
    : VertexSet(universe, std::span<const int>(members.begin(), members.size())) {}

VertexSet::VertexSet(int universe, std::span<const int> members) : VertexSet(universe) {
  for (int v : members) {
    if (v < 0 || v >= universe) {
      throw ContractViolation("vertex " + std::to_string(v) + " outside range 0.." +
                              std::to_string(universe - 1));
    }
    set(v);
  }
}

VertexSet::VertexSet(const VertexSet& other)
    : universe_(other.universe_), words_(other.words_), inline_(other.inline_), heap_(other.heap_) {}

VertexSet::VertexSet(VertexSet&& other) noexcept
    : universe_(other.universe_),
      words_(other.words_),
      inline_(other.inline_),
      heap_(std::move(other.heap_)) {
  other.universe_ = 0;
  other.words_ = 0;
}

VertexSet& VertexSet::operator=(const VertexSet& other) {
  if (this != &other) {
    universe_ = other.universe_;
    words_ = other.words_;
    inline_ = other.inline_;
    if (other.words_ > kInlineWords) {
      heap_ = other.heap_;
    } else {
      heap_.clear();
    }
  }
  return *this;
}

VertexSet& VertexSet::operator=(VertexSet&& other) noexcept {
  if (this != &other) {
    universe_ = other.universe_;
    words_ = other.words_;
    inline_ = other.inline_;
    heap_ = std::move(other.heap_);
    other.universe_ = 0;
    other.words_ = 0;
  }
  return *this;
}

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  Word* w = s.data();
  for (int i = 0; i < s.words_; ++i) w[i] = ~Word{0};
  const int tail = universe % kWordBits;
  if (tail != 0) w[s.words_ - 1] = (Word{1} << tail) - 1;
  return s;
}

void VertexSet::clear() noexcept {
  Word* w = data();
  std::fill(w, w + words_, Word{0});
}

int VertexSet::count() const noexcept {
  int c = 0;
  for (Word w : words()) c += std::popcount(w);
  return c;
}

bool VertexSet::empty() const noexcept {
  return std::all_of(words().begin(), words().end(), [](Word w) { return w == 0; });
}

int VertexSet::next(int from) const noexcept {
  if (from >= universe_) return -1;
  if (from < 0) from = 0;
  const Word* w = data();
  int i = from / kWordBits;
  Word bits = w[i] & (~Word{0} << (from % kWordBits));
  while (true) {
    if (bits != 0) return i * kWordBits + std::countr_zero(bits);
    if (++i >= words_) return -1;
    bits = w[i];
  }
}

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(count()));
  for_each([&](int v) { out.push_back(v); });
  return out;
}

VertexSet& VertexSet::operator&=(const VertexSet& rhs) noexcept {
  assert(universe_ == rhs.universe_);
  Word* w = data();
  const Word* r = rhs.data();
  for (int i = 0; i < words_; ++i) w[i] &= r[i];
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& rhs) noexcept {
  assert(universe_ == rhs.universe_);
  Word* w = data();
  const Word* r = rhs.data();
  for (int i = 0; i < words_; ++i) w[i] |= r[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& rhs) noexcept {
  assert(universe_ == rhs.universe_);
  Word* w = data();
  const Word* r = rhs.data();
  for (int i = 0; i < words_; ++i) w[i] &= ~r[i];
  return *this;
}

bool VertexSet::intersects(const VertexSet& rhs) const noexcept {
  assert(universe_ == rhs.universe_);
  const Word* w = data();
  const Word* r = rhs.data();
  for (int i = 0; i < words_; ++i) {
    if ((w[i] & r[i]) != 0) return true;
  }
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& rhs) const noexcept {
  assert(universe_ == rhs.universe_);
  const Word* w = data();
  const Word* r = rhs.data();
  for (int i = 0; i < words_; ++i) {
    if ((w[i] & ~r[i]) != 0) return false;
  }
  return true;
}

int VertexSet::count_common(const VertexSet& rhs) const noexcept {
  assert(universe_ == rhs.universe_);
  const Word* w = data();
  const Word* r = rhs.data();
  int c = 0;
  for (int i = 0; i < words_; ++i) c += std::popcount(w[i] & r[i]);
  return c;
}

bool operator==(const VertexSet& a, const VertexSet& b) noexcept {
  return a.universe_ == b.universe_ && std::ranges::equal(a.words(), b.words());
}

std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) noexcept {
  if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.words().begin(), a.words().end(),
                                                b.words().begin(), b.words().end());
}

}  // namespace xta
