#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace bootperc {

using Vertex = std::uint32_t;

/// Membership bitset over the vertex indices of one graph.
///
/// The width is fixed at construction and every binary operation requires
/// both operands to share it; a mismatch raises WidthMismatch.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t width);
  VertexSet(std::size_t width, std::initializer_list<Vertex> members);
  VertexSet(std::size_t width, std::span<const Vertex> members);

  static VertexSet full(std::size_t width);

  std::size_t width() const { return width_; }
  std::size_t size() const;
  bool empty() const;
  bool is_full() const { return size() == width_; }

  bool contains(Vertex v) const { return v < width_ && ((words_[v >> 6] >> (v & 63)) & 1u) != 0; }
  void insert(Vertex v);
  void erase(Vertex v);
  void clear();

  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  /// Set difference.
  VertexSet& operator-=(const VertexSet& other);
  VertexSet complement() const;

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool operator==(const VertexSet& other) const = default;

  /// Sorted member list.
  std::vector<Vertex> members() const;
  std::span<const std::uint64_t> words() const { return words_; }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int bit = std::countr_zero(bits);
        f(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(bit)));
        bits &= bits - 1;
      }
    }
  }

  /// "{0, 2, 4}"
  std::string to_string() const;

 private:
  void check_width(const VertexSet& other) const;
  void check_vertex(Vertex v) const;

  std::size_t width_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Order by sorted member sequence, compared lexicographically.
///
/// For sets of equal size this is the same as "the smallest element of the
/// symmetric difference belongs to the lesser set", which is what makes the
/// solver's witness choice independent of component decomposition.
bool lex_less(const VertexSet& a, const VertexSet& b);

}  // namespace bootperc
