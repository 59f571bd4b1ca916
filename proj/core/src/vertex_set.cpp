#include "bootperc/vertex_set.hpp"

#include <algorithm>

#include "bootperc/errors.hpp"

namespace bootperc {

namespace {

std::size_t word_count(std::size_t width) { return (width + 63) / 64; }

}  // namespace

VertexSet::VertexSet(std::size_t width) : width_(width), words_(word_count(width), 0) {}

VertexSet::VertexSet(std::size_t width, std::initializer_list<Vertex> members) : VertexSet(width) {
  for (Vertex v : members) insert(v);
}

VertexSet::VertexSet(std::size_t width, std::span<const Vertex> members) : VertexSet(width) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t width) {
  VertexSet s(width);
  std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
  if (const std::size_t tail = width % 64; tail != 0) {
    s.words_.back() = (std::uint64_t{1} << tail) - 1;
  }
  return s;
}

std::size_t VertexSet::size() const {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool VertexSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

void VertexSet::insert(Vertex v) {
  check_vertex(v);
  words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(Vertex v) {
  check_vertex(v);
  words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

void VertexSet::clear() { std::fill(words_.begin(), words_.end(), 0); }

bool VertexSet::is_subset_of(const VertexSet& other) const {
  check_width(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  check_width(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_width(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_width(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_width(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

VertexSet VertexSet::complement() const { return full(width_) - *this; }

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for_each([&](Vertex v) {
    if (!first) out += ", ";
    out += std::to_string(v);
    first = false;
  });
  return out + "}";
}

void VertexSet::check_width(const VertexSet& other) const {
  if (other.width_ != width_) throw WidthMismatch(width_, other.width_);
}

void VertexSet::check_vertex(Vertex v) const {
  if (v >= width_) {
    throw PreconditionError("vertex " + std::to_string(v) + " out of range for width " +
                            std::to_string(width_));
  }
}

bool lex_less(const VertexSet& a, const VertexSet& b) {
  const auto am = a.members();
  const auto bm = b.members();
  return std::lexicographical_compare(am.begin(), am.end(), bm.begin(), bm.end());
}

}  // namespace bootperc
