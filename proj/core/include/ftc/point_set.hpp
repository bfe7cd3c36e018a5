#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include <boost/dynamic_bitset.hpp>
#include <boost/functional/hash.hpp>

namespace ftc {

using Point = std::uint32_t;

/// Fixed-width set of point ids of one space. Width is the size of the
/// owning space and never changes after construction.
class PointSet {
public:
  PointSet() = default;
  explicit PointSet(std::size_t width) : bits_(width) {}

  static PointSet full(std::size_t width) {
    PointSet s(width);
    s.bits_.set();
    return s;
  }

  static PointSet of(std::size_t width, const std::vector<Point>& members) {
    PointSet s(width);
    for (Point p : members) s.insert(p);
    return s;
  }

  std::size_t width() const noexcept { return bits_.size(); }
  std::size_t count() const noexcept { return bits_.count(); }
  bool empty() const noexcept { return bits_.none(); }

  bool contains(Point p) const { return bits_.test(p); }
  void insert(Point p) { bits_.set(p); }
  void erase(Point p) { bits_.reset(p); }

  bool is_subset_of(const PointSet& other) const { return bits_.is_subset_of(other.bits_); }
  bool intersects(const PointSet& other) const { return bits_.intersects(other.bits_); }

  PointSet& operator|=(const PointSet& o) {
    bits_ |= o.bits_;
    return *this;
  }
  PointSet& operator&=(const PointSet& o) {
    bits_ &= o.bits_;
    return *this;
  }
  PointSet& operator-=(const PointSet& o) {
    bits_ -= o.bits_;
    return *this;
  }
  friend PointSet operator|(PointSet a, const PointSet& b) { return a |= b; }
  friend PointSet operator&(PointSet a, const PointSet& b) { return a &= b; }
  friend PointSet operator-(PointSet a, const PointSet& b) { return a -= b; }
  PointSet complement() const {
    PointSet s(*this);
    s.bits_.flip();
    return s;
  }

  friend bool operator==(const PointSet& a, const PointSet& b) { return a.bits_ == b.bits_; }
  friend bool operator<(const PointSet& a, const PointSet& b) { return a.bits_ < b.bits_; }

  /// Smallest member, or width() when empty.
  Point first() const {
    auto i = bits_.find_first();
    return i == boost::dynamic_bitset<std::uint64_t>::npos ? static_cast<Point>(width())
                                                           : static_cast<Point>(i);
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (auto i = bits_.find_first(); i != boost::dynamic_bitset<std::uint64_t>::npos;
         i = bits_.find_next(i))
      fn(static_cast<Point>(i));
  }

  std::vector<Point> members() const {
    std::vector<Point> out;
    out.reserve(count());
    for_each([&](Point p) { out.push_back(p); });
    return out;
  }

  std::size_t hash() const {
    return boost::hash_value(bits_);
  }

private:
  boost::dynamic_bitset<std::uint64_t> bits_;
};

struct PointSetHash {
  std::size_t operator()(const PointSet& s) const { return s.hash(); }
};

/// Hash for value tables of maps.
struct TableHash {
  std::size_t operator()(const std::vector<Point>& t) const {
    return boost::hash_range(t.begin(), t.end());
  }
};

}  // namespace ftc
