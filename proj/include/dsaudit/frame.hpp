#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace dsaudit {

/// Hard cap on frame size. Power-set tables are indexed by mask, so anything
/// above this is rejected at construction.
inline constexpr std::size_t kMaxFrameSize = 24;

using Mask = std::uint32_t;

class FocalSet;

/// A finite frame of discernment: an ordered list of distinct labels.
/// Copies share the same immutable storage and therefore the same identity.
class Frame {
 public:
  std::size_t size() const { return data_->labels.size(); }
  const std::vector<std::string>& labels() const { return data_->labels; }
  const std::string& label(std::size_t i) const { return data_->labels.at(i); }
  std::uint64_t id() const { return data_->id; }

  /// Mask with every element set (Ω).
  Mask universe_mask() const { return size() == 32 ? ~Mask{0} : ((Mask{1} << size()) - 1); }
  std::size_t subset_count() const { return std::size_t{1} << size(); }

  FocalSet empty() const;
  FocalSet universe() const;
  FocalSet singleton(std::size_t index) const;
  /// Builds a subset from a raw mask; throws if it has bits outside the frame.
  FocalSet from_mask(Mask bits) const;

  /// Index of the label, throws Error(UnknownLabel) when absent.
  std::size_t index_of(const std::string& label) const;

  friend bool operator==(const Frame& a, const Frame& b) { return a.id() == b.id(); }

 private:
  struct Data {
    std::vector<std::string> labels;
    std::uint64_t id;
  };
  explicit Frame(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  friend Frame make_frame(std::vector<std::string> labels);

  std::shared_ptr<const Data> data_;
};

/// Subset of a frame stored as a bitmask. Bit i is element i of the frame.
class FocalSet {
 public:
  Mask bits() const { return bits_; }
  std::uint64_t frame_id() const { return frame_id_; }
  Mask universe_mask() const { return universe_; }

  bool is_empty() const { return bits_ == 0; }
  bool is_universe() const { return bits_ == universe_; }

  friend bool operator==(const FocalSet& a, const FocalSet& b) {
    return a.bits_ == b.bits_ && a.frame_id_ == b.frame_id_;
  }
  /// Orders by mask. Only meaningful within one frame.
  friend bool operator<(const FocalSet& a, const FocalSet& b) { return a.bits_ < b.bits_; }

 private:
  FocalSet(Mask bits, std::uint64_t frame_id, Mask universe)
      : bits_(bits), frame_id_(frame_id), universe_(universe) {}
  friend class Frame;
  friend class SubsetRange;
  friend FocalSet intersect(const FocalSet&, const FocalSet&);
  friend FocalSet unite(const FocalSet&, const FocalSet&);
  friend FocalSet complement(const FocalSet&);

  Mask bits_ = 0;
  std::uint64_t frame_id_ = 0;
  Mask universe_ = 0;
};

Frame make_frame(std::vector<std::string> labels);

FocalSet subset(const Frame& frame, std::span<const std::string> members);
FocalSet subset(const Frame& frame, std::initializer_list<std::string> members);

FocalSet intersect(const FocalSet& s, const FocalSet& t);
FocalSet unite(const FocalSet& s, const FocalSet& t);
FocalSet complement(const FocalSet& s);
bool is_subset(const FocalSet& s, const FocalSet& t);
inline bool is_empty(const FocalSet& s) { return s.is_empty(); }
std::size_t cardinality(const FocalSet& s);

/// Throws Error(FrameMismatch) unless both sets belong to the same frame.
void require_same_frame(const FocalSet& s, const FocalSet& t);
void require_frame(const Frame& frame, const FocalSet& s);

/// "{a,b}" style rendering in frame order; "{}" for the empty set.
std::string format_set(const Frame& frame, const FocalSet& s);

/// Lazy view over every subset of a frame in ascending mask order.
class SubsetRange {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = FocalSet;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = FocalSet;

    iterator() = default;
    FocalSet operator*() const { return FocalSet(static_cast<Mask>(next_), frame_id_, universe_); }
    iterator& operator++() {
      ++next_;
      return *this;
    }
    iterator operator++(int) {
      auto copy = *this;
      ++next_;
      return copy;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.next_ == b.next_; }

   private:
    friend class SubsetRange;
    iterator(std::uint64_t next, std::uint64_t frame_id, Mask universe)
        : next_(next), frame_id_(frame_id), universe_(universe) {}
    std::uint64_t next_ = 0;
    std::uint64_t frame_id_ = 0;
    Mask universe_ = 0;
  };

  explicit SubsetRange(const Frame& frame)
      : frame_id_(frame.id()), universe_(frame.universe_mask()), count_(frame.subset_count()) {}

  iterator begin() const { return iterator(0, frame_id_, universe_); }
  iterator end() const { return iterator(count_, frame_id_, universe_); }
  std::size_t size() const { return count_; }

 private:
  std::uint64_t frame_id_;
  Mask universe_;
  std::uint64_t count_;
};

inline SubsetRange enumerate_subsets(const Frame& frame) { return SubsetRange(frame); }

}  // namespace dsaudit
