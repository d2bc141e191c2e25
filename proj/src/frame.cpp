#include "dsaudit/frame.hpp"

#include <atomic>
#include <bit>
#include <unordered_set>

#include "dsaudit/error.hpp"

namespace dsaudit {

namespace {
std::atomic<std::uint64_t> next_frame_id{1};
}

Frame make_frame(std::vector<std::string> labels) {
  if (labels.empty()) throw Error(ErrorKind::EmptyFrame, "frame needs at least one element");
  if (labels.size() > kMaxFrameSize) {
    throw Error(ErrorKind::FrameTooLarge, "frame has " + std::to_string(labels.size()) +
                                              " elements; the cap is " +
                                              std::to_string(kMaxFrameSize));
  }
  std::unordered_set<std::string> seen;
  for (const auto& label : labels) {
    if (label.empty()) throw Error(ErrorKind::EmptyFrame, "frame labels must be non-empty");
    if (!seen.insert(label).second) {
      throw Error(ErrorKind::DuplicateLabel, "duplicate frame label '" + label + "'");
    }
  }
  auto data = std::make_shared<const Frame::Data>(
      Frame::Data{std::move(labels), next_frame_id.fetch_add(1)});
  return Frame(std::move(data));
}

FocalSet Frame::empty() const { return FocalSet(0, id(), universe_mask()); }
FocalSet Frame::universe() const { return FocalSet(universe_mask(), id(), universe_mask()); }

FocalSet Frame::singleton(std::size_t index) const {
  if (index >= size()) throw Error(ErrorKind::UnknownLabel, "element index out of range");
  return FocalSet(Mask{1} << index, id(), universe_mask());
}

FocalSet Frame::from_mask(Mask bits) const {
  if ((bits & ~universe_mask()) != 0) {
    throw Error(ErrorKind::UnknownLabel, "mask has bits outside the frame");
  }
  return FocalSet(bits, id(), universe_mask());
}

std::size_t Frame::index_of(const std::string& label) const {
  const auto& all = labels();
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i] == label) return i;
  }
  throw Error(ErrorKind::UnknownLabel, "'" + label + "' is not an element of the frame");
}

FocalSet subset(const Frame& frame, std::span<const std::string> members) {
  Mask bits = 0;
  for (const auto& m : members) bits |= Mask{1} << frame.index_of(m);
  return frame.from_mask(bits);
}

FocalSet subset(const Frame& frame, std::initializer_list<std::string> members) {
  return subset(frame, std::span<const std::string>(members.begin(), members.size()));
}

void require_same_frame(const FocalSet& s, const FocalSet& t) {
  if (s.frame_id() != t.frame_id()) {
    throw Error(ErrorKind::FrameMismatch, "subsets belong to different frames");
  }
}

void require_frame(const Frame& frame, const FocalSet& s) {
  if (s.frame_id() != frame.id()) {
    throw Error(ErrorKind::FrameMismatch, "subset does not belong to this frame");
  }
}

FocalSet intersect(const FocalSet& s, const FocalSet& t) {
  require_same_frame(s, t);
  FocalSet r = s;
  r.bits_ = s.bits() & t.bits();
  return r;
}

FocalSet unite(const FocalSet& s, const FocalSet& t) {
  require_same_frame(s, t);
  FocalSet r = s;
  r.bits_ = s.bits() | t.bits();
  return r;
}

FocalSet complement(const FocalSet& s) {
  FocalSet r = s;
  r.bits_ = s.universe_mask() & ~s.bits();
  return r;
}

bool is_subset(const FocalSet& s, const FocalSet& t) {
  require_same_frame(s, t);
  return (s.bits() & ~t.bits()) == 0;
}

std::size_t cardinality(const FocalSet& s) { return static_cast<std::size_t>(std::popcount(s.bits())); }

std::string format_set(const Frame& frame, const FocalSet& s) {
  require_frame(frame, s);
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < frame.size(); ++i) {
    if ((s.bits() >> i) & 1U) {
      if (!first) out += ',';
      out += frame.label(i);
      first = false;
    }
  }
  out += '}';
  return out;
}

}  // namespace dsaudit
