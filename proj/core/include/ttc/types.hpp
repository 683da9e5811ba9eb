#ifndef TTC_TYPES_HPP
#define TTC_TYPES_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

namespace ttc {

using Timestamp = std::uint64_t;
using VertexId = std::uint32_t;

// Largest timestamp (and largest latency) accepted anywhere in the library.
// Keeping both below 2^62 guarantees that time + latency never wraps.
inline constexpr Timestamp kMaxTimestamp = Timestamp{1} << 62;

// Closed interval [start, end] of departure/arrival times.
struct TimeInterval {
  Timestamp start = 0;
  Timestamp end = 0;

  [[nodiscard]] constexpr bool valid() const noexcept { return start <= end; }

  // Non-strict inclusion: other ⊆ *this.
  [[nodiscard]] constexpr bool contains(const TimeInterval& other) const noexcept {
    return start <= other.start && other.end <= end;
  }

  friend constexpr auto operator<=>(const TimeInterval&, const TimeInterval&) = default;
};

// A directed timed arc (from, to, time).
struct Contact {
  VertexId from = 0;
  VertexId to = 0;
  Timestamp time = 0;

  friend constexpr auto operator<=>(const Contact&, const Contact&) = default;
};

// A time-respecting path. `latency` is the per-contact traversal time the
// journey was built under; arrival() depends on it.
struct Journey {
  std::vector<Contact> contacts;
  Timestamp latency = 0;

  [[nodiscard]] bool empty() const noexcept { return contacts.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return contacts.size(); }
  [[nodiscard]] Timestamp departure() const { return contacts.front().time; }
  [[nodiscard]] Timestamp arrival() const { return contacts.back().time + latency; }
  [[nodiscard]] Timestamp duration() const { return arrival() - departure(); }

  friend bool operator==(const Journey&, const Journey&) = default;
};

// Checks chaining and time-respecting constraints. An empty journey is valid.
[[nodiscard]] inline bool is_time_respecting(const Journey& journey) noexcept {
  for (std::size_t i = 1; i < journey.contacts.size(); ++i) {
    const Contact& prev = journey.contacts[i - 1];
    const Contact& next = journey.contacts[i];
    if (prev.to != next.from || next.time < prev.time + journey.latency) return false;
  }
  return true;
}

}  // namespace ttc

#endif  // TTC_TYPES_HPP
