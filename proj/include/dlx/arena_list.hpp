#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

namespace dlx {

// Slot tags. Both values are non-zero on purpose: an all-zero node can then
// never be confused with a live or a free one.
inline constexpr std::uint8_t kSlotFree = 2;
inline constexpr std::uint8_t kSlotUsed = 3;

/// Fixed-capacity circular doubly-linked list backed by an index arena.
///
/// Links are slot indices instead of pointers, so a whole list is a plain
/// value: copyable, movable, comparable with ==. All operations below take
/// the list by value and return the updated value; a guarded operation that
/// cannot apply returns its input unchanged.
///
/// remove_node()/restore_node() form the dancing-links pair: removal splices
/// a node out of the cycle but leaves the node's own prev/next/val in place,
/// which is what makes restoration a two-write operation.
template <std::size_t Capacity = 8191>
struct ArenaList {
  static_assert(Capacity >= 1, "arena needs at least one slot");

  static constexpr std::size_t kCapacity = Capacity;
  static constexpr std::size_t kMaxNode = Capacity - 1;

  struct Node {
    std::uint8_t alloc = kSlotFree;
    std::int64_t val = 0;
    std::size_t prev = 0;
    std::size_t next = 0;

    friend bool operator==(const Node&, const Node&) = default;
  };

  std::size_t head = 0;
  std::size_t count = 0;  // nodes on the cycle; detached nodes not included
  std::array<Node, Capacity> nodes{};

  friend bool operator==(const ArenaList&, const ArenaList&) = default;
};

/// Lowest-index free slot, or Capacity when the arena is full.
template <std::size_t N>
std::size_t free_slot(const ArenaList<N>& obj) {
  for (std::size_t i = 0; i < N; ++i) {
    if (obj.nodes[i].alloc == kSlotFree) return i;
  }
  return N;
}

/// Dancing-links removal: splice node n out of the cycle, keeping every
/// field of slot n itself intact. No-op when n is out of range, n is the
/// head, or fewer than three nodes are linked.
template <std::size_t N>
ArenaList<N> remove_node(std::size_t n, ArenaList<N> obj) {
  if (n > ArenaList<N>::kMaxNode) return obj;
  if (n == obj.head) return obj;  // can't remove the head
  if (obj.count < 3) return obj;  // need three nodes for the splice
  const std::size_t next = obj.nodes[n].next;
  const std::size_t prev = obj.nodes[n].prev;
  obj.nodes[prev].next = next;
  obj.nodes[next].prev = prev;
  obj.count -= 1;
  return obj;
}

/// Dancing-links restoration: hook node n back in between the neighbours it
/// still records. No-op when n is out of range, n is the head, fewer than
/// two nodes are linked, or the list is full.
template <std::size_t N>
ArenaList<N> restore_node(std::size_t n, ArenaList<N> obj) {
  if (n > ArenaList<N>::kMaxNode) return obj;
  if (n == obj.head) return obj;  // can't restore the head
  if (obj.count < 2 || obj.count == N) return obj;
  const std::size_t prev = obj.nodes[n].prev;
  const std::size_t next = obj.nodes[n].next;
  obj.nodes[prev].next = n;
  obj.nodes[next].prev = n;
  obj.count += 1;
  return obj;
}

/// Prepend: allocate the lowest-index free slot, link it before the head and
/// make it the new head. No-op when no slot is free.
template <std::size_t N>
ArenaList<N> push_front(std::int64_t v, ArenaList<N> obj) {
  const std::size_t f = free_slot(obj);
  if (f == N) return obj;
  obj.nodes[f].alloc = kSlotUsed;
  obj.nodes[f].val = v;
  if (obj.count == 0) {
    obj.nodes[f].prev = f;
    obj.nodes[f].next = f;
  } else {
    const std::size_t h = obj.head;
    const std::size_t t = obj.nodes[h].prev;
    obj.nodes[f].next = h;
    obj.nodes[f].prev = t;
    obj.nodes[t].next = f;
    obj.nodes[h].prev = f;
  }
  obj.head = f;
  obj.count += 1;
  return obj;
}

/// Append: same slot choice and splice as push_front, but the head stays
/// put, so the new node becomes the last element.
template <std::size_t N>
ArenaList<N> push_back(std::int64_t v, ArenaList<N> obj) {
  const std::size_t f = free_slot(obj);
  if (f == N) return obj;
  obj.nodes[f].alloc = kSlotUsed;
  obj.nodes[f].val = v;
  if (obj.count == 0) {
    obj.nodes[f].prev = f;
    obj.nodes[f].next = f;
    obj.head = f;
  } else {
    const std::size_t h = obj.head;
    const std::size_t t = obj.nodes[h].prev;
    obj.nodes[f].next = h;
    obj.nodes[f].prev = t;
    obj.nodes[t].next = f;
    obj.nodes[h].prev = f;
  }
  obj.count += 1;
  return obj;
}

/// Drop the head element. Unlike remove_node this is a true deletion: the
/// slot goes back to the free state with val/prev/next zeroed.
template <std::size_t N>
ArenaList<N> pop_front(ArenaList<N> obj) {
  if (obj.count == 0) return obj;
  const std::size_t h = obj.head;
  if (obj.count == 1) {
    obj.nodes[h] = {};
    obj.count = 0;
    return obj;
  }
  const std::size_t next = obj.nodes[h].next;
  const std::size_t prev = obj.nodes[h].prev;
  obj.nodes[prev].next = next;
  obj.nodes[next].prev = prev;
  obj.nodes[h] = {};
  obj.head = next;
  obj.count -= 1;
  return obj;
}

/// Drop the last element (the head's prev). True deletion, like pop_front.
template <std::size_t N>
ArenaList<N> pop_back(ArenaList<N> obj) {
  if (obj.count == 0) return obj;
  if (obj.count == 1) {
    obj.nodes[obj.head] = {};
    obj.count = 0;
    return obj;
  }
  const std::size_t t = obj.nodes[obj.head].prev;
  const std::size_t prev = obj.nodes[t].prev;
  obj.nodes[prev].next = obj.head;
  obj.nodes[obj.head].prev = prev;
  obj.nodes[t] = {};
  obj.count -= 1;
  return obj;
}

/// Value k next-steps from the head; 0 when k is out of range. The zero
/// default mirrors the all-zero free node rather than signalling an error.
template <std::size_t N>
std::int64_t nth(std::size_t k, const ArenaList<N>& obj) {
  if (obj.count == 0 || k >= obj.count) return 0;
  std::size_t p = obj.head;
  for (std::size_t i = 0; i < k; ++i) p = obj.nodes[p].next;
  return obj.nodes[p].val;
}

/// Field-level well-formedness: head and count in range, every slot tagged
/// free or used, every link index in range. Says nothing about the cycle.
template <std::size_t N>
bool well_formed(const ArenaList<N>& obj) {
  if (obj.head > ArenaList<N>::kMaxNode) return false;
  if (obj.count > N) return false;
  for (const auto& node : obj.nodes) {
    if (node.alloc != kSlotFree && node.alloc != kSlotUsed) return false;
    if (node.prev > ArenaList<N>::kMaxNode) return false;
    if (node.next > ArenaList<N>::kMaxNode) return false;
  }
  return true;
}

/// Local stitching check for one node: n is live, its neighbours are live,
/// and they both point back at n. This is the per-node hypothesis under
/// which remove/restore round-trip exactly.
template <std::size_t N>
bool good_node(std::size_t n, const ArenaList<N>& obj) {
  if (n > ArenaList<N>::kMaxNode) return false;
  const auto& node = obj.nodes[n];
  if (node.alloc != kSlotUsed) return false;
  if (obj.nodes[node.prev].alloc != kSlotUsed) return false;
  if (obj.nodes[node.next].alloc != kSlotUsed) return false;
  if (node.prev == n && obj.count != 1) return false;
  if (obj.nodes[node.prev].next != n) return false;
  if (obj.nodes[node.next].prev != n) return false;
  return true;
}

/// Global strengthening of good_node: walking `next` from the head visits
/// exactly `count` distinct live slots, returns to the head, and `prev`
/// inverts every step. Detached nodes are off the cycle and tolerated.
template <std::size_t N>
bool consistent(const ArenaList<N>& obj) {
  if (!well_formed(obj)) return false;
  if (obj.count == 0) return true;
  std::array<bool, N> seen{};
  std::size_t p = obj.head;
  for (std::size_t i = 0; i < obj.count; ++i) {
    if (obj.nodes[p].alloc != kSlotUsed) return false;
    if (seen[p]) return false;
    seen[p] = true;
    const std::size_t q = obj.nodes[p].next;
    if (obj.nodes[q].prev != p) return false;
    p = q;
  }
  return p == obj.head;
}

}  // namespace dlx
