#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "dlx/arena_list.hpp"

namespace dlx {

/// Naive reference model of an ArenaList: the cycle as a flat sequence of
/// (slot, value) pairs, detached nodes in a side map with their recorded
/// neighbours, free slots in a set. The three parts partition [0, Capacity).
///
/// This is the oracle for model-based testing of the arena list. It is never
/// used by the solver and makes no attempt to be fast.
template <std::size_t Capacity>
struct ListModel {
  struct Detached {
    std::int64_t val = 0;
    std::size_t prev = 0;
    std::size_t next = 0;

    friend bool operator==(const Detached&, const Detached&) = default;
  };

  std::vector<std::pair<std::size_t, std::int64_t>> linked;
  std::map<std::size_t, Detached> detached;
  std::set<std::size_t> free_slots;

  friend bool operator==(const ListModel&, const ListModel&) = default;
};

/// Model of the empty list: every slot free.
template <std::size_t N>
ListModel<N> empty_model() {
  ListModel<N> m;
  for (std::size_t i = 0; i < N; ++i) m.free_slots.insert(i);
  return m;
}

/// Abstraction map. Walks the cycle to build `linked`, classifies the rest
/// of the arena as detached or free. Nullopt when the list is not
/// consistent(): a broken cycle has no meaningful abstraction.
template <std::size_t N>
std::optional<ListModel<N>> abstract(const ArenaList<N>& obj) {
  if (!consistent(obj)) return std::nullopt;
  ListModel<N> m;
  std::array<bool, N> on_cycle{};
  std::size_t p = obj.head;
  for (std::size_t i = 0; i < obj.count; ++i) {
    m.linked.emplace_back(p, obj.nodes[p].val);
    on_cycle[p] = true;
    p = obj.nodes[p].next;
  }
  for (std::size_t i = 0; i < N; ++i) {
    const auto& node = obj.nodes[i];
    if (node.alloc == kSlotFree) {
      m.free_slots.insert(i);
    } else if (!on_cycle[i]) {
      m.detached[i] = {node.val, node.prev, node.next};
    }
  }
  return m;
}

namespace detail {

template <std::size_t N>
std::size_t linked_position(const ListModel<N>& m, std::size_t slot) {
  for (std::size_t i = 0; i < m.linked.size(); ++i) {
    if (m.linked[i].first == slot) return i;
  }
  return m.linked.size();
}

}  // namespace detail

template <std::size_t N>
ListModel<N> model_push_front(std::int64_t v, ListModel<N> m) {
  if (m.free_slots.empty()) return m;
  const std::size_t f = *m.free_slots.begin();  // lowest free slot
  m.free_slots.erase(m.free_slots.begin());
  m.linked.insert(m.linked.begin(), {f, v});
  return m;
}

template <std::size_t N>
ListModel<N> model_push_back(std::int64_t v, ListModel<N> m) {
  if (m.free_slots.empty()) return m;
  const std::size_t f = *m.free_slots.begin();
  m.free_slots.erase(m.free_slots.begin());
  m.linked.emplace_back(f, v);
  return m;
}

template <std::size_t N>
ListModel<N> model_pop_front(ListModel<N> m) {
  if (m.linked.empty()) return m;
  m.free_slots.insert(m.linked.front().first);
  m.linked.erase(m.linked.begin());
  return m;
}

template <std::size_t N>
ListModel<N> model_pop_back(ListModel<N> m) {
  if (m.linked.empty()) return m;
  m.free_slots.insert(m.linked.back().first);
  m.linked.pop_back();
  return m;
}

template <std::size_t N>
std::int64_t model_nth(std::size_t k, const ListModel<N>& m) {
  if (k >= m.linked.size()) return 0;
  return m.linked[k].second;
}

/// Mirror of remove_node: moves a linked non-head slot to the detached map,
/// recording its current cyclic neighbours. Replicates every guard; a slot
/// that is not on the cycle is left alone.
template <std::size_t N>
ListModel<N> model_remove(std::size_t n, ListModel<N> m) {
  if (n > N - 1) return m;
  if (m.linked.size() < 3) return m;
  if (n == m.linked.front().first) return m;  // can't remove the head
  const std::size_t pos = detail::linked_position(m, n);
  if (pos == m.linked.size()) return m;
  const std::size_t len = m.linked.size();
  const std::size_t prev = m.linked[(pos + len - 1) % len].first;
  const std::size_t next = m.linked[(pos + 1) % len].first;
  m.detached[n] = {m.linked[pos].second, prev, next};
  m.linked.erase(m.linked.begin() + static_cast<std::ptrdiff_t>(pos));
  return m;
}

/// Mirror of restore_node: re-inserts a detached slot between its recorded
/// neighbours, provided those neighbours are currently adjacent on the
/// cycle. Outside that discipline restoration is meaningless, so: no-op.
template <std::size_t N>
ListModel<N> model_restore(std::size_t n, ListModel<N> m) {
  if (n > N - 1) return m;
  if (m.linked.size() < 2 || m.linked.size() == N) return m;
  if (n == m.linked.front().first) return m;  // can't restore the head
  const auto it = m.detached.find(n);
  if (it == m.detached.end()) return m;
  const std::size_t len = m.linked.size();
  const std::size_t prev_pos = detail::linked_position(m, it->second.prev);
  if (prev_pos == len) return m;
  if (m.linked[(prev_pos + 1) % len].first != it->second.next) return m;
  m.linked.insert(m.linked.begin() + static_cast<std::ptrdiff_t>(prev_pos) + 1,
                  {n, it->second.val});
  m.detached.erase(it);
  return m;
}

}  // namespace dlx
