#include "fds/generate.hpp"

#include <omp.h>

#include <algorithm>

namespace fds {

namespace {

void enumerate_rows(const Candidate& parent, std::vector<uint8_t>& row, int pos, int max_used,
                    const std::function<void(const Candidate&)>& fn) {
  const int n = parent.n;
  if (pos == n) {
    Candidate child = parent.extend(row);
    if (is_canonical(child)) fn(child);
    return;
  }
  // Color density: a color may only appear after all smaller ones have.
  int limit = std::min(parent.s - 1, max_used + 1);
  for (int c = 0; c <= limit; ++c) {
    row[static_cast<size_t>(pos)] = static_cast<uint8_t>(c);
    enumerate_rows(parent, row, pos + 1, std::max(max_used, c), fn);
  }
}

}  // namespace

void for_each_canonical_child(const Candidate& parent,
                              const std::function<void(const Candidate&)>& fn) {
  std::vector<uint8_t> row(static_cast<size_t>(parent.n));
  int max_used = parent.colors_used() - 1;
  enumerate_rows(parent, row, 0, max_used, fn);
}

std::vector<Candidate> canonical_children(const Candidate& parent) {
  std::vector<Candidate> out;
  for_each_canonical_child(parent, [&](const Candidate& c) { out.push_back(c); });
  return out;
}

uint64_t count_candidates(int n, int s, uint64_t cap) {
  if (n < 1 || s < 1) throw std::invalid_argument("count_candidates: need n >= 1, s >= 1");
  std::vector<Candidate> level{Candidate::seed(s)};
  for (int order = 1; order < n; ++order) {
    std::vector<Candidate> next;
    uint64_t running = 0;
    for (const auto& p : level) {
      for_each_canonical_child(p, [&](const Candidate& c) {
        if (++running > cap) throw GenerationLimitError(running - 1);
        next.push_back(c);
      });
    }
    level.swap(next);
  }
  return level.size();
}

std::vector<Candidate> generate_all(int n, int s) {
  std::vector<Candidate> level{Candidate::seed(s)};
  for (int order = 1; order < n; ++order) {
    std::vector<Candidate> next;
    for (const auto& p : level)
      for_each_canonical_child(p, [&](const Candidate& c) { next.push_back(c); });
    level.swap(next);
  }
  std::sort(level.begin(), level.end(),
            [](const Candidate& a, const Candidate& b) { return a.colors < b.colors; });
  return level;
}

bool heredity_ok(const Candidate& child, const std::unordered_set<Key>& prev_keys) {
  // Deleting the last vertex recovers the generating parent, which is a
  // member of the previous level by construction.
  for (int v = 0; v < child.n - 1; ++v) {
    Candidate sub = child.delete_vertex(v);
    if (!prev_keys.count(canonical_key(sub))) return false;
  }
  return true;
}

ExpandResult expand_level_serial(const std::vector<Candidate>& parents,
                                 const std::unordered_set<Key>* prev_keys) {
  ExpandResult res;
  for (const auto& p : parents) {
    for_each_canonical_child(p, [&](const Candidate& c) {
      ++res.children_canonical;
      if (!prev_keys || heredity_ok(c, *prev_keys)) res.kept.push_back(c);
    });
  }
  std::sort(res.kept.begin(), res.kept.end(),
            [](const Candidate& a, const Candidate& b) { return a.colors < b.colors; });
  return res;
}

ExpandResult expand_level_parallel(const std::vector<Candidate>& parents,
                                   const std::unordered_set<Key>* prev_keys) {
  ExpandResult res;
  const long np = static_cast<long>(parents.size());
#pragma omp parallel
  {
    ExpandResult local;
#pragma omp for schedule(dynamic, 1) nowait
    for (long i = 0; i < np; ++i) {
      for_each_canonical_child(parents[static_cast<size_t>(i)], [&](const Candidate& c) {
        ++local.children_canonical;
        if (!prev_keys || heredity_ok(c, *prev_keys)) local.kept.push_back(c);
      });
    }
#pragma omp critical
    {
      res.children_canonical += local.children_canonical;
      res.kept.insert(res.kept.end(), std::make_move_iterator(local.kept.begin()),
                      std::make_move_iterator(local.kept.end()));
    }
  }
  std::sort(res.kept.begin(), res.kept.end(),
            [](const Candidate& a, const Candidate& b) { return a.colors < b.colors; });
  return res;
}

}  // namespace fds
