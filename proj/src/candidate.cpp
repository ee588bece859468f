#include "fds/candidate.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fds {

namespace {
const char* kDigits = "0123456789abcdefghijklmnopqrstuvwxyz";
}

int Candidate::colors_used() const {
  int m = 0;
  for (uint8_t c : colors) m = std::max(m, static_cast<int>(c) + 1);
  return m;
}

bool Candidate::rgs_dense() const {
  int next = 0;
  for (uint8_t c : colors) {
    if (c > next) return false;
    if (c == next) ++next;
  }
  return true;
}

Candidate Candidate::delete_vertex(int v) const {
  Candidate r;
  r.n = n - 1;
  r.s = s;
  r.colors.reserve(static_cast<size_t>(r.n) * (static_cast<size_t>(r.n) - 1) / 2);
  for (int i = 0; i < n; ++i) {
    if (i == v) continue;
    for (int j = 0; j < i; ++j) {
      if (j == v) continue;
      r.colors.push_back(colors[tri(i, j)]);
    }
  }
  return r;
}

Candidate Candidate::extend(const std::vector<uint8_t>& new_row) const {
  Candidate r = *this;
  r.n = n + 1;
  r.colors.insert(r.colors.end(), new_row.begin(), new_row.end());
  return r;
}

Key encode_digits(const std::vector<uint8_t>& vec) {
  Key k;
  k.reserve(vec.size());
  for (uint8_t c : vec) k.push_back(kDigits[c]);
  return k;
}

std::vector<uint8_t> decode_digits(const std::string& digits) {
  std::vector<uint8_t> v;
  v.reserve(digits.size());
  for (char ch : digits) {
    const char* p = std::find(kDigits, kDigits + 36, ch);
    if (p == kDigits + 36) throw std::invalid_argument("bad digit in key");
    v.push_back(static_cast<uint8_t>(p - kDigits));
  }
  return v;
}

std::string encode_line(const Candidate& g) {
  std::ostringstream os;
  os << g.n << " " << g.s << " k:" << encode_digits(g.colors);
  return os.str();
}

Candidate decode_line(const std::string& line) {
  std::istringstream is(line);
  Candidate g;
  std::string key;
  if (!(is >> g.n >> g.s >> key) || key.rfind("k:", 0) != 0)
    throw std::invalid_argument("bad matrix line: " + line);
  g.colors = decode_digits(key.substr(2));
  size_t expect = static_cast<size_t>(g.n) * (static_cast<size_t>(g.n) - 1) / 2;
  if (g.colors.size() != expect) throw std::invalid_argument("matrix line length mismatch");
  return g;
}

// ---------------------------------------------------------------------------
// Canonical labeling: backtracking over vertex orderings. For a fixed vertex
// order the lex-minimal color relabeling is the greedy first-occurrence one,
// so only vertex permutations are searched. n!*s! brute force would be
// hopeless at n = 12.
// ---------------------------------------------------------------------------

namespace {

struct CanonCtx {
  int n;
  const Candidate* g;
  std::vector<uint8_t> full;  // dense n*n color matrix for fast access
  std::vector<int> perm;
  std::vector<uint8_t> used;
  std::vector<int> cmap;      // color -> new label, -1 if unseen
  std::vector<int> ctrail;    // assignment undo log
  int next_label = 0;

  uint8_t at(int i, int j) const { return full[static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j)]; }

  explicit CanonCtx(const Candidate& gg) : n(gg.n), g(&gg) {
    full.assign(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
    for (int i = 1; i < n; ++i)
      for (int j = 0; j < i; ++j) {
        uint8_t c = gg.colors[Candidate::tri(i, j)];
        full[static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j)] = c;
        full[static_cast<size_t>(j) * static_cast<size_t>(n) + static_cast<size_t>(i)] = c;
      }
    used.assign(static_cast<size_t>(n), 0);
    cmap.assign(64, -1);
  }

  int map_color(uint8_t c) {
    int& slot = cmap[c];
    if (slot < 0) {
      slot = next_label++;
      ctrail.push_back(c);
    }
    return slot;
  }

  void undo_to(size_t mark) {
    while (ctrail.size() > mark) {
      cmap[static_cast<size_t>(ctrail.back())] = -1;
      --next_label;
      ctrail.pop_back();
    }
  }
};

// DFS driving the running minimum `best`. Entries smaller than the current
// best truncate it immediately, so pruning is always against the true
// minimum of everything explored so far.
void min_dfs(CanonCtx& cx, std::vector<uint8_t>& best, size_t pos) {
  const int depth = static_cast<int>(cx.perm.size());
  if (depth == cx.n) return;
  struct Cand {
    int v;
    std::vector<uint8_t> row;
  };
  std::vector<Cand> cands;
  cands.reserve(static_cast<size_t>(cx.n - depth));
  for (int v = 0; v < cx.n; ++v) {
    if (cx.used[static_cast<size_t>(v)]) continue;
    // Tentatively relabel this row; labels assigned here must not leak.
    size_t mark = cx.ctrail.size();
    std::vector<uint8_t> row(static_cast<size_t>(depth));
    for (int k = 0; k < depth; ++k)
      row[static_cast<size_t>(k)] = static_cast<uint8_t>(cx.map_color(cx.at(v, cx.perm[static_cast<size_t>(k)])));
    cx.undo_to(mark);
    cands.push_back({v, std::move(row)});
  }
  std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
    if (a.row != b.row) return a.row < b.row;
    return a.v < b.v;
  });
  for (const auto& cand : cands) {
    // Compare against best; prune when larger. On the first strictly smaller
    // entry the tail of best is invalidated and this row becomes its prefix.
    bool worse = false, smaller = false;
    for (int k = 0; k < depth; ++k) {
      uint8_t e = cand.row[static_cast<size_t>(k)];
      if (!smaller) {
        uint8_t b = best[pos + static_cast<size_t>(k)];
        if (e > b) {
          worse = true;
          break;
        }
        if (e < b) {
          smaller = true;
          for (size_t t = pos + static_cast<size_t>(k); t < best.size(); ++t) best[t] = 0xFF;
        }
      }
      if (smaller) best[pos + static_cast<size_t>(k)] = e;
    }
    if (worse) continue;
    size_t mark = cx.ctrail.size();
    for (int k = 0; k < depth; ++k) cx.map_color(cx.at(cand.v, cx.perm[static_cast<size_t>(k)]));
    cx.perm.push_back(cand.v);
    cx.used[static_cast<size_t>(cand.v)] = 1;
    min_dfs(cx, best, pos + static_cast<size_t>(depth));
    cx.used[static_cast<size_t>(cand.v)] = 0;
    cx.perm.pop_back();
    cx.undo_to(mark);
  }
}

// Early-exit search for any ordering strictly below the stored vectorization.
bool beats_stored_dfs(CanonCtx& cx, const std::vector<uint8_t>& stored, size_t pos) {
  const int depth = static_cast<int>(cx.perm.size());
  if (depth == cx.n) return false;
  for (int v = 0; v < cx.n; ++v) {
    if (cx.used[static_cast<size_t>(v)]) continue;
    size_t mark = cx.ctrail.size();
    int verdict = 0;
    for (int k = 0; k < depth; ++k) {
      int e = cx.map_color(cx.at(v, cx.perm[static_cast<size_t>(k)]));
      uint8_t sv = stored[pos + static_cast<size_t>(k)];
      if (e < sv) {
        verdict = -1;
        break;
      }
      if (e > sv) {
        verdict = 1;
        break;
      }
    }
    if (verdict < 0) {
      cx.undo_to(mark);
      return true;
    }
    if (verdict == 0) {
      cx.perm.push_back(v);
      cx.used[static_cast<size_t>(v)] = 1;
      bool found = beats_stored_dfs(cx, stored, pos + static_cast<size_t>(depth));
      cx.used[static_cast<size_t>(v)] = 0;
      cx.perm.pop_back();
      if (found) {
        cx.undo_to(mark);
        return true;
      }
    }
    cx.undo_to(mark);
  }
  return false;
}

std::vector<uint8_t> greedy_relabel(const std::vector<uint8_t>& vec) {
  std::vector<int> map(64, -1);
  int next = 0;
  std::vector<uint8_t> out(vec.size());
  for (size_t i = 0; i < vec.size(); ++i) {
    int& m = map[vec[i]];
    if (m < 0) m = next++;
    out[i] = static_cast<uint8_t>(m);
  }
  return out;
}

}  // namespace

std::vector<uint8_t> canonical_vec(const Candidate& g) {
  if (g.n <= 1) return {};
  CanonCtx cx(g);
  std::vector<uint8_t> best = greedy_relabel(g.colors);
  min_dfs(cx, best, 0);
  return best;
}

bool is_canonical(const Candidate& g) {
  if (g.n <= 1) return true;
  if (!g.rgs_dense()) return false;
  CanonCtx cx(g);
  return !beats_stored_dfs(cx, g.colors, 0);
}

Candidate canonical_form(const Candidate& g) {
  Candidate r;
  r.n = g.n;
  r.s = g.s;
  r.colors = canonical_vec(g);
  return r;
}

Key canonical_key(const Candidate& g) { return encode_digits(canonical_vec(g)); }

Candidate relabeled(const Candidate& g, const std::vector<int>& perm,
                    const std::vector<int>& color_perm) {
  Candidate r = g;
  for (int i = 1; i < g.n; ++i)
    for (int j = 0; j < i; ++j) {
      uint8_t c = g.color(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]);
      r.colors[Candidate::tri(i, j)] = static_cast<uint8_t>(color_perm[c]);
    }
  r.colors = greedy_relabel(r.colors);
  return r;
}

}  // namespace fds
