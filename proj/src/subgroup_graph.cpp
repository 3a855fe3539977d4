#include "cgt/subgroup_graph.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <numeric>
#include <sstream>

#include "cgt/errors.hpp"

namespace cgt {

namespace {

// Folding workspace: a vertex-merging multigraph over 2n directed slots
// (out-slot l-1 and in-slot n+l-1 for each label l), with union-find on
// vertices. An edge is stored in both endpoint slots, so in-determinism at
// a vertex is out-determinism on the mirrored slot.
class Folder {
public:
  Folder(unsigned rank, std::size_t hint) : n_(rank) {
    adj_.reserve(hint);
    parent_.reserve(hint);
    new_vertex();
  }

  std::size_t new_vertex() {
    adj_.emplace_back(2 * n_);
    parent_.push_back(static_cast<int>(parent_.size()));
    return parent_.size() - 1;
  }

  // reading `letter` at u leads to v
  void add_edge(std::size_t u, int letter, std::size_t v) {
    adj_[u][slot(letter)].push_back(static_cast<int>(v));
    adj_[v][slot(-letter)].push_back(static_cast<int>(u));
  }

  int find(int v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  void fold() {
    std::deque<int> work(parent_.size());
    std::iota(work.begin(), work.end(), 0);
    while (!work.empty()) {
      int v = find(work.front());
      work.pop_front();
      bool changed = true;
      while (changed) {
        changed = false;
        for (unsigned s = 0; s < 2 * n_; ++s) {
          auto& targets = adj_[v][s];
          for (int& t : targets) t = find(t);
          std::sort(targets.begin(), targets.end());
          targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
          if (targets.size() <= 1) continue;
          // duplicate label: merge all targets and requeue their neighbors
          int root = targets[0];
          for (std::size_t i = 1; i < targets.size(); ++i)
            root = merge(root, targets[i], work);
          v = find(v);
          changed = true;
          break;
        }
      }
    }
  }

  // dense tables over surviving vertices, base first
  void compact(std::vector<std::vector<int>>& out, std::vector<std::vector<int>>& in) {
    std::vector<int> id(parent_.size(), -1);
    std::vector<int> roots;
    id[find(0)] = 0;
    roots.push_back(find(0));
    for (std::size_t v = 0; v < parent_.size(); ++v) {
      int r = find(static_cast<int>(v));
      if (id[r] < 0) {
        id[r] = static_cast<int>(roots.size());
        roots.push_back(r);
      }
    }
    out.assign(roots.size(), std::vector<int>(n_, -1));
    in.assign(roots.size(), std::vector<int>(n_, -1));
    for (std::size_t i = 0; i < roots.size(); ++i) {
      for (unsigned l = 1; l <= n_; ++l) {
        const auto& fwd = adj_[roots[i]][slot(static_cast<int>(l))];
        const auto& bwd = adj_[roots[i]][slot(-static_cast<int>(l))];
        assert(fwd.size() <= 1 && bwd.size() <= 1);
        if (!fwd.empty()) out[i][l - 1] = id[find(fwd[0])];
        if (!bwd.empty()) in[i][l - 1] = id[find(bwd[0])];
      }
    }
  }

private:
  unsigned slot(int letter) const {
    return letter > 0 ? static_cast<unsigned>(letter - 1)
                      : n_ + static_cast<unsigned>(-letter - 1);
  }

  int merge(int a, int b, std::deque<int>& work) {
    a = find(a);
    b = find(b);
    if (a == b) return a;
    std::size_t size_a = 0, size_b = 0;
    for (unsigned s = 0; s < 2 * n_; ++s) {
      size_a += adj_[a][s].size();
      size_b += adj_[b][s].size();
    }
    if (size_a < size_b) std::swap(a, b);
    // neighbors of the absorbed vertex may now carry duplicate labels
    for (unsigned s = 0; s < 2 * n_; ++s)
      for (int t : adj_[b][s]) work.push_back(find(t));
    parent_[b] = a;
    for (unsigned s = 0; s < 2 * n_; ++s) {
      auto& from = adj_[b][s];
      auto& to = adj_[a][s];
      to.insert(to.end(), from.begin(), from.end());
      from.clear();
      from.shrink_to_fit();
    }
    work.push_back(a);
    return a;
  }

  unsigned n_;
  std::vector<std::vector<std::vector<int>>> adj_;
  std::vector<int> parent_;
};

void trim_to_core(std::vector<std::vector<int>>& out, std::vector<std::vector<int>>& in) {
  std::size_t v_count = out.size();
  unsigned n = static_cast<unsigned>(out[0].size());
  std::vector<char> dead(v_count, 0);
  auto degree = [&](std::size_t v) {
    std::size_t d = 0;
    for (unsigned l = 0; l < n; ++l) {
      if (out[v][l] >= 0) ++d;
      if (in[v][l] >= 0) ++d;
    }
    return d;
  };
  std::deque<std::size_t> work;
  for (std::size_t v = 1; v < v_count; ++v)
    if (degree(v) <= 1) work.push_back(v);
  while (!work.empty()) {
    std::size_t v = work.front();
    work.pop_front();
    if (dead[v] || v == 0 || degree(v) > 1) continue;
    dead[v] = 1;
    for (unsigned l = 0; l < n; ++l) {
      if (int w = out[v][l]; w >= 0) {
        in[w][l] = -1;
        out[v][l] = -1;
        if (w != 0 && !dead[w] && degree(w) <= 1) work.push_back(static_cast<std::size_t>(w));
      }
      if (int w = in[v][l]; w >= 0) {
        out[w][l] = -1;
        in[v][l] = -1;
        if (w != 0 && !dead[w] && degree(w) <= 1) work.push_back(static_cast<std::size_t>(w));
      }
    }
  }
  std::vector<int> remap(v_count, -1);
  std::size_t next = 0;
  for (std::size_t v = 0; v < v_count; ++v)
    if (!dead[v]) remap[v] = static_cast<int>(next++);
  std::vector<std::vector<int>> new_out(next, std::vector<int>(n, -1));
  std::vector<std::vector<int>> new_in(next, std::vector<int>(n, -1));
  for (std::size_t v = 0; v < v_count; ++v) {
    if (dead[v]) continue;
    for (unsigned l = 0; l < n; ++l) {
      if (out[v][l] >= 0) new_out[remap[v]][l] = remap[out[v][l]];
      if (in[v][l] >= 0) new_in[remap[v]][l] = remap[in[v][l]];
    }
  }
  out = std::move(new_out);
  in = std::move(new_in);
}

} // namespace

SubgroupGraph::SubgroupGraph(unsigned rank, std::vector<std::vector<int>> out,
                             std::vector<std::vector<int>> in)
    : rank_(rank), out_(std::move(out)), in_(std::move(in)) {}

SubgroupGraph SubgroupGraph::from_generators(unsigned rank, const std::vector<Word>& generators) {
  if (rank < 1 || rank > 26)
    throw InputError("ambient rank must be between 1 and 26");
  std::size_t letter_total = 0;
  for (const Word& w : generators) {
    if (w.rank() > rank)
      throw InputError("word over rank " + std::to_string(w.rank()) +
                       " in a rank-" + std::to_string(rank) + " graph");
    letter_total += w.length();
  }

  Folder folder(rank, letter_total + 1);
  for (const Word& w : generators) {
    const auto& letters = w.letters();
    if (letters.empty()) continue;
    std::size_t cur = 0;
    for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
      std::size_t fresh = folder.new_vertex();
      folder.add_edge(cur, letters[i], fresh);
      cur = fresh;
    }
    folder.add_edge(cur, letters.back(), 0);
  }
  folder.fold();

  std::vector<std::vector<int>> out, in;
  folder.compact(out, in);
  trim_to_core(out, in);

  SubgroupGraph g(rank, std::move(out), std::move(in));
  g.standardize();
  return g;
}

void SubgroupGraph::standardize() {
  std::size_t v_count = out_.size();
  std::vector<int> order(v_count, -1);
  std::vector<std::size_t> bfs{0};
  order[0] = 0;
  std::size_t next = 1;
  for (std::size_t i = 0; i < bfs.size(); ++i) {
    std::size_t v = bfs[i];
    for (unsigned l = 0; l < rank_; ++l) {
      for (int w : {out_[v][l], in_[v][l]}) {
        if (w >= 0 && order[w] < 0) {
          order[w] = static_cast<int>(next++);
          bfs.push_back(static_cast<std::size_t>(w));
        }
      }
    }
  }
  assert(next == v_count); // folded graphs stay connected
  std::vector<std::vector<int>> new_out(v_count, std::vector<int>(rank_, -1));
  std::vector<std::vector<int>> new_in(v_count, std::vector<int>(rank_, -1));
  for (std::size_t v = 0; v < v_count; ++v) {
    for (unsigned l = 0; l < rank_; ++l) {
      if (out_[v][l] >= 0) new_out[order[v]][l] = order[out_[v][l]];
      if (in_[v][l] >= 0) new_in[order[v]][l] = order[in_[v][l]];
    }
  }
  out_ = std::move(new_out);
  in_ = std::move(new_in);
}

std::size_t SubgroupGraph::edge_count() const {
  std::size_t count = 0;
  for (const auto& row : out_)
    for (int t : row)
      if (t >= 0) ++count;
  return count;
}

int SubgroupGraph::out(std::size_t vertex, unsigned label) const {
  return out_[vertex][label - 1];
}

int SubgroupGraph::in(std::size_t vertex, unsigned label) const {
  return in_[vertex][label - 1];
}

std::vector<std::tuple<std::size_t, unsigned, std::size_t>> SubgroupGraph::edges() const {
  std::vector<std::tuple<std::size_t, unsigned, std::size_t>> result;
  for (std::size_t v = 0; v < out_.size(); ++v)
    for (unsigned l = 1; l <= rank_; ++l)
      if (out_[v][l - 1] >= 0)
        result.emplace_back(v, l, static_cast<std::size_t>(out_[v][l - 1]));
  return result;
}

std::optional<std::uint64_t> SubgroupGraph::index() const {
  for (std::size_t v = 0; v < out_.size(); ++v)
    for (unsigned l = 0; l < rank_; ++l)
      if (out_[v][l] < 0 || in_[v][l] < 0) return std::nullopt;
  return out_.size();
}

std::size_t SubgroupGraph::rank() const {
  return edge_count() + 1 - vertex_count();
}

bool SubgroupGraph::contains(const Word& word) const {
  if (word.rank() > rank_)
    throw InputError("word over rank " + std::to_string(word.rank()) +
                     " in a rank-" + std::to_string(rank_) + " graph");
  std::size_t cur = 0;
  for (int l : word.letters()) {
    int next = l > 0 ? out_[cur][l - 1] : in_[cur][-l - 1];
    if (next < 0) return false;
    cur = static_cast<std::size_t>(next);
  }
  return cur == 0;
}

std::vector<Word> SubgroupGraph::cycle_basis_words() const {
  std::size_t v_count = out_.size();
  std::vector<std::vector<int>> path(v_count);
  std::vector<char> visited(v_count, 0);
  // tree edge marks, keyed by positive orientation (source, label)
  std::vector<std::vector<char>> tree(v_count, std::vector<char>(rank_, 0));
  std::vector<std::size_t> bfs{0};
  visited[0] = 1;
  for (std::size_t i = 0; i < bfs.size(); ++i) {
    std::size_t v = bfs[i];
    for (unsigned l = 1; l <= rank_; ++l) {
      if (int w = out_[v][l - 1]; w >= 0 && !visited[w]) {
        visited[w] = 1;
        tree[v][l - 1] = 1;
        path[w] = path[v];
        path[w].push_back(static_cast<int>(l));
        bfs.push_back(static_cast<std::size_t>(w));
      }
      if (int w = in_[v][l - 1]; w >= 0 && !visited[w]) {
        visited[w] = 1;
        tree[w][l - 1] = 1; // the edge is (w, l, v)
        path[w] = path[v];
        path[w].push_back(-static_cast<int>(l));
        bfs.push_back(static_cast<std::size_t>(w));
      }
    }
  }
  std::vector<Word> words;
  for (std::size_t v = 0; v < v_count; ++v) {
    for (unsigned l = 1; l <= rank_; ++l) {
      int w = out_[v][l - 1];
      if (w < 0 || tree[v][l - 1]) continue;
      std::vector<int> letters = path[v];
      letters.push_back(static_cast<int>(l));
      for (auto it = path[w].rbegin(); it != path[w].rend(); ++it) letters.push_back(-*it);
      words.emplace_back(rank_, std::move(letters));
    }
  }
  return words;
}

std::vector<Word> SubgroupGraph::schreier_generators() const {
  if (!index().has_value())
    throw UnsupportedError("Schreier generators need finite index");
  return cycle_basis_words();
}

std::string SubgroupGraph::to_text() const {
  std::ostringstream os;
  os << "rank " << rank_ << "\nvertices " << vertex_count() << "\nbase 0\n";
  for (const auto& [v, l, w] : edges())
    os << v << ' ' << static_cast<char>('a' + l - 1) << ' ' << w << '\n';
  return os.str();
}

std::string SubgroupGraph::to_dot() const {
  std::ostringstream os;
  os << "digraph subgroup_graph {\n  rankdir=LR;\n  0 [shape=doublecircle];\n";
  for (std::size_t v = 1; v < vertex_count(); ++v) os << "  " << v << " [shape=circle];\n";
  for (const auto& [v, l, w] : edges())
    os << "  " << v << " -> " << w << " [label=\"" << static_cast<char>('a' + l - 1) << "\"];\n";
  os << "}\n";
  return os.str();
}

std::vector<SubgroupGraph> enumerate_subgroups(unsigned rank, unsigned index,
                                               const EnumerationCaps& caps) {
  if (rank < 1 || index < 1)
    throw InputError("rank and index must be positive");
  if (rank > caps.max_rank)
    throw ResourceError("rank " + std::to_string(rank) + " above cap " +
                        std::to_string(caps.max_rank));
  if (index > caps.max_index)
    throw ResourceError("index " + std::to_string(index) + " above cap " +
                        std::to_string(caps.max_index));

  std::vector<std::vector<unsigned>> perms;
  {
    std::vector<unsigned> p(index);
    std::iota(p.begin(), p.end(), 0u);
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  }

  std::vector<SubgroupGraph> result;
  std::vector<std::size_t> choice(rank, 0);
  std::vector<std::vector<int>> out(index, std::vector<int>(rank, -1));
  std::vector<std::vector<int>> in(index, std::vector<int>(rank, -1));
  std::vector<char> reached(index);
  std::vector<unsigned> stack;

  while (true) {
    // transitivity of the joint action, forward closure suffices
    std::fill(reached.begin(), reached.end(), 0);
    reached[0] = 1;
    stack.assign(1, 0u);
    std::size_t seen = 1;
    while (!stack.empty()) {
      unsigned v = stack.back();
      stack.pop_back();
      for (unsigned l = 0; l < rank; ++l) {
        unsigned w = perms[choice[l]][v];
        if (!reached[w]) {
          reached[w] = 1;
          ++seen;
          stack.push_back(w);
        }
      }
    }
    if (seen == index) {
      for (unsigned l = 0; l < rank; ++l) {
        const auto& p = perms[choice[l]];
        for (unsigned v = 0; v < index; ++v) {
          out[v][l] = static_cast<int>(p[v]);
          in[p[v]][l] = static_cast<int>(v);
        }
      }
      SubgroupGraph candidate(rank, out, in);
      SubgroupGraph canonical = candidate;
      canonical.standardize();
      // keep one representative per subgroup: the self-canonical table
      if (canonical == candidate) result.push_back(std::move(candidate));
    }
    // odometer
    unsigned pos = 0;
    while (pos < rank && ++choice[pos] == perms.size()) {
      choice[pos] = 0;
      ++pos;
    }
    if (pos == rank) break;
  }
  return result;
}

} // namespace cgt
