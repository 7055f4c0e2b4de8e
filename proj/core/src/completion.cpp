#include "pmqkit/completion.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace pmqkit {

namespace {

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = 14695981039346656037ULL;
    for (int x : w) {
      h ^= static_cast<std::size_t>(x) + 1;
      h *= 1099511628211ULL;
    }
    return h;
  }
};

bool word_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

void check_letters(const FinitePMQ& q, const Word& w) {
  for (int x : w)
    if (x < 0 || x >= q.size() || x == q.unit())
      throw std::invalid_argument("word letters must be non-unit elements");
}

int word_norm(const FinitePMQ& q, const Word& w) {
  int total = 0;
  for (int x : w) total += q.norm(x);
  return total;
}

}  // namespace

std::vector<Word> relation_moves(const FinitePMQ& q, const Word& w, int pos) {
  check_letters(q, w);
  const int len = static_cast<int>(w.size());
  if (pos < 0 || pos >= len) throw std::out_of_range("move position out of range");
  std::vector<Word> out;
  if (pos + 1 < len) {
    const int a = w[pos], b = w[pos + 1];
    Word fwd = w;
    fwd[pos] = b;
    fwd[pos + 1] = q.conj(a, b);
    out.push_back(std::move(fwd));
    Word inv = w;  // (a,b) -> (c,a) with c^a = b, undoing the forward swap
    inv[pos] = q.conj_preimage(b, a);
    inv[pos + 1] = a;
    out.push_back(std::move(inv));
    if (q.prod_defined(a, b) && q.prod(a, b) != q.unit()) {
      Word contracted;
      contracted.reserve(len - 1);
      contracted.insert(contracted.end(), w.begin(), w.begin() + pos);
      contracted.push_back(q.prod(a, b));
      contracted.insert(contracted.end(), w.begin() + pos + 2, w.end());
      out.push_back(std::move(contracted));
    }
  }
  const int c = w[pos];
  for (int a : q.q_plus())
    for (int b : q.q_plus())
      if (q.prod_defined(a, b) && q.prod(a, b) == c) {
        Word expanded;
        expanded.reserve(len + 1);
        expanded.insert(expanded.end(), w.begin(), w.begin() + pos);
        expanded.push_back(a);
        expanded.push_back(b);
        expanded.insert(expanded.end(), w.begin() + pos + 1, w.end());
        out.push_back(std::move(expanded));
      }
  return out;
}

CompletionClass class_of_word(const FinitePMQ& q, const Word& w, std::uint64_t budget,
                              bool with_members) {
  check_letters(q, w);
  std::unordered_map<Word, int, WordHash> seen;
  std::vector<Word> members{w};
  seen[w] = 0;
  for (std::size_t head = 0; head < members.size(); ++head) {
    const Word cur = members[head];
    for (int pos = 0; pos < static_cast<int>(cur.size()); ++pos)
      for (Word& next : relation_moves(q, cur, pos))
        if (seen.emplace(next, static_cast<int>(members.size())).second) {
          if (members.size() >= budget)
            throw BudgetExceededError(members.size() + 1, budget);
          members.push_back(std::move(next));
        }
  }
  std::sort(members.begin(), members.end(), word_less);
  CompletionClass cls;
  cls.norm = q.has_norm() ? word_norm(q, w) : -1;
  cls.rep = members.front();
  cls.size = members.size();
  cls.parent_digest = q.digest();
  if (with_members) cls.members = std::move(members);
  return cls;
}

std::vector<CompletionClass> completion_classes(const FinitePMQ& q, int norm,
                                                std::uint64_t budget, bool with_members) {
  if (!q.has_norm()) throw std::invalid_argument("completion requires a normed PMQ");
  if (!q.is_augmented())
    throw std::invalid_argument("completion requires an augmented PMQ");
  if (norm < 0) throw std::invalid_argument("norm must be non-negative");
  if (norm == 0) {
    CompletionClass unit_class;
    unit_class.norm = 0;
    unit_class.size = 1;
    unit_class.parent_digest = q.digest();
    if (with_members) unit_class.members = std::vector<Word>{{}};
    return {unit_class};
  }

  // the full universe of non-unit words of the given total norm
  std::vector<Word> universe;
  const std::vector<int> qp = q.q_plus();
  Word stack;
  auto generate = [&](auto&& self, int remaining) -> void {
    for (int letter : qp) {
      const int nl = q.norm(letter);
      if (nl > remaining) continue;
      stack.push_back(letter);
      if (nl == remaining) {
        if (universe.size() >= budget)
          throw BudgetExceededError(universe.size() + 1, budget);
        universe.push_back(stack);
      } else {
        self(self, remaining - nl);
      }
      stack.pop_back();
    }
  };
  generate(generate, norm);

  std::unordered_map<Word, int, WordHash> index;
  index.reserve(universe.size() * 2);
  for (int i = 0; i < static_cast<int>(universe.size()); ++i) index[universe[i]] = i;

  UnionFind uf(static_cast<int>(universe.size()));
  for (int i = 0; i < static_cast<int>(universe.size()); ++i) {
    const Word& cur = universe[i];
    for (int pos = 0; pos < static_cast<int>(cur.size()); ++pos)
      for (const Word& next : relation_moves(q, cur, pos)) uf.unite(i, index.at(next));
  }

  std::unordered_map<int, int> root_to_class;
  std::vector<CompletionClass> classes;
  std::vector<std::vector<Word>> member_lists;
  for (int i = 0; i < static_cast<int>(universe.size()); ++i) {
    const int root = uf.find(i);
    auto [it, inserted] = root_to_class.emplace(root, static_cast<int>(classes.size()));
    if (inserted) {
      CompletionClass cls;
      cls.norm = norm;
      cls.rep = universe[i];
      cls.parent_digest = q.digest();
      classes.push_back(std::move(cls));
      member_lists.emplace_back();
    }
    CompletionClass& cls = classes[it->second];
    ++cls.size;
    if (word_less(universe[i], cls.rep)) cls.rep = universe[i];
    if (with_members) member_lists[it->second].push_back(universe[i]);
  }
  std::vector<int> order(classes.size());
  for (int i = 0; i < static_cast<int>(order.size()); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return word_less(classes[a].rep, classes[b].rep); });
  std::vector<CompletionClass> sorted;
  sorted.reserve(classes.size());
  for (int i : order) {
    if (with_members) {
      std::sort(member_lists[i].begin(), member_lists[i].end(), word_less);
      classes[i].members = std::move(member_lists[i]);
    }
    sorted.push_back(std::move(classes[i]));
  }
  return sorted;
}

CompletionClass completion_multiply(const FinitePMQ& q, const CompletionClass& x,
                                    const CompletionClass& y, std::uint64_t budget) {
  if (x.parent_digest != q.digest() || y.parent_digest != q.digest())
    throw std::invalid_argument("completion classes belong to a different PMQ");
  Word concatenated = x.rep;
  concatenated.insert(concatenated.end(), y.rep.begin(), y.rep.end());
  return class_of_word(q, concatenated, budget);
}

int total_monodromy(const PMQGroupPair& pair, const CompletionClass& x) {
  if (x.parent_digest != pair.pmq().digest())
    throw std::invalid_argument("completion class belongs to a different PMQ");
  int g = pair.group().identity();
  for (int letter : x.rep) g = pair.group().mult(g, pair.e_map(letter));
  return g;
}

CollapseReport complete_pmq_collapse_check(const FinitePMQ& q, int length_cap,
                                           std::uint64_t budget) {
  if (length_cap < 1) throw std::invalid_argument("length cap must be at least 1");
  for (int a = 0; a < q.size(); ++a)
    for (int b = 0; b < q.size(); ++b)
      if (!q.prod_defined(a, b))
        throw std::invalid_argument("collapse check requires a complete PMQ");

  CollapseReport report;
  report.collapses_to_group = true;
  const std::vector<int> qp = q.q_plus();
  for (int cap = 1; cap <= length_cap; ++cap) {
    std::uint64_t total = 1, power = 1;
    for (int l = 1; l <= cap; ++l) {
      power *= qp.size();
      total += power;
      if (total > budget) throw BudgetExceededError(total, budget);
    }
    // words of length 0..cap over the non-unit letters
    std::vector<Word> universe;
    universe.reserve(total);
    universe.push_back({});
    Word stack;
    auto generate = [&](auto&& self) -> void {
      if (static_cast<int>(stack.size()) == cap) return;
      for (int letter : qp) {
        stack.push_back(letter);
        universe.push_back(stack);
        self(self);
        stack.pop_back();
      }
    };
    generate(generate);

    std::unordered_map<Word, int, WordHash> index;
    index.reserve(universe.size() * 2);
    for (int i = 0; i < static_cast<int>(universe.size()); ++i) index[universe[i]] = i;
    UnionFind uf(static_cast<int>(universe.size()));
    for (int i = 0; i < static_cast<int>(universe.size()); ++i) {
      const Word& w = universe[i];
      for (int pos = 0; pos + 1 < static_cast<int>(w.size()); ++pos) {
        const int a = w[pos], b = w[pos + 1];
        Word swapped = w;
        swapped[pos] = b;
        swapped[pos + 1] = q.conj(a, b);
        uf.unite(i, index.at(swapped));
        // contraction always applies; a unit result deletes the pair
        Word contracted;
        contracted.insert(contracted.end(), w.begin(), w.begin() + pos);
        const int ab = q.prod(a, b);
        if (ab != q.unit()) contracted.push_back(ab);
        contracted.insert(contracted.end(), w.begin() + pos + 2, w.end());
        uf.unite(i, index.at(contracted));
      }
    }
    std::vector<bool> seen_root(universe.size(), false);
    std::uint64_t count = 0;
    for (int i = 0; i < static_cast<int>(universe.size()); ++i) {
      int root = uf.find(i);
      if (!seen_root[root]) {
        seen_root[root] = true;
        ++count;
      }
    }
    report.class_count_at_cap.push_back(count);
    if (count != static_cast<std::uint64_t>(q.size())) report.collapses_to_group = false;
  }
  return report;
}

}  // namespace pmqkit
